"""Run one pursuit trial and look at what the follower did.

A lead vehicle accelerates to a cruising speed and works through a seeded
schedule of decelerate-wait-reaccelerate events. The follower driver holds a
30 m gap through pedal inputs alone, with a fixed reaction delay. The trace
carries everything the metrics need: gap tracking, pedal activity, brake
force split, rendered pedal feel, and regenerated power.

    python3 demos/04_pursuit_trial.py [condition] [seed]
"""

import pathlib
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from pedalfeel.blending import DriveCondition
from pedalfeel.config import ExperimentConfig
from pedalfeel.harness import run_trial

out = pathlib.Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

label = sys.argv[1] if len(sys.argv) > 1 else "one-pedal-compensated"
seed = int(sys.argv[2]) if len(sys.argv) > 2 else 7

cfg = ExperimentConfig(condition=DriveCondition.from_label(label))
trace, metrics = run_trial(cfg, seed)

print(f"condition {label}, seed {seed}: {trace.t[-1]:.0f} s of driving")
print(f"  gap tracking        {metrics.pct_rmse_gap:.1f} %RMSE")
print(f"  hard brakings       {metrics.hard_braking_count}")
print(f"  collisions          {metrics.collision_count}")
print(f"  regen energy        {metrics.regen_energy / 1e3:.0f} kJ")
print(f"  throttle use        {metrics.pct_throttle_use:.0f} % of ticks")

fig, axes = plt.subplots(4, 1, figsize=(10, 11), sharex=True)
axes[0].plot(trace.t, trace.lead_vel, label="lead")
axes[0].plot(trace.t, trace.fol_vel, label="follower")
axes[0].legend()
axes[0].set(ylabel="speed (m/s)", title=f"{label}, seed {seed}")

axes[1].plot(trace.t, trace.gap)
axes[1].axhline(30.0, color="0.8", ls="--")
axes[1].set(ylabel="gap (m)")

axes[2].plot(trace.t, trace.throttle, label="throttle")
axes[2].plot(trace.t, trace.brake_x / 80.0, label="brake (frac of stroke)")
axes[2].legend()
axes[2].set(ylabel="pedal position")

axes[3].plot(trace.t, trace.f_reg / 1e3, label="regenerative")
axes[3].plot(trace.t, trace.f_fric / 1e3, label="friction")
axes[3].legend()
axes[3].set(xlabel="time (s)", ylabel="brake force (kN)")
fig.tight_layout()
name = out / f"pursuit_{label}_seed{seed}.png"
fig.savefig(name, dpi=120)
print(f"wrote {name}")
