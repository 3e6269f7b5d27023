"""Reproduce the blended-braking handover on a scripted brake ramp.

The brake pedal is displaced linearly to 20 mm over ten seconds from 50 km/h.
Regen serves the whole demand while speed is high, friction engages as the
car falls through the low regen cutoff, and friction alone holds the car at
standstill. With compensation on, the felt pedal force follows the
conventional curve smoothly through the handover; with compensation off, the
driver feels nothing during the regen phase and a sudden onset when the
friction brake arrives.

    python3 demos/02_brake_ramp_blend.py
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from pedalfeel.blending import DriveCondition
from pedalfeel.config import DriverSpec, ExperimentConfig
from pedalfeel.harness import run_trial

out = pathlib.Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

RAMP = ((0.0, 0.0, 0.0), (5.0, 0.0, 0.0), (15.0, 0.0, 20.0), (25.0, 0.0, 20.0))


def ramp_trace(label):
    cfg = ExperimentConfig(
        driver=DriverSpec(kind="scripted", script=RAMP, duration_s=25.0,
                          initial_speed=13.889),
        condition=DriveCondition.from_label(label))
    trace, metrics = run_trial(cfg, seed=1)
    return trace, metrics


comp, _ = ramp_trace("two-pedal-compensated")
uncomp, _ = ramp_trace("two-pedal-uncompensated")

# narrate the handover from the compensated trace
i_fric = int(np.flatnonzero(comp.f_fric > 0.0).min())
i_stop = int(np.flatnonzero(comp.fol_vel == 0.0).min())
print(f"braking starts            t = 5.00 s at {comp.fol_vel[5000]:.1f} m/s")
print(f"friction engages          t = {comp.t[i_fric]:.2f} s "
      f"at {comp.fol_vel[i_fric]:.2f} m/s")
print(f"standstill                t = {comp.t[i_stop]:.2f} s")
peak_reg = float(comp.f_reg.max())
print(f"peak regen force          {peak_reg:.0f} N")

fig, axes = plt.subplots(3, 1, figsize=(8, 9), sharex=True)
axes[0].plot(comp.t, comp.fol_vel)
axes[0].axhline(4.0, color="0.8", ls="--")
axes[0].set(ylabel="speed (m/s)", title="linear brake ramp from 50 km/h")

axes[1].plot(comp.t, comp.f_reg / 1e3, label="regenerative")
axes[1].plot(comp.t, comp.f_fric / 1e3, label="friction")
axes[1].legend()
axes[1].set(ylabel="brake force (kN)")

axes[2].plot(comp.t, comp.pedal_force, label="compensated")
axes[2].plot(uncomp.t, uncomp.pedal_force, label="uncompensated")
axes[2].legend()
axes[2].set(xlabel="time (s)", ylabel="felt pedal force (N)")
fig.tight_layout()
fig.savefig(out / "brake_ramp_blend.png", dpi=120)
print(f"wrote {out / 'brake_ramp_blend.png'}")

# the felt-force contrast in numbers: largest single-tick change while braking
eng = comp.brake_x > 0.0
print(f"compensated felt force spans "
      f"{comp.pedal_force[eng].min():.1f} - {comp.pedal_force[eng].max():.1f} N "
      f"across the stop")
pre = uncomp.pedal_force[i_fric - 1]
post = uncomp.pedal_force[i_fric:i_fric + 750].max()
print(f"uncompensated force jumps {pre:.2f} -> {post:.2f} N at engagement")
