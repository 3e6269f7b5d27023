"""Characterize the haptic pedal's force-control loop.

Three standard checks on the simulated series-elastic pedal: a closed-loop
frequency response at 75 N amplitude, a 75 N reference step, and a coupled
stability sweep against a grid of foot impedances while rendering virtual
springs. The same controller drives the dynamometer channel.

    python3 demos/03_sea_response.py
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from pedalfeel.sea import (
    CascadedGains,
    SeaPlantParams,
    coupled_stability_sweep,
    measure_frf,
    step_response,
)

out = pathlib.Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

gains = CascadedGains()
plant = SeaPlantParams()

freqs = np.geomspace(0.5, 40.0, 25)
frf = measure_frf(freqs, 75.0, gains, plant)
print(f"-3 dB crossover: {frf.crossover_hz():.1f} Hz")

fig, axes = plt.subplots(2, 1, figsize=(7, 6), sharex=True)
axes[0].semilogx(frf.freqs, frf.gain_db)
axes[0].axhline(-3.0, color="0.8", ls="--")
axes[0].set(ylabel="magnitude (dB)", title="closed-loop force FRF at 75 N")
axes[1].semilogx(frf.freqs, frf.phase_deg)
axes[1].set(xlabel="frequency (Hz)", ylabel="phase (deg)")
fig.tight_layout()
fig.savefig(out / "sea_frf.png", dpi=120)
print(f"wrote {out / 'sea_frf.png'}")

t, f = step_response(75.0, 1.0, gains, plant)
band = np.flatnonzero(np.abs(f - 75.0) > 0.02 * 75.0)
settle = t[band.max() + 1] if band.size else 0.0
print(f"75 N step: settles to 2% in {settle:.3f} s, "
      f"overshoot {max(0.0, f.max() / 75.0 - 1.0) * 100:.1f}%")

fig, ax = plt.subplots(figsize=(7, 4))
ax.plot(t, f)
ax.axhline(75.0, color="0.8", ls="--")
ax.set(xlabel="time (s)", ylabel="rendered force (N)", title="75 N step",
       xlim=(0.0, 0.5))
fig.tight_layout()
fig.savefig(out / "sea_step.png", dpi=120)
print(f"wrote {out / 'sea_step.png'}")

report = coupled_stability_sweep(gains=gains, plant=plant)
print(f"coupled stability: {report.stable.sum()}/{report.stable.size} cases "
      f"stable ({report.fraction_stable * 100:.0f}%)")
for i, k_h in enumerate(report.k_h):
    for j, b_h in enumerate(report.b_h):
        cells = " ".join(
            f"k_r={k_r:5.0f}:{'ok' if report.stable[i, j, m] else 'DIVERGED'}"
            for m, k_r in enumerate(report.k_render))
        print(f"  foot k={k_h:6.0f} N/m b={b_h:5.1f} N s/m  {cells}")
