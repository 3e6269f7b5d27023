"""Walk through the static maps that define the pedal feel.

Four curves do all the work: pedal displacement to felt force, displacement
to deceleration demand, displacement to the friction-brake reaction force,
and vehicle speed to the maximum regenerative force the motor can supply.
A fifth curve re-expresses the felt force in the total-brake-force domain;
it is the reference the haptic compensation reproduces.

Run from the repository root:

    python3 demos/01_pedal_maps.py

Figures land in demos/out/.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from pedalfeel.maps import (
    MapParams,
    brakeforce_to_pedal_force,
    friction_reaction_force,
    pedal_feel_force,
    pedal_to_decel,
    regen_capacity,
)

out = pathlib.Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

p = MapParams()
print(f"vehicle mass {p.vehicle_mass:.0f} kg, g {p.g} m/s^2, "
      f"regen power {p.P_m / 1e3:.0f} kW, cutoffs {p.v_low_cut}-{p.v_high_cut} m/s")

# a few anchor points worth knowing by heart
print(f"feel at rest contact: {pedal_feel_force(0.0):.2f} N (preload)")
print(f"feel at the 20 mm knee: {pedal_feel_force(20.0):.2f} N")
print(f"full-stroke feel (80 mm): {pedal_feel_force(80.0):.2f} N")
print(f"decel demand at 50 mm: {pedal_to_decel(50.0, p):.2f} m/s^2")
knee_total = p.vehicle_mass * -pedal_to_decel(20.0, p)
print(f"total brake force at the knee: {knee_total:.0f} N -> "
      f"{brakeforce_to_pedal_force(knee_total, p):.2f} N felt")

x = np.linspace(0.0, 80.0, 801)
feel = np.array([pedal_feel_force(float(xi)) for xi in x])
decel = np.array([pedal_to_decel(float(xi), p) for xi in x])
fric = np.array([friction_reaction_force(float(xi)) for xi in x])

fig, axes = plt.subplots(1, 3, figsize=(13, 4))
axes[0].plot(x, feel)
axes[0].axvline(20.0, color="0.8", ls="--")
axes[0].set(xlabel="pedal displacement (mm)", ylabel="felt force (N)",
            title="conventional pedal feel")
axes[1].plot(x, -decel / p.g)
axes[1].axvline(20.0, color="0.8", ls="--")
axes[1].set(xlabel="pedal displacement (mm)", ylabel="deceleration demand (g)",
            title="braking demand")
axes[2].plot(x, fric, label="friction reaction")
axes[2].plot(x, feel / 5.0, "--", label="feel / 5")
axes[2].legend()
axes[2].set(xlabel="pedal displacement (mm)", ylabel="force (N)",
            title="dynamometer reaction")
fig.tight_layout()
fig.savefig(out / "pedal_maps.png", dpi=120)
print(f"wrote {out / 'pedal_maps.png'}")

# regen capacity: constant power between the cutoffs, linear fade inside them
v = np.linspace(0.0, 36.0, 1441)
cap = np.array([regen_capacity(float(vi), p) for vi in v])
fig, ax = plt.subplots(figsize=(6, 4))
ax.plot(v, cap / 1e3)
for vc in (p.v_low_cut, p.v_high_cut):
    ax.axvline(vc, color="0.8", ls="--")
ax.set(xlabel="vehicle speed (m/s)", ylabel="max regenerative force (kN)",
       title="regen capacity, P/v with faded cutoffs")
fig.tight_layout()
fig.savefig(out / "regen_capacity.png", dpi=120)
print(f"wrote {out / 'regen_capacity.png'}")

# force-domain feel curve: what the compensation reproduces on the pedal
F = np.linspace(0.0, 8000.0, 801)
felt = np.array([brakeforce_to_pedal_force(float(f), p) for f in F])
fig, ax = plt.subplots(figsize=(6, 4))
ax.plot(F / 1e3, felt)
ax.axvline(knee_total / 1e3, color="0.8", ls="--")
ax.set(xlabel="total brake force (kN)", ylabel="felt pedal force (N)",
       title="feel in the total-force domain")
fig.tight_layout()
fig.savefig(out / "force_domain_feel.png", dpi=120)
print(f"wrote {out / 'force_domain_feel.png'}")
