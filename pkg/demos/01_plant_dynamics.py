"""Tour of the web-line plant model.

Walks through the coupled tension/velocity dynamics on the three-section
desk rig: rate evaluation, forward-Euler stepping, the continuity velocity
profile that freezes a tension reference, the torques that hold it, and
the neighbour coupling that makes the control problem interesting.
"""

import numpy as np

from r2rlab.plant import (
    PlantParams,
    PlantState,
    continuity_velocities,
    derivatives,
    equilibrium_torques,
    euler_step,
    reference_state,
)

params = PlantParams()
print("Physical constants (desk-scale three-section rig)")
print(f"  web stiffness EA = {params.stiffness_EA:.0f} N")
print(f"  roller radius R  = {params.radius_R} m, inertia J = {params.inertia_J} kg m^2")
print(f"  drag f_b = {params.friction_fb} N m s/rad, span L = {params.span_length_L} m")
print(f"  feed velocity v0 = {params.unwind_velocity_v0} m/s, dt = {params.dt} s")

# The steady velocity profile for a 30 N set-point: slightly faster than
# the feed because the web stretches under tension.
T_ref = np.full(3, 30.0)
v_ref = continuity_velocities(params, T_ref)
print(f"\nContinuity velocities for uniform 30 N: {v_ref}")
print(f"  (feed 0.01 m/s stretched by EA/(EA - 30) = {2400 / 2370:.6f})")

# Torques that freeze that operating point. The last roller works hardest:
# it fights the full 30 N drop to the slack side.
u_eq = equilibrium_torques(params, T_ref, v_ref)
print(f"Equilibrium torques: {u_eq} N m")

state = reference_state(params, T_ref)
dT, dv = derivatives(params, state, u_eq)
print(f"Rates at the equilibrium: |dT| max {np.max(np.abs(dT)):.2e} N/s, "
      f"|dv| max {np.max(np.abs(dv)):.2e} m/s^2")

# Hold it for 10 simulated seconds.
s = state.copy()
for _ in range(1000):
    s = euler_step(params, s, u_eq)
print(f"After 1000 steps at the equilibrium: max tension drift "
      f"{np.max(np.abs(s.tensions - T_ref)):.2e} N")

# Coupling: bump one span's tension and watch the neighbours' rates react.
bumped = state.copy()
bumped.tensions[1] += 5.0
_, dv_bumped = derivatives(params, bumped, u_eq)
print("\n+5 N on span 2 (torques unchanged):")
print(f"  dv = {dv_bumped} m/s^2")
print("  roller 1 accelerates (pulled forward), roller 2 decelerates "
      "(held back) -- the spans talk to each other through the rollers.")

# Open loop, the plant drifts: equilibrium torques for 30 N no longer fit
# once the state wanders.
drift = PlantState(T_ref + np.array([2.0, -1.0, 0.5]), v_ref.copy())
for k in range(500):
    drift = euler_step(params, drift, u_eq)
print(f"\nOpen loop from a perturbed start, after 5 s: tensions {drift.tensions}")
print("No feedback means no recovery; that is the controllers' job (demo 03).")
