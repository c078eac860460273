"""Step-response metric conventions on closed-form signals.

The benchmark reports rise time (first 10% to first 90% crossing of the
step magnitude), settling time (last exit from a +/-2%-of-magnitude band
around the final level), overshoot (peak past the final level, % of
magnitude), and coupling spill-over on the undisturbed sections. Running
them on analytically known signals shows each convention doing its job.
"""

import math

import numpy as np

from r2rlab.evalbench import EpisodeTrace, step_metrics

DT = 0.01


def trace_from_section2(y, t, ref_after=40.0, ref_before=20.0, t_step=0.5):
    T = np.tile(np.array([30.0, 0.0, 30.0]), (t.size, 1))
    T[:, 1] = y
    T_ref = np.tile(np.array([30.0, ref_before, 30.0]), (t.size, 1))
    T_ref[t >= t_step, 1] = ref_after
    L = t.size - 1
    return EpisodeTrace(t, T, np.zeros_like(T), T_ref, np.zeros_like(T),
                        np.zeros((L, 3)), np.zeros((L, 3)), np.zeros(L),
                        np.zeros(L, dtype=bool))


t = np.arange(0.0, 5.0 + DT / 2, DT)

print("First-order response, tau = 0.1 s (20 N -> 40 N at t = 0.5 s)")
tau = 0.1
y = np.where(t < 0.5, 20.0, 40.0 - 20.0 * np.exp(-(t - 0.5) / tau))
m = step_metrics(trace_from_section2(y, t), 1, 0.5, 20.0, 40.0)
print(f"  rise    {m.rise_time:.4f} s  (analytic tau ln 9  = {tau * math.log(9):.4f})")
print(f"  settle  {m.settling_time:.4f} s  (analytic tau ln 50 = {tau * math.log(50):.4f})")
print(f"  overshoot {m.overshoot_pct:.1f}% (monotone response never overshoots)")

print("\nUnderdamped response: 12% peak past the target")
y2 = np.where(t < 0.5, 20.0,
              40.0 + 20.0 * 0.12 * np.exp(-(t - 0.5) / 0.15)
              * np.cos(2 * np.pi * (t - 0.5) / 0.3)
              - 20.0 * np.exp(-(t - 0.5) / 0.05))
m2 = step_metrics(trace_from_section2(y2, t), 1, 0.5, 20.0, 40.0)
print(f"  rise {m2.rise_time:.3f} s, settle {m2.settling_time:.3f} s, "
      f"overshoot {m2.overshoot_pct:.1f}%")

print("\nPlateau at 35 N: a policy that never drives to the target")
y3 = np.where(t < 0.5, 20.0, 35.0 - 15.0 * np.exp(-(t - 0.5) / 0.1))
m3 = step_metrics(trace_from_section2(y3, t), 1, 0.5, 20.0, 40.0)
print(f"  rise time: {m3.rise_time} (undefined: 90% of the step is never reached;"
      " reported as ---)")

print("\nCoupling: neighbour section deflects 0.8 N and recovers")
T = np.tile(np.array([30.0, 0.0, 30.0]), (t.size, 1))
T[:, 1] = y
T[:, 0] = 30.0 + np.where(t >= 0.5, 0.8 * np.exp(-(t - 0.5) / 0.1), 0.0)
tr = trace_from_section2(y, t)
tr.tensions = T
m4 = step_metrics(tr, 1, 0.5, 20.0, 40.0)
print(f"  max neighbour deviation {m4.coupling_max_dev:.2f} N; "
      f"back inside the 0.1 N band after {m4.coupling_settling:.3f} s "
      f"(analytic 0.1 ln 8 = {0.1 * math.log(8):.3f})")
