"""Anatomy of the tension-tracking MDP.

Shows the 22-dimensional observation layout, the action pipeline (EMA
smoothing, Gaussian actuation noise, torque scaling), the multi-term
reward, curriculum reference sampling, and a full random-policy episode
exported to CSV.
"""

import numpy as np

from r2rlab.env import EnvConfig, WebTensionEnv, compute_reward, sample_reference
from r2rlab.evalbench import run_episode, trace_csv
from r2rlab.plant import PlantParams
from r2rlab.sac import PHASE_FOUNDATION, PHASE_MASTERY

params = PlantParams()
cfg = EnvConfig()
rng = np.random.default_rng(0)

print("Observation layout (7N+1 = 22 for N=3):")
print("  [T_norm x3 | v_norm x3 | T_ref_norm x3 | v_ref_norm x3 |"
      " e_T x3 | e_v x3 | u_prev x3 | progress]")

env = WebTensionEnv(params, cfg)
obs = env.reset(phase=PHASE_FOUNDATION, rng=rng)
print(f"\nReset on a Phase-1 reference: tensions {env.state.tensions}")
print(f"  tracking errors in the first observation: {obs[12:18]} (exactly zero)")
print(f"  previous command = normalized equilibrium torque: {obs[18:21]}")

# One step with a small nudge on top of the held command.
out = env.step(np.clip(obs[18:21] + 0.05, -1, 1))
print(f"\nAfter one step: reward {out.reward:.4f}, success {out.info['success']}")
print(f"  commanded (smoothed, pre-noise): {out.info['u_cmd']}")
print(f"  applied torques (noisy, scaled): {out.info['torques']} N m")

# Reward structure at a glance.
T_ref = np.full(3, 30.0)
v = np.full(3, 0.0101)
perfect, _, _ = compute_reward(cfg, T_ref, T_ref, v, v, np.zeros(3), np.zeros(3))
off1, _, _ = compute_reward(cfg, T_ref + 1, T_ref, v, v, np.zeros(3), np.zeros(3))
viol, _, V = compute_reward(cfg, np.array([5.0, 30, 30]), T_ref, v, v,
                            np.zeros(3), np.zeros(3))
print("\nReward examples (scaled by lambda = 0.01):")
print(f"  perfect tracking, zero effort:     {perfect:+.4f}  (success bonus)")
print(f"  1 N error on every section:        {off1:+.4f}")
print(f"  one section at 5 N (violation {V:.0f}): {viol:+.4f}")
print(f"  perfect-episode ceiling: 500 * {perfect:.2f} = {500 * perfect:.1f}")

# Curriculum phases widen the reference distribution.
for name, phase in (("Phase 1", PHASE_FOUNDATION), ("Phase 3", PHASE_MASTERY)):
    prof = sample_reference(params, cfg, phase, rng)
    print(f"\n{name} sample: base tensions {prof.tension_ref[0]},"
          f" v0 = {prof.unwind_velocity:.5f} m/s,"
          f" step events: {prof.step_events or 'none'}")

# A full episode under a lazy policy (hold the initial command), exported.
hold = obs[18:21].copy()
trace = run_episode(WebTensionEnv(params, cfg),
                    lambda env, obs: hold, np.random.default_rng(7),
                    phase=PHASE_FOUNDATION)
print(f"\nHold-the-command episode: return {trace.episode_return:.2f}, "
      f"final tensions {trace.tensions[-1]}")
trace_csv(trace, "runs/demo_episode.csv")
print("per-step trace written to runs/demo_episode.csv")
