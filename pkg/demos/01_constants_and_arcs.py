"""Genus constants and the two spine arcs.

Run:  python demos/01_constants_and_arcs.py
"""

# %% The constants for a few genera
import numpy as np

from thurston_spine import c0, c1, c_half, length, trace_arc, triple_point

print(f"{'g':>3} {'c0':>10} {'c1':>10} {'c_half':>10} {'c_M':>10} {'u_M':>10}")
for g in (2, 3, 4, 5, 10, 100):
    tp = triple_point(g)
    print(f"{g:>3} {c0(g):10.6f} {c1(g):10.6f} {c_half(g):10.6f} {tp.c_M:10.6f} {tp.u_M:10.6f}")

# c0 creeps up to 2 asinh(1) as the genus grows
print("limit of c0:", 2 * np.arcsinh(1.0))

# %% Genus 3 is special: cosh(c_half / 2) is exactly 3/2
print("genus 3: cosh(c_half/2) =", np.cosh(c_half(3) / 2))

# %% Tracing both arcs for genus 2
g = 2
bg = trace_arc(g, "beta-gamma", n_samples=9)
ag = trace_arc(g, "alpha-gamma", n_samples=9)

print("\nbeta = gamma arc (u decreases from 1 to u_M)")
for p in bg.samples:
    print(f"  c={p.c:.5f}  u={p.u:.5f}  l_beta-l_gamma={length(g, p.c, p.t, 'beta') - 2 * p.c:+.1e}")

print("alpha = gamma arc (u grows from 0 to u_M)")
for p in ag.samples:
    print(f"  c={p.c:.5f}  u={p.u:.5f}  l_alpha-l_gamma={length(g, p.c, p.t, 'alpha') - 2 * p.c:+.1e}")

# %% At the meeting point all three families tie, and the systole is locally maximal
tp = triple_point(g)
print("\ntriple point lengths:",
      {k: round(length(g, tp.c_M, tp.t_M, k), 12) for k in ("alpha", "beta", "gamma", "delta")})
