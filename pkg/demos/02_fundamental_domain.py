"""The fundamental domain in the upper half-plane, with the spine drawn in.

Points (c, t) are sent to t/c + i/c.  The twist edges L_{-1}, L_0, L_1 become
vertical lines; the alpha edges are their images under the rotation f.

Run:  python demos/02_fundamental_domain.py [out.png]
A PNG is written only when matplotlib is available.
"""

# %% Sample every boundary curve and both spine arcs
import sys

from thurston_spine import in_F0
from thurston_spine.domain import domain_picture

g = 3
polys = domain_picture(g, n=150, c_range=(0.2, 12.0))
for p in polys:
    xs = [pt[2] for pt in p["points"]]
    ys = [pt[3] for pt in p["points"]]
    print(f"{p['name']:<20} {p['kind']:<8} x in [{min(xs):+.3f}, {max(xs):+.3f}]  "
          f"y in [{min(ys):.3f}, {max(ys):.3f}]")

# %% Every spine sample sits in F0
spine_pts = [pt for p in polys if p["kind"] == "spine" for pt in p["points"]]
print("spine samples inside F0:", all(in_F0(g, c, t, tol=1e-9) for c, t, _, _ in spine_pts))

# %% Optional picture
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(6, 6))
    for p in polys:
        xs = [pt[2] for pt in p["points"]]
        ys = [pt[3] for pt in p["points"]]
        style = dict(color="crimson", lw=2) if p["kind"] == "spine" else dict(color="0.3", lw=1)
        ax.plot(xs, ys, **style)
    ax.set_xlim(-1.3, 1.3)
    ax.set_ylim(0, 1.6)
    ax.set_aspect("equal")
    ax.set_title(f"genus {g}: boundary of F and the spine")
    out = sys.argv[1] if len(sys.argv) > 1 else "fundamental_domain.png"
    fig.savefig(out, dpi=120)
    print("wrote", out)
