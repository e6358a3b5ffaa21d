"""Numerical certification of the quantitative claims about the spine.

Each claim is a function ``(genus, cfg) -> ClaimResult`` registered under a
string id.  Claims never raise on a failed check; a failure is a result with
``passed=False``.  Grids are closed and uniform in ``(c, u)``.
"""

from dataclasses import asdict, dataclass, field
from functools import lru_cache
import math
import zlib

import numpy as np

from . import domain, solvers, spine
from .geometry import (
    C_MAX,
    C_MIN,
    CurveClass,
    check_genus,
    dual_array,
    lengths_array,
    seam_constant,
)
from .solvers import c0, c1, c_half, c_half_C

#: c-range of the standard grids
GRID_C = (0.05, 10.0)

# delta exclusion bounds per genus: (min delta, max gamma)
DELTA_BOUNDS = {3: (4.77, 3.85), 5: (6.85, 4.64)}
C_HALF_BOUNDS = {3: 1.925, 5: 2.318}


@dataclass
class ClaimResult:
    claim_id: str
    genus: int
    passed: bool
    worst_residual: float
    witness: tuple = None
    details: str = ""
    status: str = field(default="")
    seed: int = None

    def __post_init__(self):
        if not self.status:
            self.status = "passed" if self.passed else "failed"

    def to_dict(self):
        d = asdict(self)
        d["witness"] = None if self.witness is None else [float(x) for x in self.witness]
        return d


@dataclass(frozen=True)
class VerifyConfig:
    genus_list: tuple = (2, 3, 5)
    grid_n: int = 200
    seed: int = 0

    def __post_init__(self):
        if self.grid_n < 8:
            raise ValueError("grid_n must be >= 8")
        object.__setattr__(self, "genus_list",
                           tuple(check_genus(g) for g in self.genus_list))


class UnknownClaimError(KeyError):
    pass


_REGISTRY = {}


def claim(claim_id, applies=lambda g: True):
    def deco(fn):
        _REGISTRY[claim_id] = (fn, applies)
        return fn
    return deco


def claim_ids():
    return sorted(_REGISTRY)


def applies(claim_id, genus):
    return _REGISTRY[claim_id][1](genus)


def rng_for(claim_id, genus, seed):
    return np.random.default_rng([seed, genus, zlib.crc32(claim_id.encode())])


def _residual_result(cid, g, worst, tol, witness=None, details=""):
    worst = float(worst)
    ok = bool(math.isfinite(worst) and worst <= tol)
    return ClaimResult(cid, g, ok, worst, witness, f"{details} (tol {tol:g})".strip())


def _margin_result(cid, g, margin, witness=None, details="", resolution=0.0):
    """Inequality claim: pass iff ``margin > 0``; a small negative margin is inconclusive."""
    margin = float(margin)
    ok = margin > 0
    res = ClaimResult(cid, g, ok, max(0.0, -margin), witness,
                      f"{details}; worst margin {margin:.6g}".strip("; "))
    if not ok and -margin <= resolution:
        res.status = "inconclusive"
    return res


def strip_grid(n, c_range=GRID_C, u_lo=None):
    """``(c, t)`` arrays on the strip ``0 < t <= c``; ``u`` runs over ``k/n``."""
    cs = np.linspace(*c_range, n)
    us = np.arange(1, n + 1) / n if u_lo is None else np.linspace(u_lo, 1.0, n)
    C, U = np.meshgrid(cs, us, indexing="ij")
    return C, U * C


# --- geometry ---------------------------------------------------------------

def partial_signs(genus, n=100, c_range=GRID_C):
    """Central differences of the alpha and beta lengths on the strip grid.

    Returns a dict with the smallest of ``dl_alpha/dt``, ``-dl_alpha/dc``,
    ``-dl_beta/dt`` over the whole grid (``strict``) and over rows with
    ``t < c`` (``interior``), the largest ``dl_beta/dt`` on the edge
    ``t = c`` (``edge_beta``) with its rounding-noise scale (``noise``), and
    a witness for the strict minimum.

    On ``t = c`` the beta length is symmetric in ``t``, so its t-derivative
    is exactly zero there and the difference quotient is pure rounding.
    """
    C, T = strip_grid(n, c_range)
    h = 1e-6 * np.maximum(1.0, C)
    la = lambda c, t: lengths_array(genus, c, t)["alpha"]
    lb = lambda c, t: lengths_array(genus, c, t)["beta"]
    da_dt = (la(C, T + h) - la(C, T - h)) / (2 * h)
    da_dc = (la(C + h, T) - la(C - h, T)) / (2 * h)
    db_dt = (lb(C, T + h) - lb(C, T - h)) / (2 * h)
    m = np.minimum(np.minimum(da_dt, -da_dc), -db_dt)
    i = np.unravel_index(np.argmin(m), m.shape)
    edge = T == C
    m_alpha = np.minimum(da_dt, -da_dc)
    noise = 100 * np.finfo(float).eps * lb(C, T) / h
    return {
        "strict": float(m[i]),
        "witness": (float(C[i]), float(T[i])),
        "interior": float(np.min(m[~edge])),
        "edge_alpha": float(np.min(m_alpha[edge])),
        "edge_beta": float(np.max(db_dt[edge])),
        "noise": float(np.max(noise[edge])),
    }


@claim("sign_partials")
def _sign_partials(g, cfg):
    p = partial_signs(g, cfg.grid_n)
    ok = p["interior"] > 0 and p["edge_alpha"] > 0 and p["edge_beta"] <= p["noise"]
    return ClaimResult(
        "sign_partials", g, ok, max(0.0, -p["interior"], -p["edge_alpha"]),
        p["witness"],
        f"strict signs for 0 < t < c (min margin {p['interior']:.3g}); on t = c "
        f"dl_beta/dt = 0 analytically, max difference quotient {p['edge_beta']:.3g} "
        f"vs noise {p['noise']:.3g}")


def boundary_margins(genus, n=200, c_range=GRID_C):
    """Margins of the inequalities on ``t = 0`` and ``t = c`` over a c-grid."""
    cs = np.linspace(*c_range, n)
    L0 = lengths_array(genus, cs, 0.0 * cs)
    L1 = lengths_array(genus, cs, cs)
    m = np.stack([L0["beta"] - L0["alpha"], L0["beta"] - L0["gamma"],
                  L1["alpha"] - L1["beta"]])
    rel = m / L0["beta"]
    j = np.unravel_index(np.argmin(rel), rel.shape)
    return float(rel[j]), float(cs[j[1]])


@claim("boundary_inequalities")
def _boundary(g, cfg):
    m, c = boundary_margins(g, cfg.grid_n)
    return _margin_result("boundary_inequalities", g, m, (c, 0.0),
                          "t=0: l_alpha < l_beta, l_gamma < l_beta; t=c: l_alpha > l_beta (relative)")


def random_points(rng, n, c_range=GRID_C, t_scale=3.0):
    c = rng.uniform(*c_range, n)
    t = rng.uniform(-t_scale, t_scale, n) * c
    return c, t


def involution_residual(genus, c, t):
    _, ca, ta, _ = dual_array(genus, c, t)
    _, c2, t2, _ = dual_array(genus, ca, ta)
    r = np.maximum(np.abs(c2 - c) / np.maximum(1, c), np.abs(t2 - t) / np.maximum(1, np.abs(t)))
    i = int(np.argmax(r))
    return float(r[i]), (float(c[i]), float(t[i]))


@claim("dual_involution")
def _dual_involution(g, cfg):
    rng = rng_for("dual_involution", g, cfg.seed)
    c, t = random_points(rng, 1000)
    r, w = involution_residual(g, c, t)
    res = _residual_result("dual_involution", g, r, 1e-9, w, "f(f(c, t)) = (c, t), 1000 random points")
    res.seed = cfg.seed
    return res


def tanh_residual(genus, c, t):
    _, ca, ta, _ = dual_array(genus, c, t)
    lhs = np.tanh(np.abs(ta) / 2) / np.tanh(c / 2)
    rhs = np.tanh(np.abs(t) / 2) / np.tanh(ca / 2)
    r = np.abs(lhs - rhs) / np.maximum(1e-300, np.maximum(np.abs(lhs), np.abs(rhs)))
    r = np.where((lhs == 0) & (rhs == 0), 0.0, r)
    i = int(np.argmax(r))
    return float(r.flat[i]), (float(np.ravel(c)[i]), float(np.ravel(t)[i]))


@claim("tanh_identity")
def _tanh(g, cfg):
    C, T = strip_grid(cfg.grid_n)
    C = np.concatenate([C.ravel(), C.ravel()])
    T = np.concatenate([T.ravel(), -T.ravel()])
    r, w = tanh_residual(g, C, T)
    return _residual_result("tanh_identity", g, r, 1e-9, w,
                            "tanh(|t_a|/2)/tanh(c/2) = tanh(|t|/2)/tanh(c_a/2) on the grid")


def sign_rule(genus, c, t):
    """Worst violation of ``t * t_alpha < 0`` and of ``t = 0 iff t_alpha = 0``."""
    _, _, ta, _ = dual_array(genus, c, t)
    # compare signs, not the product, which can underflow
    bad_sign = (t != 0) & ~(np.sign(t) * np.sign(ta) < 0)
    bad_zero = (t == 0) != (ta == 0)
    return int(np.count_nonzero(bad_sign)), int(np.count_nonzero(bad_zero))


@claim("dual_sign")
def _dual_sign(g, cfg):
    rng = rng_for("dual_sign", g, cfg.seed)
    c, t = random_points(rng, 1000)
    bad, _ = sign_rule(g, c, t)
    return ClaimResult("dual_sign", g, bad == 0, float(bad), None,
                       f"t * t_alpha < 0 at 1000 random points; {bad} violations", seed=cfg.seed)


@claim("dual_zero")
def _dual_zero(g, cfg):
    cs = np.linspace(*GRID_C, cfg.grid_n)
    _, _, ta, _ = dual_array(g, cs, 0.0 * cs)
    rng = rng_for("dual_zero", g, cfg.seed)
    c, t = random_points(rng, 1000)
    _, nz = sign_rule(g, c, t)
    bad = int(np.count_nonzero(ta != 0)) + nz
    return ClaimResult("dual_zero", g, bad == 0, float(bad), None,
                       "t = 0 iff t_alpha = 0 on L_0 and at random points")


@claim("geometry_invariants")
def _geom_inv(g, cfg):
    rng = rng_for("geometry_invariants", g, cfg.seed)
    c, t = random_points(rng, 1000)
    L = lengths_array(g, c, t)
    Lm = lengths_array(g, c, -t)
    r_even = np.max(np.abs(L["alpha"] - Lm["alpha"]) / L["alpha"])
    r_gamma = np.max(np.abs(L["gamma"] - 2 * c))
    return _residual_result("geometry_invariants", g, max(r_even, r_gamma), 1e-12, None,
                            "alpha length even in t; gamma length = 2c")


# --- constants ---------------------------------------------------------------

def constants_residuals(genus):
    """Residuals of the defining equations at c0, c1 and c_half."""
    k = seam_constant(genus)
    a, b, h = c0(genus), c1(genus), c_half(genus)
    L0 = lengths_array(genus, a, 0.0)
    L1 = lengths_array(genus, b, b)
    Lh = lengths_array(genus, h, h / 2)
    C = c_half_C(genus)
    return {
        "c0": abs(float(L0["alpha"] - L0["gamma"])),
        "c1": abs(float(L1["beta"] - L1["gamma"])),
        "c_half": abs(float(Lh["beta"] - Lh["gamma"])),
        "c_half_C": abs(solvers.half_level_L(C) - k * k),
    }


@claim("constants_residuals")
def _constants(g, cfg):
    r = constants_residuals(g)
    worst = max(r.values())
    res = _residual_result("constants_residuals", g, worst, 1e-10, None,
                           ", ".join(f"{k}={v:.3g}" for k, v in r.items()))
    bound = 1.925 if g == 3 else (2.318 if g >= 5 else None)
    if bound is not None:
        ch = c_half(g)
        res.details += f"; c_half={ch:.12g} < {bound}"
        if not ch < bound:
            res.passed, res.status = False, "failed"
    return res


@claim("c_half_bound_g3", applies=lambda g: g == 3)
def _c_half_g3(g, cfg):
    C = c_half_C(3)
    ch = c_half(3)
    ok = abs(C - 1.5) < 1e-12 and ch < 1.925
    return ClaimResult("c_half_bound_g3", g, ok, abs(C - 1.5), None,
                       f"C={C!r} (expect 1.5), c_half={ch!r} < 1.925")


@claim("c_half_bound_g5", applies=lambda g: g >= 5)
def _c_half_g5(g, cfg):
    ch = c_half(g)
    ok = ch < 2.318
    return ClaimResult("c_half_bound_g5", g, ok, max(0.0, ch - 2.318), None,
                       f"c_half={ch!r} < 2.318")


def c_half_monotone(genera=range(2, 51)):
    vals = [c_half(g) for g in genera]
    diffs = np.diff(vals)
    cap = 2 * math.acosh(1.75)
    return float(np.min(diffs)), max(vals), cap


@claim("c_half_monotone")
def _c_half_mono(g, cfg):
    d, top, cap = c_half_monotone()
    ok = d > 0 and top < cap
    return ClaimResult("c_half_monotone", g, ok, max(0.0, -d), None,
                       f"c_half strictly increasing on g=2..50 (min step {d:.3g}); max {top:.12g} < {cap:.12g}")


@claim("consistency_triangle")
def _triangle(g, cfg):
    r = abs(spine.u1(g, c_half(g)) - 0.5)
    return _residual_result("consistency_triangle", g, r, 1e-9, (c_half(g), 0.5 * c_half(g)),
                            "u1(c_half) = 1/2")


@claim("bisect_vs_brent")
def _bvb(g, cfg):
    r = max(abs(solvers.c1(g) - solvers.c1(g, method="brent")),
            abs(solvers.c_half(g) - solvers.c_half(g, method="brent")))
    return _residual_result("bisect_vs_brent", g, r, solvers.DEFAULT.abs_tol * 4, None,
                            "c1 and c_half agree between bisection and Brent")


def below_c1_gap(genus, n=200, c_lo=GRID_C[0]):
    """Smallest ``l_beta - l_gamma`` over ``c_lo <= c < c1``, ``0 <= u <= 1``."""
    top = c1(genus)
    cs = np.linspace(c_lo, top, n + 1)[:-1]
    us = np.linspace(0.0, 1.0, n)
    C, U = np.meshgrid(cs, us, indexing="ij")
    L = lengths_array(genus, C, U * C)
    gap = L["beta"] - L["gamma"]
    i = np.unravel_index(np.argmin(gap), gap.shape)
    return float(gap[i]), (float(C[i]), float(U[i] * C[i]))


@claim("no_bc_solution_below_c1")
def _below_c1(g, cfg):
    m, w = below_c1_gap(g, cfg.grid_n)
    return _margin_result("no_bc_solution_below_c1", g, m, w,
                          "l_beta > l_gamma for c < c1 on the strip", resolution=1e-9)


# --- spine --------------------------------------------------------------------

@lru_cache(maxsize=None)
def arc_checks(genus, n=256):
    """Residuals and side-condition margins for both traced arcs."""
    tp = spine.triple_point(genus)
    bg = spine.trace_arc(genus, spine.ArcKind.BETA_GAMMA, n_samples=n)
    ag = spine.trace_arc(genus, spine.ArcKind.ALPHA_GAMMA, n_samples=n)
    out = {"triple": tp}
    out["endpoint"] = max(abs(bg.samples[0].u - 1.0), abs(ag.samples[0].u),
                          abs(bg.samples[0].c - c1(genus)), abs(ag.samples[0].c - c0(genus)),
                          abs(bg.samples[-1].c - tp.c_M), abs(ag.samples[-1].c - tp.c_M))
    out["junction"] = abs(spine.u1(genus, tp.c_M) - spine.u0(genus, tp.c_M))
    Lb = lengths_array(genus, bg.c, bg.u * bg.c)
    La = lengths_array(genus, ag.c, ag.u * ag.c)
    out["residual"] = max(float(np.max(np.abs(Lb["beta"] - Lb["gamma"]))),
                          float(np.max(np.abs(La["alpha"] - La["gamma"]))))
    inner_b = bg.c < tp.c_M
    inner_a = ag.c < tp.c_M
    out["side"] = min(float(np.min((Lb["alpha"] - Lb["gamma"])[inner_b])),
                      float(np.min((La["beta"] - La["gamma"])[inner_a])))
    sys_b = np.minimum(np.minimum(Lb["alpha"], Lb["beta"]), Lb["gamma"])
    sys_a = np.minimum(np.minimum(La["alpha"], La["beta"]), La["gamma"])
    out["delta"] = min(float(np.min(Lb["delta"] - sys_b)), float(np.min(La["delta"] - sys_a)))
    out["arcs"] = (bg, ag)
    return out


@claim("arc_endpoints")
def _arc_end(g, cfg):
    a = arc_checks(g)
    return _residual_result("arc_endpoints", g, a["endpoint"], 1e-9, None,
                            "arcs start at (c1, 1) and (c0, 0) and end at c_M")


@claim("arc_residuals")
def _arc_res(g, cfg):
    a = arc_checks(g)
    return _residual_result("arc_residuals", g, a["residual"], 1e-9, None,
                            "|l_beta - l_gamma| and |l_alpha - l_gamma| on traced samples")


@claim("arc_junction")
def _arc_junc(g, cfg):
    a = arc_checks(g)
    tp = a["triple"]
    return _residual_result("arc_junction", g, a["junction"], 1e-9, (tp.c_M, tp.t_M),
                            "|u1(c_M) - u0(c_M)|")


@claim("spine_side_conditions")
def _arc_side(g, cfg):
    a = arc_checks(g)
    return _margin_result("spine_side_conditions", g, a["side"], None,
                          "l_beta = l_gamma < l_alpha and l_alpha = l_gamma < l_beta for c < c_M")


@claim("delta_on_spine")
def _arc_delta(g, cfg):
    a = arc_checks(g)
    return _margin_result("delta_on_spine", g, a["delta"], None,
                          "l_delta exceeds the systole on every traced sample")


def beyond_triple_margin(genus, offsets=(1e-4, 1e-3, 1e-2, 0.1)):
    """``l_gamma - l_beta`` on the alpha = gamma arc just past c_M (should be positive)."""
    cM = spine.triple_point(genus).c_M
    m = math.inf
    for d in offsets:
        c = cM + d
        u = spine.u0(genus, c)
        L = lengths_array(genus, c, u * c)
        m = min(m, float(L["gamma"] - L["beta"]))
    return m


@claim("beyond_triple")
def _beyond(g, cfg):
    return _margin_result("beyond_triple", g, beyond_triple_margin(g), None,
                          "l_beta < l_gamma on the alpha = gamma arc past c_M")


def delta_region(genus, n=200, c_lo=0.01):
    """Extremes of the delta and gamma lengths on the delta-exclusion region.

    The region is ``u >= 1/2`` intersected with ``c <= c1 or u <= u1(c)``; it
    lies in ``c <= c_half``, so the grid spans ``[c_lo, c_half] x [1/2, 1]``.
    Returns ``(min l_delta, witness, max l_gamma, witness, points used)``.
    """
    top = c_half(genus)
    cs = np.linspace(c_lo, top, n)
    us = np.linspace(0.5, 1.0, n)
    b = c1(genus)
    dmin, dw, gmax, gw, count = math.inf, None, -math.inf, None, 0
    for c in cs:
        ub = 1.0 if c <= b else spine.u1(genus, float(c))
        uu = us[us <= ub]
        if c == top:
            uu = us[:1]  # u1(c_half) = 1/2 up to rounding
        if uu.size == 0:
            continue
        L = lengths_array(genus, c, uu * c)
        count += uu.size
        i = int(np.argmin(L["delta"]))
        if L["delta"][i] < dmin:
            dmin, dw = float(L["delta"][i]), (float(c), float(uu[i] * c))
        j = int(np.argmax(L["gamma"]))
        if L["gamma"][j] > gmax:
            gmax, gw = float(L["gamma"][j]), (float(c), float(uu[j] * c))
    return dmin, dw, gmax, gw, count


def _delta_claim(cid, g, n, bounds):
    dlo, ghi = bounds
    dmin, dw, gmax, gw, count = delta_region(g, n)
    margin = min(dmin - dlo, ghi - gmax)
    res = ClaimResult(cid, g, margin >= 0, max(0.0, -margin),
                      dw if dmin - dlo <= ghi - gmax else gw,
                      f"{count} grid points; min l_delta={dmin:.6g} >= {dlo}, "
                      f"max l_gamma={gmax:.6g} <= {ghi}")
    if margin < 0 and -margin < 1e-3:
        res.status = "inconclusive"
    return res


@claim("delta_exclusion_g3", applies=lambda g: g == 3)
def _delta3(g, cfg):
    return _delta_claim("delta_exclusion_g3", g, cfg.grid_n, DELTA_BOUNDS[3])


@claim("delta_exclusion_g5", applies=lambda g: g >= 5 and g % 2 == 1)
def _delta5(g, cfg):
    return _delta_claim("delta_exclusion_g5", g, cfg.grid_n, DELTA_BOUNDS[5])


def triple_local_max(genus, radius=1e-3, n_dirs=8):
    """Largest ``sys(neighbour) - sys(X0)`` over ``n_dirs`` neighbours in ``(c, u)``."""
    tp = spine.triple_point(genus)
    L0 = lengths_array(genus, tp.c_M, tp.t_M)
    s0 = min(float(v) for v in L0.values())
    ang = 2 * np.pi * np.arange(n_dirs) / n_dirs
    c = tp.c_M + radius * np.cos(ang)
    u = tp.u_M + radius * np.sin(ang)
    L = lengths_array(genus, c, u * c)
    s = np.minimum.reduce([L[k.value] for k in CurveClass])
    i = int(np.argmax(s))
    return float(s[i] - s0), (float(c[i]), float(u[i] * c[i]))


@claim("triple_local_max")
def _tlm(g, cfg):
    d, w = triple_local_max(g)
    tp = spine.triple_point(g)
    L = lengths_array(g, tp.c_M, tp.t_M)
    gaps = max(abs(float(L["alpha"] - L["beta"])), abs(float(L["beta"] - L["gamma"])))
    ok = d <= 1e-8 and gaps < 1e-10
    return ClaimResult("triple_local_max", g, ok, max(gaps, max(0.0, d)), w,
                       f"(c_M, u_M)=({tp.c_M:.15g}, {tp.u_M:.15g}); pairwise gap {gaps:.3g}; "
                       f"max neighbour excess {d:.3g}")


def triple_uniqueness(genus, n=100, c_range=(GRID_C[0], 6.0), gap_tol=1e-6, ball=1e-3):
    """Grid probe of F0 for a second point where alpha, beta, gamma tie.

    Returns ``(number of offending grid points, smallest pairwise gap seen
    outside the ball, witness)``.
    """
    tp = spine.triple_point(genus)
    cs = np.linspace(*c_range, n)
    us = np.linspace(0.0, 1.0, n)
    C, U = np.meshgrid(cs, us, indexing="ij")
    T = U * C
    _, ca, _, _ = dual_array(genus, C, T)
    inside = C <= ca + domain.BOUNDARY_TOL
    L = lengths_array(genus, C, T)
    gap = np.maximum.reduce([np.abs(L["alpha"] - L["beta"]), np.abs(L["beta"] - L["gamma"]),
                             np.abs(L["alpha"] - L["gamma"])])
    far = np.hypot(C - tp.c_M, U - tp.u_M) > ball
    mask = inside & far
    bad = int(np.count_nonzero(mask & (gap < gap_tol)))
    g2 = np.where(mask, gap, np.inf)
    i = np.unravel_index(np.argmin(g2), g2.shape)
    return bad, float(g2[i]), (float(C[i]), float(T[i]))


@claim("triple_uniqueness")
def _tu(g, cfg):
    bad, mg, w = triple_uniqueness(g)
    return ClaimResult("triple_uniqueness", g, bad == 0, float(bad), w,
                       f"100x100 grid over F0: {bad} points with all gaps < 1e-6 "
                       f"outside the 1e-3 ball; smallest gap {mg:.3g}")


# --- group action -------------------------------------------------------------

def random_f0_point(genus, rng, c_range=(0.2, 4.0), margin=1e-3):
    """Uniform ``(c, u)`` sample, rejected until strictly inside F0."""
    while True:
        c = float(rng.uniform(*c_range))
        u = float(rng.uniform(margin, 1 - margin))
        t = u * c
        d = domain.dual_coords(genus, c, t)
        if c < d.c_alpha * (1 - margin) and abs(d.t_alpha) < d.c_alpha * (1 - margin):
            return c, t


def random_word(genus, rng, c, t, max_len=12, tries=1000):
    """Random word of length 1..max_len whose trajectory from ``(c, t)`` stays in the numeric window."""
    letters = list(domain.Letter)
    for _ in range(tries):
        n = int(rng.integers(1, max_len + 1))
        w = domain.MCGWord(tuple(letters[j] for j in rng.integers(0, len(letters), n)))
        try:
            _, traj = domain.apply_word(genus, w, c, t)
        except Exception:
            continue
        if all(C_MIN <= x <= C_MAX for x, _ in traj):
            return w
    raise RuntimeError("could not draw a word that stays in the numeric window")


def reduction_roundtrip(genus, n_words=100, seed=0, max_len=12):
    """Apply random words to F0 points and reduce back.

    Returns ``(worst point error, worst inverse-action error, identity-word
    failures, witness)``.  The inverse-action error applies the composite
    word to a second interior point, which must come back unchanged.
    """
    rng = rng_for("reduction_roundtrip", genus, seed)
    worst, worst_inv, nonid, wit = 0.0, 0.0, 0, None
    for _ in range(n_words):
        c, t = random_f0_point(genus, rng)
        w = random_word(genus, rng, c, t, max_len)
        (c2, t2), _ = domain.apply_word(genus, w, c, t)
        c3, t3, back = domain.reduce_to_F0(genus, c2, t2)
        err = max(abs(c3 - c), abs(t3 - t))
        if err > worst:
            worst, wit = err, (c, t)
        # second point; a nearby one keeps the composite word in the window
        for _ in range(20):
            cc, tt = c * (1 + 1e-3 * rng.uniform(-1, 1)), t * (1 + 1e-3 * rng.uniform(-1, 1))
            if domain.in_F0(genus, cc, tt):
                break
        (c4, t4), _ = domain.apply_word(genus, w + back, cc, tt)
        worst_inv = max(worst_inv, abs(c4 - cc), abs(t4 - tt))
        _, _, idw = domain.reduce_to_F0(genus, c, t)
        nonid += len(idw) != 0
    return worst, worst_inv, nonid, wit


@claim("reduction_roundtrip")
def _rr(g, cfg):
    worst, inv, nonid, wit = reduction_roundtrip(g, seed=cfg.seed)
    r = max(worst, inv)
    res = _residual_result("reduction_roundtrip", g, r, 1e-8, wit,
                           f"100 random words of length <= 12; point error {worst:.3g}, "
                           f"inverse action error {inv:.3g}; {nonid} non-identity reductions of F0 points")
    if nonid:
        res.passed, res.status = False, "failed"
    res.seed = cfg.seed
    return res


@claim("reduction_idempotence")
def _ri(g, cfg):
    rng = rng_for("reduction_idempotence", g, cfg.seed)
    bad = 0
    for _ in range(100):
        c = float(rng.uniform(0.2, 4))
        t = float(rng.uniform(-20, 20)) * c
        c1_, t1_, _ = domain.reduce_to_F0(g, c, t)
        _, _, w2 = domain.reduce_to_F0(g, c1_, t1_)
        bad += len(w2) != 0 or not domain.in_F0(g, c1_, t1_)
    return ClaimResult("reduction_idempotence", g, bad == 0, float(bad), None,
                       "reducing a reduced point gives the empty word", seed=cfg.seed)


@claim("conjugation_identity")
def _conj(g, cfg):
    rng = rng_for("conjugation_identity", g, cfg.seed)
    worst = 0.0
    for _ in range(200):
        c, t = random_f0_point(g, rng)
        a = domain.apply_letter(g, domain.Letter.DA, c, t)
        (b, _) = domain.apply_word(g, "F,G,F", c, t)
        worst = max(worst, abs(a[0] - b[0]), abs(a[1] - b[1]))
    return _residual_result("conjugation_identity", g, worst, 1e-9, None, "D_alpha = f D_gamma f")


@claim("edge_pairing")
def _edge(g, cfg):
    cs = np.linspace(*GRID_C, cfg.grid_n)
    worst = max(abs(domain.apply_letter(g, "G", float(c), -float(c))[1] - c) for c in cs)
    return _residual_result("edge_pairing", g, worst, 0.0, None, "D_gamma maps L_-1 onto L_1 exactly")


@claim("orbit_lengths")
def _orbit(g, cfg):
    rng = rng_for("orbit_lengths", g, cfg.seed)
    worst = 0.0
    for _ in range(200):
        c, t = random_f0_point(g, rng)
        ca, ta = domain.apply_letter(g, "F", c, t)
        L = lengths_array(g, c, t)
        M = lengths_array(g, ca, ta)
        worst = max(worst, abs(float(L["alpha"] - M["gamma"])), abs(float(L["gamma"] - M["alpha"])))
        for letter in ("G", "g", "R"):
            c2, _ = domain.apply_letter(g, letter, c, t)
            worst = max(worst, abs(2 * c2 - float(L["gamma"])))
    return _residual_result("orbit_lengths", g, worst, 1e-9, None,
                            "f swaps the alpha and gamma lengths; gamma length fixed by D_gamma and r0")


def l1_margins(genus, c):
    """``c_alpha - |t_alpha|`` along ``L_1`` at the half cuff lengths ``c``.

    The two terms agree to ``O(s^2)``, which is below double resolution for
    large ``c``; the margin is assembled from
    ``cosh(c_a/2) - cosh(|t_a|/2) = cosh(c/2) (cosh(s/2) cosh(s_a/2) - 1) / cosh(s_a/2)``.
    """
    c = np.asarray(c, dtype=float)
    s, ca, ta, sa = dual_array(genus, c, c)
    dcosh = (np.cosh(0.5 * c) * (2 * np.sinh(0.25 * s) ** 2 * np.cosh(0.5 * sa)
                                 + 2 * np.sinh(0.25 * sa) ** 2) / np.cosh(0.5 * sa))
    return 4.0 * np.arcsinh(dcosh / (2.0 * np.sinh(0.25 * (ca + np.abs(ta)))))


def l1_disjointness(genus, n=200, c_range=(C_MIN, C_MAX)):
    """Smallest ``c_alpha - |t_alpha|`` along ``L_1`` over a log-spaced c-grid."""
    cs = np.geomspace(*c_range, n)
    m = l1_margins(genus, cs)
    i = int(np.argmin(m))
    return float(m[i]), (float(cs[i]), float(cs[i]))


@claim("L1_disjointness")
def _l1(g, cfg):
    m, w = l1_disjointness(g, cfg.grid_n)
    return _margin_result("L1_disjointness", g, m, w, "c_alpha - |t_alpha| > 0 along L_1")


# --- drivers --------------------------------------------------------------------

def run_claim(claim_id, cfg=None, genus=None):
    """Run one registered claim for ``genus`` (or every genus in ``cfg``)."""
    cfg = cfg or VerifyConfig()
    if claim_id not in _REGISTRY:
        raise UnknownClaimError(claim_id)
    fn, ok = _REGISTRY[claim_id]
    genera = [genus] if genus is not None else [g for g in cfg.genus_list if ok(g)]
    out = [fn(g, cfg) for g in genera]
    return out[0] if genus is not None else out


def run_all(cfg=None):
    """Every applicable claim for every genus, ordered by claim id then genus."""
    cfg = cfg or VerifyConfig()
    results = []
    for cid in claim_ids():
        fn, ok = _REGISTRY[cid]
        for g in cfg.genus_list:
            if ok(g):
                results.append(fn(g, cfg))
    return results


def summary(results):
    n_fail = sum(not r.passed for r in results)
    return {"total": len(results), "passed": len(results) - n_fail, "failed": n_fail,
            "inconclusive": sum(r.status == "inconclusive" for r in results)}
