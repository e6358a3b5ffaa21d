"""The two spine arcs inside the fundamental triangle and the triple point.

Both arcs are graphs over ``c`` in the slope coordinate ``u = t / c``:

* ``u1(c)`` on ``[c1, inf)`` where beta and gamma have equal length,
* ``u0(c)`` on ``[c0, inf)`` where alpha and gamma have equal length.

They meet at the unique triple point ``(c_M, u_M)``; the spine inside the
fundamental triangle is ``u1`` over ``[c1, c_M]`` together with ``u0`` over
``[c0, c_M]``.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from . import domain
from .errors import DomainError, PreconditionError, SolverError
from .geometry import (
    C_MAX,
    CurveClass,
    LengthReport,
    _alpha,
    _beta,
    check_c,
    check_genus,
    length_report,
    seam_constant,
)
from .solvers import DEFAULT, bisect, c0, c1

U_EPS = 1e-15
DOMAIN_SLACK = 1e-12
TIE_TOL = 1e-9


class ArcKind(str, Enum):
    BETA_GAMMA = "beta-gamma"
    ALPHA_GAMMA = "alpha-gamma"


@dataclass(frozen=True)
class SlopePoint:
    genus: int
    c: float
    u: float

    @property
    def t(self):
        return self.u * self.c


@dataclass(frozen=True)
class SpineArc:
    kind: ArcKind
    samples: list
    c_range: tuple

    @property
    def c(self):
        return np.array([p.c for p in self.samples])

    @property
    def u(self):
        return np.array([p.u for p in self.samples])


@dataclass(frozen=True)
class TriplePoint:
    c_M: float
    u_M: float
    bracket: tuple = field(default=(), compare=False)

    @property
    def t_M(self):
        return self.u_M * self.c_M


@dataclass(frozen=True)
class SystoleReport:
    sys_length: float
    systoles: frozenset
    lengths: LengthReport
    tie_tol: float
    # the four families are the full candidate list only inside F0 on the spine
    certified: str = "minimum over the alpha, beta, gamma, delta families"


def _beta_gap(k, c, u):
    return float(_beta(k, c, c * u)) - 2.0 * c


def _alpha_gap(k, c, u):
    return float(_alpha(k, c, c * u)) - 2.0 * c


def u1(genus, c):
    """Slope of the beta = gamma arc over ``c >= c1``.

    The gap ``l_beta - l_gamma`` is strictly decreasing in ``u``, so plain
    bisection on ``[1e-15, 1]`` is safe.
    """
    genus = check_genus(genus)
    c = check_c(c)
    lo = c1(genus)
    if c < lo - DOMAIN_SLACK:
        raise DomainError(f"u1 is defined for c >= c1 = {lo!r}, got {c!r}")
    if c <= lo:
        return 1.0
    k = seam_constant(genus)
    f = lambda u: _beta_gap(k, c, u)
    if f(1.0) >= 0:
        return 1.0
    if f(U_EPS) <= 0:
        raise SolverError(f"beta = gamma has no root in u at c={c!r}")
    return bisect(f, U_EPS, 1.0, DEFAULT)


def u0(genus, c):
    """Slope of the alpha = gamma arc over ``c >= c0``."""
    genus = check_genus(genus)
    c = check_c(c)
    lo = c0(genus)
    if c < lo - DOMAIN_SLACK:
        raise DomainError(f"u0 is defined for c >= c0 = {lo!r}, got {c!r}")
    if c <= lo:
        return 0.0
    k = seam_constant(genus)
    f = lambda u: _alpha_gap(k, c, u)
    if f(0.0) >= 0:
        return 0.0
    hi = 1.0 - U_EPS
    if f(hi) <= 0:
        raise SolverError(f"alpha = gamma has no root in u at c={c!r}")
    return bisect(f, 0.0, hi, DEFAULT)


@lru_cache(maxsize=None)
def _triple_point(genus):
    lo = max(c0(genus), c1(genus))
    h = lambda c: u1(genus, c) - u0(genus, c)
    if h(lo) <= 0:
        raise SolverError(f"u1 - u0 is not positive at the start of the bracket c={lo!r}")
    step = 0.25
    hi = lo + step
    while h(min(hi, C_MAX)) > 0:
        if hi >= C_MAX:
            raise SolverError("triple point bracket reached the numeric window cap")
        lo, step = hi, 2 * step
        hi = lo + step
    hi = min(hi, C_MAX)
    bracket = (lo, hi)
    cM = bisect(h, lo, hi, DEFAULT)
    return TriplePoint(cM, u1(genus, cM), bracket)


def triple_point(genus):
    """The unique point of F0 where alpha, beta and gamma are all systoles."""
    return _triple_point(check_genus(genus))


def systole_report(genus, c, t, tie_tol=TIE_TOL):
    """Shortest of the four candidate families at a point of F0."""
    if tie_tol <= 0:
        raise ValueError("tie_tol must be positive")
    if not domain.in_F0(genus, c, t):
        raise PreconditionError(f"(c, t) = ({c!r}, {t!r}) is not in F0")
    # boundary slack of in_F0 can put t a hair outside the strip
    t = min(max(t, 0.0), c)
    rep = length_report(genus, c, t)
    d = rep.as_dict()
    m = min(d.values())
    ties = frozenset(CurveClass(k) for k, v in d.items() if v <= m * (1 + tie_tol))
    return SystoleReport(m, ties, rep, tie_tol)


def in_spine(genus, c, u, tol=1e-9):
    """Whether ``(c, u)`` lies on one of the two spine arcs, up to ``tol``."""
    genus = check_genus(genus)
    if not domain.in_F0(genus, c, u * c):
        raise PreconditionError(f"(c, u) = ({c!r}, {u!r}) is not in F0")
    cM = triple_point(genus).c_M
    a, b = c1(genus), c0(genus)
    if a - tol <= c <= cM + tol and abs(u - u1(genus, max(c, a))) <= tol:
        return True
    if b - tol <= c <= cM + tol and abs(u - u0(genus, max(c, b))) <= tol:
        return True
    return False


def trace_arc(genus, kind, c_hi=None, n_samples=64):
    """Sample one spine arc uniformly in ``c`` from its start to ``min(c_hi, c_M)``."""
    genus = check_genus(genus)
    kind = ArcKind(kind)
    if n_samples < 2:
        raise ValueError("n_samples must be >= 2")
    tp = triple_point(genus)
    c_hi = tp.c_M if c_hi is None else min(check_c(c_hi), tp.c_M)
    if kind is ArcKind.BETA_GAMMA:
        c_lo, solve = c1(genus), u1
    else:
        c_lo, solve = c0(genus), u0
    if c_hi < c_lo:
        raise DomainError(f"c_hi={c_hi!r} is below the arc start {c_lo!r}")
    cs = np.linspace(c_lo, c_hi, n_samples)
    samples = []
    for i, c in enumerate(cs):
        c = float(c)
        if c == tp.c_M:
            u = tp.u_M  # both arcs end at exactly the same point
        else:
            try:
                u = solve(genus, c)
            except SolverError as exc:
                raise SolverError(f"sample {i} (c={c!r}): {exc}") from exc
        samples.append(SlopePoint(genus, c, u))
    return SpineArc(kind, samples, (float(c_lo), float(c_hi)))
