"""Geodesic length functions and the dual Fenchel-Nielsen coordinate change.

A point of the disc of surfaces is a pair ``(c, t)``: ``2c`` is the length
of each cuff gamma_i and ``t`` is the twist along the cuffs.  Every length
formula is written in the form ``cosh(L/k) - 1 = <sum of positive terms>``
and inverted with :func:`acosh1p`, so nothing cancels near the symmetric
points where the arccosh argument approaches 1.
"""

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from .errors import DomainError, PreconditionError

C_MIN = 1e-6
C_MAX = 50.0

#: slack allowed when an arccosh argument dips below 1 by rounding
ACOSH_SLACK = 1e-12


class CurveClass(str, Enum):
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"
    DELTA = "delta"


@dataclass(frozen=True)
class FNPoint:
    """Fenchel-Nielsen point ``(c, t)`` of the genus-``genus`` curve."""

    genus: int
    c: float
    t: float

    def __post_init__(self):
        check_genus(self.genus)
        if not (math.isfinite(self.c) and self.c > 0):
            raise DomainError(f"c must be positive and finite, got {self.c!r}")
        if not math.isfinite(self.t):
            raise DomainError(f"t must be finite, got {self.t!r}")

    @property
    def u(self):
        return self.t / self.c


@dataclass(frozen=True)
class DualCoords:
    s: float
    c_alpha: float
    t_alpha: float
    s_alpha: float


@dataclass(frozen=True)
class LengthReport:
    """Length of one component of each of the four multi-curves."""

    alpha: float
    beta: float
    gamma: float
    delta: float

    def __getitem__(self, key):
        return getattr(self, CurveClass(key).value)

    def as_dict(self):
        return {"alpha": self.alpha, "beta": self.beta,
                "gamma": self.gamma, "delta": self.delta}


def check_genus(genus):
    if isinstance(genus, bool) or int(genus) != genus or genus < 2:
        raise DomainError(f"genus must be an integer >= 2, got {genus!r}")
    return int(genus)


def check_c(c):
    if not (C_MIN <= c <= C_MAX):
        raise DomainError(f"c={c!r} outside the numeric window [{C_MIN}, {C_MAX}]")
    return float(c)


def seam_constant(genus):
    """``cos(pi/(g+1))``, the right-hand side of the seam/cuff relation."""
    return math.cos(math.pi / (check_genus(genus) + 1))


def acosh1p(x):
    """``arccosh(1 + x)`` without cancellation for small ``x``.

    Values in ``[-ACOSH_SLACK, 0)`` are clamped to 0; anything more negative
    is an inconsistency and raises :class:`DomainError`.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x < -ACOSH_SLACK):
        raise DomainError(f"arccosh argument below 1: 1 + {np.min(x)!r}")
    x = np.maximum(x, 0.0)
    out = np.log1p(x + np.sqrt(x) * np.sqrt(x + 2.0))
    return out[()] if out.ndim == 0 else out


# --- vectorised kernels; no validation, arrays welcome ---------------------

def _sinh_half_seam(k, c):
    # sinh(s/2) from k = sinh(c/2) sinh(s/2)
    return k / np.sinh(0.5 * np.asarray(c, dtype=float))


def _seam(k, c):
    return 2.0 * np.arcsinh(_sinh_half_seam(k, c))


def _alpha(k, c, t):
    s = _seam(k, c)
    t = np.abs(t)
    x = 2.0 * np.sinh(0.25 * s) ** 2 * np.cosh(0.5 * t) + 2.0 * np.sinh(0.25 * t) ** 2
    return 4.0 * acosh1p(x)


def _beta(k, c, t):
    # (cosh s - 1) cosh(t/2) cosh(c - t/2) + cosh(c - t) - 1
    sh = _sinh_half_seam(k, c)
    x = (2.0 * sh * sh * np.cosh(0.5 * t) * np.cosh(c - 0.5 * t)
         + 2.0 * np.sinh(0.5 * (c - t)) ** 2)
    return 2.0 * acosh1p(x)


def _delta(genus, k, c, t):
    s = _seam(k, c)
    d = 0.5 * (c - t)
    x = 2.0 * np.sinh(0.25 * s) ** 2 * np.cosh(d) + 2.0 * np.sinh(0.5 * d) ** 2
    factor = 4 * genus + 4 if genus % 2 == 0 else 2 * genus + 2
    return factor * acosh1p(x)


def _beta_diag(k, c):
    s = _seam(k, c)
    # 2 cos^2 + cosh s - 1 = 2 cos^2 + 2 sinh^2(s/2)
    return 2.0 * acosh1p(2.0 * k * k + 2.0 * np.sinh(0.5 * s) ** 2)


def _dual(k, c, t):
    """Vectorised dual coordinates ``(s, c_alpha, t_alpha, s_alpha)``."""
    c = np.asarray(c, dtype=float)
    t = np.asarray(t, dtype=float)
    s = _seam(k, c)
    c_alpha = 0.5 * _alpha(k, c, t)
    s_alpha = _seam(k, c_alpha)
    # c - s_alpha and c_alpha - s vanish like t^2, so carry r = sinh(|t|/4) as a
    # factor:  cosh(c_a/2) - cosh(s/2) = 2 cosh(s/2) r^2  gives
    # sinh((c_a - s)/4) = B r^2, and through the two seam relations
    # sinh((c - s_a)/4) = Q r^2.
    r = np.sinh(0.25 * np.abs(t))
    B = np.cosh(0.5 * s) / np.sinh(0.25 * (c_alpha + s))
    Q = (k * np.cosh(0.25 * (c_alpha + s)) * B
         / (np.sinh(0.5 * s) * np.sinh(0.5 * c_alpha) * np.cosh(0.25 * (c + s_alpha))))
    # cosh(c/2)/cosh(s_a/2) - 1 = 2 sinh((c+s_a)/4) sinh((c-s_a)/4) / cosh(s_a/2) = P r^2
    P = 2.0 * np.sinh(0.25 * (c + s_alpha)) * Q / np.cosh(0.5 * s_alpha)
    x = r * r * P
    # arccosh(1 + x) with sqrt(x) = r sqrt(P), so tiny twists do not underflow
    mag = 2.0 * np.log1p(x + r * np.sqrt(P) * np.sqrt(x + 2.0))
    t_alpha = -np.sign(t) * mag + 0.0  # keep t_alpha = +0 when t = 0
    return s, c_alpha, t_alpha, s_alpha


def lengths_array(genus, c, t):
    """All four lengths on arrays of ``(c, t)``; no strip or window checks."""
    genus = check_genus(genus)
    k = seam_constant(genus)
    c = np.asarray(c, dtype=float)
    t = np.asarray(t, dtype=float)
    return {
        "alpha": _alpha(k, c, t),
        "beta": _beta(k, c, t),
        "gamma": 2.0 * c + 0.0 * t,
        "delta": _delta(genus, k, c, t),
    }


def dual_array(genus, c, t):
    return _dual(seam_constant(genus), c, t)


# --- public scalar API ------------------------------------------------------

def seam_length(genus, c):
    """Seam length ``s`` of the holed spheres with half cuff length ``c``."""
    k = seam_constant(genus)
    return float(_seam(k, check_c(c)))


def length(genus, c, t, curve):
    """Length of one component of ``curve`` at the point ``(c, t)``.

    Beta and delta formulas hold on the strip ``0 <= t <= c`` only; points
    outside it have to be reduced first (see :mod:`thurston_spine.domain`).
    """
    genus = check_genus(genus)
    c = check_c(c)
    curve = CurveClass(curve)
    k = seam_constant(genus)
    if curve is CurveClass.GAMMA:
        return 2.0 * c
    if curve is CurveClass.ALPHA:
        return float(_alpha(k, c, t))
    if not (0.0 <= t <= c):
        raise PreconditionError(
            f"{curve.value} length needs 0 <= t <= c, got c={c!r}, t={t!r}")
    if curve is CurveClass.BETA:
        return float(_beta(k, c, t))
    return float(_delta(genus, k, c, t))


def length_report(genus, c, t):
    return LengthReport(*(length(genus, c, t, cc) for cc in CurveClass))


def length_beta_diag(genus, c):
    """Beta length on the edge ``t = c`` via the reduced closed form."""
    return float(_beta_diag(seam_constant(genus), check_c(c)))


def dual_coords(genus, c, t):
    """Coordinates taken with respect to the alpha multi-curve.

    ``c_alpha`` is half the alpha length, ``s_alpha`` the matching seam and
    ``t_alpha`` the twist along alpha.  The twist sign is fixed to
    ``-sign(t)``; ``t_alpha`` vanishes exactly when ``t`` does.
    """
    k = seam_constant(genus)
    s, ca, ta, sa = _dual(k, check_c(c), float(t))
    return DualCoords(float(s), float(ca), float(ta), float(sa))


def involution_f(genus, c, t):
    """Order-two map exchanging the roles of alpha and gamma: ``(c_alpha, t_alpha)``."""
    d = dual_coords(genus, c, t)
    return d.c_alpha, d.t_alpha
