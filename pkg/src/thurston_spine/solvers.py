"""Bracketed scalar root finding and the genus constants c0, c1, c_half."""

from dataclasses import dataclass
from functools import lru_cache
import math

from scipy.optimize import brentq

from .errors import MaxIterationError, NoSignChangeError, SolverError
from .geometry import C_MAX, _beta_diag, check_genus, seam_constant


@dataclass(frozen=True)
class SolverConfig:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    max_iter: int = 200

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


DEFAULT = SolverConfig()


def bisect(f, lo, hi, cfg=DEFAULT):
    """Plain bisection.  Returns an exact endpoint when ``f`` vanishes there.

    Iteration continues until the bracket is within tolerance *and* the
    midpoint no longer moves in floating point, so roots come out at machine
    precision whenever ``max_iter`` allows it.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise NoSignChangeError(
            f"no sign change on [{lo!r}, {hi!r}]: f(lo)={flo!r}, f(hi)={fhi!r}")
    for _ in range(cfg.max_iter):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            return mid
        fmid = f(mid)
        if fmid == 0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    width = hi - lo
    mid = 0.5 * (lo + hi)
    if width <= cfg.abs_tol + cfg.rel_tol * abs(mid):
        return mid
    raise MaxIterationError(
        f"bisection did not converge in {cfg.max_iter} steps, bracket width {width!r}")


def find_root(f, lo, hi, cfg=DEFAULT, method="bisect"):
    """Root of ``f`` on ``[lo, hi]`` with ``f(lo) * f(hi) <= 0``.

    ``method="bisect"`` is the reference path; ``method="brent"`` delegates to
    :func:`scipy.optimize.brentq` with the same tolerances.
    """
    if method == "bisect":
        return bisect(f, lo, hi, cfg)
    if method != "brent":
        raise ValueError(f"unknown method {method!r}")
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise NoSignChangeError(
            f"no sign change on [{lo!r}, {hi!r}]: f(lo)={flo!r}, f(hi)={fhi!r}")
    # brentq requires rtol >= 4 eps
    rtol = max(cfg.rel_tol, 4 * 2.220446049250313e-16)
    try:
        return brentq(f, lo, hi, xtol=cfg.abs_tol, rtol=rtol, maxiter=cfg.max_iter)
    except RuntimeError as exc:
        raise MaxIterationError(str(exc)) from exc


def expand_bracket(f, lo=0.1, hi=1.0, cap=C_MAX):
    """Double ``hi`` until ``f`` changes sign on ``[lo, hi]``."""
    flo = f(lo)
    while True:
        fhi = f(hi)
        if (flo > 0) != (fhi > 0) or fhi == 0:
            return lo, hi
        if hi >= cap:
            raise SolverError(f"no bracket found below the numeric window cap {cap}")
        lo, flo = hi, fhi
        hi = min(2.0 * hi, cap)


@dataclass(frozen=True)
class GenusConstants:
    c0: float
    c1: float
    c_half: float


@lru_cache(maxsize=None)
def c0(genus):
    """Half cuff length of the point on ``t = 0`` where alpha and gamma have equal length."""
    k = seam_constant(genus)
    return 2.0 * math.asinh(math.sqrt(k))


def c1_equation(genus, c):
    """Residual ``l_beta(c, c) - 2c`` whose unique zero is c1."""
    return float(_beta_diag(seam_constant(genus), c)) - 2.0 * c


@lru_cache(maxsize=None)
def _c1(genus, method):
    f = lambda c: c1_equation(genus, c)
    lo, hi = expand_bracket(f)
    return find_root(f, lo, hi, method=method)


def c1(genus, method="bisect"):
    """Half cuff length where beta and gamma tie on the edge ``t = c``."""
    return _c1(check_genus(genus), method)


def half_level_L(C):
    """``(C-1)^2 (2C+1) / (2C-1)``, increasing for ``C > 1``."""
    return (C - 1.0) ** 2 * (2.0 * C + 1.0) / (2.0 * C - 1.0)


@lru_cache(maxsize=None)
def _c_half_C(genus, method):
    target = seam_constant(genus) ** 2
    f = lambda C: half_level_L(C) - target
    # L(1) = 0 and L(2) = 5/3 > 1 >= target
    return find_root(f, 1.0, 2.0, method=method)


def c_half_C(genus, method="bisect"):
    """``cosh(c_half / 2)``; exactly 1.5 for genus 3."""
    return _c_half_C(check_genus(genus), method)


def c_half(genus, method="bisect"):
    """Half cuff length where the beta = gamma arc crosses ``u = 1/2``."""
    return 2.0 * math.acosh(c_half_C(genus, method))


def genus_constants(genus, method="bisect"):
    genus = check_genus(genus)
    return GenusConstants(c0(genus), c1(genus, method), c_half(genus, method))
