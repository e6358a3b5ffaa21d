"""Fundamental domains in the half-plane and the mapping class group acting on them.

``F`` is the ideal quadrilateral ``|t| <= c, |t_alpha| <= c_alpha``; its edges
are paired by the Dehn twists about gamma (``t -> t +- 2c``) and about alpha
(the same move in the dual coordinates).  ``F0`` is the triangle of ``F``
cut out by ``t >= 0`` and ``c <= c_alpha``, a fundamental domain for the
extended group that also contains the reflection ``r0`` and the rotation
``f``.
"""

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from .errors import DomainError, ReductionError
from .geometry import _dual, check_c, check_genus, dual_coords, seam_constant

BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class HalfPlanePoint:
    x: float
    y: float

    def __post_init__(self):
        if not self.y > 0:
            raise DomainError(f"half-plane point needs y > 0, got {self.y!r}")

    @property
    def z(self):
        return complex(self.x, self.y)


class Letter(str, Enum):
    DA = "A"
    DA_INV = "a"
    DG = "G"
    DG_INV = "g"
    R0 = "R"
    F = "F"

    @property
    def inverse(self):
        return _INVERSE[self]


_INVERSE = {
    Letter.DA: Letter.DA_INV, Letter.DA_INV: Letter.DA,
    Letter.DG: Letter.DG_INV, Letter.DG_INV: Letter.DG,
    Letter.R0: Letter.R0, Letter.F: Letter.F,
}

_NAMES = {
    "DA": Letter.DA, "DA_inv": Letter.DA_INV, "DG": Letter.DG,
    "DG_inv": Letter.DG_INV, "R0": Letter.R0, "F": Letter.F,
}


def parse_letter(token):
    token = token.strip()
    if token in _NAMES:
        return _NAMES[token]
    try:
        return Letter(token)
    except ValueError:
        raise ValueError(f"unknown letter {token!r}; use one of A, a, G, g, R, F") from None


@dataclass(frozen=True)
class MCGWord:
    """A word in ``D_alpha^{+-1}``, ``D_gamma^{+-1}``, ``r0`` and ``f``, applied left to right."""

    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(Letter(x) for x in self.letters))

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(parse_letter(tok) for tok in text.split(",")))

    def __str__(self):
        return ",".join(x.value for x in self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other):
        return MCGWord(self.letters + MCGWord(tuple(other)).letters)

    def inverse(self):
        return MCGWord(tuple(x.inverse for x in reversed(self.letters)))

    def free_reduce(self):
        """Cancel adjacent inverse pairs (``r0`` and ``f`` are involutions)."""
        out = []
        for x in self.letters:
            if out and out[-1].inverse is x:
                out.pop()
            else:
                out.append(x)
        return MCGWord(tuple(out))


class BoundaryGeodesic(str, Enum):
    L_MINUS1 = "L_minus1"
    L_0 = "L_0"
    L_1 = "L_1"
    L_ALPHA_MINUS1 = "L_alpha_minus1"
    L_ALPHA_0 = "L_alpha_0"
    L_ALPHA_1 = "L_alpha_1"
    L_MINUS1_1 = "L_minus1_1"


_SLOPE = {
    BoundaryGeodesic.L_MINUS1: -1, BoundaryGeodesic.L_0: 0, BoundaryGeodesic.L_1: 1,
    BoundaryGeodesic.L_ALPHA_MINUS1: -1, BoundaryGeodesic.L_ALPHA_0: 0,
    BoundaryGeodesic.L_ALPHA_1: 1,
}


# --- membership -------------------------------------------------------------

def in_F(genus, c, t, tol=BOUNDARY_TOL):
    if abs(t) > c + tol:
        return False
    d = dual_coords(genus, c, t)
    return abs(d.t_alpha) <= d.c_alpha + tol


def in_F0(genus, c, t, tol=BOUNDARY_TOL):
    if t < -tol or abs(t) > c + tol:
        return False
    d = dual_coords(genus, c, t)
    return abs(d.t_alpha) <= d.c_alpha + tol and c <= d.c_alpha + tol


def minsky_embed(c, t):
    """``(c, t) -> t/c + i/c`` in the upper half-plane."""
    if not c > 0:
        raise DomainError(f"c must be positive, got {c!r}")
    return HalfPlanePoint(t / c, 1.0 / c)


# --- group action -------------------------------------------------------------

def _f(k, c, t):
    if not (math.isfinite(c) and c > 0 and math.isfinite(t)):
        raise DomainError(f"cannot apply f at (c, t) = ({c!r}, {t!r})")
    _, ca, ta, _ = _dual(k, c, t)
    ca, ta = float(ca), float(ta)
    if not (math.isfinite(ca) and ca > 0):
        raise DomainError(f"dual coordinates overflow at (c, t) = ({c!r}, {t!r})")
    return ca, ta


def _apply(k, letter, c, t):
    if letter is Letter.DG:
        return c, t + 2.0 * c
    if letter is Letter.DG_INV:
        return c, t - 2.0 * c
    if letter is Letter.R0:
        return c, -t
    if letter is Letter.F:
        return _f(k, c, t)
    ca, ta = _f(k, c, t)
    ta = ta + 2.0 * ca if letter is Letter.DA else ta - 2.0 * ca
    return _f(k, ca, ta)


def apply_letter(genus, letter, c, t):
    """Image of ``(c, t)`` under one generator.

    ``D_alpha`` is ``f`` conjugating ``D_gamma``: move to the dual
    coordinates, twist by ``2 c_alpha`` there and move back.
    """
    k = seam_constant(genus)
    return _apply(k, Letter(letter), check_c(c), float(t))


def apply_word(genus, word, c, t):
    """Apply ``word`` left to right; returns the image and the visited points."""
    k = seam_constant(genus)
    if isinstance(word, str):
        word = MCGWord.parse(word)
    c, t = check_c(c), float(t)
    traj = [(c, t)]
    for letter in MCGWord(tuple(word)).letters:
        c, t = _apply(k, letter, c, t)
        traj.append((c, t))
    return (c, t), traj


def reduce_to_F0(genus, c, t, max_steps=100_000, tol=BOUNDARY_TOL):
    """Move ``(c, t)`` into F0 and return ``(c', t', word)``.

    Twists are chosen greedily, one letter at a time: a gamma twist while
    ``|t| > c``, otherwise an alpha twist while ``|t_alpha| > c_alpha``.
    Inside F the reflection and the rotation finish the job.  Points on
    paired edges end on the edge with ``t >= 0`` and ``c <= c_alpha``.
    """
    k = seam_constant(genus)
    c, t = check_c(c), float(t)
    word = []
    for _ in range(max_steps):
        if abs(t) > c + tol:
            letter = Letter.DG_INV if t > 0 else Letter.DG
        else:
            ca, ta = _f(k, c, t)
            if abs(ta) > ca + tol:
                letter = Letter.DA_INV if ta > 0 else Letter.DA
            else:
                break
        c, t = _apply(k, letter, c, t)
        word.append(letter)
    else:
        raise ReductionError(
            f"no reduction into F after {max_steps} steps; last state (c, t) = ({c!r}, {t!r})",
            state=(c, t), word=MCGWord(tuple(word)))
    if t < 0:
        c, t = _apply(k, Letter.R0, c, t)
        word.append(Letter.R0)
    ca, _ = _f(k, c, t)
    if c > ca + tol:
        c, t = _apply(k, Letter.F, c, t)
        word.append(Letter.F)
        if t < 0:
            c, t = _apply(k, Letter.R0, c, t)
            word.append(Letter.R0)
    return c, t, MCGWord(tuple(word))


# --- boundary curves ------------------------------------------------------------

def boundary_ct(genus, tag, c_range, n):
    """Sample a boundary geodesic in ``(c, t)`` coordinates.

    ``L_j`` is sampled as ``t = j c`` over ``c`` in ``c_range``.  ``L_alpha_j``
    is the image of ``L_j`` under ``f``, so ``c_range`` is its range of
    ``c_alpha``.  ``L_minus1_1`` is the part with ``t >= 0`` (the alpha = gamma
    arc) over ``c`` in ``c_range``, which must start at or above c0.
    """
    from .solvers import c0
    from .spine import u0

    genus = check_genus(genus)
    tag = BoundaryGeodesic(tag)
    if n < 2:
        raise ValueError("n must be >= 2")
    lo, hi = (check_c(x) for x in c_range)
    cs = [float(c) for c in np.linspace(lo, hi, n)]
    if tag is BoundaryGeodesic.L_MINUS1_1:
        start = c0(genus)
        if lo < start - 1e-12:
            raise DomainError(f"L_minus1_1 in F0 starts at c0 = {start!r}, got {lo!r}")
        return [(c, u0(genus, max(c, start)) * c) for c in cs]
    j = _SLOPE[tag]
    if tag.name.startswith("L_ALPHA"):
        return [apply_letter(genus, Letter.F, c, j * c) for c in cs]
    return [(c, j * c) for c in cs]


def boundary_polyline(genus, tag, c_range, n):
    """:func:`boundary_ct` embedded in the half-plane, as :class:`HalfPlanePoint` s."""
    return [minsky_embed(c, t) for c, t in boundary_ct(genus, tag, c_range, n)]


def domain_picture(genus, n, c_range):
    """Every boundary curve of F plus both spine arcs, ready to plot.

    Returns a list of ``{"name", "kind", "points"}`` dicts whose points are
    ``(c, t, x, y)`` with ``(x, y)`` the half-plane image.  The F0 branch of
    ``L_minus1_1`` is included with its mirror image under ``r0``.
    """
    from .solvers import c0
    from .spine import ArcKind, trace_arc

    lines = []
    for tag in BoundaryGeodesic:
        if tag is BoundaryGeodesic.L_MINUS1_1:
            lo = max(c_range[0], c0(genus))
            pts = boundary_ct(genus, tag, (lo, c_range[1]), n)
            lines.append(("L_minus1_1", "boundary", pts))
            lines.append(("L_minus1_1_mirror", "boundary", [(c, -t) for c, t in pts]))
        else:
            lines.append((tag.value, "boundary", boundary_ct(genus, tag, c_range, n)))
    for kind in ArcKind:
        arc = trace_arc(genus, kind, n_samples=n)
        lines.append((f"spine_{kind.value.replace('-', '_')}", "spine",
                      [(p.c, p.t) for p in arc.samples]))
    out = []
    for name, kind, pts in lines:
        emb = [minsky_embed(c, t) for c, t in pts]
        out.append({"name": name, "kind": kind,
                    "points": [(c, t, z.x, z.y) for (c, t), z in zip(pts, emb)]})
    return out
