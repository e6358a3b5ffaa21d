"""Spine of systoles for a family of genus g surfaces with an order g+1 rotation."""

from .errors import (
    DomainError,
    MaxIterationError,
    NoSignChangeError,
    PreconditionError,
    ReductionError,
    SolverError,
    SpineError,
)
from .geometry import (
    CurveClass,
    DualCoords,
    FNPoint,
    LengthReport,
    dual_coords,
    involution_f,
    length,
    length_beta_diag,
    length_report,
    seam_length,
)
from .solvers import (
    GenusConstants,
    SolverConfig,
    c0,
    c1,
    c_half,
    c_half_C,
    expand_bracket,
    find_root,
    genus_constants,
)
from .spine import (
    ArcKind,
    SlopePoint,
    SpineArc,
    SystoleReport,
    TriplePoint,
    in_spine,
    systole_report,
    trace_arc,
    triple_point,
    u0,
    u1,
)
from .domain import (
    BoundaryGeodesic,
    HalfPlanePoint,
    Letter,
    MCGWord,
    apply_letter,
    apply_word,
    boundary_polyline,
    in_F,
    in_F0,
    minsky_embed,
    reduce_to_F0,
)

from .verify import ClaimResult, VerifyConfig, run_all, run_claim

__version__ = "0.1.0"
