import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracle
from thurston_spine import (
    ArcKind,
    CurveClass,
    DomainError,
    PreconditionError,
    c0,
    c1,
    c_half,
    dual_coords,
    in_spine,
    length,
    systole_report,
    trace_arc,
    triple_point,
    u0,
    u1,
)

# frozen (mpmath bisection of u1 - u0 with the raw formulas)
TRIPLE = {
    2: (1.528570919480998161272, 0.642562295091554801458),
    3: (1.823897489279684367990, 0.676938436439673889100),
    5: (2.023190087339435251021, 0.698137258415830054052),
}


@pytest.mark.parametrize("g", [2, 3, 5])
def test_triple_point_frozen(g):
    tp = triple_point(g)
    assert tp.c_M == pytest.approx(TRIPLE[g][0], abs=1e-11)
    assert tp.u_M == pytest.approx(TRIPLE[g][1], abs=1e-11)
    assert tp.bracket[0] <= tp.c_M <= tp.bracket[1]


@pytest.mark.parametrize("g", [2, 3, 5])
def test_triple_point_ties(g):
    tp = triple_point(g)
    a, b, c = (length(g, tp.c_M, tp.t_M, k) for k in ("alpha", "beta", "gamma"))
    assert abs(a - b) < 1e-10 and abs(b - c) < 1e-10
    assert length(g, tp.c_M, tp.t_M, "delta") > c


@pytest.mark.parametrize("g", [2, 3, 5, 8])
def test_u1_endpoints(g):
    assert u1(g, c1(g)) == pytest.approx(1.0, abs=1e-9)
    assert u1(g, c_half(g)) == pytest.approx(0.5, abs=1e-9)


@pytest.mark.parametrize("g", [2, 3, 5, 8])
def test_u0_endpoint(g):
    assert u0(g, c0(g)) == pytest.approx(0.0, abs=1e-9)


def test_u1_interior_point():
    c = c1(2) + 0.2
    u = u1(2, c)
    assert 0 < u < 1
    assert abs(length(2, c, u * c, "beta") - 2 * c) < 1e-10


def test_u0_interior_point():
    c = c0(2) + 0.3
    u = u0(2, c)
    assert 0 < u < 1
    assert abs(length(2, c, u * c, "alpha") - 2 * c) < 1e-10
    assert dual_coords(2, c, u * c).c_alpha == pytest.approx(c, abs=1e-9)


def test_u1_against_oracle():
    g, c = 3, 2.0
    ref = oracle.bisect(lambda u: oracle.beta(g, c, u * c) - 2 * c, mp.mpf("1e-6"), 1)
    assert u1(g, c) == pytest.approx(float(ref), abs=1e-13)


def test_arcs_out_of_domain():
    with pytest.raises(DomainError):
        u0(3, c0(3) - 0.1)
    with pytest.raises(DomainError):
        u1(2, c1(2) - 0.1)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.floats(0.0, 1.0), st.floats(0.0, 1.0))
def test_arcs_are_monotone(g, a, b):
    tp = triple_point(g)
    lo1, lo0 = c1(g), c0(g)
    x, y = sorted((a, b))
    ca, cb = lo1 + x * (tp.c_M - lo1), lo1 + y * (tp.c_M - lo1)
    assert u1(g, ca) >= u1(g, cb)
    ca, cb = lo0 + x * (tp.c_M - lo0), lo0 + y * (tp.c_M - lo0)
    assert u0(g, ca) <= u0(g, cb)


@pytest.mark.parametrize("g", [2, 3, 5])
def test_systole_sets(g):
    assert systole_report(g, c0(g), 0.0).systoles == {CurveClass.ALPHA, CurveClass.GAMMA}
    b = c1(g)
    assert systole_report(g, b, b).systoles == {CurveClass.BETA, CurveClass.GAMMA}
    tp = triple_point(g)
    r = systole_report(g, tp.c_M, tp.t_M)
    assert {CurveClass.ALPHA, CurveClass.BETA, CurveClass.GAMMA} <= r.systoles
    assert r.sys_length == pytest.approx(2 * tp.c_M, rel=1e-12)


def test_systole_report_preconditions():
    with pytest.raises(PreconditionError):
        systole_report(2, 1.0, -0.5)
    with pytest.raises(ValueError):
        systole_report(2, 1.0, 0.5, tie_tol=0)


@pytest.mark.parametrize("g", [2, 3])
def test_in_spine(g):
    assert in_spine(g, c0(g), 0.0)
    assert in_spine(g, c1(g), 1.0)
    tp = triple_point(g)
    assert in_spine(g, tp.c_M, tp.u_M)
    # strictly between the two arcs
    c = 0.5 * (c1(g) + tp.c_M)
    assert not in_spine(g, c, 0.5 * (u0(g, c) + u1(g, c)))
    with pytest.raises(PreconditionError):
        in_spine(g, 1.0, -0.2)


def test_trace_beta_gamma_endpoints():
    arc = trace_arc(2, ArcKind.BETA_GAMMA, n_samples=64)
    tp = triple_point(2)
    assert len(arc.samples) == 64
    assert (arc.samples[0].c, arc.samples[0].u) == pytest.approx((c1(2), 1.0), abs=1e-9)
    assert (arc.samples[-1].c, arc.samples[-1].u) == pytest.approx((tp.c_M, tp.u_M), abs=1e-9)


def test_trace_alpha_gamma_endpoints():
    arc = trace_arc(2, "alpha-gamma", n_samples=64)
    tp = triple_point(2)
    assert (arc.samples[0].c, arc.samples[0].u) == pytest.approx((c0(2), 0.0), abs=1e-9)
    assert arc.samples[-1].u == tp.u_M


def test_trace_residuals():
    arc = trace_arc(3, ArcKind.BETA_GAMMA, n_samples=128)
    res = [abs(length(3, p.c, p.t, "beta") - length(3, p.c, p.t, "gamma")) for p in arc.samples]
    assert max(res) < 1e-9


def test_trace_c_hi():
    arc = trace_arc(2, "alpha-gamma", c_hi=1.4, n_samples=5)
    assert arc.c[-1] == 1.4 and arc.c_range == (c0(2), 1.4)
    with pytest.raises(DomainError):
        trace_arc(2, "beta-gamma", c_hi=1.4)
    with pytest.raises(ValueError):
        trace_arc(2, "beta-gamma", n_samples=1)


def test_arcs_stay_in_domain():
    from thurston_spine import in_F0
    for kind in ArcKind:
        arc = trace_arc(5, kind, n_samples=32)
        assert all(in_F0(5, p.c, p.t) for p in arc.samples)
        assert np.all(np.diff(arc.c) > 0)
