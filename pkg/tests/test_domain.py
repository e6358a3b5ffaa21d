import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from thurston_spine import (
    BoundaryGeodesic,
    DomainError,
    HalfPlanePoint,
    Letter,
    MCGWord,
    ReductionError,
    apply_letter,
    apply_word,
    boundary_polyline,
    c0,
    dual_coords,
    in_F,
    in_F0,
    minsky_embed,
    reduce_to_F0,
    triple_point,
)
from thurston_spine.domain import boundary_ct
from thurston_spine.geometry import C_MAX, C_MIN


def test_in_F_examples():
    for g in (2, 3, 5):
        assert in_F(g, 1.0, 0.0)
    assert not in_F(2, 1.0, 2.5)
    assert in_F(2, 1.0, 1.0)


def test_in_F0_examples():
    for g in (2, 3, 5):
        assert in_F0(g, c0(g), 0.0)
        # c > c_alpha on L_0 beyond the self-dual point
        assert not in_F0(g, c0(g) + 0.5, 0.0)
        assert dual_coords(g, c0(g) + 0.5, 0.0).c_alpha < c0(g) + 0.5
    assert not in_F0(2, 1.0, -0.1)


def test_minsky_embed():
    assert minsky_embed(2, 1) == HalfPlanePoint(0.5, 0.5)
    assert minsky_embed(1, 0) == HalfPlanePoint(0.0, 1.0)
    assert minsky_embed(0.5, -0.5) == HalfPlanePoint(-1.0, 2.0)
    assert minsky_embed(2, 1).z == complex(0.5, 0.5)
    with pytest.raises(DomainError):
        minsky_embed(0.0, 1.0)
    with pytest.raises(DomainError):
        HalfPlanePoint(0.0, -1.0)


def test_boundary_verticals():
    assert all(p.x == 1.0 for p in boundary_polyline(2, BoundaryGeodesic.L_1, (0.5, 2), 4))
    assert all(p.x == 0.0 for p in boundary_polyline(3, "L_0", (0.1, 9), 11))
    assert all(p.x == -1.0 for p in boundary_polyline(3, "L_minus1", (0.1, 9), 11))


def test_boundary_alpha_one():
    pts = boundary_ct(2, BoundaryGeodesic.L_ALPHA_1, (0.8, 2), 16)
    for c, t in pts:
        d = dual_coords(2, c, t)
        assert abs(d.t_alpha / d.c_alpha - 1) < 1e-9
        assert minsky_embed(c, t).x < 0


def test_boundary_alpha_zero_is_L0():
    for c, t in boundary_ct(3, "L_alpha_0", (0.1, 5), 9):
        assert t == 0.0


def test_boundary_minus1_1():
    g = 2
    pts = boundary_ct(g, "L_minus1_1", (c0(g), 6.0), 20)
    assert pts[0] == (c0(g), 0.0)
    for c, t in pts:
        assert dual_coords(g, c, t).c_alpha == pytest.approx(c, abs=1e-9)
    with pytest.raises(DomainError):
        boundary_ct(g, "L_minus1_1", (0.5, 6.0), 5)


def test_boundary_bad_args():
    with pytest.raises(ValueError):
        boundary_ct(2, "L_1", (0.5, 2), 1)
    with pytest.raises(ValueError):
        boundary_ct(2, "L_7", (0.5, 2), 4)


def test_letters():
    assert apply_letter(2, Letter.DG, 1.0, 0.3) == pytest.approx((1.0, 2.3))
    assert apply_letter(2, "g", 1.0, 0.3) == pytest.approx((1.0, -1.7))
    assert apply_letter(2, Letter.R0, 1.0, 0.3) == (1.0, -0.3)
    (c, t), _ = apply_word(2, "A,a", 1.2, 0.1)
    assert (c, t) == pytest.approx((1.2, 0.1), abs=1e-9)
    (c, t), _ = apply_word(2, "a,A", 1.2, 0.1)
    assert (c, t) == pytest.approx((1.2, 0.1), abs=1e-9)


def test_apply_word_trajectory():
    (c, t), traj = apply_word(3, MCGWord(), 1.0, 0.2)
    assert (c, t) == (1.0, 0.2) and traj == [(1.0, 0.2)]
    (c, t), traj = apply_word(3, [Letter.DG, Letter.DG_INV], 1.0, 0.2)
    assert (c, t) == pytest.approx((1.0, 0.2), abs=1e-9)
    assert len(traj) == 3


@pytest.mark.parametrize("g", [2, 3, 5])
def test_conjugation(g):
    rng = np.random.default_rng(g)
    for _ in range(20):
        c, t = rng.uniform(0.3, 3), rng.uniform(-1, 1)
        a = apply_letter(g, "A", c, t)
        b, _ = apply_word(g, "F,G,F", c, t)
        assert a == pytest.approx(b, abs=1e-9)


def test_edge_pairing_exact():
    for c in np.linspace(0.1, 10, 17):
        assert apply_letter(2, "G", c, -c)[1] == c


def test_word_parsing():
    w = MCGWord.parse("A, g,R,F")
    assert str(w) == "A,g,R,F" and len(w) == 4
    assert MCGWord.parse("DA,DG_inv").letters == (Letter.DA, Letter.DG_INV)
    assert MCGWord.parse("") == MCGWord()
    with pytest.raises(ValueError):
        MCGWord.parse("A,X")
    assert str(w.inverse()) == "F,R,G,a"
    assert MCGWord.parse("A,G,g,a,R,R,F").free_reduce() == MCGWord.parse("F")
    assert str(MCGWord.parse("A") + MCGWord.parse("G")) == "A,G"


@pytest.mark.parametrize("g", [2, 3, 5])
def test_reduce_examples(g):
    tp = triple_point(g)
    c, t, w = reduce_to_F0(g, tp.c_M, tp.t_M)
    assert (c, t) == (tp.c_M, tp.t_M) and len(w) == 0
    c, t = apply_letter(g, "G", tp.c_M, tp.t_M)
    c, t, w = reduce_to_F0(g, c, t)
    assert (c, t) == pytest.approx((tp.c_M, tp.t_M), abs=1e-9)
    assert w.letters[-1] is Letter.DG_INV
    c, t, w = reduce_to_F0(g, tp.c_M, -tp.t_M)
    assert Letter.R0 in w.letters
    assert (c, t) == pytest.approx((tp.c_M, tp.t_M), abs=1e-12)


def test_reduce_da_dg_from_triple():
    g = 2
    tp = triple_point(g)
    (c, t), _ = apply_word(g, "A,G", tp.c_M, tp.t_M)
    assert not in_F0(g, c, t)
    c2, t2, w = reduce_to_F0(g, c, t)
    assert (c2, t2) == pytest.approx((tp.c_M, tp.t_M), abs=1e-9)
    (c3, t3), _ = apply_word(g, w, c, t)
    assert (c3, t3) == (c2, t2)


def test_reduce_step_limit():
    with pytest.raises(ReductionError) as exc:
        reduce_to_F0(2, 0.01, 10.0, max_steps=3)
    assert exc.value.state is not None and len(exc.value.word) == 3


def test_reduce_uses_f_above_self_dual():
    g = 3
    c, t, w = reduce_to_F0(g, c0(g) + 0.5, 0.0)
    assert Letter.F in w.letters and in_F0(g, c, t)


letter_st = st.sampled_from(list(Letter))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.floats(0.3, 3.0), st.floats(0.02, 0.98),
       st.lists(letter_st, min_size=1, max_size=10))
def test_reduction_round_trip(g, c, u, letters):
    t = u * c
    d = dual_coords(g, c, t)
    assume(c < 0.999 * d.c_alpha and abs(d.t_alpha) < 0.999 * d.c_alpha)
    try:
        (c2, t2), traj = apply_word(g, MCGWord(tuple(letters)), c, t)
    except DomainError:
        assume(False)
    assume(all(C_MIN <= x <= C_MAX for x, _ in traj))
    c3, t3, w = reduce_to_F0(g, c2, t2)
    assert (c3, t3) == pytest.approx((c, t), abs=1e-8)
    assert len(reduce_to_F0(g, c3, t3)[2]) == 0


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.floats(0.2, 4.0), st.floats(-20.0, 20.0))
def test_reduction_lands_in_F0(g, c, u):
    c2, t2, w = reduce_to_F0(g, c, u * c)
    assert in_F0(g, c2, t2)
    (c3, t3), _ = apply_word(g, w, c, u * c)
    assert (c3, t3) == (c2, t2)
