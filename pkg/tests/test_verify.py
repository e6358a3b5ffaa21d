import json

import pytest

from thurston_spine import verify
from thurston_spine.verify import ClaimResult, UnknownClaimError, VerifyConfig, run_all, run_claim

SMALL = VerifyConfig(grid_n=40)


def test_config_validation():
    with pytest.raises(ValueError):
        VerifyConfig(grid_n=4)
    with pytest.raises(ValueError):
        VerifyConfig(genus_list=(1,))
    assert VerifyConfig().genus_list == (2, 3, 5)


def test_unknown_claim():
    with pytest.raises(UnknownClaimError):
        run_claim("no_such_claim")


def test_required_claims_registered():
    ids = set(verify.claim_ids())
    assert {
        "sign_partials", "boundary_inequalities", "dual_involution", "tanh_identity",
        "dual_sign", "dual_zero", "constants_residuals", "c_half_bound_g3",
        "no_bc_solution_below_c1", "arc_endpoints", "arc_residuals", "arc_junction",
        "spine_side_conditions", "delta_on_spine", "delta_exclusion_g3", "delta_exclusion_g5",
        "triple_local_max", "reduction_roundtrip", "L1_disjointness",
    } <= ids


def test_genus_3_report():
    res = run_all(VerifyConfig(genus_list=(3,), grid_n=60))
    by = {r.claim_id: r for r in res}
    assert by["c_half_bound_g3"].passed
    assert by["delta_exclusion_g3"].passed
    assert "delta_exclusion_g5" not in by
    assert all(r.passed for r in res), [r.claim_id for r in res if not r.passed]


def test_genus_5_delta_bounds():
    r = run_claim("delta_exclusion_g5", VerifyConfig(genus_list=(5,), grid_n=60), genus=5)
    assert r.passed and "6.85" in r.details and "4.64" in r.details


def test_single_claim_and_determinism():
    a = run_claim("dual_involution", VerifyConfig(genus_list=(2,)), genus=2)
    b = run_claim("dual_involution", VerifyConfig(genus_list=(2,)), genus=2)
    assert a.passed and a.worst_residual < 1e-9
    assert a == b
    assert a.seed == 0


def test_ordering_and_shape():
    res = run_all(SMALL)
    keys = [(r.claim_id, r.genus) for r in res]
    assert keys == sorted(keys)
    s = verify.summary(res)
    assert s["total"] == len(res) and s["failed"] == 0
    json.dumps([r.to_dict() for r in res])


def test_failed_vs_inconclusive():
    r = verify._margin_result("x", 2, -1e-12, resolution=1e-9)
    assert not r.passed and r.status == "inconclusive"
    r = verify._margin_result("x", 2, -1.0, resolution=1e-9)
    assert r.status == "failed"
    assert ClaimResult("x", 2, True, 0.0).status == "passed"


def test_sign_partials_edge_is_flat():
    p = verify.partial_signs(2, n=50)
    assert p["interior"] > 0
    assert abs(p["edge_beta"]) <= p["noise"]


def test_l1_margins_positive_across_window():
    m, _ = verify.l1_disjointness(2, n=50)
    assert m > 0
