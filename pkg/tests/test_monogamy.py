import numpy as np
import pytest

from entmono.monogamy import (
    SCAN_CASES,
    batch_evaluate,
    evaluate,
    find_boundary,
    scan_region,
    verdict,
)
from entmono.states import FamilyTag, GhzParams, SampleSpec, WParams, sample_family

# frozen by a development-time bisection run (interval width < 1e-6)
CASE2_R1_ROOT = 0.2841403
CASE2_HALF_RADIUS_M2_ROOT = 0.3315304


def test_evaluate_w_state_constants():
    rec = evaluate(WParams(0, 1 / 3, 1 / 3, 1 / 3))
    for e in (rec.e12, rec.e13, rec.e23):
        assert e == pytest.approx(0.550048, abs=1e-5)
    assert rec.m1 == pytest.approx(0.0923424, abs=1e-5)
    assert rec.m2 == pytest.approx(0.0923424, abs=1e-5)
    assert rec.verdict1 == rec.verdict2 == "satisfied"


def test_evaluate_maximally_entangled_corner():
    rec = evaluate(GhzParams(0, 0, 0, 1 + 0j))
    assert rec.family is FamilyTag.GHZ_MES_ALL_ZERO
    assert rec.m1 == pytest.approx(1.0, abs=1e-12)
    assert rec.m2 == pytest.approx(1.0, abs=1e-12)


def test_evaluate_all_zero_score_is_radius_squared():
    rec = evaluate(GhzParams(0, 0, 0, 0.5 + 0j))
    assert rec.m1 == pytest.approx(0.25, abs=1e-12)
    assert rec.m2 == pytest.approx(0.25, abs=1e-12)


def test_record_score_identity():
    for fam in (FamilyTag.GHZ_GENERIC, FamilyTag.W_CLASS):
        for p in sample_family(SampleSpec(fam, 50, seed=73)):
            rec = evaluate(p)
            expected = rec.e_s ** 2 - rec.e12 ** 2 - rec.e13 ** 2 - rec.e23 ** 2
            assert rec.m1 == pytest.approx(expected, abs=1e-12)
            expected = rec.e_a ** 2 - rec.e12 ** 2 - rec.e13 ** 2 - rec.e23 ** 2
            assert rec.m2 == pytest.approx(expected, abs=1e-12)


def test_operational_columns_match_scalar_routing():
    # the vectorized sweep path and the per-record functions must agree
    from entmono.operational import accessible_entanglement, source_entanglement

    for fam in FamilyTag:
        for p in sample_family(SampleSpec(fam, 80, seed=101)):
            rec = evaluate(p)
            assert rec.e_s == pytest.approx(source_entanglement(p), abs=1e-14)
            assert rec.e_a == pytest.approx(accessible_entanglement(p), abs=1e-14)


def test_scores_invariant_under_coefficient_permutation():
    import itertools

    for p in sample_family(SampleSpec(FamilyTag.GHZ_GENERIC, 30, seed=79)):
        base = evaluate(p)
        for perm in itertools.permutations(p.g):
            rec = evaluate(GhzParams(*perm, p.z))
            assert rec.m1 == pytest.approx(base.m1, abs=1e-9)
            assert rec.m2 == pytest.approx(base.m2, abs=1e-9)


def test_scan_case1_trivially_satisfied():
    res = scan_region("case1", grid=101)
    r = res.coords["r"]
    assert np.max(np.abs(res.columns["m1"] - r * r)) < 1e-12
    assert np.max(np.abs(res.columns["m2"] - r * r)) < 1e-12
    assert set(res.verdict1) == {"satisfied"}
    assert set(res.verdict2) == {"satisfied"}


def test_scan_case2_r1_splits_near_28_percent():
    res = scan_region("case2-r1", grid=201)
    g1 = res.coords["g1"]
    v1 = res.verdict1
    assert all(v == "satisfied" for v in v1[g1 <= 0.27])
    assert all(v == "violated" for v in v1[g1 >= 0.29])


def test_scan_small_appendix_grid_nonnegative():
    res = scan_region("appendixB", grid=41)
    assert res.columns["m1"].min() >= -1e-9


def test_scan_row_major_cell_order():
    res = scan_region("case2", grid=5)
    g1 = res.coords["g1"]
    r = res.coords["r"]
    assert res.n_cells == 25
    # row-major: the second axis varies fastest
    assert np.all(np.diff(r[:5]) > 0)
    assert g1[0] == g1[4]
    assert g1[5] > g1[4]


def test_scan_matches_pointwise_evaluation():
    res = scan_region("appendixD2", grid=21)
    rng = np.random.default_rng(83)
    for i in rng.integers(0, res.n_cells, size=100):
        g = float(res.coords["g1"][i])
        y = float(res.coords["y"][i])
        rec = evaluate(GhzParams(g, g, g, complex(y)))
        assert rec.m1 == pytest.approx(float(res.columns["m1"][i]), abs=1e-12)
        assert rec.m2 == pytest.approx(float(res.columns["m2"][i]), abs=1e-12)


def test_scan_rejects_unknown_case_and_bad_grid():
    with pytest.raises(ValueError, match="unknown case"):
        scan_region("case99")
    with pytest.raises(ValueError, match="grid"):
        scan_region("case1", grid=1)


def test_verdict_antisymmetry():
    for score in (1e-6, 0.1, 0.5):
        assert verdict(score) == "satisfied"
        assert verdict(-score) == "violated"
    assert verdict(0.0) == "satisfied"
    assert verdict(-1e-13) == "satisfied"  # inside the rounding band


def test_find_boundary_case2_r1():
    root = find_boundary("case2-r1", score="m1")
    assert root == pytest.approx(0.28, abs=0.005)
    assert root == pytest.approx(CASE2_R1_ROOT, abs=2e-5)
    # the two scores share the boundary at unit radius
    assert find_boundary("case2-r1", score="m2") == pytest.approx(root, abs=2e-6)


def test_find_boundary_case1_has_no_root():
    with pytest.raises(ValueError, match="no sign change"):
        find_boundary("case1")


def test_find_boundary_case2_fixed_radius():
    # at r = 0.5 only the accessible-entanglement score changes sign along g1
    root = find_boundary("case2", fixed={"r": 0.5}, score="m2")
    assert root == pytest.approx(CASE2_HALF_RADIUS_M2_ROOT, abs=2e-5)
    with pytest.raises(ValueError, match="no sign change"):
        find_boundary("case2", fixed={"r": 0.5}, score="m1")


def test_find_boundary_requires_single_free_axis():
    with pytest.raises(ValueError, match="free axis"):
        find_boundary("case2")


def test_batch_evaluate_summary_and_determinism():
    spec = SampleSpec(FamilyTag.W_CLASS, 500, seed=89)
    a = batch_evaluate(spec)
    b = batch_evaluate(spec)
    assert a.summary == b.summary
    assert a.summary["n"] == 500
    assert a.summary["min_m1"] >= -1e-9
    assert 0.9 <= a.summary["frac_m2_violated"] <= 1.0
    recs = a.records()
    assert len(recs) == 500
    assert recs[0].m1 == pytest.approx(float(a.columns["m1"][0]))


def test_batch_evaluate_mes_nonzero_source_score():
    res = batch_evaluate(SampleSpec(FamilyTag.GHZ_MES_NONZERO, 2000, seed=97))
    assert res.summary["min_m1"] >= -1e-9
    assert res.summary["frac_m2_violated"] >= 0.9


def test_all_cases_scan_without_error():
    for case_id in SCAN_CASES:
        res = scan_region(case_id, grid=5)
        assert res.n_cells >= 5
        assert np.all(np.isfinite(res.columns["m1"]))
