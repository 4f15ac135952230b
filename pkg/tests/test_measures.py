import numpy as np
import pytest

from entmono.linalg import partial_trace
from entmono.measures import (
    concurrence_pure_bipartition,
    cut_concurrence_from_state,
    eof_from_concurrence,
    generalized_concurrence,
    ghz_closed_form_batch,
    ghz_closed_form_concurrences,
    pair_concurrence_from_state,
    reduced_pair_concurrences,
    tangle,
    w_closed_form_concurrences,
    wootters_concurrence,
)
from entmono.states import (
    FamilyTag,
    GhzParams,
    SampleSpec,
    WParams,
    build_ghz,
    build_w,
    sample_family,
)

GHZ = build_ghz(GhzParams(0, 0, 0, 1 + 0j))
W = build_w(WParams(0, 1 / 3, 1 / 3, 1 / 3))
KET000 = np.zeros(8, dtype=complex)
KET000[0] = 1.0

BELL_RHO = np.zeros((4, 4), dtype=complex)
BELL_RHO[0, 0] = BELL_RHO[0, 3] = BELL_RHO[3, 0] = BELL_RHO[3, 3] = 0.5


def _sampled_states(fam, n, seed):
    params = sample_family(SampleSpec(fam, n, seed))
    build = build_ghz if isinstance(params[0], GhzParams) else build_w
    return params, [build(p) for p in params]


def test_wootters_bell():
    assert wootters_concurrence(BELL_RHO) == pytest.approx(1.0, abs=1e-10)


def test_wootters_maximally_mixed():
    assert wootters_concurrence(np.eye(4) / 4) == pytest.approx(0.0, abs=1e-10)


def test_wootters_reduced_example():
    # closed form gives 2 g1 / (4k) = 0.5; the reduced state is an X state
    # whose concurrence is twice its outer off-diagonal element.
    psi = build_ghz(GhzParams(0.25, 0, 0, 1 + 0j))
    rho = partial_trace(psi, (2, 3))
    assert 2 * abs(rho[0, 3]) == pytest.approx(0.5, abs=1e-12)
    assert wootters_concurrence(rho) == pytest.approx(0.5, abs=1e-9)


def test_wootters_rejects_invalid_density():
    with pytest.raises(ValueError):
        wootters_concurrence(np.eye(4))  # trace 4


def test_wootters_agrees_with_plain_spectrum_route():
    # third route: eigenvalues of the (non-Hermitian) product rho rho~
    sy = np.array([[0, -1j], [1j, 0]])
    syy = np.kron(sy, sy)
    rng = np.random.default_rng(13)
    for _ in range(50):
        psi = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        psi /= np.linalg.norm(psi)
        rho = partial_trace(psi, (1, 2))
        lam = np.sqrt(np.abs(np.sort(
            np.linalg.eigvals(rho @ syy @ rho.conj() @ syy).real)[::-1]))
        expected = max(0.0, lam[0] - lam[1] - lam[2] - lam[3])
        assert wootters_concurrence(rho) == pytest.approx(expected, abs=1e-6)
        assert pair_concurrence_from_state(psi, (1, 2)) == pytest.approx(expected, abs=1e-6)


def test_pure_bipartition_examples():
    assert concurrence_pure_bipartition(KET000, 1) == pytest.approx(0.0)
    assert concurrence_pure_bipartition(GHZ, 1) == pytest.approx(1.0, abs=1e-12)
    assert concurrence_pure_bipartition(W, 1) == pytest.approx(2 * np.sqrt(2 / 9), abs=1e-12)


def test_pure_bipartition_rejects_unnormalized():
    with pytest.raises(ValueError):
        concurrence_pure_bipartition(2 * GHZ, 1)


def test_eof_endpoints_and_value():
    assert eof_from_concurrence(0.0) == 0.0
    assert eof_from_concurrence(1.0) == 1.0
    assert eof_from_concurrence(2 / 3) == pytest.approx(0.550048, abs=1e-6)
    with pytest.raises(ValueError):
        eof_from_concurrence(1.1)
    with pytest.raises(ValueError):
        eof_from_concurrence(-0.1)


def test_eof_strictly_increasing():
    grid = np.linspace(0, 1, 10000)
    vals = np.array([eof_from_concurrence(c) for c in grid])
    assert np.all(np.diff(vals) > 0)


def test_reduced_pair_concurrences_examples():
    assert np.allclose(reduced_pair_concurrences(GHZ), (0, 0, 0), atol=1e-12)
    assert np.allclose(reduced_pair_concurrences(W), (2 / 3, 2 / 3, 2 / 3), atol=1e-12)
    assert np.allclose(reduced_pair_concurrences(KET000), (0, 0, 0), atol=1e-12)


def test_ghz_closed_form_examples():
    assert ghz_closed_form_concurrences(GhzParams(0, 0, 0, 0.3 + 0.2j)) == (0, 0, 0)
    assert np.allclose(ghz_closed_form_concurrences(GhzParams(0.25, 0, 0, 1 + 0j)),
                       (0, 0, 0.5), atol=1e-15)
    for r in np.linspace(0.05, 0.95, 10):
        g1 = 0.2
        got = ghz_closed_form_concurrences(GhzParams(g1, 0, 0, complex(r)))
        assert got[2] == pytest.approx(2 * g1 * 2 * r * r / (1 + r ** 4), abs=1e-14)


def test_w_closed_form_examples():
    assert np.allclose(w_closed_form_concurrences(WParams(0, 1 / 3, 1 / 3, 1 / 3)),
                       (2 / 3, 2 / 3, 2 / 3), atol=1e-15)
    assert np.allclose(w_closed_form_concurrences(WParams(0.25, 0.5, 0.125, 0.125)),
                       (0.5, 0.5, 0.25), atol=1e-15)


@pytest.mark.parametrize("fam", list(FamilyTag))
def test_closed_forms_match_state_vector(fam):
    params, states = _sampled_states(fam, 500, seed=29)
    for p, psi in zip(params, states):
        closed = (ghz_closed_form_concurrences(p) if isinstance(p, GhzParams)
                  else w_closed_form_concurrences(p))
        oracle = reduced_pair_concurrences(psi)
        assert np.allclose(oracle, closed, atol=1e-9)


def test_tangle_examples():
    assert tangle(GHZ) == pytest.approx(1.0, abs=1e-12)
    assert tangle(W) == pytest.approx(0.0, abs=1e-10)
    assert tangle(KET000) == pytest.approx(0.0, abs=1e-14)


def test_tangle_focus_invariance():
    for fam in (FamilyTag.GHZ_GENERIC, FamilyTag.GHZ_TWO_NONZERO, FamilyTag.W_CLASS):
        _, states = _sampled_states(fam, 200, seed=31)
        for psi in states:
            vals = [tangle(psi, focus=q) for q in (1, 2, 3)]
            assert max(vals) - min(vals) < 1e-9


def test_tangle_sign_dichotomy():
    for fam in (FamilyTag.GHZ_ALL_ZERO, FamilyTag.GHZ_ONE_NONZERO,
                FamilyTag.GHZ_TWO_NONZERO):
        _, states = _sampled_states(fam, 300, seed=37)
        assert all(tangle(psi) > 0 for psi in states)
    _, states = _sampled_states(FamilyTag.W_CLASS, 300, seed=37)
    assert all(tangle(psi) <= 1e-10 for psi in states)


def test_ckw_inequality_all_foci():
    pair_of = {1: ((1, 2), (1, 3)), 2: ((1, 2), (2, 3)), 3: ((1, 3), (2, 3))}
    for fam in list(FamilyTag):
        _, states = _sampled_states(fam, 200, seed=41)
        arr = np.array(states)
        for q, (pa, pb) in pair_of.items():
            res = (cut_concurrence_from_state(arr, q) ** 2
                   - pair_concurrence_from_state(arr, pa) ** 2
                   - pair_concurrence_from_state(arr, pb) ** 2)
            assert res.min() >= -1e-10


def test_generalized_concurrence_examples():
    assert generalized_concurrence(KET000) == pytest.approx(0.0, abs=1e-12)
    assert generalized_concurrence(GHZ) == pytest.approx(np.sqrt(1.5), abs=1e-12)
    assert generalized_concurrence(W) == pytest.approx(np.sqrt(4 / 3), abs=1e-12)


def test_generalized_concurrence_against_purity_oracle():
    rng = np.random.default_rng(43)
    for _ in range(25):
        psi = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        psi /= np.linalg.norm(psi)
        total = 0.0
        for keep in [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3)]:
            rho = partial_trace(psi, keep)
            total += np.trace(rho @ rho).real
        expected = np.sqrt((6 - total) / 2)
        assert generalized_concurrence(psi) == pytest.approx(expected, abs=1e-10)


def test_closed_form_batch_matches_scalar():
    p = GhzParams(0.11, 0.27, 0.05, 0.4 + 0.3j)
    batch = ghz_closed_form_batch(np.array([p.g1]), np.array([p.g2]),
                                  np.array([p.g3]), np.array([p.z]))
    assert np.allclose([b[0] for b in batch], ghz_closed_form_concurrences(p))
