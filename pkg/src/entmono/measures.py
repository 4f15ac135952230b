"""Bipartite and multipartite entanglement measures.

Two routes to the two-qubit concurrence coexist here on purpose:

* ``wootters_concurrence`` takes an arbitrary two-qubit density matrix and
  evaluates the spin-flip spectrum through Hermitian eigenproblems only
  (H = sqrt(rho) rho~ sqrt(rho)); no complex-eigenvalue machinery.
* ``reduced_pair_concurrences`` is the high-precision oracle used to
  cross-validate closed forms.  For a reduced state of a *pure* three-qubit
  state, at most two entries of the spin-flip spectrum are nonzero and they
  are the singular values of the 2x2 branch overlap tau = A^T (sy (x) sy) A,
  where A is the 4x2 reshape of the state.  Evaluating
  C = sqrt(||tau||_F^2 - 2 |det tau|) sidesteps the sqrt(eps) noise that any
  eigensolver puts into near-zero spectrum entries.
"""

from __future__ import annotations

import numpy as np

from .linalg import (
    SPIN_FLIP_4,
    assert_density_matrix,
    branch_matrix,
    clip_spectrum,
    det2,
    single_qubit_matrix,
)
from .states import GhzParams, WParams, ghz_normalizer

PAIRS = ((1, 2), (1, 3), (2, 3))

# Tiny negative radicands and tangles are rounding residue; anything below
# this floor is treated as a bug.
CLIP_FLOOR = -1e-10


def wootters_concurrence(rho: np.ndarray) -> float:
    """Concurrence of a two-qubit density matrix.

    Computes max(0, l1 - l2 - l3 - l4) where the li are the decreasing
    square roots of the spectrum of rho * (sy(x)sy) rho* (sy(x)sy), obtained
    here as square roots of the eigenvalues of the Hermitian matrix
    sqrt(rho) rho~ sqrt(rho).
    """
    rho = np.asarray(rho, dtype=complex)
    assert_density_matrix(rho)
    w, v = np.linalg.eigh(rho)
    w = clip_spectrum(w)
    sqrt_rho = (v * np.sqrt(w)) @ v.conj().T
    rho_tilde = SPIN_FLIP_4 @ rho.conj() @ SPIN_FLIP_4
    h = sqrt_rho @ rho_tilde @ sqrt_rho
    lam = np.sqrt(clip_spectrum(np.linalg.eigvalsh(h)))[::-1]
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def pair_concurrence_from_state(state: np.ndarray, pair: tuple[int, int]) -> np.ndarray:
    """Concurrence of the reduced pair state of a pure (..., 8) state.

    Exact on the structurally zero part of the spin-flip spectrum; see the
    module docstring.
    """
    a = branch_matrix(state, pair)
    tau = np.swapaxes(a, -1, -2) @ (SPIN_FLIP_4 @ a)
    fro2 = np.sum(np.abs(tau) ** 2, axis=(-2, -1))
    gap2 = fro2 - 2.0 * np.abs(det2(tau))
    return np.sqrt(np.clip(gap2, 0.0, None))


def cut_concurrence_from_state(state: np.ndarray, qubit: int) -> np.ndarray:
    """Concurrence 2 sqrt(det rho_qubit) across the one-vs-rest bipartition."""
    m = single_qubit_matrix(state, qubit)
    rho = m @ np.conj(np.swapaxes(m, -1, -2))
    det = det2(rho).real
    return 2.0 * np.sqrt(np.clip(det, 0.0, None))


def concurrence_pure_bipartition(state: np.ndarray, qubit: int) -> float:
    """Concurrence of a normalized three-qubit pure state across qubit|rest."""
    state = np.asarray(state, dtype=complex)
    if abs(np.sum(np.abs(state) ** 2) - 1.0) > 1e-10:
        raise ValueError("state is not normalized")
    if qubit not in (1, 2, 3):
        raise ValueError("qubit must be 1, 2 or 3")
    return float(cut_concurrence_from_state(state, qubit))


def eof_batch(c: np.ndarray) -> np.ndarray:
    """Entanglement of formation (bits) from concurrence, vectorized."""
    c = np.asarray(c, dtype=float)
    x = 0.5 * (1.0 + np.sqrt(np.clip(1.0 - c * c, 0.0, None)))
    out = np.zeros_like(x)
    inner = (x > 0.0) & (x < 1.0)
    xi = x[inner]
    out[inner] = -xi * np.log2(xi) - (1.0 - xi) * np.log2(1.0 - xi)
    return out


def eof_from_concurrence(c: float) -> float:
    """Binary-entropy entanglement of formation of a concurrence value.

    The removable endpoints are handled explicitly: c = 0 maps to 0 without
    evaluating 0*log(0), and c = 1 maps to exactly 1.
    """
    if not -1e-12 <= c <= 1.0 + 1e-12:
        raise ValueError("concurrence out of [0, 1]")
    c = min(max(c, 0.0), 1.0)
    if c == 0.0:
        return 0.0
    if c == 1.0:
        return 1.0
    return float(eof_batch(c))


def reduced_pair_concurrences(state: np.ndarray) -> tuple[float, float, float]:
    """Concurrences (c12, c13, c23) of the two-qubit reduced states."""
    state = np.asarray(state, dtype=complex)
    if abs(np.sum(np.abs(state) ** 2) - 1.0) > 1e-10:
        raise ValueError("state is not normalized")
    return tuple(float(pair_concurrence_from_state(state, p)) for p in PAIRS)


def ghz_closed_form_concurrences(p: GhzParams) -> tuple[float, float, float]:
    """Closed-form reduced concurrences of GHZ-class coordinates."""
    c12, c13, c23 = ghz_closed_form_batch(p.g1, p.g2, p.g3, p.z)
    return (float(c12), float(c13), float(c23))


def ghz_closed_form_batch(g1, g2, g3, z):
    g1, g2, g3 = (np.asarray(g, float) for g in (g1, g2, g3))
    k4 = 4.0 * ghz_normalizer(g1, g2, g3, np.asarray(z, complex))
    s1 = np.sqrt(1.0 - 4.0 * g1 * g1)
    s2 = np.sqrt(1.0 - 4.0 * g2 * g2)
    s3 = np.sqrt(1.0 - 4.0 * g3 * g3)
    return 2.0 * g3 * s1 * s2 / k4, 2.0 * g2 * s1 * s3 / k4, 2.0 * g1 * s2 * s3 / k4


def w_closed_form_concurrences(p: WParams) -> tuple[float, float, float]:
    """Closed-form reduced concurrences of W-class weights."""
    c12, c13, c23 = w_closed_form_batch(p.x, p.y, p.z)
    return (float(c12), float(c13), float(c23))


def w_closed_form_batch(x, y, z):
    x, y, z = (np.asarray(a, float) for a in (x, y, z))
    return 2.0 * np.sqrt(x * y), 2.0 * np.sqrt(x * z), 2.0 * np.sqrt(y * z)


def tangle_batch(state: np.ndarray) -> np.ndarray:
    c1 = cut_concurrence_from_state(state, 1)
    c12 = pair_concurrence_from_state(state, (1, 2))
    c13 = pair_concurrence_from_state(state, (1, 3))
    t = c1 * c1 - c12 * c12 - c13 * c13
    if np.min(t) <= CLIP_FLOOR:
        raise ValueError("tangle below the rounding floor; inconsistent state")
    return np.clip(t, 0.0, None)


def tangle(state: np.ndarray, focus: int = 1) -> float:
    """Residual entanglement C^2(focus|rest) - C^2(f,a) - C^2(f,b).

    Rounding residue in (-1e-10, 0) clips to zero; the value is independent
    of the focus qubit for pure states (exposed for the cross-check).
    """
    state = np.asarray(state, dtype=complex)
    if abs(np.sum(np.abs(state) ** 2) - 1.0) > 1e-10:
        raise ValueError("state is not normalized")
    pairs = [p for p in PAIRS if focus in p]
    c_cut = cut_concurrence_from_state(state, focus)
    t = c_cut * c_cut - sum(pair_concurrence_from_state(state, p) ** 2 for p in pairs)
    if t <= CLIP_FLOOR:
        raise ValueError("tangle below the rounding floor; inconsistent state")
    return float(max(t, 0.0))


def purity_sum_batch(state: np.ndarray) -> np.ndarray:
    """Sum of tr(rho^2) over all six proper subsystems of a pure state."""
    total = 0.0
    for q in (1, 2, 3):
        m = single_qubit_matrix(state, q)
        rho = m @ np.conj(np.swapaxes(m, -1, -2))
        total = total + np.sum(np.abs(rho) ** 2, axis=(-2, -1))
    for pair in PAIRS:
        a = branch_matrix(state, pair)
        # tr((AA+)^2) = ||A+A||_F^2 with A+A only 2x2.
        small = np.conj(np.swapaxes(a, -1, -2)) @ a
        total = total + np.sum(np.abs(small) ** 2, axis=(-2, -1))
    return total


def generalized_concurrence(state: np.ndarray) -> float:
    """Multipartite concurrence 2^(-1/2) sqrt(6 - sum of subsystem purities)."""
    state = np.asarray(state, dtype=complex)
    if abs(np.sum(np.abs(state) ** 2) - 1.0) > 1e-10:
        raise ValueError("state is not normalized")
    return float(generalized_concurrence_batch(state))


def generalized_concurrence_batch(state: np.ndarray) -> np.ndarray:
    gap = 6.0 - purity_sum_batch(state)
    return 2.0 ** (-0.5) * np.sqrt(np.clip(gap, 0.0, None))
