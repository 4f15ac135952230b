"""Small dense complex linear algebra for 2-, 4- and 8-dimensional objects.

Everything here operates on plain numpy arrays; functions accept stacked
inputs with arbitrary leading batch axes wherever that is free.
"""

from __future__ import annotations

import numpy as np

MAX_DIM = 8

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)

# sigma_y (x) sigma_y, the two-qubit spin-flip kernel; real anti-diagonal.
SPIN_FLIP_4 = np.kron(SIGMA_Y, SIGMA_Y).real


def _require_finite(a: np.ndarray, what: str) -> None:
    finite = np.isfinite(a.real) & np.isfinite(a.imag) if np.iscomplexobj(a) \
        else np.isfinite(a)
    if not np.all(finite):
        raise ValueError(f"{what} contains NaN or Inf")


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor (Kronecker) product of two square matrices, capped at dim 8."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    _require_finite(a, "kron operand")
    _require_finite(b, "kron operand")
    if a.shape[0] * b.shape[0] > MAX_DIM:
        raise ValueError(
            f"kron result dim {a.shape[0] * b.shape[0]} exceeds supported maximum {MAX_DIM}"
        )
    return np.kron(a, b)


def _tensor_view(state: np.ndarray) -> np.ndarray:
    """View a (..., 8) amplitude array as (..., 2, 2, 2), qubit 1 first."""
    return state.reshape(state.shape[:-1] + (2, 2, 2))


def branch_matrix(state: np.ndarray, keep: tuple[int, int]) -> np.ndarray:
    """Reshape a (..., 8) pure state into a (..., 4, 2) matrix whose rows are
    indexed by the kept qubit pair and columns by the traced-out qubit."""
    q1, q2 = sorted(keep)
    other = ({1, 2, 3} - {q1, q2}).pop()
    t = _tensor_view(np.asarray(state, dtype=complex))
    nbatch = t.ndim - 3
    axes = tuple(range(nbatch)) + (nbatch + q1 - 1, nbatch + q2 - 1, nbatch + other - 1)
    t = np.transpose(t, axes)
    return t.reshape(t.shape[:-3] + (4, 2))


def single_qubit_matrix(state: np.ndarray, qubit: int) -> np.ndarray:
    """Reshape a (..., 8) pure state into (..., 2, 4): kept qubit vs the rest."""
    others = [q for q in (1, 2, 3) if q != qubit]
    t = _tensor_view(np.asarray(state, dtype=complex))
    nbatch = t.ndim - 3
    axes = tuple(range(nbatch)) + tuple(nbatch + q - 1 for q in [qubit] + others)
    t = np.transpose(t, axes)
    return t.reshape(t.shape[:-3] + (2, 4))


def _check_normalized(state: np.ndarray, tol: float = 1e-10) -> None:
    norms = np.sum(np.abs(state) ** 2, axis=-1)
    if np.any(np.abs(norms - 1.0) > tol):
        raise ValueError("state is not normalized")


def partial_trace(state: np.ndarray, keep) -> np.ndarray:
    """Reduced density matrix of a normalized (..., 8) three-qubit pure state.

    ``keep`` is one or two qubit labels from {1, 2, 3}.  Returns a
    (..., 4, 4) matrix for a kept pair or (..., 2, 2) for a single qubit.
    """
    state = np.asarray(state, dtype=complex)
    _require_finite(state, "state")
    _check_normalized(state)
    if isinstance(keep, (int, np.integer)):
        kept = [int(keep)]
    else:
        kept = sorted({int(q) for q in keep})
    if not all(q in (1, 2, 3) for q in kept) or len(kept) not in (1, 2):
        raise ValueError("keep must name one or two distinct qubits from {1, 2, 3}")
    if len(kept) == 2:
        m = branch_matrix(state, (kept[0], kept[1]))
    else:
        m = single_qubit_matrix(state, kept[0])
    return m @ np.conj(np.swapaxes(m, -1, -2))


def eig_hermitian(m: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, in descending order."""
    m = np.asarray(m, dtype=complex)
    _require_finite(m, "matrix")
    if np.max(np.abs(m - np.conj(np.swapaxes(m, -1, -2)))) > tol:
        raise ValueError("matrix is not Hermitian")
    return np.linalg.eigvalsh(m)[..., ::-1]


def det2(m: np.ndarray) -> complex:
    """Determinant of a 2x2 matrix (batched: last two axes)."""
    m = np.asarray(m, dtype=complex)
    return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]


def assert_density_matrix(rho: np.ndarray, herm_tol: float = 1e-12,
                          trace_tol: float = 1e-12, eig_floor: float = -1e-10) -> None:
    """Validate Hermiticity, unit trace and positivity of a density matrix."""
    rho = np.asarray(rho, dtype=complex)
    _require_finite(rho, "density matrix")
    if np.max(np.abs(rho - np.conj(np.swapaxes(rho, -1, -2)))) > herm_tol:
        raise ValueError("density matrix is not Hermitian")
    tr = np.trace(rho, axis1=-2, axis2=-1)
    if np.any(np.abs(tr - 1.0) > trace_tol):
        raise ValueError("density matrix trace differs from 1")
    if np.min(np.linalg.eigvalsh(rho)) < eig_floor:
        raise ValueError("density matrix has a negative eigenvalue")


def clip_spectrum(w: np.ndarray, floor: float = -1e-10) -> np.ndarray:
    """Clip tiny negative rounding residue in a spectrum to zero.

    Values in (floor, 0) are rounding noise and clip to 0; anything at or
    below ``floor`` indicates a genuine bug and raises.
    """
    if np.min(w) <= floor:
        raise ValueError(f"spectrum entry {np.min(w)} below clipping floor {floor}")
    return np.clip(w, 0.0, None)
