"""Canonical three-qubit pure states: GHZ-class and W-class parametrizations,
family classification, and seeded random parameter sampling.

The GHZ-class coordinates are (g1, g2, g3, z) with gi in [0, 1/2) and z a
nonzero complex number on the closed unit disc.  The corresponding state is

    (1/sqrt(k)) * (L1 (x) L2 (x) L3) * (z|000> + (1/z)|111>)

where Li = [[1/sqrt(2), sqrt(2)*gi], [0, sqrt(1 - 4 gi^2)/sqrt(2)]] and k is
the positive normalizer.  The W-class coordinates are nonnegative weights
(t, x, y, z) summing to one, giving

    sqrt(t)|000> + sqrt(x)|100> + sqrt(y)|010> + sqrt(z)|001>.

Qubit 1 is the most significant bit of the amplitude index.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

# Classification tolerances: a coefficient counts as zero below G_ZERO_TOL,
# and z counts as +-1 within Z_UNIT_TOL.  Both are deliberately explicit so
# that classification is deterministic on floating-point inputs.
G_ZERO_TOL = 1e-12
Z_UNIT_TOL = 1e-12

# Sampling bounds (kept away from the open ends of the parameter domain).
G_SAMPLE_LO = 1e-12
G_SAMPLE_HI = 0.5 - 1e-6
R_SAMPLE_LO = 1e-6
R_SAMPLE_HI = 1.0 - 1e-6
DISC_RADIUS2_LO = 1e-12
Z_AVOID_PM1 = 1e-9
W_SAMPLE_FLOOR = 1e-9

_UNIFORMS_PER_SAMPLE = 8


class FamilyTag(str, enum.Enum):
    """Mutually exclusive families of the canonical parametrizations."""

    GHZ_ALL_ZERO = "ghz-all-zero"
    GHZ_ONE_NONZERO = "ghz-one-nonzero"
    GHZ_TWO_NONZERO = "ghz-two-nonzero"
    GHZ_GENERIC = "ghz-generic"
    GHZ_MES_NONZERO = "ghz-mes-nonzero"
    GHZ_MES_ALL_ZERO = "ghz-mes-all-zero"
    W_CLASS = "w"
    W_CLASS_MES = "w-mes"


@dataclass(frozen=True, slots=True)
class GhzParams:
    """GHZ-class coordinates (g1, g2, g3, z)."""

    g1: float
    g2: float
    g3: float
    z: complex

    def __post_init__(self):
        for name in ("g1", "g2", "g3"):
            g = getattr(self, name)
            if not math.isfinite(g):
                raise ValueError(f"{name} is not finite")
            if not 0.0 <= g < 0.5:
                raise ValueError(f"{name} out of [0, 0.5)")
        az = abs(self.z)
        if not math.isfinite(az):
            raise ValueError("z is not finite")
        if az == 0.0:
            raise ValueError("z must be nonzero")
        if az > 1.0 + Z_UNIT_TOL:
            raise ValueError("|z| out of (0, 1]")

    @property
    def g(self) -> tuple[float, float, float]:
        return (self.g1, self.g2, self.g3)

    @property
    def k(self) -> float:
        """Positive normalizer of the unnormalized construction."""
        return ghz_normalizer(self.g1, self.g2, self.g3, self.z)


@dataclass(frozen=True, slots=True)
class WParams:
    """W-class weights (t, x, y, z) with x, y, z > 0 and unit sum."""

    t: float
    x: float
    y: float
    z: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.t, self.x, self.y, self.z)):
            raise ValueError("W-class weights must be finite")
        if self.t < 0.0:
            raise ValueError("t out of [0, 1]")
        for name in ("x", "y", "z"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be > 0")
        if abs(self.t + self.x + self.y + self.z - 1.0) > 1e-12:
            raise ValueError("t + x + y + z must equal 1")


@dataclass(frozen=True, slots=True)
class SampleSpec:
    """A deterministic sampling request: family, count, seed."""

    family: FamilyTag
    count: int
    seed: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be >= 1")


def ghz_normalizer(g1, g2, g3, z) -> float:
    """k such that the tensor-product construction divided by sqrt(k) is unit norm."""
    z = np.asarray(z, dtype=complex)
    az2 = np.abs(z) ** 2
    k = (1.0 + az2 * az2 + 16.0 * (z * z).real * np.asarray(g1) * np.asarray(g2) * np.asarray(g3)) / (8.0 * az2)
    return float(k) if np.ndim(k) == 0 else k


def build_ghz_amplitudes(g1, g2, g3, z) -> np.ndarray:
    """Vectorized GHZ-class state builder; scalar or array coordinates."""
    g1, g2, g3 = np.asarray(g1, float), np.asarray(g2, float), np.asarray(g3, float)
    z = np.asarray(z, dtype=complex)
    shape = np.broadcast_shapes(g1.shape, g2.shape, g3.shape, z.shape)
    g1, g2, g3, z = (np.broadcast_to(a, shape) for a in (g1, g2, g3, z))
    k = ghz_normalizer(g1, g2, g3, z)
    # |0> columns of the local maps are (1/sqrt(2), 0); only |000> survives.
    # |1> columns are (sqrt(2) g, sqrt(1 - 4 g^2)/sqrt(2)) and spread over all
    # eight basis states.
    lo = [np.sqrt(2.0) * g for g in (g1, g2, g3)]
    hi = [np.sqrt(1.0 - 4.0 * g * g) / np.sqrt(2.0) for g in (g1, g2, g3)]
    psi = np.zeros(shape + (8,), dtype=complex)
    branch1 = np.empty(shape + (8,), dtype=float)
    for idx in range(8):
        amp = np.ones(shape)
        for q in range(3):
            bit = (idx >> (2 - q)) & 1
            amp = amp * (hi[q] if bit else lo[q])
        branch1[..., idx] = amp
    psi += branch1 / z[..., None]
    psi[..., 0] += z * (0.5 / np.sqrt(2.0))
    psi /= np.sqrt(k)[..., None] if np.ndim(k) else np.sqrt(k)
    return psi


def build_ghz(p: GhzParams) -> np.ndarray:
    """Eight normalized amplitudes of the GHZ-class state for ``p``."""
    return build_ghz_amplitudes(p.g1, p.g2, p.g3, p.z)


def build_w_amplitudes(t, x, y, z) -> np.ndarray:
    """Vectorized W-class state builder; scalar or array weights."""
    t, x, y, z = (np.asarray(a, float) for a in (t, x, y, z))
    shape = np.broadcast_shapes(t.shape, x.shape, y.shape, z.shape)
    psi = np.zeros(shape + (8,), dtype=complex)
    psi[..., 0] = np.sqrt(np.broadcast_to(t, shape))
    psi[..., 4] = np.sqrt(np.broadcast_to(x, shape))  # |100>
    psi[..., 2] = np.sqrt(np.broadcast_to(y, shape))  # |010>
    psi[..., 1] = np.sqrt(np.broadcast_to(z, shape))  # |001>
    return psi


def build_w(p: WParams) -> np.ndarray:
    """Eight amplitudes of the W-class state for ``p``."""
    return build_w_amplitudes(p.t, p.x, p.y, p.z)


def _is_unit_pm(z: complex) -> bool:
    return abs(z - 1.0) < Z_UNIT_TOL or abs(z + 1.0) < Z_UNIT_TOL


def classify_ghz(p: GhzParams) -> FamilyTag:
    """Assign the (total, mutually exclusive) family tag of GHZ coordinates."""
    nonzero = sum(1 for g in p.g if g >= G_ZERO_TOL)
    pm1 = _is_unit_pm(p.z)
    if nonzero == 0:
        return FamilyTag.GHZ_MES_ALL_ZERO if pm1 else FamilyTag.GHZ_ALL_ZERO
    if nonzero == 3:
        return FamilyTag.GHZ_MES_NONZERO if pm1 else FamilyTag.GHZ_GENERIC
    return FamilyTag.GHZ_ONE_NONZERO if nonzero == 1 else FamilyTag.GHZ_TWO_NONZERO


def classify(p) -> FamilyTag:
    """Family tag for either parametrization."""
    if isinstance(p, GhzParams):
        return classify_ghz(p)
    if isinstance(p, WParams):
        return FamilyTag.W_CLASS_MES if p.t < G_ZERO_TOL else FamilyTag.W_CLASS
    raise TypeError(f"unsupported parameter record {type(p).__name__}")


def _sample_uniforms(seed: int, count: int) -> np.ndarray:
    """Counter-based raw uniforms: row i depends only on (seed, i).

    One Philox stream keyed by the seed, consumed as a (count, 8) row-major
    block, so sample i always maps to words [8i, 8i+8) of the stream and the
    sequence for a smaller count is a prefix of the sequence for a larger one.
    """
    gen = np.random.Generator(np.random.Philox(key=np.uint64(seed)))
    return gen.random((count, _UNIFORMS_PER_SAMPLE))


def _uniform(col: np.ndarray, lo: float, hi: float) -> np.ndarray:
    return lo + (hi - lo) * col


def _generic_z(u_rad: np.ndarray, u_ang: np.ndarray) -> np.ndarray:
    """Uniform on the unit disc (area measure) avoiding 0 and the points +-1."""
    radius = np.sqrt(_uniform(u_rad, DISC_RADIUS2_LO, 1.0))
    theta = 2.0 * np.pi * u_ang
    z = radius * np.exp(1j * theta)
    # The excluded balls around +-1 have measure ~1e-18; nudge the angle
    # deterministically rather than rejecting, to keep rows index-addressable.
    for _ in range(64):
        near = np.minimum(np.abs(z - 1.0), np.abs(z + 1.0)) < Z_AVOID_PM1
        if not near.any():
            break
        theta = theta + near * 1e-6
        z = radius * np.exp(1j * theta)
    return z


def _w_weights(u: np.ndarray, with_t: bool) -> np.ndarray:
    """Uniform simplex weights from exponential spacings, floored away from 0."""
    ncols = 4 if with_t else 3
    e = -np.log(u[:, :ncols])
    w = e / e.sum(axis=1, keepdims=True)
    w = np.maximum(w, W_SAMPLE_FLOOR)
    w /= w.sum(axis=1, keepdims=True)
    if not with_t:
        w = np.concatenate([np.zeros((len(w), 1)), w], axis=1)
    return w


def sample_family(spec: SampleSpec) -> list:
    """Deterministic parameter records for ``spec``; see ``SampleSpec``.

    The same (family, count, seed) always yields the same sequence, and the
    sequence for count n is a prefix of the one for any larger count.
    """
    fam = FamilyTag(spec.family)
    u = _sample_uniforms(spec.seed, spec.count)
    zeros = np.zeros(spec.count)
    if fam in (FamilyTag.W_CLASS, FamilyTag.W_CLASS_MES):
        w = _w_weights(u, with_t=fam is FamilyTag.W_CLASS)
        return [WParams(*row) for row in w]

    g1 = _uniform(u[:, 0], G_SAMPLE_LO, G_SAMPLE_HI)
    g2 = _uniform(u[:, 1], G_SAMPLE_LO, G_SAMPLE_HI)
    g3 = _uniform(u[:, 2], G_SAMPLE_LO, G_SAMPLE_HI)
    r = _uniform(u[:, 3], R_SAMPLE_LO, R_SAMPLE_HI)
    if fam is FamilyTag.GHZ_ALL_ZERO:
        cols = (zeros, zeros, zeros, r.astype(complex))
    elif fam is FamilyTag.GHZ_ONE_NONZERO:
        cols = (g1, zeros, zeros, r.astype(complex))
    elif fam is FamilyTag.GHZ_TWO_NONZERO:
        cols = (g1, g2, zeros, r.astype(complex))
    elif fam is FamilyTag.GHZ_GENERIC:
        cols = (g1, g2, g3, _generic_z(u[:, 3], u[:, 4]))
    elif fam is FamilyTag.GHZ_MES_NONZERO:
        cols = (g1, g2, g3, np.ones(spec.count, dtype=complex))
    elif fam is FamilyTag.GHZ_MES_ALL_ZERO:
        cols = (zeros, zeros, zeros, np.ones(spec.count, dtype=complex))
    else:
        raise ValueError(f"unsupported family {fam}")
    return [GhzParams(a, b, c, d) for a, b, c, d in zip(*cols)]


def param_coordinates(p) -> dict[str, float]:
    """Coordinate columns for serialization; unused fields are absent."""
    if isinstance(p, GhzParams):
        return {"g1": p.g1, "g2": p.g2, "g3": p.g3,
                "z_re": p.z.real, "z_im": p.z.imag}
    return {"t": p.t, "x": p.x, "y": p.y, "z": p.z}
