"""Operational measures: source and accessible entanglement per family,
deterministic local-conversion predicates between GHZ-class coordinate
tuples, and Monte-Carlo validation of the closed-form conversion volumes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import (
    FamilyTag,
    G_ZERO_TOL,
    GhzParams,
    WParams,
    classify,
)

EQUALITY_TOL = 1e-9
DEGENERATE_TOL = 1e-12
PHASE_TOL = 1e-9


def phase_alignment(z: complex) -> float:
    """2 |Re(z^2)| / (1 + |z|^4): how strongly z^2 aligns with the real axis.

    Equals 1 at z = +-1 and 0 whenever z^2 is purely imaginary.
    """
    az = abs(z)
    if az == 0.0:
        raise ValueError("z must be nonzero")
    return 2.0 * abs((z * z).real) / (1.0 + az ** 4)


def phase_volume_factor(f) -> float:
    """The decreasing factor phi(f) = 1 + f (ln f (1 - ln(f)/2) - 1) on [0, 1].

    phi(0) = 1 (the f*ln(f) terms vanish in the limit) and phi(1) = 0; its
    derivative is -(ln f)^2 / 2, which keeps the generic source entanglement
    inside [1 - 8 g1 g2 g3, 1].
    """
    f = np.asarray(f, dtype=float)
    if np.any(f < -1e-12) or np.any(f > 1.0 + 1e-12):
        raise ValueError("alignment factor out of [0, 1]")
    f = np.clip(f, 0.0, 1.0)
    out = np.ones_like(f)
    pos = f > 0.0
    lf = np.log(f[pos])
    out[pos] = 1.0 + f[pos] * (lf * (1.0 - 0.5 * lf) - 1.0)
    return float(out) if out.ndim == 0 else out


def _nonzero_gs(p: GhzParams) -> list[float]:
    return [g for g in p.g if g >= G_ZERO_TOL]


def _is_r_one(p: GhzParams) -> bool:
    return abs(abs(p.z) - 1.0) < 1e-12


def source_entanglement(p) -> float:
    """Source entanglement of a parameter record, routed by family."""
    fam = classify(p)
    if isinstance(p, WParams):
        return 1.0 - p.t ** 3
    r = abs(p.z)
    if fam is FamilyTag.GHZ_MES_ALL_ZERO or fam is FamilyTag.GHZ_MES_NONZERO:
        return 1.0
    if fam is FamilyTag.GHZ_ALL_ZERO:
        return r
    if fam is FamilyTag.GHZ_ONE_NONZERO:
        (g,) = _nonzero_gs(p)
        return 1.0 - 2.0 * g if _is_r_one(p) else 1.0 - 2.0 * g * (1.0 - r)
    if fam is FamilyTag.GHZ_TWO_NONZERO:
        ga, gb = _nonzero_gs(p)
        return 1.0 - 4.0 * ga * gb if _is_r_one(p) else 1.0 - 4.0 * ga * gb * (1.0 - r)
    # generic
    return 1.0 - 8.0 * p.g1 * p.g2 * p.g3 * phase_volume_factor(phase_alignment(p.z))


def accessible_entanglement(p) -> float:
    """Accessible entanglement of a parameter record, routed by family."""
    fam = classify(p)
    if isinstance(p, WParams):
        return 27.0 * p.x * p.y * p.z
    r = abs(p.z)
    if fam is FamilyTag.GHZ_MES_ALL_ZERO:
        return 1.0
    if fam is FamilyTag.GHZ_ALL_ZERO:
        return r
    if fam is FamilyTag.GHZ_ONE_NONZERO:
        (g,) = _nonzero_gs(p)
        return 1.0 - 2.0 * g if _is_r_one(p) else 2.0 * (0.5 - g) * r
    if fam is FamilyTag.GHZ_TWO_NONZERO:
        ga, gb = _nonzero_gs(p)
        scale = 1.0 if _is_r_one(p) else r
        return 4.0 * (0.5 - ga) * (0.5 - gb) * scale
    # generic and the unit-circle family with all coefficients nonzero
    return (0.5 - p.g1) * (0.5 - p.g2) * (0.5 - p.g3)


def _ratio_factor(num: float, den: float):
    """num/den, None when 0/0 (degenerate), math.inf when only den vanishes."""
    if abs(den) <= DEGENERATE_TOL:
        if abs(num) <= DEGENERATE_TOL:
            return None
        return math.inf
    return num / den


def _convertible_raw(g: tuple[float, float, float], z: complex,
                     h: tuple[float, float, float], zp: complex) -> bool:
    """Deterministic local-conversion test between GHZ coordinate tuples.

    Dispatch on the zero patterns of the coefficient vectors:

    * target has a zero coefficient: require componentwise g <= h and
      |z| >= |z'|;
    * source has a zero coefficient but the target has none: require
      g <= h, |z| = 1 and the phase of z' to be pi/4 or 3*pi/4 (mod pi);
    * both all-nonzero: require g <= h and the product ratio
      g1 g2 g3 / (h1 h2 h3) to match both phase ratios
      [Re(z'^2)/(1+|z'|^4)] / [Re(z^2)/(1+|z|^4)] and
      [Im(z'^2)/(|z'|^4-1)] / [Im(z^2)/(|z|^4-1)], each within 1e-9.
      A phase ratio whose numerator and denominator both vanish is
      indeterminate and imposes no constraint; a ratio that diverges on one
      side only can never be matched.
    """
    if not all(gi <= hi + DEGENERATE_TOL for gi, hi in zip(g, h)):
        return False
    src_zero = any(gi < G_ZERO_TOL for gi in g)
    dst_zero = any(hi < G_ZERO_TOL for hi in h)
    if dst_zero:
        return abs(z) >= abs(zp) - DEGENERATE_TOL
    if src_zero:
        if abs(abs(z) - 1.0) > PHASE_TOL:
            return False
        phase = math.atan2(zp.imag, zp.real) % math.pi
        return (abs(phase - math.pi / 4.0) <= PHASE_TOL
                or abs(phase - 3.0 * math.pi / 4.0) <= PHASE_TOL)

    lhs = (g[0] * g[1] * g[2]) / (h[0] * h[1] * h[2])
    z2, zp2 = z * z, zp * zp
    az4, azp4 = abs(z) ** 4, abs(zp) ** 4
    real_ratio = _ratio_factor(zp2.real * (1.0 + az4), (1.0 + azp4) * z2.real)
    imag_ratio = _ratio_factor(zp2.imag * (az4 - 1.0), (azp4 - 1.0) * z2.imag)
    for ratio in (real_ratio, imag_ratio):
        if ratio is None:
            continue
        if not math.isfinite(ratio) or abs(lhs - ratio) > EQUALITY_TOL:
            return False
    return True


def locc_convertible(src: GhzParams, dst: GhzParams) -> bool:
    """Whether the source coordinates deterministically convert to the target."""
    return _convertible_raw(src.g, complex(src.z), dst.g, complex(dst.z))


@dataclass(frozen=True, slots=True)
class VolumeEstimate:
    """Monte-Carlo volume with its standard error and sample count."""

    mean: float
    std_error: float
    n: int


def _estimate(indicator_fraction: float, box: float, n: int) -> VolumeEstimate:
    p = indicator_fraction
    var = box * box * p * (1.0 - p) * (n / (n - 1.0)) if n > 1 else 0.0
    return VolumeEstimate(mean=box * p, std_error=math.sqrt(var / n), n=n)


def _nonzero_positions(p: GhzParams) -> list[int]:
    return [i for i, g in enumerate(p.g) if g >= G_ZERO_TOL]


def _require_volume_family(p: GhzParams) -> list[int]:
    fam = classify(p)
    if fam not in (FamilyTag.GHZ_ALL_ZERO, FamilyTag.GHZ_MES_ALL_ZERO,
                   FamilyTag.GHZ_ONE_NONZERO, FamilyTag.GHZ_TWO_NONZERO):
        raise ValueError(f"volume estimation unsupported for family {fam.value}")
    return _nonzero_positions(p)


def estimate_source_volume(p: GhzParams, n: int, seed: int) -> VolumeEstimate:
    """Monte-Carlo volume of coordinates that convert *into* ``p``.

    Samples uniformly over the box of p's own stratum (the free coefficients
    in [0, 1/2) and the radial coordinate in (0, 1]) and counts candidates
    accepted by the conversion predicate, scaled by the box volume.
    """
    free = _require_volume_family(p)
    rng = np.random.Generator(np.random.Philox(key=np.uint64(seed)))
    u = rng.random((n, len(free) + 1))
    box = 0.5 ** len(free)
    rs = 1.0 - u[:, 0]  # in (0, 1]
    hs = 0.5 * u[:, 1:]
    target_g, target_z = p.g, complex(p.z)
    hits = 0
    cand = [0.0, 0.0, 0.0]
    for i in range(n):
        for j, pos in enumerate(free):
            cand[pos] = hs[i, j]
        if _convertible_raw((cand[0], cand[1], cand[2]), complex(rs[i]),
                            target_g, target_z):
            hits += 1
        for pos in free:
            cand[pos] = 0.0
    return _estimate(hits / n, box, n)


def estimate_accessible_volume(p: GhzParams, n: int, seed: int) -> VolumeEstimate:
    """Monte-Carlo volume of coordinates reachable *from* ``p``.

    Targets are sampled over the union of the three planes with one zero
    coefficient (the strata where the closed forms live): a plane choice,
    two free coefficients in [0, 1/2), and a radial coordinate in (0, 1],
    giving total box measure 3/4.
    """
    _require_volume_family(p)
    rng = np.random.Generator(np.random.Philox(key=np.uint64(seed)))
    u = rng.random((n, 4))
    planes = np.minimum((3.0 * u[:, 0]).astype(int), 2)
    rs = 1.0 - u[:, 1]
    hs = 0.5 * u[:, 2:]
    box = 3.0 * 0.25
    source_g, source_z = p.g, complex(p.z)
    hits = 0
    for i in range(n):
        cand = [0.0, 0.0, 0.0]
        j = 0
        for pos in range(3):
            if pos != planes[i]:
                cand[pos] = hs[i, j]
                j += 1
        if _convertible_raw(source_g, source_z,
                            (cand[0], cand[1], cand[2]), complex(rs[i])):
            hits += 1
    return _estimate(hits / n, box, n)
