"""Monogamy scores, parameter-grid region scans and boundary root-finding.

The first score compares squared source entanglement against the sum of
squared entanglements of formation of the three reduced pairs; the second
does the same with accessible entanglement.  A score >= -1e-12 counts as
satisfying the corresponding inequality.

Pair entanglements always come from the state-vector pipeline (build the
state, reduce, take the spin-flip concurrence); the closed forms are
evaluated alongside as a mandatory cross-check and any componentwise
discrepancy above 1e-9 raises.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import bisect

from . import measures
from .operational import phase_volume_factor
from .states import (
    FamilyTag,
    G_ZERO_TOL,
    GhzParams,
    SampleSpec,
    build_ghz_amplitudes,
    build_w_amplitudes,
    classify,
    sample_family,
)

VERDICT_TOL = 1e-12
ORACLE_MATCH_TOL = 1e-9

# Grid endpoints: the open parameter bounds g < 1/2 and 0 < r < 1 are
# realized as closed grids pulled in by 1e-4; unit-radius presets are
# separate cases because the closed forms are piecewise at r = 1.
GRID_MARGIN = 1e-4
G_GRID = (GRID_MARGIN, 0.5 - GRID_MARGIN)
R_GRID = (GRID_MARGIN, 1.0 - GRID_MARGIN)


@dataclass(frozen=True, slots=True)
class MeasureRecord:
    """Every computed quantity for one parameter record."""

    params: object
    family: FamilyTag
    c12: float
    c13: float
    c23: float
    e12: float
    e13: float
    e23: float
    tau: float
    c3: float
    e_s: float
    e_a: float
    m1: float
    m2: float

    @property
    def verdict1(self) -> str:
        return verdict(self.m1)

    @property
    def verdict2(self) -> str:
        return verdict(self.m2)


def verdict(score: float) -> str:
    """Satisfied/violated classification of a monogamy score."""
    return "satisfied" if score >= -VERDICT_TOL else "violated"


def _ghz_operational_columns(g1, g2, g3, z):
    """Vectorized source/accessible entanglement for GHZ coordinate arrays."""
    r = np.abs(z)
    nz = np.stack([g1, g2, g3], axis=0) >= G_ZERO_TOL
    count = nz.sum(axis=0)
    pm1 = (np.abs(z - 1.0) < 1e-12) | (np.abs(z + 1.0) < 1e-12)
    r1 = np.abs(r - 1.0) < 1e-12
    gsort = np.sort(np.stack([g1, g2, g3], axis=-1), axis=-1)
    ga, gb = gsort[..., 2], gsort[..., 1]  # two largest
    fz = 2.0 * np.abs((z * z).real) / (1.0 + r ** 4)

    es = np.empty_like(r)
    ea = np.empty_like(r)

    m = count == 0
    es[m] = np.where(pm1[m], 1.0, r[m])
    ea[m] = np.where(pm1[m], 1.0, r[m])

    m = count == 1
    es[m] = np.where(r1[m], 1.0 - 2.0 * ga[m], 1.0 - 2.0 * ga[m] * (1.0 - r[m]))
    ea[m] = np.where(r1[m], 1.0 - 2.0 * ga[m], 2.0 * (0.5 - ga[m]) * r[m])

    m = count == 2
    es[m] = np.where(r1[m], 1.0 - 4.0 * ga[m] * gb[m],
                     1.0 - 4.0 * ga[m] * gb[m] * (1.0 - r[m]))
    ea[m] = np.where(r1[m], 4.0 * (0.5 - ga[m]) * (0.5 - gb[m]),
                     4.0 * (0.5 - ga[m]) * (0.5 - gb[m]) * r[m])

    m = count == 3
    es[m] = np.where(pm1[m], 1.0,
                     1.0 - 8.0 * g1[m] * g2[m] * g3[m] * phase_volume_factor(fz[m]))
    ea[m] = (0.5 - g1[m]) * (0.5 - g2[m]) * (0.5 - g3[m])
    return es, ea


def _columns_from_state(psi, closed):
    """Shared part of the measure pipeline: oracle concurrences and friends."""
    oracle = [measures.pair_concurrence_from_state(psi, p) for p in measures.PAIRS]
    dev = max(float(np.max(np.abs(o - c))) for o, c in zip(oracle, closed))
    if dev > ORACLE_MATCH_TOL:
        raise ValueError(
            f"closed-form vs state-vector concurrence mismatch: {dev:.3e}"
        )
    e = [measures.eof_batch(c) for c in oracle]
    tau = measures.tangle_batch(psi)
    c3 = measures.generalized_concurrence_batch(psi)
    return oracle, e, tau, c3


def _measure_columns_ghz(g1, g2, g3, z) -> dict[str, np.ndarray]:
    psi = build_ghz_amplitudes(g1, g2, g3, z)
    closed = measures.ghz_closed_form_batch(g1, g2, g3, z)
    oracle, e, tau, c3 = _columns_from_state(psi, closed)
    es, ea = _ghz_operational_columns(g1, g2, g3, z)
    m1 = es * es - e[0] ** 2 - e[1] ** 2 - e[2] ** 2
    m2 = ea * ea - e[0] ** 2 - e[1] ** 2 - e[2] ** 2
    return {
        "g1": g1, "g2": g2, "g3": g3, "z_re": z.real, "z_im": z.imag,
        "c12": oracle[0], "c13": oracle[1], "c23": oracle[2],
        "e12": e[0], "e13": e[1], "e23": e[2],
        "tau": tau, "c3": c3, "e_s": es, "e_a": ea, "m1": m1, "m2": m2,
    }


def _measure_columns_w(t, x, y, z) -> dict[str, np.ndarray]:
    psi = build_w_amplitudes(t, x, y, z)
    closed = measures.w_closed_form_batch(x, y, z)
    oracle, e, tau, c3 = _columns_from_state(psi, closed)
    es = 1.0 - t ** 3
    ea = 27.0 * x * y * z
    m1 = es * es - e[0] ** 2 - e[1] ** 2 - e[2] ** 2
    m2 = ea * ea - e[0] ** 2 - e[1] ** 2 - e[2] ** 2
    return {
        "t": t, "x": x, "y": y, "z": z,
        "c12": oracle[0], "c13": oracle[1], "c23": oracle[2],
        "e12": e[0], "e13": e[1], "e23": e[2],
        "tau": tau, "c3": c3, "e_s": es, "e_a": ea, "m1": m1, "m2": m2,
    }


def measure_columns(params: list) -> dict[str, np.ndarray]:
    """Vectorized measure pipeline over a homogeneous parameter list."""
    if isinstance(params[0], GhzParams):
        arrays = [np.array([getattr(p, f) for p in params]) for f in ("g1", "g2", "g3")]
        z = np.array([complex(p.z) for p in params])
        return _measure_columns_ghz(*arrays, z)
    arrays = [np.array([getattr(p, f) for p in params]) for f in ("t", "x", "y", "z")]
    return _measure_columns_w(*arrays)


_RECORD_FIELDS = ("c12", "c13", "c23", "e12", "e13", "e23",
                  "tau", "c3", "e_s", "e_a", "m1", "m2")


def _record_at(params, cols, i) -> MeasureRecord:
    return MeasureRecord(params=params, family=classify(params),
                         **{f: float(cols[f][i]) for f in _RECORD_FIELDS})


def evaluate(p) -> MeasureRecord:
    """Full measure record for a single parameter record."""
    cols = measure_columns([p])
    return _record_at(p, cols, 0)


@dataclass
class BatchResult:
    """Columns, summary statistics and per-sample records of a sweep."""

    spec: SampleSpec
    params: list
    columns: dict[str, np.ndarray]
    summary: dict = field(default_factory=dict)

    def records(self) -> list[MeasureRecord]:
        return [_record_at(p, self.columns, i) for i, p in enumerate(self.params)]


def _summarize(columns: dict[str, np.ndarray]) -> dict:
    m1, m2 = columns["m1"], columns["m2"]
    return {
        "n": int(len(m1)),
        "min_m1": float(m1.min()), "max_m1": float(m1.max()),
        "min_m2": float(m2.min()), "max_m2": float(m2.max()),
        "frac_m1_violated": float(np.mean(m1 < -VERDICT_TOL)),
        "frac_m2_violated": float(np.mean(m2 < -VERDICT_TOL)),
        "min_tau": float(columns["tau"].min()),
        "max_tau": float(columns["tau"].max()),
    }


def batch_evaluate(spec: SampleSpec) -> BatchResult:
    """Seeded random sweep of one family with summary statistics attached."""
    params = sample_family(spec)
    cols = measure_columns(params)
    result = BatchResult(spec=spec, params=params, columns=cols)
    result.summary = {"family": FamilyTag(spec.family).value,
                      "seed": spec.seed, **_summarize(cols)}
    return result


@dataclass(frozen=True, slots=True)
class AxisSpec:
    """One scan axis: either a gridded range or a fixed list of slices."""

    name: str
    lo: float = 0.0
    hi: float = 0.0
    values: tuple = ()

    def grid(self, resolution: int) -> np.ndarray:
        if self.values:
            return np.asarray(self.values, dtype=float)
        return np.linspace(self.lo, self.hi, resolution)


@dataclass(frozen=True, slots=True)
class ScanCase:
    """A named preset: scan axes plus the map from coordinates to parameters."""

    case_id: str
    axes: tuple
    build: object  # callable coords -> (g1, g2, g3, z) arrays


def _ghz_case(case_id, axes, build):
    return ScanCase(case_id=case_id, axes=axes, build=build)


_D3_Y_HI = (1.0 - GRID_MARGIN) / np.sqrt(2.0)

SCAN_CASES: dict[str, ScanCase] = {
    "case1": _ghz_case(
        "case1", (AxisSpec("r", *R_GRID),),
        lambda c: (0.0 * c["r"], 0.0 * c["r"], 0.0 * c["r"], c["r"].astype(complex))),
    "case2": _ghz_case(
        "case2", (AxisSpec("g1", *G_GRID), AxisSpec("r", *R_GRID)),
        lambda c: (c["g1"], 0.0 * c["g1"], 0.0 * c["g1"], c["r"].astype(complex))),
    "case2-r1": _ghz_case(
        "case2-r1", (AxisSpec("g1", *G_GRID),),
        lambda c: (c["g1"], 0.0 * c["g1"], 0.0 * c["g1"],
                   np.ones_like(c["g1"], dtype=complex))),
    "case3": _ghz_case(
        "case3", (AxisSpec("g1", *G_GRID), AxisSpec("g2", *G_GRID),
                  AxisSpec("r", values=(0.25, 0.5, 0.75))),
        lambda c: (c["g1"], c["g2"], 0.0 * c["g1"], c["r"].astype(complex))),
    "case3-r1": _ghz_case(
        "case3-r1", (AxisSpec("g1", *G_GRID), AxisSpec("g2", *G_GRID)),
        lambda c: (c["g1"], c["g2"], 0.0 * c["g1"],
                   np.ones_like(c["g1"], dtype=complex))),
    "appendixB": _ghz_case(
        "appendixB", (AxisSpec("g1", *G_GRID), AxisSpec("r", *R_GRID)),
        lambda c: (c["g1"], c["g1"], 0.0 * c["g1"], c["r"].astype(complex))),
    "appendixD1": _ghz_case(
        "appendixD1", (AxisSpec("g1", *G_GRID), AxisSpec("y", *R_GRID)),
        lambda c: (c["g1"], c["g1"], c["g1"], 1j * c["y"])),
    "appendixD2": _ghz_case(
        "appendixD2", (AxisSpec("g1", *G_GRID), AxisSpec("y", *R_GRID)),
        lambda c: (c["g1"], c["g1"], c["g1"], c["y"].astype(complex))),
    "appendixD3": _ghz_case(
        "appendixD3", (AxisSpec("g1", *G_GRID), AxisSpec("y", GRID_MARGIN, _D3_Y_HI)),
        lambda c: (c["g1"], c["g1"], c["g1"], (1.0 + 1.0j) * c["y"])),
    "appendixE": _ghz_case(
        "appendixE", (AxisSpec("g1", *G_GRID),),
        lambda c: (c["g1"], c["g1"], c["g1"], np.ones_like(c["g1"], dtype=complex))),
}


@dataclass
class ScanResult:
    """Rectangular grid evaluation with satisfied/violated verdicts."""

    case_id: str
    resolution: int
    axis_names: tuple
    coords: dict[str, np.ndarray]
    columns: dict[str, np.ndarray]

    @property
    def n_cells(self) -> int:
        return len(self.columns["m1"])

    @property
    def verdict1(self) -> np.ndarray:
        return np.where(self.columns["m1"] >= -VERDICT_TOL, "satisfied", "violated")

    @property
    def verdict2(self) -> np.ndarray:
        return np.where(self.columns["m2"] >= -VERDICT_TOL, "satisfied", "violated")

    def cells(self):
        v1, v2 = self.verdict1, self.verdict2
        m1, m2 = self.columns["m1"], self.columns["m2"]
        coord_cols = [self.coords[n] for n in self.axis_names]
        for i in range(self.n_cells):
            yield (tuple(col[i] for col in coord_cols),
                   float(m1[i]), float(m2[i]), str(v1[i]), str(v2[i]))


def scan_region(case_id: str, grid: int = 201) -> ScanResult:
    """Evaluate a preset parameter grid; cells come out in row-major order."""
    if case_id not in SCAN_CASES:
        raise ValueError(f"unknown case {case_id!r}; choose from {sorted(SCAN_CASES)}")
    if grid < 2:
        raise ValueError("grid must be >= 2")
    case = SCAN_CASES[case_id]
    grids = [ax.grid(grid) for ax in case.axes]
    mesh = np.meshgrid(*grids, indexing="ij")
    coords = {ax.name: m.ravel() for ax, m in zip(case.axes, mesh)}
    g1, g2, g3, z = case.build(coords)
    columns = _measure_columns_ghz(g1, g2, g3, z)
    return ScanResult(case_id=case_id, resolution=grid,
                      axis_names=tuple(ax.name for ax in case.axes),
                      coords=coords, columns=columns)


def find_boundary(case_id: str, fixed: dict | None = None, score: str = "m1") -> float:
    """Bisection root of a monogamy score along a preset's free axis.

    ``fixed`` pins every axis except one; the remaining axis is scanned for a
    sign change, which is then polished to an interval below 1e-6.  Raises if
    the score does not change sign along the axis.
    """
    if case_id not in SCAN_CASES:
        raise ValueError(f"unknown case {case_id!r}; choose from {sorted(SCAN_CASES)}")
    if score not in ("m1", "m2"):
        raise ValueError("score must be 'm1' or 'm2'")
    fixed = dict(fixed or {})
    case = SCAN_CASES[case_id]
    free = [ax for ax in case.axes if ax.name not in fixed]
    if len(free) != 1:
        raise ValueError(
            f"case {case_id} needs exactly one free axis; fixed={sorted(fixed)}"
        )
    axis = free[0]
    if axis.values:
        raise ValueError(f"axis {axis.name} of case {case_id} is a fixed slice list")

    def f(x: float) -> float:
        coords = {ax.name: np.array([x if ax.name == axis.name else fixed[ax.name]],
                                    dtype=float)
                  for ax in case.axes}
        g1, g2, g3, z = case.build(coords)
        cols = _measure_columns_ghz(g1, g2, g3, z)
        return float(cols[score][0])

    xs = np.linspace(axis.lo, axis.hi, 129)
    vals = [f(x) for x in xs]
    for i in range(len(xs) - 1):
        if vals[i] == 0.0:
            return float(xs[i])
        if vals[i] * vals[i + 1] < 0.0:
            return float(bisect(f, xs[i], xs[i + 1], xtol=1e-6))
    if vals[-1] == 0.0:
        return float(xs[-1])
    raise ValueError(f"no sign change of {score} along {axis.name} in case {case_id}")
