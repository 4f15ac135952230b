"""Offline renderer turning monogamy CSV outputs into figures.

The renderer is a pure view: it never recomputes any measure.  Region maps
copy the CSV verdict columns cell for cell (satisfied -> gray, violated ->
yellow); surfaces and curves plot the stored scores against the stored
coordinates, with a semi-transparent blue reference plane or line at zero.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.image import imsave  # noqa: E402

GRAY = (0x80, 0x80, 0x80)      # satisfied
YELLOW = (0xFF, 0xD7, 0x00)    # violated
ZERO_PLANE_COLOR = (0.2, 0.4, 1.0, 0.35)

FIGSIZE = (6.0, 4.5)
DPI = 100

# figure id -> (kind, coordinate columns, forced score or None)
FIGURES = {
    "surface-case2-m1": ("surface", ("g1", "z_re"), "m1"),
    "surface-case2-m2": ("surface", ("g1", "z_re"), "m2"),
    "surface-appendixB": ("surface", ("g1", "z_re"), None),
    "surface-appendixD1": ("surface", ("g1", "z_im"), None),
    "surface-appendixD2": ("surface", ("g1", "z_re"), None),
    "surface-appendixD3": ("surface", ("g1", "z_im"), None),
    "region-case2": ("region", ("g1", "z_re"), None),
    "region-case3-r1": ("region", ("g1", "g2"), None),
    "curve-case2-r1": ("curve", ("g1",), None),
    "curve-appendixE": ("curve", ("g1",), None),
    "scatter-family": ("scatter", (), None),
}

_AXIS_LABELS = {"g1": "g1", "g2": "g2", "z_re": "r", "z_im": "y"}


@dataclass(frozen=True)
class FigureSpec:
    """What to render: a known figure id, an input CSV and an output image."""

    figure_id: str
    input_csv: str
    out_path: str
    score: str = "m1"

    def __post_init__(self):
        if self.figure_id not in FIGURES:
            raise ValueError(
                f"unknown figure id {self.figure_id!r}; choose from {sorted(FIGURES)}")
        if self.score not in ("m1", "m2"):
            raise ValueError("score must be 'm1' or 'm2'")
        if not self.out_path.endswith((".png", ".svg")):
            raise ValueError("output must be a .png or .svg file")

    @property
    def effective_score(self) -> str:
        forced = FIGURES[self.figure_id][2]
        return forced or self.score


@dataclass
class RenderResult:
    """What was drawn: enough to audit the image against the CSV."""

    out_path: str
    kind: str
    x: np.ndarray = None
    y: np.ndarray = None
    values: np.ndarray = None
    color_grid: np.ndarray = None  # region maps: (ny, nx, 3) uint8


def read_csv_columns(path: str, required: tuple[str, ...]) -> dict[str, list[str]]:
    """Load the CSV as string columns, enforcing the required ones exist."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty CSV") from None
        rows = list(reader)
    missing = [c for c in required if c not in header]
    if missing:
        raise ValueError(f"{path}: missing columns {missing}")
    if not rows:
        raise ValueError(f"{path}: no data rows")
    idx = {c: header.index(c) for c in header}
    return {c: [row[idx[c]] for row in rows] for c in header}


def _floats(col: list[str]) -> np.ndarray:
    return np.array([float(v) for v in col])


def _grid_axes(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    xs, ys = np.unique(x), np.unique(y)
    if len(xs) * len(ys) != len(x):
        raise ValueError("cells do not form a rectangular grid")
    return xs, ys


def region_color_grid(x, y, verdicts) -> np.ndarray:
    """(ny, nx, 3) uint8 image: one pixel per cell, row 0 at the top (max y)."""
    xs, ys = _grid_axes(x, y)
    nx, ny = len(xs), len(ys)
    ix = np.searchsorted(xs, x)
    iy = np.searchsorted(ys, y)
    grid = np.zeros((ny, nx, 3), dtype=np.uint8)
    colors = np.where(np.asarray(verdicts)[:, None] == "satisfied",
                      np.array(GRAY, dtype=np.uint8),
                      np.array(YELLOW, dtype=np.uint8))
    grid[ny - 1 - iy, ix] = colors
    return grid


def _render_region(spec: FigureSpec, cols, names, score) -> RenderResult:
    verdict_col = "verdict1" if score == "m1" else "verdict2"
    x, y = _floats(cols[names[0]]), _floats(cols[names[1]])
    grid = region_color_grid(x, y, cols[verdict_col])
    if spec.out_path.endswith(".png"):
        imsave(spec.out_path, grid)
    else:
        fig, ax = plt.subplots(figsize=FIGSIZE, dpi=DPI)
        ax.imshow(grid, extent=(x.min(), x.max(), y.min(), y.max()),
                  aspect="auto", interpolation="nearest")
        ax.set_xlabel(_AXIS_LABELS.get(names[0], names[0]))
        ax.set_ylabel(_AXIS_LABELS.get(names[1], names[1]))
        fig.savefig(spec.out_path)
        plt.close(fig)
    return RenderResult(out_path=spec.out_path, kind="region",
                        x=x, y=y, color_grid=grid)


def _render_surface(spec: FigureSpec, cols, names, score) -> RenderResult:
    x, y = _floats(cols[names[0]]), _floats(cols[names[1]])
    v = _floats(cols[score])
    xs, ys = _grid_axes(x, y)
    zz = np.full((len(xs), len(ys)), np.nan)
    zz[np.searchsorted(xs, x), np.searchsorted(ys, y)] = v
    xx, yy = np.meshgrid(xs, ys, indexing="ij")
    fig = plt.figure(figsize=FIGSIZE, dpi=DPI)
    ax = fig.add_subplot(projection="3d")
    ax.plot_surface(xx, yy, zz, color="tab:orange", linewidth=0, antialiased=False)
    ax.plot_surface(xx, yy, np.zeros_like(zz), color=ZERO_PLANE_COLOR,
                    linewidth=0, antialiased=False)
    ax.set_xlabel(_AXIS_LABELS.get(names[0], names[0]))
    ax.set_ylabel(_AXIS_LABELS.get(names[1], names[1]))
    ax.set_zlabel(score)
    fig.savefig(spec.out_path)
    plt.close(fig)
    return RenderResult(out_path=spec.out_path, kind="surface", x=x, y=y, values=v)


def _render_curve(spec: FigureSpec, cols, names, score) -> RenderResult:
    x = _floats(cols[names[0]])
    v = _floats(cols[score])
    order = np.argsort(x)
    x, v = x[order], v[order]
    fig, ax = plt.subplots(figsize=FIGSIZE, dpi=DPI)
    ax.plot(x, v, color="tab:orange")
    ax.axhline(0.0, color=ZERO_PLANE_COLOR)
    ax.set_xlabel(_AXIS_LABELS.get(names[0], names[0]))
    ax.set_ylabel(score)
    fig.savefig(spec.out_path)
    plt.close(fig)
    return RenderResult(out_path=spec.out_path, kind="curve", x=x, values=v)


def _render_scatter(spec: FigureSpec, cols, score) -> RenderResult:
    v = _floats(cols[score])
    idx = np.arange(len(v))
    fig, ax = plt.subplots(figsize=FIGSIZE, dpi=DPI)
    ax.scatter(idx, v, s=2, color="tab:blue")
    ax.axhline(0.0, color=ZERO_PLANE_COLOR)
    ax.set_xlabel("sample index")
    ax.set_ylabel(score)
    fig.savefig(spec.out_path)
    plt.close(fig)
    return RenderResult(out_path=spec.out_path, kind="scatter", x=idx, values=v)


def render(spec: FigureSpec) -> RenderResult:
    """Render one figure; returns the drawn data for auditing."""
    kind, coord_names, _ = FIGURES[spec.figure_id]
    score = spec.effective_score
    verdict_cols = (("verdict1" if score == "m1" else "verdict2"),) if kind == "region" else ()
    cols = read_csv_columns(spec.input_csv, coord_names + (score,) + verdict_cols)
    if kind == "region":
        return _render_region(spec, cols, coord_names, score)
    if kind == "surface":
        return _render_surface(spec, cols, coord_names, score)
    if kind == "curve":
        return _render_curve(spec, cols, coord_names, score)
    return _render_scatter(spec, cols, score)
