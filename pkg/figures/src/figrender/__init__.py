"""Offline figure renderer for entanglement-monogamy CSV outputs."""

from .render import FIGURES, FigureSpec, RenderResult, region_color_grid, render

__version__ = "0.1.0"

__all__ = ["FIGURES", "FigureSpec", "RenderResult", "region_color_grid", "render"]
