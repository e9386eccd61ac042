"""Static figures from census statistics CSVs."""

__version__ = "0.1.0"

from .figures import FAMILIES, FigureError, FigureSpec, render, render_all

__all__ = ["FAMILIES", "FigureError", "FigureSpec", "render", "render_all"]
