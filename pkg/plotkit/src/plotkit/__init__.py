"""Batch rendering of mixedfield sweep CSVs into figure files."""

from .csvio import CsvContractError, MissingColumnError, read_columns
from .figures import AxisScale, FigureDef, FigureJob, figure_def, known_figures
from .render import RenderResult, render

__version__ = "0.1.0"
