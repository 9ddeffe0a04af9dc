"""Figure catalog: what each sweep CSV is expected to carry and how it plots."""

from dataclasses import dataclass, field
import enum


class AxisScale(enum.Enum):
    LINEAR = "linear"
    LOG_Y = "log_y"
    DB_Y = "db_y"


@dataclass(frozen=True)
class FigureDef:
    """Rendering recipe for one figure id.

    kind selects the renderer: "power" (single dBm curve), "curves"
    (one interference curve per series), "compare" (exact vs closed form
    per series), "surface" (3D surface + heatmap of the coherence
    function), "rates" (rate/ideal-rate panel plus rate-loss panel).
    """

    kind: str
    x_label: str
    required: tuple
    series_label: str = ""
    y_label: str = ""


_FIGURES = {
    "fig1": FigureDef(
        kind="power",
        x_label="far-beam spatial angle",
        required=("swept_value", "interference_power_dbm"),
        y_label="interference power (dBm)",
    ),
    "fig2_surface": FigureDef(
        kind="surface",
        x_label="beta1",
        required=("beta1", "beta2", "f_closed"),
        y_label="beta2",
    ),
    "fig3a": FigureDef(
        kind="compare",
        x_label="number of antennas",
        required=("swept_value", "series_value", "f_exact", "f_closed"),
        series_label="r",
    ),
    "fig3b": FigureDef(
        kind="curves",
        x_label="number of antennas",
        required=("swept_value", "series_value", "f_closed"),
        series_label="r",
    ),
    "fig4a": FigureDef(
        kind="curves",
        x_label="far-beam spatial angle",
        required=("swept_value", "f_closed"),
    ),
    "fig4b": FigureDef(
        kind="curves",
        x_label="angle difference",
        required=("swept_value", "series_value", "f_closed"),
        series_label="r",
    ),
    "fig4c": FigureDef(
        kind="curves",
        x_label="near-user spatial angle",
        required=("swept_value", "series_value", "f_closed"),
        series_label="psi",
    ),
    "fig4d": FigureDef(
        kind="curves",
        x_label="near-user distance (m)",
        required=("swept_value", "series_value", "f_closed"),
        series_label="angle diff",
    ),
    "fig6a": FigureDef(
        kind="rates",
        x_label="number of antennas",
        required=("swept_value", "rate", "rate_ideal", "rate_loss"),
    ),
    "fig6b": FigureDef(
        kind="rates",
        x_label="far-beam spatial angle",
        required=("swept_value", "rate", "rate_ideal", "rate_loss"),
    ),
    "fig6c": FigureDef(
        kind="rates",
        x_label="near-user spatial angle",
        required=("swept_value", "rate", "rate_ideal", "rate_loss"),
    ),
    "fig6d": FigureDef(
        kind="rates",
        x_label="near-user distance (m)",
        required=("swept_value", "rate", "rate_ideal", "rate_loss"),
    ),
}


def known_figures() -> list:
    return sorted(_FIGURES)


def figure_def(figure_id: str) -> FigureDef:
    try:
        return _FIGURES[figure_id]
    except KeyError:
        raise ValueError(
            f"unknown figure id {figure_id!r} (known: {', '.join(known_figures())})"
        ) from None


@dataclass(frozen=True)
class FigureJob:
    """One rendering task: which CSV, which figure, where to write."""

    csv_path: str
    figure_id: str
    output_path: str
    axis_scale: AxisScale = AxisScale.LINEAR

    def definition(self) -> FigureDef:
        return figure_def(self.figure_id)
