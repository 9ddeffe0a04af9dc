"""Render sweep CSVs to figure files.

Validation (figure id, columns, data presence) happens before any file is
created, so a failing job never leaves a partial image behind. Output
format follows the output path suffix; vector formats are the default
choice in the CLI.
"""

from dataclasses import dataclass
import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np  # noqa: E402

from .csvio import read_columns, require_columns, split_by_series
from .figures import AxisScale, FigureJob


@dataclass(frozen=True)
class RenderResult:
    """What was drawn: enough to check reruns land on identical output."""

    output_path: str
    size_inches: tuple
    axes_kinds: tuple
    data_extents: tuple


def _scaled(values, scale: AxisScale):
    vals = np.array([math.nan if v is None else v for v in values], dtype=float)
    if scale is AxisScale.DB_Y:
        with np.errstate(divide="ignore"):
            return 10.0 * np.log10(vals)
    return vals


def _finite_extent(xs, ys):
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    keep = np.isfinite(x) & np.isfinite(y)
    if not np.any(keep):
        return (math.nan,) * 4
    return (float(x[keep].min()), float(x[keep].max()),
            float(y[keep].min()), float(y[keep].max()))


def _apply_y_scale(ax, scale: AxisScale):
    if scale is AxisScale.LOG_Y:
        ax.set_yscale("log")


def _render_power(ax, columns, define, scale):
    xs = columns["swept_value"]
    ys = _scaled(columns["interference_power_dbm"], AxisScale.LINEAR)
    ax.plot(xs, ys)
    ax.set_ylabel(define.y_label)
    return [_finite_extent(xs, ys)]


def _render_curves(ax, columns, define, scale):
    groups = split_by_series(columns, ("swept_value", "f_closed"))
    extents = []
    for key in sorted(groups, key=lambda k: (k is None, k)):
        xs = groups[key]["swept_value"]
        ys = _scaled(groups[key]["f_closed"], scale)
        label = None if key is None else f"{define.series_label} = {key:g}"
        ax.plot(xs, ys, label=label)
        extents.append(_finite_extent(xs, ys))
    if any(key is not None for key in groups):
        ax.legend()
    ax.set_ylabel("normalized interference")
    _apply_y_scale(ax, scale)
    return extents


def _render_compare(ax, columns, define, scale):
    groups = split_by_series(columns, ("swept_value", "f_exact", "f_closed"))
    extents = []
    for key in sorted(groups, key=lambda k: (k is None, k)):
        xs = groups[key]["swept_value"]
        tag = "" if key is None else f", {define.series_label} = {key:g}"
        exact = _scaled(groups[key]["f_exact"], scale)
        closed = _scaled(groups[key]["f_closed"], scale)
        ax.plot(xs, exact, linestyle="-", label=f"exact{tag}")
        ax.plot(xs, closed, linestyle="--", marker="o", markersize=3,
                label=f"closed form{tag}")
        extents.append(_finite_extent(xs, exact))
        extents.append(_finite_extent(xs, closed))
    ax.legend()
    ax.set_ylabel("normalized interference")
    _apply_y_scale(ax, scale)
    return extents


def _render_rates(fig, columns, define, scale):
    ax_rate, ax_loss = fig.subplots(1, 2)
    xs = columns["swept_value"]
    rate = _scaled(columns["rate"], scale)
    ideal = _scaled(columns["rate_ideal"], scale)
    loss = _scaled(columns["rate_loss"], scale)
    ax_rate.plot(xs, ideal, label="ideal rate")
    ax_rate.plot(xs, rate, label="achievable rate")
    ax_rate.set_xlabel(define.x_label)
    ax_rate.set_ylabel("rate (bps/Hz)")
    ax_rate.legend()
    ax_loss.plot(xs, loss, label="rate loss")
    if "rate_loss_bound" in columns and any(v is not None
                                            for v in columns["rate_loss_bound"]):
        bound = _scaled(columns["rate_loss_bound"], scale)
        ax_loss.plot(xs, bound, linestyle="--", label="upper bound")
    ax_loss.set_xlabel(define.x_label)
    ax_loss.set_ylabel("rate loss (bps/Hz)")
    ax_loss.legend()
    _apply_y_scale(ax_rate, scale)
    _apply_y_scale(ax_loss, scale)
    return [_finite_extent(xs, rate), _finite_extent(xs, loss)]


def _render_surface(fig, columns, define):
    b1 = np.array(columns["beta1"], dtype=float)
    b2 = np.array(columns["beta2"], dtype=float)
    g = np.array(columns["f_closed"], dtype=float)
    b1_axis = np.unique(b1)
    b2_axis = np.unique(b2)
    if len(b1_axis) * len(b2_axis) != len(g):
        raise ValueError("surface CSV is not a full beta1 x beta2 grid")
    grid = np.full((len(b2_axis), len(b1_axis)), np.nan)
    b1_idx = {v: i for i, v in enumerate(b1_axis)}
    b2_idx = {v: i for i, v in enumerate(b2_axis)}
    for x, y, val in zip(b1, b2, g):
        grid[b2_idx[y], b1_idx[x]] = val

    ax3d = fig.add_subplot(1, 2, 1, projection="3d")
    mesh_b1, mesh_b2 = np.meshgrid(b1_axis, b2_axis)
    ax3d.plot_surface(mesh_b1, mesh_b2, grid, cmap="viridis",
                      linewidth=0, antialiased=False)
    ax3d.set_xlabel(define.x_label)
    ax3d.set_ylabel(define.y_label)

    ax2d = fig.add_subplot(1, 2, 2)
    pcm = ax2d.pcolormesh(mesh_b1, mesh_b2, grid, cmap="viridis",
                          shading="nearest")
    fig.colorbar(pcm, ax=ax2d)
    ax2d.set_xlabel(define.x_label)
    ax2d.set_ylabel(define.y_label)
    extent = (float(b1_axis.min()), float(b1_axis.max()),
              float(b2_axis.min()), float(b2_axis.max()))
    return [extent, extent]


def render(job: FigureJob) -> RenderResult:
    """Validate the CSV against the figure contract and write the image."""
    define = job.definition()
    columns = read_columns(job.csv_path)
    require_columns(columns, define.required, job.csv_path)

    fig = plt.figure(figsize=(10, 4) if define.kind in ("surface", "rates")
                     else (6, 4))
    try:
        if define.kind == "surface":
            extents = _render_surface(fig, columns, define)
        elif define.kind == "rates":
            extents = _render_rates(fig, columns, define, job.axis_scale)
        else:
            ax = fig.add_subplot(1, 1, 1)
            if define.kind == "power":
                extents = _render_power(ax, columns, define, job.axis_scale)
            elif define.kind == "curves":
                extents = _render_curves(ax, columns, define, job.axis_scale)
            elif define.kind == "compare":
                extents = _render_compare(ax, columns, define, job.axis_scale)
            else:
                raise ValueError(f"unhandled figure kind {define.kind!r}")
            ax.set_xlabel(define.x_label)
        fig.suptitle(job.figure_id)
        fig.savefig(job.output_path)
        kinds = tuple(type(ax).__name__ for ax in fig.axes)
        size = tuple(float(v) for v in fig.get_size_inches())
    finally:
        plt.close(fig)
    return RenderResult(
        output_path=str(job.output_path),
        size_inches=size,
        axes_kinds=kinds,
        data_extents=tuple(extents),
    )
