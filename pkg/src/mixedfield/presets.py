"""Canned parameter-study sweep presets.

Every preset starts from the baseline scenario (256 antennas at 30 GHz,
20/30 dBm transmit powers, -62 dB reference gain, -70 dBm noise, user at
3 m) and overrides the figure-specific placement. Dense axes use 601
uniformly spaced points; antenna-count grids step by 64, starting where
the coarse-grained shape claims (unimodality, monotone rate loss) hold.
"""

import numpy as np

from .interference import Method
from .sweep import Scenario, SweepSpec

TABLE_BASE = Scenario()


def _lin(start, stop, count):
    return tuple(float(v) for v in np.linspace(start, stop, count))


def _n_grid(start=128, stop=1024, step=64):
    return tuple(float(n) for n in range(start, stop + 1, step))


def _fig1():
    # broad beam-angle sweep around a broadside user
    base = Scenario(theta=0.0, psi=0.0, r=3.0)
    return SweepSpec(base=base, swept="psi", grid=_lin(-0.9, 0.9, 601))


def _fig2_surface():
    return SweepSpec(
        base=None,
        swept="beta1",
        grid=_lin(-3.0, 3.0, 121),
        methods=(Method.CLOSED_FORM,),
        series_name="beta2",
        series_values=_lin(0.1, 10.0, 100),
    )


def _fig3a():
    return SweepSpec(
        base=TABLE_BASE,
        swept="n_antennas",
        grid=_n_grid(start=64, stop=512),
        series_name="r",
        series_values=(3.0, 9.0),
    )


def _fig3b():
    return SweepSpec(
        base=TABLE_BASE,
        swept="n_antennas",
        grid=_n_grid(),
        series_name="r",
        series_values=(3.0, 6.0, 9.0),
    )


def _fig4a():
    base = Scenario(theta=0.0)
    return SweepSpec(base=base, swept="psi", grid=_lin(-0.6, 0.6, 601))


def _fig4b():
    base = Scenario(theta=0.0)
    return SweepSpec(
        base=base,
        swept="angle_diff",
        grid=_lin(0.0, 0.5, 601),
        series_name="r",
        series_values=(3.0, 10.0, 30.0),
    )


def _fig4c():
    return SweepSpec(
        base=TABLE_BASE,
        swept="theta",
        grid=_lin(-0.6, 0.6, 601),
        series_name="psi",
        series_values=(0.0, 0.2, 0.4),
    )


def _fig4d():
    return SweepSpec(
        base=TABLE_BASE,
        swept="r",
        grid=_lin(2.0, 300.0, 601),
        series_name="angle_diff",
        series_values=(0.005, 0.1, 0.15, 0.2),
    )


def _fig6a():
    return SweepSpec(base=TABLE_BASE, swept="n_antennas", grid=_n_grid())


def _fig6b():
    base = Scenario(theta=0.0)
    return SweepSpec(base=base, swept="psi", grid=_lin(-0.6, 0.6, 601))


def _fig6c():
    return SweepSpec(base=TABLE_BASE, swept="theta", grid=_lin(-0.6, 0.6, 601))


def _fig6d():
    return SweepSpec(base=TABLE_BASE, swept="r", grid=_lin(2.0, 300.0, 601))


_PRESETS = {
    "fig1": _fig1,
    "fig2_surface": _fig2_surface,
    "fig3a": _fig3a,
    "fig3b": _fig3b,
    "fig4a": _fig4a,
    "fig4b": _fig4b,
    "fig4c": _fig4c,
    "fig4d": _fig4d,
    "fig6a": _fig6a,
    "fig6b": _fig6b,
    "fig6c": _fig6c,
    "fig6d": _fig6d,
}


def list_presets() -> list:
    return sorted(_PRESETS)


def preset(name: str) -> SweepSpec:
    """Build the named preset spec; unknown names raise ValueError."""
    try:
        builder = _PRESETS[name]
    except KeyError:
        known = ", ".join(list_presets())
        raise ValueError(f"unknown preset {name!r} (known: {known})") from None
    return builder()
