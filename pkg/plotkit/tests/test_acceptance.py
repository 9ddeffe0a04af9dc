"""Acceptance for the rendering component: every preset CSV to an image."""

import pytest

from plotkit.csvio import MissingColumnError
from plotkit.figures import AxisScale, FigureJob
from plotkit.render import render

from conftest import PRESETS


def report(criterion, ok, detail):
    print(f"{'PASS' if ok else 'FAIL'} {criterion}: {detail}")
    assert ok, f"{criterion}: {detail}"


def test_all_presets_render(tmp_path, preset_csvs):
    rendered = []
    for name in PRESETS:
        out = tmp_path / f"{name}.svg"
        result = render(FigureJob(csv_path=str(preset_csvs[name]),
                                  figure_id=name, output_path=str(out),
                                  axis_scale=AxisScale.LINEAR))
        assert out.exists() and out.stat().st_size > 0
        rendered.append(result)
    surface = rendered[PRESETS.index("fig2_surface")]
    has_both = "Axes3D" in surface.axes_kinds and \
        any(kind != "Axes3D" for kind in surface.axes_kinds)
    report("render-all-presets",
           len(rendered) == 12 and has_both,
           f"{len(rendered)}/12 preset CSVs rendered; fig2 panels: "
           f"{surface.axes_kinds}")


def test_missing_column_contract(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("swept_value,series_value\n1,3\n")
    out = tmp_path / "bad.svg"
    with pytest.raises(MissingColumnError, match="'f_closed'"):
        render(FigureJob(csv_path=str(bad), figure_id="fig3b",
                         output_path=str(out)))
    report("missing-column-error",
           not out.exists(),
           "named-column failure, no image written")
