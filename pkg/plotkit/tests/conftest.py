import shutil
import subprocess
import sys

import pytest

PRESETS = [
    "fig1", "fig2_surface", "fig3a", "fig3b", "fig4a", "fig4b",
    "fig4c", "fig4d", "fig6a", "fig6b", "fig6c", "fig6d",
]


def sweep_command():
    exe = shutil.which("mixedfield")
    if exe:
        return [exe]
    return [sys.executable, "-m", "mixedfield.cli"]


@pytest.fixture(scope="session")
def preset_csvs(tmp_path_factory):
    """All preset CSVs, produced through the public sweep CLI."""
    out_dir = tmp_path_factory.mktemp("sweep_csvs")
    paths = {}
    for name in PRESETS:
        path = out_dir / f"{name}.csv"
        subprocess.run(
            sweep_command() + ["sweep", "--preset", name, "--out", str(path)],
            check=True,
        )
        paths[name] = path
    return paths
