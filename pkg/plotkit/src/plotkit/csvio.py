"""Reader for the sweep CSV contract.

Deliberately standalone: plotkit consumes only the published CSV schema,
never the library that produced it. Cells are parsed as float, bool,
None (empty) or left as strings; columns come back as lists keyed by
header name.
"""

import csv
from pathlib import Path


class CsvContractError(ValueError):
    """The CSV does not satisfy the sweep-output contract."""


class MissingColumnError(CsvContractError):
    def __init__(self, column, path):
        self.column = column
        super().__init__(f"required column {column!r} missing from {path}")


def _parse_cell(cell: str):
    if cell == "":
        return None
    if cell == "true":
        return True
    if cell == "false":
        return False
    try:
        return float(cell)
    except ValueError:
        return cell


def read_columns(path) -> dict:
    """Parse a sweep CSV into {column: [values]}; header-only files fail."""
    path = Path(path)
    with open(path, newline="") as handle:
        rows = list(csv.reader(handle))
    if not rows:
        raise CsvContractError(f"{path} is empty")
    header, data = rows[0], rows[1:]
    if not data:
        raise CsvContractError(f"{path} has a header but no data rows")
    columns = {name: [] for name in header}
    for row in data:
        if len(row) != len(header):
            raise CsvContractError(f"{path}: ragged row with {len(row)} cells")
        for name, cell in zip(header, row):
            columns[name].append(_parse_cell(cell))
    return columns


def require_columns(columns: dict, names, path) -> None:
    for name in names:
        if name not in columns:
            raise MissingColumnError(name, path)
        if all(v is None for v in columns[name]):
            raise MissingColumnError(name, path)


def split_by_series(columns: dict, names):
    """Group the named columns by the series_value column, in row order.

    Without a series column (or with it empty) everything lands in a
    single group keyed None.
    """
    series = columns.get("series_value")
    n_rows = len(next(iter(columns.values())))
    if series is None:
        series = [None] * n_rows
    groups = {}
    for i in range(n_rows):
        bucket = groups.setdefault(series[i], {name: [] for name in names})
        for name in names:
            bucket[name].append(columns[name][i])
    return groups
