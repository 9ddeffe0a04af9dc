"""Parameter-sweep engine and canonical CSV emission.

A sweep varies exactly one scenario parameter over a grid, optionally
crossed with a small series axis (e.g. one curve per distance). Records
are produced in deterministic grid order regardless of worker count, and
the CSV serialization is canonical: emitting, parsing and re-emitting a
file reproduces it byte for byte.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
import csv
import io
from pathlib import Path

from .geometry import FieldRegion, classify_region, make_array_config
from .steering import NearFieldPoint
from .fresnel import beta_params, coherence_gain
from .interference import Method, approx_domain_ok, normalized_interference
from .link import LinkBudget, make_rate_report, watts_to_dbm, linear_to_db

SWEEPABLE = ("n_antennas", "psi", "theta", "r", "angle_diff", "beta1")
SERIES_PARAMS = ("n_antennas", "psi", "theta", "r", "angle_diff", "beta2")

# f feeding the power/SINR/rate columns: first requested method in this order
_F_PRECEDENCE = (Method.EXACT, Method.CLOSED_FORM, Method.FRESNEL_SUM)


@dataclass(frozen=True)
class Scenario:
    """Base evaluation point: array, link budget (dBm/dB) and placement."""

    n_antennas: int = 256
    carrier_freq: float = 30e9
    p_near_dbm: float = 20.0
    p_far_dbm: float = 30.0
    beta_db: float = -62.0
    noise_dbm: float = -70.0
    theta: float = 0.05
    psi: float = 0.0
    r: float = 3.0

    def budget(self) -> LinkBudget:
        return LinkBudget.from_db(self.p_near_dbm, self.p_far_dbm,
                                  self.beta_db, self.noise_dbm)


@dataclass(frozen=True)
class SweepSpec:
    """One swept parameter, an optional series axis, and requested methods.

    swept "angle_diff" varies psi = theta - delta at fixed theta; swept
    "beta1" bypasses the physical scenario entirely and pairs with a
    "beta2" series (coherence-function surface sweeps).
    """

    base: Scenario | None
    swept: str
    grid: tuple
    methods: tuple = (Method.EXACT, Method.FRESNEL_SUM, Method.CLOSED_FORM)
    series_name: str | None = None
    series_values: tuple | None = None

    def validate(self) -> None:
        if self.swept not in SWEEPABLE:
            raise ValueError(f"unknown swept parameter {self.swept!r}")
        if not self.grid:
            raise ValueError("sweep grid must be non-empty")
        diffs = [b - a for a, b in zip(self.grid, self.grid[1:])]
        if diffs and not (all(d > 0 for d in diffs) or all(d < 0 for d in diffs)):
            raise ValueError("sweep grid must be strictly monotone")
        if not self.methods:
            raise ValueError("at least one method required")
        if (self.series_name is None) != (self.series_values is None):
            raise ValueError("series_name and series_values must come together")
        if self.series_name is not None:
            if self.series_name not in SERIES_PARAMS:
                raise ValueError(f"unknown series parameter {self.series_name!r}")
            if not self.series_values:
                raise ValueError("series_values must be non-empty")
        if self.swept == "beta1":
            if self.series_name != "beta2":
                raise ValueError("beta1 sweeps require a beta2 series")
        else:
            if self.base is None:
                raise ValueError("physical sweeps require a base scenario")
            if self.series_name == "beta2":
                raise ValueError("beta2 series only valid for beta1 sweeps")


@dataclass(frozen=True)
class SweepRecord:
    """One evaluated grid point; None fields serialize as empty CSV cells."""

    swept_value: float
    series_name: str | None
    series_value: float | None
    beta1: float | None
    beta2: float | None
    f_exact: float | None
    f_sum: float | None
    f_closed: float | None
    interference_power_dbm: float | None
    sinr_db: float | None
    rate: float | None
    rate_ideal: float | None
    rate_loss: float | None
    rate_loss_bound: float | None
    region: FieldRegion | None
    approx_domain_warning: bool | None


CSV_COLUMNS = tuple(f.name for f in fields(SweepRecord))


def _resolve_scenario(base: Scenario, assignments: dict) -> Scenario:
    values = {f.name: getattr(base, f.name) for f in fields(Scenario)}
    delta = assignments.pop("angle_diff", None)
    values.update(assignments)
    if delta is not None:
        values["psi"] = values["theta"] - delta
    values["n_antennas"] = int(values["n_antennas"])
    return Scenario(**values)


def _eval_beta_point(beta1: float, beta2: float,
                     series_name: str | None) -> SweepRecord:
    return SweepRecord(
        swept_value=beta1,
        series_name=series_name,
        series_value=beta2,
        beta1=beta1,
        beta2=beta2,
        f_exact=None,
        f_sum=None,
        f_closed=coherence_gain(beta1, beta2),
        interference_power_dbm=None,
        sinr_db=None,
        rate=None,
        rate_ideal=None,
        rate_loss=None,
        rate_loss_bound=None,
        region=None,
        approx_domain_warning=None,
    )


def _eval_physical_point(spec: SweepSpec, swept_value: float,
                         series_value: float | None) -> SweepRecord:
    assignments = {}
    if spec.series_name is not None:
        assignments[spec.series_name] = series_value
    assignments[spec.swept] = swept_value
    scn = _resolve_scenario(spec.base, assignments)

    cfg = make_array_config(scn.n_antennas, scn.carrier_freq)
    point = NearFieldPoint(scn.theta, scn.r)
    beta = beta_params(cfg, scn.psi, point)

    f_by_method = {m: normalized_interference(cfg, scn.psi, point, m)
                   for m in spec.methods}
    f_used = next(f_by_method[m] for m in _F_PRECEDENCE if m in f_by_method)

    budget = scn.budget()
    report = make_rate_report(budget, cfg, scn.r, f_used)
    power = budget.p_far * report.g_near * f_used * f_used

    return SweepRecord(
        swept_value=swept_value,
        series_name=spec.series_name,
        series_value=series_value,
        beta1=beta.beta1,
        beta2=beta.beta2,
        f_exact=f_by_method.get(Method.EXACT),
        f_sum=f_by_method.get(Method.FRESNEL_SUM),
        f_closed=f_by_method.get(Method.CLOSED_FORM),
        interference_power_dbm=watts_to_dbm(power),
        sinr_db=linear_to_db(report.sinr),
        rate=report.rate,
        rate_ideal=report.rate_ideal,
        rate_loss=report.rate_loss,
        rate_loss_bound=report.rate_loss_bound,
        region=classify_region(cfg, scn.r),
        approx_domain_warning=not approx_domain_ok(cfg, scn.r),
    )


def run_sweep(spec: SweepSpec, workers: int = 1) -> list:
    """Evaluate every (series, grid) point; output order is grid order.

    Grid points are independent, so workers > 1 fans evaluation out over a
    thread pool; records are reassembled in order either way.
    """
    spec.validate()
    series = spec.series_values if spec.series_name is not None else (None,)
    points = [(sv, gv) for sv in series for gv in spec.grid]

    if spec.swept == "beta1":
        def evaluate(pt):
            return _eval_beta_point(pt[1], pt[0], spec.series_name)
    else:
        def evaluate(pt):
            return _eval_physical_point(spec, pt[1], pt[0])

    if workers <= 1:
        return [evaluate(pt) for pt in points]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(evaluate, points))


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, FieldRegion):
        return value.name
    if isinstance(value, str):
        return value
    return "%.17g" % value


def records_to_csv(records) -> str:
    """Canonical CSV text: 17-significant-digit floats, \\n line ends."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow([_format_cell(getattr(rec, name)) for name in CSV_COLUMNS])
    return buf.getvalue()


def emit_csv(records, destination) -> None:
    """Write records to a path or text stream; I/O errors name the path."""
    text = records_to_csv(records)
    if hasattr(destination, "write"):
        destination.write(text)
        return
    path = Path(destination)
    try:
        with open(path, "w", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise OSError(f"cannot write sweep CSV to {path}: {exc}") from exc


def _parse_cell(name: str, cell: str):
    if cell == "":
        return None
    if name == "series_name":
        return cell
    if name == "region":
        return FieldRegion[cell]
    if name == "approx_domain_warning":
        return cell == "true"
    return float(cell)


def load_records(source) -> list:
    """Parse a CSV produced by emit_csv back into SweepRecords."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text()
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or tuple(rows[0]) != CSV_COLUMNS:
        raise ValueError("unrecognized sweep CSV header")
    out = []
    for row in rows[1:]:
        kwargs = {name: _parse_cell(name, cell)
                  for name, cell in zip(CSV_COLUMNS, row)}
        out.append(SweepRecord(**kwargs))
    return out
