"""Command-line interface.

Subcommands: interference (single point, all three methods), rate (single
point rate report), sweep (preset or config file to CSV), fresnel (C and S
at one argument), list-presets.

Exit codes: 0 success, 2 invalid arguments or config, 3 I/O failure.

Sweep configuration precedence is flags > config file > preset defaults.
The YAML config mirrors SweepSpec:

    preset: fig3b            # optional starting point
    base:
      n_antennas: 256
      theta: 0.05
      ...                    # any Scenario field
    swept: n_antennas
    grid: {start: 128, stop: 1024, step: 64}   # or {start, stop, count}
    grid: [128, 192, 256]                      # or an explicit list
    series: {name: r, values: [3, 6, 9]}
    methods: [exact, fresnel_sum, closed_form]
"""

import argparse
import sys
from dataclasses import fields, replace

import yaml

from .geometry import make_array_config
from .steering import NearFieldPoint
from .fresnel import beta_params, fresnel_c, fresnel_s
from .interference import (
    Method,
    approx_domain_ok,
    interference_approx,
    interference_exact,
    interference_fresnel_sum,
)
from .geometry import classify_region
from .link import make_rate_report
from .sweep import Scenario, SweepSpec, emit_csv, run_sweep
from .presets import list_presets, preset

_EXIT_BAD_INPUT = 2
_EXIT_IO = 3

_METHOD_NAMES = {m.value: m for m in Method}


def _add_point_args(parser, with_budget):
    parser.add_argument("--n", type=int, default=256, help="antenna count")
    parser.add_argument("--freq", type=float, default=30e9, help="carrier frequency in Hz")
    parser.add_argument("--theta", type=float, required=True, help="near-user spatial angle")
    parser.add_argument("--psi", type=float, required=True, help="far-beam spatial angle")
    parser.add_argument("--r", type=float, required=True, help="near-user distance in m")
    if with_budget:
        parser.add_argument("--p-near-dbm", type=float, default=20.0)
        parser.add_argument("--p-far-dbm", type=float, default=30.0)
        parser.add_argument("--beta-db", type=float, default=-62.0)
        parser.add_argument("--noise-dbm", type=float, default=-70.0)
        parser.add_argument("--method", choices=sorted(_METHOD_NAMES),
                            default="exact", help="interference evaluator")


def _cmd_interference(args):
    cfg = make_array_config(args.n, args.freq)
    point = NearFieldPoint(args.theta, args.r)
    beta = beta_params(cfg, args.psi, point)
    closed = interference_approx(cfg, args.psi, point)
    print(f"f_exact       = {interference_exact(cfg, args.psi, point):.12g}")
    print(f"f_fresnel_sum = {interference_fresnel_sum(cfg, args.psi, point):.12g}")
    # closed form clamped to [0, 1] for display only
    print(f"f_closed_form = {min(max(closed, 0.0), 1.0):.12g}")
    print(f"beta1 = {beta.beta1:.12g}, beta2 = {beta.beta2:.12g}")
    print(f"region = {classify_region(cfg, args.r).name}")
    if not approx_domain_ok(cfg, args.r):
        print(f"warning: r below approximation-valid distance "
              f"{cfg.approx_valid_distance:.4g} m")
    return 0


def _cmd_rate(args):
    cfg = make_array_config(args.n, args.freq)
    point = NearFieldPoint(args.theta, args.r)
    scn = Scenario(n_antennas=args.n, carrier_freq=args.freq,
                   p_near_dbm=args.p_near_dbm, p_far_dbm=args.p_far_dbm,
                   beta_db=args.beta_db, noise_dbm=args.noise_dbm,
                   theta=args.theta, psi=args.psi, r=args.r)
    evaluator = {
        Method.EXACT: interference_exact,
        Method.FRESNEL_SUM: interference_fresnel_sum,
        Method.CLOSED_FORM: interference_approx,
    }[_METHOD_NAMES[args.method]]
    f = evaluator(cfg, args.psi, point)
    report = make_rate_report(scn.budget(), cfg, args.r, f)
    print(f"f_used          = {report.f_used:.12g}  ({args.method})")
    print(f"g_near          = {report.g_near:.12g}")
    print(f"sinr            = {report.sinr:.12g}")
    print(f"rate            = {report.rate:.12g} bps/Hz")
    print(f"rate_ideal      = {report.rate_ideal:.12g} bps/Hz")
    print(f"rate_loss       = {report.rate_loss:.12g} bps/Hz")
    print(f"rate_loss_bound = {report.rate_loss_bound:.12g} bps/Hz")
    return 0


def _parse_grid(node):
    if isinstance(node, (list, tuple)):
        return tuple(float(v) for v in node)
    if isinstance(node, dict):
        start, stop = float(node["start"]), float(node["stop"])
        if "count" in node:
            count = int(node["count"])
            if count < 1:
                raise ValueError("grid count must be >= 1")
            if count == 1:
                return (start,)
            step = (stop - start) / (count - 1)
            return tuple(start + i * step for i in range(count))
        step = float(node["step"])
        if step == 0:
            raise ValueError("grid step must be nonzero")
        out = []
        v = start
        # inclusive stop, with a half-step tolerance for float accumulation
        while (v - stop) * step <= 0.5 * abs(step):
            out.append(v)
            v = start + len(out) * step
        return tuple(out)
    raise ValueError("grid must be a list or {start, stop, count|step}")


def _parse_methods(node):
    out = []
    for name in node:
        if name not in _METHOD_NAMES:
            raise ValueError(f"unknown method {name!r}")
        out.append(_METHOD_NAMES[name])
    return tuple(out)


def _spec_from_config(doc, preset_name):
    if not isinstance(doc, dict):
        raise ValueError("config root must be a mapping")
    preset_name = doc.get("preset", preset_name)
    spec = preset(preset_name) if preset_name else None

    base = spec.base if spec else Scenario()
    if "base" in doc:
        known = {f.name for f in fields(Scenario)}
        overrides = dict(doc["base"])
        unknown = set(overrides) - known
        if unknown:
            raise ValueError(f"unknown base fields: {sorted(unknown)}")
        base = replace(base or Scenario(), **overrides)

    swept = doc.get("swept", spec.swept if spec else None)
    if swept is None:
        raise ValueError("config must name a swept parameter (or a preset)")
    grid = _parse_grid(doc["grid"]) if "grid" in doc else (spec.grid if spec else None)
    if grid is None:
        raise ValueError("config must define a grid (or a preset)")

    series_name = spec.series_name if spec else None
    series_values = spec.series_values if spec else None
    if "series" in doc:
        node = doc["series"]
        if node is None:
            series_name = series_values = None
        else:
            series_name = node["name"]
            series_values = tuple(float(v) for v in node["values"])

    methods = _parse_methods(doc["methods"]) if "methods" in doc else (
        spec.methods if spec else SweepSpec.__dataclass_fields__["methods"].default)

    if swept == "beta1":
        base = None
    return SweepSpec(base=base, swept=swept, grid=grid, methods=methods,
                     series_name=series_name, series_values=series_values)


def _cmd_sweep(args):
    if not args.preset and not args.config:
        raise ValueError("sweep requires --preset or --config")
    if args.config:
        try:
            with open(args.config) as handle:
                doc = yaml.safe_load(handle)
        except OSError as exc:
            raise OSError(f"cannot read config {args.config}: {exc}") from exc
        except yaml.YAMLError as exc:
            raise ValueError(f"malformed config {args.config}: {exc}") from exc
        spec = _spec_from_config(doc or {}, args.preset)
    else:
        spec = preset(args.preset)
    if args.methods:
        spec = replace(spec, methods=_parse_methods(args.methods.split(",")))
    records = run_sweep(spec, workers=args.workers)
    if args.out in (None, "-"):
        emit_csv(records, sys.stdout)
    else:
        emit_csv(records, args.out)
    return 0


def _cmd_fresnel(args):
    print(f"C({args.x:.12g}) = {fresnel_c(args.x):.12g}")
    print(f"S({args.x:.12g}) = {fresnel_s(args.x):.12g}")
    return 0


def _cmd_list_presets(_args):
    for name in list_presets():
        print(name)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedfield",
        description="Mixed near-/far-field interference and rate analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("interference", help="evaluate one point, all methods")
    _add_point_args(p, with_budget=False)
    p.set_defaults(func=_cmd_interference)

    p = sub.add_parser("rate", help="rate report for one point")
    _add_point_args(p, with_budget=True)
    p.set_defaults(func=_cmd_rate)

    p = sub.add_parser("sweep", help="run a sweep preset or config to CSV")
    p.add_argument("--preset", choices=list_presets())
    p.add_argument("--config", help="YAML sweep configuration file")
    p.add_argument("--out", help="output CSV path ('-' for stdout)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--methods", help="comma-separated method override")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("fresnel", help="print C(x) and S(x)")
    p.add_argument("--x", type=float, required=True)
    p.set_defaults(func=_cmd_fresnel)

    p = sub.add_parser("list-presets", help="list known sweep presets")
    p.set_defaults(func=_cmd_list_presets)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_BAD_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
