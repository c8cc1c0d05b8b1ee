"""Command line front end.

Commands:

* ``constants derive``        certification report (exit 1 on any failure)
* ``constants optimize-alpha`` pivot optimisation for the detection exponent
* ``bounds density``          evaluate the zero-density bound
* ``bounds repulsion``        evaluate the zero-repulsion bound
* ``zeros scan``              populate / update the zero cache (idempotent)
* ``verify``                  run the verification harness

Exit codes: 0 pass, 1 certification/verification failure, 2 usage error,
3 missing dependency (zero data absent without --scan-missing).

Configuration: flat key=value file via --config; values are overridden by
environment (EXPLICIT_ZERO_CACHE for the cache directory) and then by
command-line flags.  Output is deterministic for a given configuration and
cache state: fixed orderings, no timestamps.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from zerokit import constants
from zerokit.constants import FieldParams
from zerokit.dirichlet.zerocache import ENV_CACHE_DIR, DependencyError, ZeroLibrary
from zerokit.verify import default_suite, reports_to_json, summary_table

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_MISSING = 3

DESK_Q_LIMIT = 200
DESK_HEIGHT_LIMIT = 1e3

HEURISTIC_NOTE = "implied-constant inputs are heuristic, not certified"


@dataclass
class RunConfig:
    """Resolved configuration: defaults, then config file, then env, then flags."""

    cache_dir: str = "zero_cache"
    output_format: str = "table"
    q_max: int = 10
    height_T: float = 30.0
    samples: int = 10
    unsafe: bool = False
    tolerances: dict = field(default_factory=dict)


def _load_config_file(path: str | None) -> dict[str, str]:
    if not path:
        return {}
    out: dict[str, str] = {}
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"config line without '=': {line!r}")
        key, value = line.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    file_values = _load_config_file(getattr(args, "config", None))
    if "cache_dir" in file_values:
        cfg.cache_dir = file_values["cache_dir"]
    if "output_format" in file_values:
        cfg.output_format = file_values["output_format"]
    if "q_max" in file_values:
        cfg.q_max = int(file_values["q_max"])
    if "height" in file_values:
        cfg.height_T = float(file_values["height"])
    for key, value in file_values.items():
        if key.startswith("tolerance."):
            cfg.tolerances[key.removeprefix("tolerance.")] = float(value)
    if ENV_CACHE_DIR in os.environ:
        cfg.cache_dir = os.environ[ENV_CACHE_DIR]
    if getattr(args, "cache_dir", None):
        cfg.cache_dir = args.cache_dir
    if getattr(args, "json", False):
        cfg.output_format = "json"
    cfg.unsafe = bool(getattr(args, "unsafe", False))
    return cfg


def _guard(cfg: RunConfig, q: int | None = None, height: float | None = None) -> None:
    if cfg.unsafe:
        return
    if q is not None and q > DESK_Q_LIMIT:
        raise SystemExit(f"modulus {q} exceeds the desk-scale guard ({DESK_Q_LIMIT}); pass --unsafe to override")
    if height is not None and height > DESK_HEIGHT_LIMIT:
        raise SystemExit(
            f"height {height} exceeds the desk-scale guard ({DESK_HEIGHT_LIMIT}); pass --unsafe to override"
        )


# -- commands -----------------------------------------------------------------


def cmd_constants_derive(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    rows = constants.certification_report(alpha=args.alpha, eta=args.eta, epsilon=args.epsilon)
    if cfg.output_format == "json":
        print(constants.report_to_json(rows))
    else:
        print(f"{'constant':28s} {'derived':>16s} {'radius':>10s} {'dir':>3s} {'published':>10s} {'pass':>5s}")
        for r in rows:
            print(
                f"{r.name:28s} {r.derived_value:16.8f} {r.derived_radius:10.2e} "
                f"{r.direction:>3s} {r.published:10.3f} {'ok' if r.passed else 'FAIL':>5s}"
            )
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL


def cmd_constants_optimize(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    argmin, value = constants.optimize_alpha()
    if cfg.output_format == "json":
        print(json.dumps({"argmin": argmin, "min_value": value}, indent=2))
    else:
        print(f"argmin alpha = {argmin:.6f}")
        print(f"objective    = {value:.6f}")
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    if args.bound == "density":
        p = FieldParams(
            n_K=args.nk, D_K=args.dk, Q=args.q, T=args.t, implied_nk_constant=args.implied_nk
        )
        exponent = args.exponent
        if exponent is None:
            exponent = 74.0 if args.sigma >= 1.0 - 1e-3 else 81.0
        bound = constants.evaluate_density_bound(args.sigma, p, exponent, args.leading)
        payload = {
            "bound": bound.value,
            "log_bound": bound.log_value,
            "overflow": bound.overflow,
            "exponent": exponent,
            "leading_constant": args.leading,
            "implied_nk_constant": args.implied_nk,
            "note": HEURISTIC_NOTE,
        }
    else:
        p = FieldParams(n_K=args.nk, D_K=args.dk, Nq=args.nq, T=args.t)
        bound = constants.evaluate_repulsion_bound(args.kind, args.beta1, p, args.c)
        payload = {
            "bound": bound.value,
            "vacuous": bound.vacuous,
            "kind": args.kind,
            "c": args.c,
            "note": HEURISTIC_NOTE,
        }
    if cfg.output_format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for key, value in payload.items():
            print(f"{key} = {value}")
    return EXIT_OK


def cmd_zeros_scan(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    q_values = [args.q] if args.q is not None else list(range(args.qmin, args.qmax + 1))
    for q in q_values:
        _guard(cfg, q=q)
    _guard(cfg, height=args.height)
    library = ZeroLibrary(cfg.cache_dir)
    status = EXIT_OK
    guard = math.inf if cfg.unsafe else 1e3
    for q in q_values:
        summary = library.ensure(q, args.height, height_guard=guard)
        for label in sorted(summary):
            result = summary[label]
            if result == "cached":
                print(f"{label}: cached, skipped")
            else:
                print(f"{label}: {result} zeros to height {args.height}")
    if not library.certified():
        print("WARNING: at least one window failed completeness certification", file=sys.stderr)
        status = EXIT_FAIL
    return status


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _resolve_config(args)
    _guard(cfg, q=args.qmax, height=args.height)
    library = ZeroLibrary(cfg.cache_dir)
    suites = (
        ("circle", "explicit_formula", "hadamard", "repulsion", "density", "largesieve", "selberg", "detector")
        if args.suite == "all"
        else (args.suite,)
    )
    needed = [(q, args.height + 1.0) for q in range(1, args.qmax + 1)]
    if {"explicit_formula", "hadamard"} & set(suites):
        needed += [(1, 101.0), (4, 101.0)]  # deep sets for the derivative/formula checks
    try:
        if args.scan_missing:
            for q, h in needed:
                library.ensure(q, h)
        else:
            from zerokit.dirichlet.characters import enumerate_characters

            for q, h in needed:
                for chi in enumerate_characters(q):
                    library.get(chi, h)
    except DependencyError as exc:
        print(f"missing zero data: {exc}", file=sys.stderr)
        print("re-run with --scan-missing to populate the cache", file=sys.stderr)
        return EXIT_MISSING

    reports = default_suite(
        library,
        q_max=args.qmax,
        T=args.height,
        samples=args.samples,
        suites=suites,
        hadamard_k=args.k,
        tolerances=cfg.tolerances,
    )
    if cfg.output_format == "json":
        print(reports_to_json(reports))
    else:
        print(summary_table(reports))
    if args.report_file:
        Path(args.report_file).write_text(reports_to_json(reports) + "\n")
    failures = [r for r in reports if not r.passed]
    if failures:
        print(f"{len(failures)} check(s) failed", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zerokit",
        description="certified constants and desk-scale verification for zero-density / zero-repulsion estimates",
    )
    parser.add_argument("--config", help="flat key=value configuration file")
    sub = parser.add_subparsers(dest="command", required=True)

    constants_p = sub.add_parser("constants", help="constant certification")
    constants_sub = constants_p.add_subparsers(dest="subcommand", required=True)
    derive = constants_sub.add_parser("derive", help="derive and certify all explicit constants")
    derive.add_argument("--alpha", type=float, default=constants.REFERENCE_ALPHA)
    derive.add_argument("--eta", type=float, default=constants.REFERENCE_ETA)
    derive.add_argument("--epsilon", type=float, default=constants.DENSITY_EPS_WIDE)
    derive.add_argument("--json", action="store_true")
    derive.set_defaults(func=cmd_constants_derive)
    optimize = constants_sub.add_parser("optimize-alpha", help="minimise the detection-exponent objective")
    optimize.add_argument("--json", action="store_true")
    optimize.set_defaults(func=cmd_constants_optimize)

    bounds_p = sub.add_parser("bounds", help="evaluate the headline bounds")
    bounds_sub = bounds_p.add_subparsers(dest="bound", required=True)
    density = bounds_sub.add_parser("density", help="zero-density count bound")
    density.add_argument("--sigma", type=float, required=True)
    density.add_argument("--nk", type=int, default=1)
    density.add_argument("--dk", type=float, default=1.0)
    density.add_argument("--q", type=float, default=1.0)
    density.add_argument("--t", type=float, default=1.0)
    density.add_argument("--exponent", type=float, default=None)
    density.add_argument("--leading", type=float, default=1.0)
    density.add_argument("--implied-nk", dest="implied_nk", type=float, default=0.0)
    density.add_argument("--json", action="store_true")
    density.set_defaults(func=cmd_bounds, bound="density")
    repulsion = bounds_sub.add_parser("repulsion", help="repelled-zero upper bound")
    repulsion.add_argument("--kind", choices=("quadratic", "trivial"), required=True)
    repulsion.add_argument("--beta1", type=float, required=True)
    repulsion.add_argument("--nq", type=float, default=1.0)
    repulsion.add_argument("--nk", type=int, default=1)
    repulsion.add_argument("--dk", type=float, default=1.0)
    repulsion.add_argument("--t", type=float, default=1.0)
    repulsion.add_argument("--c", type=float, default=1.0)
    repulsion.add_argument("--json", action="store_true")
    repulsion.set_defaults(func=cmd_bounds, bound="repulsion")

    zeros_p = sub.add_parser("zeros", help="zero cache management")
    zeros_sub = zeros_p.add_subparsers(dest="subcommand", required=True)
    scan = zeros_sub.add_parser("scan", help="scan and cache zeros")
    scan.add_argument("--q", type=int, default=None, help="single modulus")
    scan.add_argument("--qmin", type=int, default=1)
    scan.add_argument("--qmax", type=int, default=10)
    scan.add_argument("--height", type=float, required=True)
    scan.add_argument("--cache-dir", dest="cache_dir")
    scan.add_argument("--unsafe", action="store_true")
    scan.set_defaults(func=cmd_zeros_scan)

    verify_p = sub.add_parser("verify", help="run the verification harness")
    verify_p.add_argument(
        "--suite",
        default="all",
        choices=(
            "all",
            "circle",
            "explicit_formula",
            "hadamard",
            "repulsion",
            "density",
            "largesieve",
            "selberg",
            "detector",
        ),
    )
    verify_p.add_argument("--qmax", type=int, default=10)
    verify_p.add_argument("--height", type=float, default=30.0)
    verify_p.add_argument("--samples", type=int, default=10)
    verify_p.add_argument("--k", type=int, default=2, help="derivative order for the hadamard suite")
    verify_p.add_argument("--scan-missing", action="store_true")
    verify_p.add_argument("--cache-dir", dest="cache_dir")
    verify_p.add_argument("--report-file", default=None, help="also write the JSON report here")
    verify_p.add_argument("--json", action="store_true")
    verify_p.add_argument("--unsafe", action="store_true")
    verify_p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except (ValueError, DependencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
