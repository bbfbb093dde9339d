"""Command-line front end.

Subcommands: construct, inspect, simulate, verify, sweep, compare. Outputs
are deterministic for identical arguments and seed. Relative --out paths are
resolved under $CROSSCACHE_OUT_DIR when that variable is set.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path

from crosscache.catalog import builtin, builtin_names
from crosscache.constructions import (
    AffineParams,
    affine_resolvable,
    parse_design,
    serialize_design,
)
from crosscache.delivery import DemandVector, generate_transmissions, schedule_to_csv, schedule_to_jsonl
from crosscache.designs import ResolvableDesign, crd_profile, validate
from crosscache.metrics import (
    decimal_str,
    man_metrics,
    scheme_metrics,
    sweep,
    sweep_to_csv,
    sweep_to_text,
)
from crosscache.system import configure
from crosscache.verify import verify_scheme


def _parse_affine(tokens: list[str]) -> AffineParams:
    """Accept 'q=3 m=2' or bare '3 2'."""
    values: dict[str, int] = {}
    order = ["q", "m"]
    for i, tok in enumerate(tokens):
        if "=" in tok:
            key, _, raw = tok.partition("=")
            key = key.strip()
        else:
            key, raw = order[i], tok
        if key not in order:
            raise argparse.ArgumentTypeError(f"unknown affine parameter {key!r}")
        values[key] = int(raw)
    if set(values) != set(order):
        raise argparse.ArgumentTypeError("--affine needs both q and m")
    return AffineParams(q=values["q"], m=values["m"])


def _int_list(text: str) -> list[int]:
    """'2,3,5,7' or '1..6' (inclusive range)."""
    text = text.strip()
    if ".." in text:
        lo, _, hi = text.partition("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(tok) for tok in text.split(",") if tok]


def _add_source_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", choices=builtin_names(), help="bundled design")
    src.add_argument("--file", help="design file (JSON or plain form)")
    src.add_argument("--affine", nargs=2, metavar=("Q", "M"),
                     help="affine construction, e.g. --affine q=3 m=2")


def _load_design(args: argparse.Namespace) -> ResolvableDesign:
    if args.builtin:
        return builtin(args.builtin)
    if args.file:
        return parse_design(Path(args.file).read_text(encoding="utf-8"))
    return affine_resolvable(_parse_affine(args.affine))


def _demand_vector(args: argparse.Namespace, n_users: int) -> DemandVector:
    spec = args.demands
    if spec == "distinct":
        return DemandVector.sequential(n_users, args.files)
    if spec == "random":
        n_files = args.files if args.files is not None else n_users
        return DemandVector.random(n_users, n_files, args.seed)
    demands = tuple(int(tok) for tok in spec.split(","))
    n_files = args.files if args.files is not None else max(demands, default=1)
    return DemandVector(n_files=n_files, demands=demands)


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    base = os.environ.get("CROSSCACHE_OUT_DIR")
    if base and not path.is_absolute():
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _design_summary(design: ResolvableDesign) -> str:
    profile = crd_profile(design)
    return (f"v={design.v} b={design.b} r={design.r} k={design.k} b_r={design.b_r}\n"
            f"{profile}\n")


def _metrics_text(metrics) -> str:
    def rat(x):
        return str(x) if x.denominator == 1 else f"{x} ({decimal_str(x)})"
    return (
        f"K={metrics.n_users} F={metrics.subpacketization} b={metrics.n_caches} "
        f"caches_per_user={metrics.caches_per_user} g={metrics.gain}\n"
        f"M/N={rat(metrics.cache_fraction)}\n"
        f"M'/N={rat(metrics.access_fraction)}\n"
        f"R={rat(metrics.rate)}\n"
        f"R/K={rat(metrics.per_user_rate)}\n"
    )


def _cmd_construct(args) -> int:
    design = _load_design(args)
    sys.stdout.write(_design_summary(design))
    if args.write:
        _write_output(serialize_design(design, form=args.format), args.write)
    return 0


def _cmd_inspect(args) -> int:
    text = Path(args.file).read_text(encoding="utf-8")
    design = parse_design(text)  # raises with embedded report when invalid
    sys.stdout.write("valid\n")
    sys.stdout.write(_design_summary(design))
    return 0


def _cmd_simulate(args) -> int:
    design = _load_design(args)
    config = configure(design, args.z, args.t)
    demands = _demand_vector(args, config.n_users)
    schedule = generate_transmissions(config, demands)
    sys.stdout.write(_metrics_text(scheme_metrics(config)))
    sys.stdout.write(f"transmissions={len(schedule)}\n")
    text = schedule_to_csv(schedule) if args.format == "csv" else schedule_to_jsonl(schedule)
    _write_output(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    design = _load_design(args)
    config = configure(design, args.z, args.t)
    demands = _demand_vector(args, config.n_users)
    modes = ("symbolic", "bytes") if args.mode == "both" else (args.mode,)
    all_passed = True
    chunks = []
    for mode in modes:
        report = verify_scheme(config, demands, mode=mode, seed=args.seed,
                               subfile_len=args.subfile_len)
        all_passed &= report.passed
        chunks.append(report.render_text())
    _write_output("".join(chunks), args.out)
    return 0 if all_passed else 1


def _cmd_sweep(args) -> int:
    rows = sweep(_int_list(args.q), args.m, _int_list(args.t), z=args.z)
    text = sweep_to_text(rows) if args.format == "text" else sweep_to_csv(rows)
    _write_output(text, args.out)
    bad = [r for r in rows if r.error is not None]
    for row in bad:
        print(f"warning: q={row.q} t={row.t}: {row.error}", file=sys.stderr)
    return 0


def _cmd_compare(args) -> int:
    man = man_metrics(args.q, args.m)
    rows = sweep([args.q], args.m, _int_list(args.t))
    if args.format == "csv":
        _write_output(sweep_to_csv(rows), args.out)
        return 0
    def rat(x):
        return str(x) if x.denominator == 1 else f"{x}({decimal_str(x)})"
    lines = [f"MaN baseline (q={args.q}, m={args.m}): K={man.n_users} "
             f"R={rat(man.rate)} R/K={rat(man.per_user_rate)} g={man.gain} F={man.subpacketization}"]
    for row in rows:
        if row.error is not None:
            lines.append(f"t={row.t}: error: {row.error}")
            continue
        s = row.scheme
        lines.append(f"t={row.t}: K={s.n_users} R={rat(s.rate)} R/K={rat(s.per_user_rate)} "
                     f"g={s.gain} F={s.subpacketization}")
    _write_output("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crosscache", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a design and print its parameters")
    _add_source_args(p)
    p.add_argument("--write", help="also write the design to this path")
    p.add_argument("--format", choices=("json", "plain"), default="json")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("inspect", help="load a design file, validate, print profile")
    p.add_argument("--file", required=True)
    p.set_defaults(func=_cmd_inspect)

    for name, func in (("simulate", _cmd_simulate), ("verify", _cmd_verify)):
        p = sub.add_parser(name, help=f"{name} a scheme instance")
        _add_source_args(p)
        p.add_argument("--z", type=int, required=True, help="parallel classes per user")
        p.add_argument("--t", type=int, required=True, help="blocks per chosen class")
        p.add_argument("--demands", default="distinct",
                       help="'distinct', 'random', or an explicit comma list of file ids")
        p.add_argument("--files", type=int, help="number of files N (default: K)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", help="output path (default: stdout)")
        if name == "simulate":
            p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
        else:
            p.add_argument("--mode", choices=("symbolic", "bytes", "both"), default="both")
            p.add_argument("--subfile-len", type=int, default=64)
        p.set_defaults(func=func)

    p = sub.add_parser("sweep", help="metrics sweep over q and t, CSV or text")
    p.add_argument("--q", required=True, help="comma list, e.g. 2,3,5,7")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", required=True, help="comma list or range, e.g. 1..6")
    p.add_argument("--z", type=int, default=2)
    p.add_argument("--format", choices=("csv", "text"), default="csv")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("compare", help="proposed vs MaN table for one (q, m)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", required=True, help="comma list or range")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=_cmd_compare)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
