"""Command-line front end: ``smallcrn {analyze,enumerate,census,sample,verify}``.

Exit codes: 0 success, 1 failed verification, 2 bad input (parse error or
invalid flags), 3 analysis not supported for the given network.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .enumeration import census, enumerate_networks
from .network import ParseError, canonical_key, parse_network
from .oracle import (
    OracleConfig,
    UnsupportedNetwork,
    network_seed,
    sample_rates,
    sample_variety,
    write_sample_csv,
)
from .report import analysis_report, format_report
from .suite import agreement_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3


class InputError(Exception):
    pass


def _style(stream):
    use = stream.isatty() and "NO_COLOR" not in os.environ
    return (lambda s: f"\033[1m{s}\033[0m") if use else (lambda s: s)


def _rates(text: str | None, n: int):
    if text is None:
        return None
    try:
        vals = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise InputError(f"--rates: not a list of numbers: {text!r}") from None
    if len(vals) != n:
        raise InputError(f"--rates: expected {n} values, got {len(vals)}")
    if not all(v > 0 for v in vals):
        raise InputError("--rates: rate constants must be positive")
    return vals


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    return parse_network(text)


def _max_mol(value: int) -> int:
    if value < 1:
        raise InputError("--max-molecularity must be >= 1")
    return value


def cmd_analyze(args) -> int:
    net = _load(args.file)
    rates = _rates(args.rates, net.n_reactions)
    report = analysis_report(net, rates, args.verify, OracleConfig(seed=args.seed))
    if args.json:
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(format_report(report, _style(sys.stdout)))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.species != 2:
        raise InputError("--species: only 2 is supported")
    nets = enumerate_networks(2, 2, _max_mol(args.max_molecularity))
    for net in nets:
        print(canonical_key(net).replace("\n", "; "))
    print(f"{len(nets)} networks", file=sys.stderr)
    return EXIT_OK


def cmd_census(args) -> int:
    report = census(enumerate_networks(2, 2, _max_mol(args.max_molecularity)))
    if args.json:
        json.dump(report.to_json(), sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(report.table())
    return EXIT_OK


def cmd_sample(args) -> int:
    net = _load(args.file)
    if args.samples < 1:
        raise InputError("--samples must be >= 1")
    cfg = OracleConfig(seed=args.seed, samples=args.samples)
    rates = _rates(args.rates, net.n_reactions)
    if rates is None:
        rates = sample_rates(net.n_reactions, cfg, 0, network_seed(net))
    try:
        sample = sample_variety(net, rates, cfg)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_sample_csv(sample, fh)
    else:
        write_sample_csv(sample, sys.stdout)
    print(
        f"{len(sample.points)} points, max normalized residual {sample.max_residual:.3e}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    result = agreement_suite(
        _max_mol(args.max_molecularity), args.draws, OracleConfig(seed=args.seed)
    )
    if args.json:
        json.dump(result.to_json(), sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(f"networks: {result.networks}  draws: {result.draws}  checks: {result.checks}")
        for f in result.failures:
            print(f"FAIL {f}")
        print("all checks agree" if result.ok else f"{len(result.failures)} failures")
    return EXIT_OK if result.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="smallcrn",
        description="Positive steady-state varieties of small mass-action networks.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="symbolic analysis of a network file")
    a.add_argument("file")
    a.add_argument("--rates", help="comma-separated positive rate constants")
    a.add_argument("--json", action="store_true")
    a.add_argument("--verify", action="store_true", help="numeric checks over seeded rate draws")
    a.add_argument("--seed", type=int, default=0)
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enumerate", help="list networks up to isomorphism")
    e.add_argument("--max-molecularity", type=int, default=2)
    e.add_argument("--species", type=int, default=2)
    e.add_argument("--seed", type=int, default=0)
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("census", help="count variety classes over all small networks")
    c.add_argument("--max-molecularity", type=int, default=2)
    c.add_argument("--json", action="store_true")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_census)

    s = sub.add_parser("sample", help="write points of the positive variety as CSV")
    s.add_argument("file")
    s.add_argument("--rates")
    s.add_argument("--samples", type=int, default=64)
    s.add_argument("--out")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_sample)

    v = sub.add_parser("verify", help="symbolic/numeric agreement over all small networks")
    v.add_argument("--max-molecularity", type=int, default=2)
    v.add_argument("--draws", type=int, default=5)
    v.add_argument("--json", action="store_true")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InputError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except UnsupportedNetwork as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
