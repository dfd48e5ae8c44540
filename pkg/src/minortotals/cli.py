"""Command-line front end.

Exit status: 0 on success, 1 when ``verify`` finds a base where the
difference-table prediction and the brute-force oracle disagree, 2 on any
usage or input error.
"""

from __future__ import annotations

import argparse
import sys

from . import report
from .difftab import EMPIRICAL, ResidueProfile, build_table, predict_profile
from .oracle import empirical_histogram, witness
from .radix import check_base, parse, parse_base_range
from .seqcore import (
    CLOSED_FORM_KINDS,
    DEFAULT_SIEVE_LIMIT,
    CapacityError,
    NoClosedFormError,
    PrimeTable,
    SequenceId,
    sequence_by_name,
)

DEFAULT_N = 100
DEFAULT_VERIFY_BASES = "2..16"


class UsageError(Exception):
    pass


def _seq(text):
    try:
        return sequence_by_name(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _base(text):
    try:
        return check_base(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _bases(text):
    try:
        return parse_base_range(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minortotals",
        description="Which unit's digits can end the partial sums of an integer sequence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    seq_help = "natural, even, odd, squares (alias faulhaber2) or primes"

    def add(name, help, formats, seq_required=True):
        p = sub.add_parser(name, help=help)
        p.add_argument("--seq", type=_seq, required=seq_required, help=seq_help)
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        return p

    p = add("hist", "unit's-digit histogram of the first N minor totals", ["ascii", "csv", "json", "svg"])
    p.add_argument("--base", type=_base, required=True)
    p.add_argument("--n", type=_positive, default=DEFAULT_N, help="number of minor totals (default 100)")
    p.add_argument("--sieve-limit", type=_positive, default=DEFAULT_SIEVE_LIMIT)

    p = add("table", "L x L difference table", ["ascii", "json"])
    p.add_argument("--base", type=_base, required=True)

    p = add("predict", "admissible digits and gaps from difference tables", ["ascii", "json"])
    p.add_argument("--base", type=_base, required=True)

    p = add("verify", "compare predictions against the brute-force oracle", ["ascii", "json"], False)
    p.add_argument("--all", action="store_true", help="every closed-form sequence")
    p.add_argument("--bases", type=_bases, default=parse_base_range(DEFAULT_VERIFY_BASES))

    p = add("scan", "gap sets over a range of bases", ["ascii", "json"])
    p.add_argument("--bases", type=_bases, required=True, help="inclusive range LO..HI")
    p.add_argument("--n", type=_positive, default=DEFAULT_N, help="minor totals counted for primes")
    p.add_argument("--sieve-limit", type=_positive, default=DEFAULT_SIEVE_LIMIT)

    p = add("witness", "smallest n whose minor total ends in a digit", ["ascii", "json"])
    p.add_argument("--base", type=_base, required=True)
    p.add_argument("--digit", required=True, help="digit in the base's alphabet (0-9, A-Z)")
    return parser


def _closed(seq: SequenceId, command: str):
    if not seq.has_closed_form:
        raise UsageError(
            f"'{command}' needs a closed-form sequence; {seq} is empirical only "
            "(try 'hist' or 'scan')"
        )


def _primes_for(args):
    if args.seq is SequenceId.PRIMES:
        table = PrimeTable(args.sieve_limit)
        if args.n > table.capacity:
            raise CapacityError(
                f"--n {args.n} exceeds the sieve capacity of {table.capacity} primes "
                f"(--sieve-limit {args.sieve_limit})"
            )
        return table
    return None


def _cmd_hist(args):
    h = empirical_histogram(args.seq, args.base, args.n, _primes_for(args))
    emit = {
        "ascii": report.histogram_ascii,
        "csv": report.emit_csv,
        "json": report.histogram_json,
        "svg": report.emit_histogram_svg,
    }[args.format]
    return emit(h), 0


def _cmd_table(args):
    _closed(args.seq, "table")
    t = build_table(args.seq, args.base)
    return (report.render_table_ascii if args.format == "ascii" else report.table_json)(t), 0


def _cmd_predict(args):
    _closed(args.seq, "predict")
    p = predict_profile(args.seq, args.base)
    return (report.profile_ascii if args.format == "ascii" else report.profile_json)(p), 0


def _cmd_verify(args):
    if args.all == (args.seq is not None):
        raise UsageError("verify takes exactly one of --seq or --all")
    seqs = CLOSED_FORM_KINDS if args.all else (args.seq,)
    for s in seqs:
        _closed(s, "verify")
    reports = [report.gap_report(s, args.bases) for s in seqs]
    status = 0 if all(r.all_agree for r in reports) else 1
    if args.format == "json":
        text = report.emit_json(reports[0]) if not args.all else report.emit_json_many(reports)
    else:
        text = "".join(report.report_ascii(r) for r in reports)
        verdict = "all agree" if status == 0 else "DISAGREEMENT FOUND"
        text += f"{sum(len(r.entries) for r in reports)} (sequence, base) pairs checked: {verdict}\n"
    return text, status


def _empirical_scan(args):
    primes = _primes_for(args)
    profiles = []
    for L in args.bases:
        h = empirical_histogram(args.seq, L, args.n, primes)
        profiles.append(ResidueProfile.from_admissible(args.seq, L, h.present, EMPIRICAL))
    if args.format == "json":
        return report._dumps(
            {
                "sequence": args.seq.label,
                "n_terms": args.n,
                "bases": [
                    {"base": p.base, "empirical": report._profile_dict(p)} for p in profiles
                ],
            }
        )
    return "".join(report.profile_ascii(p) for p in profiles)


def _cmd_scan(args):
    if not args.seq.has_closed_form:
        return _empirical_scan(args), 0
    r = report.gap_report(args.seq, args.bases)
    return (report.report_ascii if args.format == "ascii" else report.emit_json)(r), 0


def _cmd_witness(args):
    _closed(args.seq, "witness")
    j = parse(args.digit, args.base)
    if j >= args.base:
        raise UsageError(f"{args.digit!r} is not a single digit in base {args.base}")
    found = witness(args.seq, args.base, j)
    emit = report.witness_text if args.format == "ascii" else report.witness_json
    return emit(args.seq, args.base, j, found), 0


COMMANDS = {
    "hist": _cmd_hist,
    "table": _cmd_table,
    "predict": _cmd_predict,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
    "witness": _cmd_witness,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, status = COMMANDS[args.command](args)
    except (UsageError, NoClosedFormError, CapacityError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
