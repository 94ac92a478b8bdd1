"""Command-line front end.

Data goes to stdout (or ``--output``), diagnostics to stderr.  Exit codes:
0 success, 1 validation or usage error, 2 internal cross-check mismatch,
3 oracle budget refusal.

Grammar: a colored value is ``COLOR:MAGNITUDE`` with decimal integers; a set
is a comma-separated list of those or the literal ``empty``; a permutation is
a whitespace-separated list, written from position n down to 1.  Text output
renders colored values as ``xi^a(x)``; json and csv carry the token grammar,
and every emitted token string reparses to an equal value.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import admissible, counting, oracle, shifts, wreath

BUDGET_ENV_VAR = "PINNACLES_ORACLE_BUDGET"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CROSSCHECK = 2
EXIT_BUDGET = 3


class CliError(Exception):
    """Input rejected before dispatch; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); keep 2 for cross-checks
        raise CliError(message)


def parse_colored_token(text: str, m: int, n: int, where: str = "token") -> wreath.ColoredValue:
    """Parse one COLOR:MAGNITUDE token, range-checked against the ambient (m, n)."""
    parts = text.split(":")
    if len(parts) != 2 or not all(part.isdigit() for part in parts):
        raise CliError(f"{where}: malformed colored value {text!r}, expected COLOR:MAGNITUDE")
    color, magnitude = int(parts[0]), int(parts[1])
    if color >= m:
        raise CliError(f"{where}: color {color} out of range for modulus {m}")
    if not 1 <= magnitude <= n:
        raise CliError(f"{where}: magnitude {magnitude} out of range for degree {n}")
    return wreath.ColoredValue(color, magnitude)


def parse_set(text: str, m: int, n: int) -> wreath.PinSet:
    """Parse a comma-separated set of colored tokens, or the literal ``empty``."""
    text = text.strip()
    if text == "empty":
        return wreath.PinSet(m, n)
    values = [
        parse_colored_token(tok.strip(), m, n, where=f"set token {i}")
        for i, tok in enumerate(text.split(","), start=1)
    ]
    return wreath.PinSet(m, n, tuple(values))


def parse_perm(text: str, m: int, n: int) -> wreath.GenPerm:
    """Parse a whitespace-separated word w(n) ... w(1) of colored tokens."""
    tokens = text.split()
    if len(tokens) != n:
        raise CliError(f"permutation has {len(tokens)} entries, expected degree {n}")
    word = [
        parse_colored_token(tok, m, n, where=f"permutation token {i}")
        for i, tok in enumerate(tokens, start=1)
    ]
    try:
        return wreath.GenPerm.from_word(m, word)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def set_tokens(P: wreath.PinSet) -> str:
    if not P.elements:
        return "empty"
    return ",".join(f"{cv.color}:{cv.magnitude}" for cv in P.elements)


def perm_tokens(w: wreath.GenPerm) -> str:
    return " ".join(f"{cv.color}:{cv.magnitude}" for cv in w.word)


def _parse_range(text: str, what: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            start, stop = int(lo), int(hi)
        else:
            start = stop = int(text)
    except ValueError:
        raise CliError(f"bad {what} range {text!r}, expected INT or LO..HI") from None
    if start < 1 or stop < start:
        raise CliError(f"bad {what} range {text!r}")
    return range(start, stop + 1)


def _budget_from(args) -> oracle.OracleBudget:
    max_order = getattr(args, "budget", None)
    if max_order is None:
        raw = os.environ.get(BUDGET_ENV_VAR)
        if raw is not None:
            try:
                max_order = int(raw)
            except ValueError:
                raise CliError(f"{BUDGET_ENV_VAR}={raw!r} is not an integer") from None
    if max_order is None:
        max_order = oracle.DEFAULT_MAX_ORDER
    return oracle.OracleBudget(
        max_order=max_order,
        partitions=getattr(args, "partitions", 1),
    )


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_doc(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True) + "\n"


def _cmd_count(args) -> int:
    params = wreath.GroupParams(args.m, args.p, args.n)
    if args.p == 1:
        value = counting.count_pinnacle_sets(args.m, args.n, args.d, args.method)
    else:
        value = counting.count_complex(params, args.d, args.method, budget=_budget_from(args))
    d = counting.max_cardinality(args.n) if args.d is None else args.d
    if args.format == "json":
        _emit(args, _json_doc({
            "params": {"m": args.m, "p": args.p, "n": args.n, "d": d},
            "method": args.method,
            "value": str(value),
        }))
    elif args.format == "csv":
        _emit(args, f"m,p,n,d,value\n{args.m},{args.p},{args.n},{d},{value}\n")
    else:
        _emit(args, f"{value}\n")
    return EXIT_OK


def _cmd_check(args) -> int:
    P = parse_set(args.set, args.m, args.n)
    result = admissible.admissibility(P)
    rec = admissible.is_admissible_rec(P)
    top = admissible.is_admissible_top(P)
    if not result.admissible == rec == top:
        print(
            f"decider disagreement on {set_tokens(P)}: "
            f"witness={result.admissible} recursive={rec} top={top}",
            file=sys.stderr,
        )
        return EXIT_CROSSCHECK
    if args.format == "json":
        _emit(args, _json_doc({
            "params": {"m": args.m, "n": args.n},
            "set": set_tokens(P),
            "admissible": result.admissible,
            "reason": result.reason,
            "witness": perm_tokens(result.witness) if result.witness else None,
            "deciders": {"witness": result.admissible, "recursive": rec, "top": top},
        }))
    elif result.admissible:
        _emit(args, f"admissible\nwitness: {result.witness}\n")
    else:
        _emit(args, f"inadmissible: {result.reason}\n")
    return EXIT_OK


def _cmd_witness(args) -> int:
    P = parse_set(args.set, args.m, args.n)
    try:
        w = admissible.canonical_witness(P)
    except admissible.AdmissibilityError as exc:
        raise CliError(str(exc)) from None
    if args.format == "json":
        _emit(args, _json_doc({
            "params": {"m": args.m, "n": args.n},
            "set": set_tokens(P),
            "witness": perm_tokens(w),
            "realizes": admissible.is_admissible(P),
        }))
    else:
        _emit(args, f"{w}\n")
    return EXIT_OK


def _cmd_pinnacles(args) -> int:
    w = parse_perm(args.perm, args.m, args.n)
    params = wreath.GroupParams(args.m, args.p, args.n)
    pins = wreath.pinnacle_set(w)
    peak_positions = sorted(wreath.peaks(w), reverse=True)
    eps = wreath.color_sum(w)
    member = wreath.in_subgroup(w, params)
    if args.format == "json":
        _emit(args, _json_doc({
            "params": {"m": args.m, "p": args.p, "n": args.n},
            "perm": perm_tokens(w),
            "pinnacles": set_tokens(pins),
            "peaks": peak_positions,
            "color_sum": eps,
            "in_subgroup": member,
        }))
    else:
        _emit(args, (
            f"pinnacles: {pins}\n"
            f"peaks: {', '.join(map(str, peak_positions)) if peak_positions else 'none'}\n"
            f"color sum: {eps}\n"
            f"in {params}: {'yes' if member else 'no'}\n"
        ))
    return EXIT_OK


def _cmd_table(args) -> int:
    ms = _parse_range(args.m, "m")
    ns = _parse_range(args.n, "n")
    if min(ns) < 2:
        raise CliError("table needs n >= 2")
    cells = [(m, n, counting.count_total(m, n, args.method)) for m in ms for n in ns]
    if args.format == "csv":
        lines = ["m,n,count"] + [f"{m},{n},{v}" for m, n, v in cells]
        _emit(args, "\n".join(lines) + "\n")
    elif args.format == "json":
        _emit(args, _json_doc({
            "method": args.method,
            "rows": [{"m": m, "n": n, "count": str(v)} for m, n, v in cells],
        }))
    else:
        width = max(
            [len(str(v)) for _, _, v in cells]
            + [len(str(n)) for n in ns]
            + [len(f"m={max(ms)}")]
        )
        corner = "m\\n"
        header = " ".join([f"{corner:>{width}}"] + [f"{n:>{width}}" for n in ns])
        lines = [header]
        for m in ms:
            row = [f"{f'm={m}':>{width}}"]
            row += [f"{v:>{width}}" for mm, n, v in cells if mm == m]
            lines.append(" ".join(row))
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    params = wreath.GroupParams(args.m, args.p, args.n)
    report = oracle.collect_pinnacle_sets(
        params, budget=_budget_from(args), parallel=args.parallel
    )
    mismatches = []
    if args.diff:
        for d in range(counting.max_cardinality(args.n) + 1):
            expected = counting.count_complex(params, d, budget=_budget_from(args))
            got = report.count_up_to(d)
            if expected != got:
                mismatches.append((d, expected, got))
    rows = []
    for P in report.sorted_sets():
        stats = report.stats[P]
        rows.append((set_tokens(P), len(P), stats.witness_count, stats.eps_min, stats.eps_max))
    if args.format == "json":
        _emit(args, _json_doc({
            "params": {"m": args.m, "p": args.p, "n": args.n},
            "scanned": report.scanned,
            "total_admissible": report.total_admissible,
            "by_cardinality": {
                str(d): len(sets) for d, sets in report.by_cardinality().items()
            },
            "sets": [
                {"set": s, "cardinality": d, "witnesses": w, "eps_min": lo, "eps_max": hi}
                for s, d, w, lo, hi in rows
            ],
        }))
    elif args.format == "csv":
        lines = ["set,cardinality,witnesses,eps_min,eps_max"]
        lines += [f"\"{s}\",{d},{w},{lo},{hi}" for s, d, w, lo, hi in rows]
        _emit(args, "\n".join(lines) + "\n")
    else:
        lines = [
            f"{params}: scanned {report.scanned} elements, "
            f"{report.total_admissible} admissible pinnacle sets"
        ]
        for d, sets in report.by_cardinality().items():
            lines.append(f"cardinality {d}: {len(sets)} sets")
        for s, d, w, lo, hi in rows:
            lines.append(f"  {s}  witnesses={w}  eps=[{lo},{hi}]")
        _emit(args, "\n".join(lines) + "\n")
    if mismatches:
        for d, expected, got in mismatches:
            print(
                f"oracle/formula mismatch at d={d}: formulas say {expected}, scan found {got}",
                file=sys.stderr,
            )
        return EXIT_CROSSCHECK
    return EXIT_OK


def _cmd_shift(args) -> int:
    if (args.set is None) == (args.perm is None):
        raise CliError("shift needs exactly one of --set or --perm")
    params = shifts.ShiftParams(args.m, args.k, args.n)
    if args.set is not None:
        P = parse_set(args.set, args.m, args.n)
        shifted = shifts.shift_set(P, params)
        tokens, pretty = set_tokens(shifted), str(shifted)
    else:
        w = parse_perm(args.perm, args.m, args.n)
        shifted = shifts.shift_perm(w, params)
        tokens, pretty = perm_tokens(shifted), str(shifted)
    if args.format == "json":
        _emit(args, _json_doc({
            "params": {"m": args.m, "k": args.k, "n": args.n,
                       "target_modulus": params.target_modulus},
            "result": tokens,
        }))
    else:
        _emit(args, pretty + "\n")
    return EXIT_OK


def _add_common(sub, *, p: bool = False, d: bool = False, budget: bool = False):
    sub.add_argument("--m", type=int, required=True, help="modulus m")
    sub.add_argument("--n", type=int, required=True, help="degree n")
    if p:
        sub.add_argument("--p", type=int, default=1, help="subgroup divisor p (default 1)")
    if d:
        sub.add_argument("--d", type=int, default=None,
                         help="cardinality cap d (default floor((n-1)/2))")
    if budget:
        sub.add_argument("--budget", type=int, default=None,
                         help=f"oracle group-order cap (default {BUDGET_ENV_VAR} or "
                              f"{oracle.DEFAULT_MAX_ORDER})")
    sub.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub.add_argument("--output", default=None, help="write data here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pinnacles", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", help="count admissible pinnacle sets")
    _add_common(count, p=True, d=True, budget=True)
    count.add_argument("--method", choices=counting.METHOD_CHOICES,
                       default=counting.DEFAULT_METHOD)
    count.set_defaults(handler=_cmd_count)

    check = commands.add_parser("check", help="decide admissibility of a set")
    _add_common(check)
    check.add_argument("--set", required=True, help='e.g. "1:3,0:5,0:2" or "empty"')
    check.set_defaults(handler=_cmd_check)

    witness = commands.add_parser("witness", help="canonical witness of a set")
    _add_common(witness)
    witness.add_argument("--set", required=True)
    witness.set_defaults(handler=_cmd_witness)

    pins = commands.add_parser("pinnacles", help="pinnacles, peaks, color sum of a permutation")
    _add_common(pins, p=True)
    pins.add_argument("--perm", required=True, help='word w(n)..w(1), e.g. "1:5 0:4 1:3 0:2 1:1"')
    pins.set_defaults(handler=_cmd_pinnacles)

    table = commands.add_parser("table", help="grid of total counts over m and n ranges")
    table.add_argument("--m", required=True, help="m range, INT or LO..HI")
    table.add_argument("--n", required=True, help="n range, INT or LO..HI")
    table.add_argument("--method", choices=counting.METHOD_CHOICES,
                       default=counting.DEFAULT_METHOD)
    table.add_argument("--format", choices=("text", "json", "csv"), default="text")
    table.add_argument("--output", default=None)
    table.set_defaults(handler=_cmd_table)

    orc = commands.add_parser("oracle", help="exhaustive scan of G(m,p,n)")
    _add_common(orc, p=True, budget=True)
    orc.add_argument("--diff", action="store_true",
                     help="compare scan counts against the formulas")
    orc.add_argument("--partitions", type=int, default=1)
    orc.add_argument("--parallel", action="store_true",
                     help="run partitions in separate processes")
    orc.set_defaults(handler=_cmd_oracle)

    shift = commands.add_parser("shift", help="apply the color-shift embedding")
    _add_common(shift)
    shift.add_argument("--k", type=int, required=True, help="shift amount k >= 0")
    shift.add_argument("--set", default=None)
    shift.add_argument("--perm", default=None)
    shift.set_defaults(handler=_cmd_shift)

    return parser


def run(argv: list[str]) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except counting.CrossCheckMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    except oracle.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
