"""Command-line interface: enumerate objects, compute characters and partition
functions, verify identities.

Exit codes: 0 when every requested check passes, 1 when a check fails or a
``--max-states`` cap is hit, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from itertools import islice
from typing import Callable, Iterable, Sequence

from . import characters, iceb, koiketerada, proctor, sundaram, typea
from .algebra import LaurentPoly
from .combinat import ValidationError, normalize_partition, staircase
from .reports import IdentityReport

SCHEMA = "v1"


class CapHit(Exception):
    """An enumeration exceeded ``--max-states``."""


class UsageError(Exception):
    pass


# -- enumeration families ------------------------------------------------------------

def _rows(p) -> list[list[int]]:
    return [list(r) for r in p]


def _lam(args) -> tuple[int, ...]:
    return normalize_partition(args.lam, args.n)


def _strict_a_top(args):
    return tuple(a + b for a, b in zip(_lam(args), staircase(args.n, 0)))


def _ice_b_top(args):
    return tuple(a + b for a, b in zip(_lam(args), staircase(args.n, 1)))


FAMILIES: dict[str, Callable] = {
    "gt-a": lambda a: typea.enumerate_gt(_lam(a)),
    "ssyt": lambda a: typea.enumerate_ssyt(a.lam, a.n),
    "strict-gt-a": lambda a: typea.enumerate_strict_gt(_strict_a_top(a)),
    "ice-a": lambda a: typea.enumerate_ice_a(_strict_a_top(a)),
    "sundaram": lambda a: sundaram.enumerate_sundaram_tableaux(a.lam, a.n),
    "sundaram-pattern": lambda a: sundaram.enumerate_sundaram_patterns(a.lam, a.n),
    "sundaram-ice": lambda a: iceb.enumerate_ice_b(_ice_b_top(a), a.n),
    "king": lambda a: sundaram.enumerate_king_tableaux(a.lam, a.n),
    "kt": lambda a: koiketerada.enumerate_kt_tableaux(a.lam, a.n),
    "kt-pattern": lambda a: koiketerada.enumerate_kt_patterns(a.lam, a.n),
    "kt-ice": lambda a: koiketerada.enumerate_kt_ice(a.lam, a.n),
    "proctor": lambda a: proctor.enumerate_proctor_tableaux(a.lam, a.n),
    "proctor-pattern": lambda a: proctor.enumerate_proctor_patterns(a.lam, a.n),
}


def _encoder(family: str, n: int) -> Callable:
    """JSON form: tableaux as letter labels, patterns as nested lists, ice states as dicts."""
    if family in ("sundaram", "king"):
        return lambda T: sundaram.tableau_labels(T, n)
    if family == "kt":
        return koiketerada.tableau_labels
    if family == "proctor":
        return lambda T: proctor.tableau_labels(T, n)
    if family in ("ice-a", "sundaram-ice", "kt-ice"):
        return lambda s: s.to_json_obj()
    return _rows


def _take(stream: Iterable, cap: int | None) -> list:
    if cap is None:
        return list(stream)
    items = list(islice(stream, cap + 1))
    if len(items) > cap:
        raise CapHit(f"more than {cap} objects")
    return items


def _guard_states(top_row, n: int, cap: int | None, kind: str) -> None:
    """Raise CapHit before an expensive sum whose state count exceeds ``cap``."""
    if cap is None:
        return
    if kind == "ice-a":
        stream = typea.enumerate_strict_gt(top_row)
    elif kind == "ice-b":
        stream = sundaram.enumerate_strict_patterns_top(tuple(top_row) + (0,), n)
    else:
        stream = koiketerada.enumerate_strict_kt(top_row, n)
    _take(stream, cap)


# -- characters ---------------------------------------------------------------------

CHARACTERS: dict[tuple[str, str], Callable[[Sequence[int], int], LaurentPoly]] = {
    ("ssyt", "tableaux"): typea.schur_via_tableaux,
    ("ssyt", "weyl"): characters.schur_bialternant,
    ("gt-a", "tableaux"): typea.schur_via_gt,
    ("sundaram", "tableaux"): sundaram.so_char_via_tableaux,
    ("sundaram", "branching"): sundaram.so_char_via_branching,
    ("sundaram", "weyl"): characters.so_char_weyl,
    ("king", "tableaux"): sundaram.sp_char_via_tableaux,
    ("king", "weyl"): characters.sp_char_weyl,
    ("kt", "tableaux"): koiketerada.kt_char,
}


# -- identities ---------------------------------------------------------------------

def _weights(args) -> iceb.WeightTable:
    return iceb.FIGURE_WEIGHTS if args.weights == "figure" else iceb.DEFAULT_WEIGHTS


def _id_tokuyama(args) -> list[IdentityReport]:
    _guard_states(_strict_a_top(args), args.n, args.max_states, "ice-a")
    return [typea.verify_tokuyama(args.lam, args.n)]


def _id_thm51(args) -> list[IdentityReport]:
    _guard_states(_ice_b_top(args), args.n, args.max_states, "ice-b")
    return [iceb.verify_thm51(args.lam, args.n, _weights(args), deformed=args.factor == "deformed", jobs=args.jobs)]


def _id_cor52(args) -> list[IdentityReport]:
    _guard_states(_ice_b_top(args), args.n, args.max_states, "ice-b")
    return [iceb.verify_cor52(args.lam, args.n, _weights(args), deformed=args.factor == "deformed", jobs=args.jobs)]


def _id_branching(args) -> list[IdentityReport]:
    lam = _lam(args)
    return [
        IdentityReport.compare(
            "branching",
            {"lambda": list(lam), "n": args.n},
            sundaram.so_char_via_tableaux(lam, args.n),
            sundaram.so_char_via_branching(lam, args.n),
            strips=[list(mu) for mu in sundaram.horizontal_strips(lam)],
        )
    ]


def _id_kt(args) -> list[IdentityReport]:
    _guard_states(_lam(args), args.n, args.max_states, "kt")
    return [koiketerada.verify_kt_three_vertex(args.lam, args.n)]


def _id_proctor(args) -> list[IdentityReport]:
    return [proctor.verify_no_strict_proctor(args.n, args.max_entry)]


def _id_chars(args) -> list[IdentityReport]:
    return characters.char_cross_check(args.lam, args.n)


def _id_dim(args) -> list[IdentityReport]:
    return characters.dim_check(args.lam, args.n)


IDENTITIES: dict[str, tuple[Callable[[argparse.Namespace], list[IdentityReport]], bool]] = {
    # name -> (runner, needs --lambda)
    "tokuyama-a": (_id_tokuyama, True),
    "thm51": (_id_thm51, True),
    "cor52": (_id_cor52, True),
    "branching": (_id_branching, True),
    "kt-three-vertex": (_id_kt, True),
    "proctor-no-strict": (_id_proctor, False),
    "char-cross-check": (_id_chars, True),
    "dim-check": (_id_dim, True),
}


# -- commands -----------------------------------------------------------------------

def cmd_enumerate(args) -> tuple[dict, list[str], bool]:
    stream = FAMILIES[args.family](args)
    items = _take(stream, args.max_states)
    encode = _encoder(args.family, args.n)
    objs = [encode(x) for x in items]
    payload = {"family": args.family, "lambda": list(args.lam), "n": args.n, "count": len(objs), "objects": objs}
    lines = [json.dumps(o, separators=(",", ":")) for o in objs] + [f"count: {len(objs)}"]
    return payload, lines, True


def cmd_character(args) -> tuple[dict, list[str], bool]:
    key = (args.family, args.method)
    if key not in CHARACTERS:
        options = ", ".join(f"{f}/{m}" for f, m in CHARACTERS)
        raise UsageError(f"no character for family {args.family!r} with method {args.method!r}; options: {options}")
    poly = CHARACTERS[key](args.lam, args.n)
    payload = {
        "family": args.family,
        "method": args.method,
        "lambda": list(args.lam),
        "n": args.n,
        "variables": "w" if key == ("sundaram", "weyl") else "z",
        "character": poly.to_json_obj(),
    }
    return payload, [str(poly)], True


def cmd_partition_function(args) -> tuple[dict, list[str], bool]:
    if args.family == "ice-a":
        _guard_states(_strict_a_top(args), args.n, args.max_states, "ice-a")
        poly = typea.partition_function_a(args.lam, args.n)
        weights = "ice-a"
    elif args.family == "sundaram-ice":
        _guard_states(_ice_b_top(args), args.n, args.max_states, "ice-b")
        w = _weights(args)
        poly = iceb.partition_function_b(args.lam, args.n, w, jobs=args.jobs)
        weights = args.weights
    else:
        raise UsageError("partition-function supports --family ice-a or sundaram-ice")
    payload = {
        "family": args.family,
        "lambda": list(_lam(args)),
        "n": args.n,
        "weights": weights,
        "partition_function": poly.to_json_obj(),
    }
    return payload, [str(poly)], True


def cmd_verify(args) -> tuple[dict, list[str], bool]:
    runner, needs_lambda = IDENTITIES[args.identity]
    if needs_lambda and args.lam is None:
        raise UsageError(f"--lambda is required for {args.identity}")
    reports = runner(args)
    passed = all(r.passed for r in reports)
    payload = {"identity": args.identity, "passed": passed, "reports": [r.to_json_obj() for r in reports]}
    lines = []
    for r in reports:
        lines.append(r.summary())
        if not r.passed and r.difference is not None:
            lines.append(f"  difference: {r.difference}")
        for key, value in r.details.items():
            lines.append(f"  {key}: {value}")
    return payload, lines, passed


COMMANDS = {
    "enumerate": cmd_enumerate,
    "character": cmd_character,
    "partition-function": cmd_partition_function,
    "verify": cmd_verify,
}


def _parse_lambda(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}") from exc
    if not parts or any(x < 0 for x in parts):
        raise argparse.ArgumentTypeError(f"bad partition {text!r}")
    return parts


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="icechar", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, lam_required: bool = True):
        p.add_argument("--lambda", dest="lam", type=_parse_lambda, required=lam_required, help="comma-separated parts")
        p.add_argument("--n", type=int, required=True, help="rank")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--max-states", type=int, default=None, help="fail with 'cap hit' beyond this many states")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for partition functions")
        p.add_argument("--timing", action="store_true", help="add elapsed seconds to the report")

    p = sub.add_parser("enumerate", help="list combinatorial objects")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    common(p)

    p = sub.add_parser("character", help="compute a character")
    p.add_argument("--family", choices=sorted({f for f, _ in CHARACTERS}), required=True)
    p.add_argument("--method", choices=("tableaux", "weyl", "branching"), default="tableaux")
    common(p)

    for name in ("partition-function", "verify"):
        p = sub.add_parser(name, help="compute a partition function" if name != "verify" else "check an identity")
        if name == "verify":
            p.add_argument("--identity", choices=list(IDENTITIES), required=True)
            p.add_argument("--max-entry", type=int, default=6, help="largest entry searched by proctor-no-strict")
        else:
            p.add_argument("--family", choices=("ice-a", "sundaram-ice"), required=True)
        p.add_argument("--weights", choices=("calibrated", "figure"), default="calibrated", help="bent-ice weight table")
        p.add_argument("--factor", choices=("as-stated", "deformed"), default="as-stated", help="deformation factor form")
        common(p, lam_required=False)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.n < 0 or args.jobs < 1:
        print("error: --n must be >= 0 and --jobs >= 1", file=err)
        return 2
    if args.command != "verify" and args.lam is None:
        print("error: --lambda is required", file=err)
        return 2
    start = time.perf_counter()
    status = "ok"
    try:
        payload, lines, passed = COMMANDS[args.command](args)
    except CapHit as exc:
        payload, lines, passed = {"message": str(exc)}, [f"cap hit: {exc}"], False
        status = "cap-hit"
    except (UsageError, ValidationError, IndexError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    if status == "ok" and not passed:
        status = "failed"
    elapsed = time.perf_counter() - start
    if args.format == "json":
        doc = {"schema": SCHEMA, "command": args.command, "status": status, **payload}
        if args.timing:
            doc["seconds"] = round(elapsed, 3)
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")
        if args.timing:
            out.write(f"seconds: {elapsed:.3f}\n")
    return 0 if status == "ok" else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
