"""Command-line front end.

Exit codes: 0 success / no counterexample, 1 counterexample found,
2 input error, 3 character search overflow.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from . import algebra as alg
from . import exactla as la
from . import harness
from .characters import CharacterSearchOverflow, InvalidCharacter, characters_of, declared_only
from .cohomology import classify
from .corpus import CORPUS_NAMES, by_name
from .fileformat import FileFormatError, algebra_to_dict, dumps, load_algebra, report_to_dict

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_OVERFLOW = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(ref: str) -> alg.Algebra:
    """A file path, or a corpus name when no such file exists."""
    if not Path(ref).exists() and ref in CORPUS_NAMES:
        return by_name(ref)
    try:
        return load_algebra(ref)
    except FileFormatError as exc:
        raise InputError(str(exc)) from None


def _checked(ref: str) -> alg.Algebra:
    a = _load(ref)
    rep = alg.validate(a)
    if not rep.ok:
        raise InputError(f"{ref}: {rep.message}")
    try:
        declared_only(a)
    except InvalidCharacter as exc:
        raise InputError(f"{ref}: {exc}") from None
    return a


def cmd_validate(args) -> int:
    _checked(args.path)
    print(f"{args.path}: valid")
    return EXIT_OK


def cmd_analyze(args) -> int:
    a = _checked(args.path)
    chars = characters_of(a) if args.chars == "auto" else declared_only(a)
    sys.stdout.write(dumps(report_to_dict(classify(a, chars), a)))
    return EXIT_OK


def cmd_characters(args) -> int:
    a = _checked(args.path)
    cs = characters_of(a)
    out = {"label": a.label, "characters": [[la.format_rational(x) for x in c] for c in cs],
           "complete": cs.complete}
    sys.stdout.write(dumps(out))
    return EXIT_OK


def _parse_seed(text: str, n: int) -> tuple:
    try:
        v = tuple(la.parse_rational(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad seed vector {text!r}: {exc}") from None
    if len(v) != n:
        raise InputError(f"seed vector {text!r} must have {n} entries")
    return v


def cmd_construct(args) -> int:
    kind, inputs = args.kind, [_checked(r) for r in args.inputs]
    arity = {"lau": 2, "sum": 2, "tensor": 2, "unitize": 1, "op": 1, "quotient": 1}[kind]
    if len(inputs) != arity:
        raise InputError(f"{kind} takes {arity} input(s), got {len(inputs)}")
    names = ", ".join(a.label or r for a, r in zip(inputs, args.inputs))
    label = f"{kind}({names})"
    note = None
    if kind == "lau":
        left, right = inputs
        chars = characters_of(right).characters
        if args.theta in (None, "zero"):
            theta = (la.to_fraction(0),) * right.dim
        else:
            try:
                theta = chars[int(args.theta)]
            except (ValueError, IndexError):
                raise InputError(f"bad theta index {args.theta!r}; "
                                 f"{len(chars)} character(s) found for the second input") from None
        th = ",".join(la.format_rational(x) for x in theta)
        out = alg.lau_product(left, right, theta)
        label = f"lau({names}, theta=[{th}])"
    elif kind == "sum":
        out = alg.direct_sum(*inputs)
    elif kind == "tensor":
        out = alg.tensor(*inputs)
    elif kind == "unitize":
        out = alg.unitize(inputs[0])
    elif kind == "op":
        out = alg.opposite(inputs[0])
    else:
        a = inputs[0]
        if not args.seed_vector:
            raise InputError("quotient needs at least one --seed-vector")
        ideal = alg.ideal_generated_by(a, [_parse_seed(s, a.dim) for s in args.seed_vector])
        out, _ = alg.quotient(a, ideal)
        note = f"ideal generated by the seeds has dimension {ideal.space.dim}"
        label = f"quotient({names}, dim I={ideal.space.dim})"
    out = out.relabel(label)
    text = dumps(algebra_to_dict(out))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if note:
        print(note, file=sys.stderr)
    return EXIT_OK


def cmd_check(args) -> int:
    ids = None if args.theorem == "all" else [args.theorem]
    if ids and ids[0] not in harness.REGISTRY:
        raise InputError(f"unknown theorem id {args.theorem!r}; known: {', '.join(harness.REGISTRY)}")
    if args.max_dim < 1 or args.trials < 0:
        raise InputError("--max-dim must be at least 1 and --trials non-negative")
    summary = harness.check_all(args.seed, args.trials, args.max_dim, ids)
    paths = harness.write_witnesses(summary, args.witness_dir) if summary.counterexample_found else []
    if args.json:
        d = summary.to_dict()
        d["witness_files"] = [str(p) for p in paths]
        sys.stdout.write(dumps(d))
    else:
        print(summary.text())
        for p in paths:
            print(f"witness: {p}")
    return summary.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="amenability", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check associativity, unit and declared characters")
    s.add_argument("path")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", help="print the amenability report as JSON")
    s.add_argument("path")
    s.add_argument("--chars", choices=("auto", "declared-only"), default="auto")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("construct", help="build a new algebra file")
    s.add_argument("kind", choices=("lau", "sum", "unitize", "tensor", "op", "quotient"))
    s.add_argument("inputs", nargs="+", help="algebra files or corpus names")
    s.add_argument("--theta", default=None, help="character index of the second input, or 'zero'")
    s.add_argument("--seed-vector", action="append", default=[],
                   help="comma-separated rationals; repeat for several ideal generators")
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("characters", help="list rational characters and the completeness flag")
    s.add_argument("path")
    s.set_defaults(func=cmd_characters)

    s = sub.add_parser("check", help="audit theorems on corpus and generated instances")
    s.add_argument("--theorem", default="all")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--max-dim", type=int, default=12)
    s.add_argument("--witness-dir", default="witnesses")
    s.add_argument("--json", action="store_true", help="machine-readable summary")
    s.set_defaults(func=cmd_check)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CharacterSearchOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW


if __name__ == "__main__":
    sys.exit(main())
