"""Batch command line front end.

Verbs: sign, classify, realizable, gassmann, search, dump-tables.  All input
and output is JSON; results go to stdout with sorted keys and compact
separators, diagnostics to stderr.  Exit codes: 0 success, 2 input or
validation error, 3 element bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import duality, sign, tables
from .core import CartanType, descriptor_from_json
from .errors import ChisignError, TooLarge
from .permgrp import DEFAULT_MAX_ELEMENTS, PermGroup, Subgroup
from .permgrp import are_conjugate_subgroups, gassmann_equivalent, search_candidates

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_TOO_LARGE = 3


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _cmd_sign(args) -> int:
    desc = descriptor_from_json(_load_json(args.input))
    _emit(sign.sign_chi(desc).to_json())
    return EXIT_OK


def _cmd_classify(args) -> int:
    ct = CartanType.parse(args.type)
    signs = sign.classify(
        ct,
        args.max_real,
        args.max_finite,
        require_realizable=args.require_realizable,
        threads=args.threads,
    )
    ordered = [s for s in sign.SIGN_ORDER if s in signs]
    _emit({"type": str(ct), "signs": ordered})
    return EXIT_OK


def _cmd_realizable(args) -> int:
    family = duality.family_from_json(_load_json(args.input))
    result = duality.realizability(family)
    _emit({
        "realizable": result.realizable,
        "vacuous": result.vacuous,
        "reason": result.reason,
        "reduced_sum": duality.reduced_sum(family),
    })
    return EXIT_OK


def _cmd_gassmann(args) -> int:
    group = PermGroup.from_json(_load_json(args.group))
    h1 = Subgroup.from_json(group, _load_json(args.h))
    h2 = Subgroup.from_json(group, _load_json(args.h2))
    equivalent = gassmann_equivalent(h1, h2, args.max_elements)
    conjugate = are_conjugate_subgroups(h1, h2, args.max_elements)
    _emit({"equivalent": equivalent, "conjugate": conjugate})
    return EXIT_OK


def _cmd_search(args) -> int:
    group = PermGroup.from_json(_load_json(args.group))
    candidates = [Subgroup.from_json(group, _load_json(p)) for p in args.candidate]
    intermediates = [Subgroup.from_json(group, _load_json(p)) for p in args.intermediate]
    report = search_candidates(
        group,
        candidates=candidates,
        intermediates=intermediates,
        max_elements=args.max_elements,
        allow_intransitive=args.allow_intransitive,
    )
    _emit(report)
    return EXIT_OK


def _cmd_dump_tables(args) -> int:
    _emit(tables.census(args.type or None))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chisign", description=__doc__)
    parser.add_argument(
        "--max-elements",
        type=int,
        default=int(os.environ.get("CHISIGN_MAX_ELEMENTS", DEFAULT_MAX_ELEMENTS)),
        help="cap on full element enumerations (exit 3 when exceeded)",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("CHISIGN_THREADS", 1)),
        help="worker threads for the classifier enumeration",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("sign", help="sign of the Euler characteristic for a descriptor")
    p.add_argument("--input", required=True, help="GlobalDescriptor JSON file")
    p.set_defaults(func=_cmd_sign)

    p = sub.add_parser("classify", help="attainable signs for a Cartan-Killing type")
    p.add_argument("--type", required=True, help="e.g. A1, 2A3, 6D4")
    p.add_argument("--max-real", type=int, default=2)
    p.add_argument("--max-finite", type=int, default=2)
    p.add_argument(
        "--require-realizable",
        action="store_true",
        help="restrict to configurations whose invariants sum to zero over S",
    )
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("realizable", help="decide realizability of an invariant family")
    p.add_argument("--input", required=True, help="InvariantFamily JSON file")
    p.set_defaults(func=_cmd_realizable)

    p = sub.add_parser("gassmann", help="almost conjugacy and conjugacy of two subgroups")
    p.add_argument("--group", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--h2", required=True)
    p.set_defaults(func=_cmd_gassmann)

    p = sub.add_parser("search", help="run the degree-6d search predicate on a group")
    p.add_argument("--group", required=True)
    p.add_argument("--candidate", action="append", default=[],
                   help="candidate almost conjugate subgroup file (repeatable)")
    p.add_argument("--intermediate", action="append", default=[],
                   help="candidate intermediate subgroup file (repeatable)")
    p.add_argument("--allow-intransitive", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("dump-tables", help="emit the census as JSON")
    p.add_argument("--type", action="append", help="restrict to these types (repeatable)")
    p.set_defaults(func=_cmd_dump_tables)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except TooLarge as exc:
        _emit({"error": {"type": "TooLarge", "message": str(exc)}})
        return EXIT_TOO_LARGE
    except ChisignError as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return EXIT_INVALID
    except (OSError, json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
