"""Command-line entry points.

Exit codes: 0 ok, 1 verification failure, 2 validation failure, 3 overflow.
All file formats and printed indices are 1-based.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import YSeed
from .companion import explicit_companion, Companion
from .diagram import check_companion_conditions, diagram_of, to_dot
from .errors import MutlabError
from .explorer import bfs_explore, random_walks
from .formats import companion_to_obj, dumps, matrix_to_obj, parse_word_arg, seed_from_obj
from .mutation import apply_word
from .oracle import search_admissible_companions

EXIT_VERIFICATION = 1
EXIT_VALIDATION = 2
EXIT_OVERFLOW = 3


def _load_seed(path: str) -> YSeed:
    with open(path) as fh:
        return seed_from_obj(json.load(fh))


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_mutate(args) -> int:
    seed = _load_seed(args.input)
    word = parse_word_arg(args.word, seed.n)
    result = apply_word(seed, word)
    obj = matrix_to_obj(result)
    obj.update(companion_to_obj(explicit_companion(result)))
    _emit(dumps(obj), args.output)
    return 0


def cmd_check(args) -> int:
    with open(args.input) as fh:
        obj = json.load(fh)
    seed = seed_from_obj(obj)
    if obj.get("A") is not None:
        A = Companion(
            tuple(tuple(int(v) for v in row) for row in obj["A"]),
            seed.matrix.symmetrizer,
        )
    else:
        A = explicit_companion(seed)
    report = check_companion_conditions(
        seed.matrix, A, budget=args.cycle_budget
    )
    names = (
        ("path: at most one positive edge per directed path", report.path_condition),
        ("oriented cycles: exactly one positive edge", report.oriented_condition),
        ("non-oriented cycles: even positive edges", report.nonoriented_condition),
    )
    for name, ok in names:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    if report.witness is not None:
        print(f"witness: {[v + 1 for v in report.witness]}")
    print(f"admissible: {report.admissible}")
    return 0 if report.all_ok else EXIT_VERIFICATION


def cmd_walk(args) -> int:
    seed = _load_seed(args.input)
    reports = random_walks(seed.matrix, args.depth, args.trials, args.rng_seed)
    failures = [r for r in reports if not r.verdict]
    out = {
        "trials": len(reports),
        "depth": args.depth,
        "rng_seed": args.rng_seed,
        "all_passed": not failures,
        "reports": [
            {
                "word": [k + 1 for k in r.word],
                "verdict": r.verdict,
                "steps": [
                    {"k": rec.k + 1, "checks": rec.checks, "detail": rec.detail}
                    for rec in r.records
                ],
            }
            for r in (failures if failures else reports[:1])
        ],
    }
    _emit(dumps(out), args.output)
    return EXIT_VERIFICATION if failures else 0


def cmd_explore(args) -> int:
    seed = _load_seed(args.input)
    result = bfs_explore(seed.matrix, args.depth)
    out = {
        "distinct_seeds": len(result.seeds),
        "seeds_per_level": list(result.level_counts),
        "cvectors": [
            {"coords": list(c), "count": m} for c, m in result.cvector_counts
        ],
    }
    _emit(dumps(out), args.output)
    return 0


def cmd_dot(args) -> int:
    seed = _load_seed(args.input)
    _emit(to_dot(diagram_of(seed.matrix), explicit_companion(seed)), args.output)
    return 0


def cmd_oracle(args) -> int:
    seed = _load_seed(args.input)
    result = search_admissible_companions(seed.matrix)
    if result.exists:
        print(
            f"{len(result.companions)} admissible companion(s) "
            f"({result.assignments_checked} assignments checked)"
        )
    else:
        print(f"NO admissible companion ({result.assignments_checked} assignments checked)")
    out = {
        "exists": result.exists,
        "assignments_checked": result.assignments_checked,
        "companions": [[list(row) for row in a.entries] for a in result.companions],
    }
    _emit(dumps(out), args.output)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mutlab")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(fn=fn)
        p.add_argument("--input", required=name != "serve", help="matrix JSON file")
        p.add_argument("--output", help="write result here instead of stdout")
        return p

    p = add("mutate", cmd_mutate, help="apply a mutation word to a seed")
    p.add_argument("--word", default="[]", help='word as JSON or comma list, 1-based')

    p = add("check", cmd_check, help="check the companion cycle/path conditions")
    p.add_argument("--cycle-budget", type=int, default=None)
    p.add_argument("--mode", choices=("all-simple", "chordless"), default="all-simple")

    p = add("walk", cmd_walk, help="verified random walks from an acyclic seed")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--rng-seed", type=int, default=0)

    p = add("explore", cmd_explore, help="BFS ball of the mutation tree")
    p.add_argument("--depth", type=int, default=4)

    add("dot", cmd_dot, help="DOT rendering of the diagram")
    add("oracle", cmd_oracle, help="brute-force admissible-companion search")

    p = sub.add_parser("serve", help="run the HTTP API")
    p.set_defaults(fn=cmd_serve)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8431)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except OverflowError as exc:
        print(f"error: overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (MutlabError, ValueError, TypeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
