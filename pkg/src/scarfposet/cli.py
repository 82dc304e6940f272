"""Command-line front end.

Exit codes: 0 success, 1 verification failure (oracle mismatch, failed
round trip, failing paper check), 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from . import families
from .errors import ScarfError
from .poset import MAX_UNIVERSE, Poset
from .realization import realize_complex, roundtrip_verify
from .render import complex_dot, poset_dot
from .scarf import (
    MAX_ISO_VERTICES,
    MAX_ORACLE_SUBSET,
    SimplicialComplex,
    closed_faces,
    oracle_scarf,
    scarf,
)
from .suite import GROUPS, run_suite

KINDS = [
    "antichain",
    "divisibility",
    "powerset",
    "digraph",
    "even-cycle",
    "complete-bipartite",
    "a-root",
]

_ROOT_DOTTED = re.compile(r"a(\d+)\.(\d+)")


class InputError(Exception):
    pass


def split_csv(text: str) -> list[str]:
    """Split on commas outside braces, trimming whitespace."""
    items, depth, current = [], 0, []
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    items.append("".join(current).strip())
    return [item for item in items if item]


def resolve_subset(poset: Poset, text: str) -> list[str]:
    labels = []
    for token in split_csv(text):
        if token not in poset:
            m = _ROOT_DOTTED.fullmatch(token)
            if m and families.root_label(int(m[1]), int(m[2])) in poset:
                token = families.root_label(int(m[1]), int(m[2]))
        labels.append(token)
    poset.mask(labels)  # raises UnknownLabel
    return labels


def _limits(args: argparse.Namespace) -> dict[str, int | None]:
    if getattr(args, "force", False):
        print("warning: --force disables size guards", file=sys.stderr)
        return {"universe": None, "oracle": None, "iso": None}
    return {"universe": MAX_UNIVERSE, "oracle": MAX_ORACLE_SUBSET, "iso": MAX_ISO_VERTICES}


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _load_poset(args: argparse.Namespace) -> Poset:
    if not args.poset:
        raise InputError("--poset is required")
    return Poset.from_json(_read_json(args.poset), max_size=_limits(args)["universe"])


def _load_complex(args: argparse.Namespace) -> SimplicialComplex:
    if not args.complex:
        raise InputError("--complex is required")
    return SimplicialComplex.from_json(_read_json(args.complex))


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.output and args.output != "-":
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _dumps(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def _need(args: argparse.Namespace, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise InputError(f"--{name.replace('_', '-')} is required for --kind {args.kind}")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in split_csv(text)]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


# subcommands ---------------------------------------------------------------


def cmd_family(args: argparse.Namespace) -> int:
    subset: list[str] | None = None
    kind = args.kind
    limit = _limits(args)["universe"]
    if kind == "antichain":
        _need(args, "generators")
        poset = families.antichain(split_csv(args.generators), max_size=limit)
    elif kind == "divisibility":
        _need(args, "generators")
        gens = _ints(args.generators)
        poset = families.divisibility_closure(gens, max_size=limit)
        subset = [str(g) for g in gens]
    elif kind == "powerset":
        _need(args, "sets")
        family = [
            [int(x) if x.isdigit() else x for x in split_csv(s)] for s in args.sets.split(";")
        ]
        poset = families.powerset_closure(
            family, not args.finite_ambient, max_size=limit
        )
        subset = [families.set_label(s) for s in family]
    elif kind == "digraph":
        _need(args, "edges")
        edges = []
        for token in split_csv(args.edges):
            lo, sep, hi = token.partition(">")
            if not sep:
                raise InputError(f"edge {token!r} must look like 'u>v'")
            edges.append((lo.strip(), hi.strip()))
        vertices = list(dict.fromkeys(v for e in edges for v in e))
        if args.generators:
            vertices += [v for v in split_csv(args.generators) if v not in vertices]
        poset = families.digraph_poset(vertices, edges, max_size=limit)
    elif kind == "even-cycle":
        _need(args, "n")
        poset, subset = families.even_cycle_digraph(args.n, max_size=limit)
    elif kind == "complete-bipartite":
        _need(args, "m", "n")
        poset, subset, _ = families.complete_bipartite_digraph(args.m, args.n, max_size=limit)
    else:
        _need(args, "n")
        poset = families.type_a_root_poset(args.n, max_size=limit)

    if subset is not None:
        print(f"# distinguished subset: {','.join(subset)}", file=sys.stderr)
    if args.format == "dot":
        _emit(args, poset_dot(poset))
    else:
        _emit(args, _dumps(poset.to_json()))
    return 0


def cmd_compute(args: argparse.Namespace) -> int:
    poset = _load_poset(args)
    if not args.subset:
        raise InputError("--subset is required")
    subset = resolve_subset(poset, args.subset)
    result = scarf(poset, subset, apex_in_boundary=not args.no_apex)
    if args.format == "dot":
        _emit(args, complex_dot(result.complex))
    else:
        _emit(args, _dumps(result.to_json(with_witnesses=args.witnesses)))
    return 0


def cmd_oracle_check(args: argparse.Namespace) -> int:
    poset = _load_poset(args)
    if not args.subset:
        raise InputError("--subset is required")
    subset = resolve_subset(poset, args.subset)
    apex = not args.no_apex
    engine = closed_faces(scarf(poset, subset, apex).complex)
    oracle = oracle_scarf(poset, subset, apex, max_subset=_limits(args)["oracle"])
    agree = engine == oracle
    report = {
        "agree": agree,
        "engine_faces": [list(f) for f in engine],
        "oracle_faces": [list(f) for f in oracle],
    }
    _emit(args, _dumps(report))
    if not agree:
        print("oracle mismatch", file=sys.stderr)
    return 0 if agree else 1


def cmd_realize(args: argparse.Namespace) -> int:
    complex_ = _load_complex(args)
    out = realize_complex(complex_, args.sinks_per_facet)
    if args.format == "dot":
        _emit(args, poset_dot(out.to_poset(), name="realization"))
    elif args.as_poset:
        _emit(args, _dumps(out.to_poset_json()))
    else:
        _emit(args, out.dumps())
    if args.roundtrip:
        report = roundtrip_verify(complex_, args.sinks_per_facet, max_vertices=_limits(args)["iso"])
        status = "pass" if report.passed else "FAIL"
        print(f"round trip: {status}", file=sys.stderr)
        return 0 if report.passed else 1
    return 0


def cmd_roundtrip(args: argparse.Namespace) -> int:
    complex_ = _load_complex(args)
    report = roundtrip_verify(complex_, args.sinks_per_facet, max_vertices=_limits(args)["iso"])
    _emit(args, _dumps(report.to_json()))
    return 0 if report.passed else 1


def cmd_render(args: argparse.Namespace) -> int:
    if args.poset:
        _emit(args, poset_dot(_load_poset(args)))
    elif args.complex:
        _emit(args, complex_dot(_load_complex(args)))
    else:
        raise InputError("render needs --poset or --complex")
    return 0


def cmd_paper_suite(args: argparse.Namespace) -> int:
    try:
        report = run_suite(args.filter, args.strict)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(args, report.format())
    return 0 if report.ok else 1


def cmd_sum(args: argparse.Namespace) -> int:
    if not args.poset or len(args.poset) != 2:
        raise InputError("sum needs exactly two --poset files")
    limit = _limits(args)["universe"]
    p, q = (Poset.from_json(_read_json(path), max_size=limit) for path in args.poset)
    combine = families.direct_sum if args.kind == "direct" else families.ordinal_sum
    _emit(args, _dumps(combine(p, q).to_json()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scarfposet", description="Scarf complexes of finite posets."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("-o", "--output", metavar="FILE", help="output file (default stdout)")
        p.add_argument("--force", action="store_true", help="lift size guards")
        return p

    p = add("family", "build a poset family as poset JSON")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--generators", metavar="CSV",
                   help="integers (divisibility) or labels (antichain, extra digraph vertices)")
    p.add_argument("--sets", metavar="SETS", help="powerset family, e.g. '1;2;1,3'")
    p.add_argument("--finite-ambient", action="store_true",
                   help="powerset: do not mark subsets as having outside covers")
    p.add_argument("--edges", metavar="CSV", help="digraph edges, e.g. 'a>b,b>c'")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_family)

    p = add("compute", "compute the Scarf complex of a poset")
    p.add_argument("--poset", metavar="FILE")
    p.add_argument("--subset", metavar="CSV")
    p.add_argument("--no-apex", action="store_true",
                   help="do not force the apex into its own boundary")
    p.add_argument("--witnesses", action="store_true", help="attach one witness per facet")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_compute)

    p = add("oracle-check", "compare the engine with brute-force enumeration")
    p.add_argument("--poset", metavar="FILE")
    p.add_argument("--subset", metavar="CSV")
    p.add_argument("--no-apex", action="store_true")
    p.set_defaults(func=cmd_oracle_check)

    p = add("realize", "realize a complex as a bipartite digraph")
    p.add_argument("--complex", metavar="FILE")
    p.add_argument("--sinks-per-facet", type=int, default=2)
    p.add_argument("--roundtrip", action="store_true", help="also verify the round trip")
    p.add_argument("--as-poset", action="store_true", help="emit poset JSON instead")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=cmd_realize)

    p = add("roundtrip", "realize a complex and check its Scarf complex matches")
    p.add_argument("--complex", metavar="FILE")
    p.add_argument("--sinks-per-facet", type=int, default=2)
    p.set_defaults(func=cmd_roundtrip)

    p = add("render", "render a poset or complex as DOT")
    p.add_argument("--poset", metavar="FILE")
    p.add_argument("--complex", metavar="FILE")
    p.add_argument("--format", choices=["dot"], default="dot")
    p.set_defaults(func=cmd_render)

    p = add("paper-suite", "run the reproduction checks")
    p.add_argument("--strict", action="store_true",
                   help="count expected divergences as failures")
    p.add_argument("--filter", metavar="NAME", help=f"one of: {', '.join(GROUPS)}")
    p.set_defaults(func=cmd_paper_suite)

    p = add("sum", "direct or ordinal sum of two posets")
    p.add_argument("--kind", choices=["direct", "ordinal"], default="direct")
    p.add_argument("--poset", metavar="FILE", action="append")
    p.set_defaults(func=cmd_sum)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (ScarfError, InputError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
