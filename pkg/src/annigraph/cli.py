"""Command line interface.

Exit status: 0 when every applicable theorem check holds, 1 when some check
fails (the witness is printed), 2 on usage or ring-specification errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .corpus import FAMILIES, CorpusConfig, generate_corpus
from .errors import AnnigraphError
from .graphs import (
    GraphKind,
    build_graph,
    extra_edges,
    shape_summary,
    to_dot,
)
from .ideals import (
    annihilating_ideal_vertices,
    annihilator,
    enumerate_ideals,
    is_local,
    is_nilpotent_ideal,
    is_prime_ideal,
    is_principal_ideal_ring,
    minimal_primes,
    principal_ideal,
)
from .ring import FiniteRing, is_reduced, is_zr_ideal, nilradical, zero_divisor_set
from .spec import ring_from_text
from .verify import Status, TheoremId, VerificationReport, run_all, run_corpus


def _elements(ring: FiniteRing, elems) -> str:
    return "{" + ", ".join(ring.names[x] for x in elems) + "}"


def cmd_info(ring: FiniteRing, args) -> int:
    lattice = enumerate_ideals(ring)
    rows = [
        ("ring", ring.label),
        ("order", ring.order),
        ("reduced", is_reduced(ring)),
        ("Nil(R)", _elements(ring, nilradical(ring))),
        ("Z(R)", _elements(ring, zero_divisor_set(ring))),
        ("Z(R) is an ideal", is_zr_ideal(ring)),
        ("local", is_local(ring)),
        ("principal ideal ring", is_principal_ideal_ring(ring)),
        ("|Min(R)|", len(minimal_primes(ring))),
        ("ideals", len(lattice)),
        ("|A(R)*|", len(annihilating_ideal_vertices(ring))),
    ]
    for key, value in rows:
        print(f"{key}: {str(value).lower() if isinstance(value, bool) else value}")
    return 0


def cmd_ideals(ring: FiniteRing, args) -> int:
    lattice = enumerate_ideals(ring)
    principals = {principal_ideal(ring, x).mask for x in range(ring.order)}
    print(f"{ring.label}: {len(lattice)} ideals")
    for k, ideal in enumerate(lattice):
        flags = []
        if ideal.is_zero:
            flags.append("zero")
        elif ideal.is_whole:
            flags.append("whole")
        elif not annihilator(ideal).is_zero:
            flags.append("vertex")
        if ideal.mask in principals:
            flags.append("principal")
        if ideal in lattice.minimal:
            flags.append("minimal")
        if ideal in lattice.maximal:
            flags.append("maximal")
        if is_prime_ideal(ring, ideal):
            flags.append("prime")
        if not ideal.is_zero and is_nilpotent_ideal(ideal):
            flags.append("nilpotent")
        print(f"  I{k} size={len(ideal)} {ideal.describe()} [{' '.join(flags)}]")
    return 0


def _kinds(choice: str) -> list[GraphKind]:
    return [GraphKind.AG, GraphKind.AI] if choice == "both" else [GraphKind(choice.upper())]


def cmd_graph(ring: FiniteRing, args) -> int:
    dots = []
    for kind in _kinds(args.kind):
        g = build_graph(ring, kind)
        print(f"{kind.title} of {ring.label}")
        print(shape_summary(g))
        print(f"vertices: {g.order}")
        for k, v in enumerate(g.vertices):
            print(f"  v{k} {v.describe()}")
        print(f"edges: {g.edge_count}")
        for a, b in g.edges():
            print(f"  v{a} -- v{b}")
        dots.append(to_dot(g))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write("".join(dots))
    return 0


def cmd_compare(ring: FiniteRing, args) -> int:
    extra = extra_edges(ring)
    ag = build_graph(ring, GraphKind.AG)
    ai = build_graph(ring, GraphKind.AI)
    print(f"{ring.label}: AG {shape_summary(ag)}")
    print(f"{ring.label}: A_I {shape_summary(ai)}")
    if not extra:
        print("A_I(R) = AG(R): no extra edges")
        return 0
    print(f"extra edges (in A_I(R), not in AG(R)): {len(extra)}")
    for a, b in extra:
        print(f"  {a.describe()} -- {b.describe()}")
    return 0


def _print_report(r: VerificationReport) -> None:
    line = f"{r.ring}\t{r.theorem.value}\t{r.status.value}"
    if r.witness is not None:
        line += "\twitness=" + json.dumps(r.witness.to_dict(), sort_keys=True)
    print(line)


def _write_json(path: str, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def cmd_verify(args) -> int:
    if args.corpus is not None:
        families = FAMILIES if args.families is None else frozenset(args.families.split(","))
        cfg = CorpusConfig(args.corpus, families, args.max_poly_degree)
        summary = run_corpus(generate_corpus(cfg), jobs=args.jobs)
        print(f"corpus: {len(summary.labels)} rings, max order {args.corpus}")
        print(f"{'theorem':<22}{'holds':>8}{'fails':>8}{'n/a':>8}")
        for theorem, c in summary.counts.items():
            print(f"{theorem:<22}{c['holds']:>8}{c['fails']:>8}{c['not-applicable']:>8}")
        for r in summary.failures:
            _print_report(r)
        if args.json:
            _write_json(args.json, summary.to_dict())
        print("result: " + ("all checks hold" if summary.ok else f"{len(summary.failures)} failures"))
        return 0 if summary.ok else 1

    if args.spec is None:
        raise _Usage("verify needs a ring specification or --corpus")
    ring = ring_from_text(args.spec)
    theorems = None if args.theorem is None else [args.theorem]
    reports = run_all(ring, theorems)
    for r in reports:
        _print_report(r)
    if args.json:
        _write_json(args.json, {
            "corpus": [{"label": ring.label, "order": ring.order}],
            "reports": [{k: v for k, v in r.to_dict().items() if k != "elapsed"} for r in reports],
            "failures": [
                {"ring": r.ring, "theorem": r.theorem.value, "witness": r.witness.to_dict()}
                for r in reports if r.status is Status.FAILS
            ],
        })
    return 1 if any(r.status is Status.FAILS for r in reports) else 0


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="annigraph",
        description="Annihilating-ideal and annihilator-ideal graphs of finite commutative rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, text in [
        ("info", "ring summary: reducedness, nilradical, zero divisors, ideal count"),
        ("ideals", "list the ideal lattice"),
        ("compare", "list edges of A_I(R) that are not edges of AG(R)"),
    ]:
        p = sub.add_parser(name, help=text)
        p.add_argument("spec", help='ring specification, e.g. "Z2 x Z4"')

    p = sub.add_parser("graph", help="shape, girth, diameter and edges of AG(R) / A_I(R)")
    p.add_argument("spec")
    p.add_argument("--kind", choices=["ai", "ag", "both"], default="both")
    p.add_argument("--dot", metavar="FILE", help="also write Graphviz DOT to FILE")

    p = sub.add_parser("verify", help="check the theorems on one ring or on a generated corpus")
    p.add_argument("spec", nargs="?")
    p.add_argument("--theorem", choices=[t.value for t in TheoremId])
    p.add_argument("--corpus", type=int, metavar="MAX_ORDER")
    p.add_argument("--families", help=f"comma-separated subset of {','.join(sorted(FAMILIES))}")
    p.add_argument("--max-poly-degree", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", metavar="FILE")
    return parser


_RING_COMMANDS = {"info": cmd_info, "ideals": cmd_ideals, "graph": cmd_graph, "compare": cmd_compare}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        ring = ring_from_text(args.spec)
        return _RING_COMMANDS[args.command](ring, args)
    except (AnnigraphError, _Usage, ValueError) as exc:
        print(f"annigraph: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
