"""Command-line front end: ``hyperchrome <command> FILE [options]``.

Exit codes: 0 success, 1 verification failure, 2 input or budget error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
import time
from typing import Optional, Sequence

from .chromatic import (
    ColoringBudgetExceeded,
    broken_cycle_expansion,
    chromatic_subset_expansion,
    count_proper_colorings,
)
from .cycles import block_pairing_failures, broken_cycles, enumerate_delta_cycles
from .fileformat import HypergraphParseError, load_hypergraph
from .generalized import INTEGERS, POLYNOMIALS, signed_table_function, verify_generalized_theorem
from .generators import random_hypergraph, random_order
from .hypergraph import (
    EdgeCapExceeded,
    EdgeOrder,
    Hypergraph,
    HypergraphError,
    mask_edges,
    require_within_cap,
    spanning_component_count,
)
from .polynomial import Polynomial, evaluate

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _parse_ids(text: str, what: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(" ", "").split(",")]
    except ValueError:
        raise InputError(f"{what} must be comma-separated edge indices, got {text!r}") from None


def _order(G: Hypergraph, spec: Optional[str]) -> EdgeOrder:
    if spec is None:
        return EdgeOrder.identity(G.edge_count)
    try:
        return EdgeOrder.from_sequence(_parse_ids(spec, "--order")).check_for(G)
    except ValueError as exc:
        raise InputError(f"invalid --order: {exc}") from None


def _subset(G: Hypergraph, spec: Optional[str]) -> int:
    if spec is None:
        return G.all_edges
    ids = _parse_ids(spec, "--subset")
    bad = [e for e in ids if not 0 <= e < G.edge_count]
    if bad:
        raise InputError(f"--subset refers to unknown edges {bad}")
    mask = 0
    for e in ids:
        mask |= 1 << e
    return mask


def _edge_set_text(G: Hypergraph, mask: int) -> str:
    ids = mask_edges(mask)
    index = "{" + ",".join(map(str, ids)) + "}"
    verts = "{" + ", ".join("{" + ",".join(G.edge_labels(e)) + "}" for e in ids) + "}"
    return f"{index} = {verts}"


def _emit(data, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


# -- commands ------------------------------------------------------------------

def cmd_components(args) -> int:
    G = load_hypergraph(args.file)
    print(spanning_component_count(G, _subset(G, args.subset)))
    return EXIT_OK


def cmd_delta_cycles(args) -> int:
    G = load_hypergraph(args.file)
    cycles = enumerate_delta_cycles(G)
    data = [
        {"edges": list(C.edge_ids), "vertex_sets": [G.edge_labels(e) for e in C.edge_ids]}
        for C in cycles
    ]
    _emit(data, args.json, "\n".join(f"edges {_edge_set_text(G, C.edges)}" for C in cycles))
    return EXIT_OK


def cmd_broken_cycles(args) -> int:
    G = load_hypergraph(args.file)
    broken = broken_cycles(G, _order(G, args.order))
    data = [{"edges": list(mask_edges(B))} for B in broken]
    _emit(data, args.json, "\n".join(_edge_set_text(G, B) for B in broken))
    return EXIT_OK


def cmd_chromatic(args) -> int:
    G = load_hypergraph(args.file)
    order = _order(G, args.order)
    if args.method == "oracle":
        max_k = G.vertex_count if args.max_k is None else args.max_k
        values = {k: count_proper_colorings(G, k) for k in range(max_k + 1)}
        data = {"input_digest": G.digest(), "values": {str(k): str(v) for k, v in values.items()}}
        text = "\n".join(f"{k:>3}  {v}" for k, v in values.items())
        _emit(data, args.json, text)
        return EXIT_OK
    if args.method == "subset":
        P = chromatic_subset_expansion(G)
    else:
        P = broken_cycle_expansion(G, order)[0]
    _emit({"input_digest": G.digest(), "polynomial": P.to_json()}, args.json, str(P))
    return EXIT_OK


def _verify(G: Hypergraph, trials: int, seed: int, out) -> bool:
    rng = random.Random(seed)
    require_within_cap(G)
    ok = True

    def report(name: str, passed: bool, detail: str = "") -> None:
        nonlocal ok
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""), file=out)

    P = chromatic_subset_expansion(G)
    try:
        bad = next(
            (k for k in range(G.vertex_count + 1) if evaluate(P, k) != count_proper_colorings(G, k)),
            None,
        )
        report("subset expansion matches coloring counts",
               bad is None, "" if bad is None else f"first mismatch at k={bad}")
    except ColoringBudgetExceeded as exc:
        print(f"SKIP  coloring oracle ({exc})", file=out)

    m = G.edge_count
    if m <= 5:
        orders = [EdgeOrder.from_sequence(p) for p in itertools.permutations(range(m))]
    else:
        orders = [EdgeOrder.identity(m)] + [random_order(m, rng) for _ in range(min(trials, 20))]
    mismatch = next((o for o in orders if broken_cycle_expansion(G, o)[0] != P), None)
    report(f"broken-cycle expansion equals subset expansion ({len(orders)} orders)",
           mismatch is None, "" if mismatch is None else f"order {list(mismatch.sequence())}")

    failures = block_pairing_failures(G, EdgeOrder.identity(m), upper_closers=True)
    report("block pairing with upper closing edges (listing order)", not failures,
           "" if not failures else f"subset {list(mask_edges(failures[0][0]))}, block {failures[0][1]}")

    for t in range(trials):
        order = random_order(m, rng)
        broken = broken_cycles(G, order)
        sel = [B for B in broken if rng.random() < 0.5]
        table = [rng.randint(-9, 9) for _ in range(G.vertex_count + 1)]
        ptable = [Polynomial(rng.randint(-3, 3) for _ in range(3)) for _ in range(G.vertex_count + 1)]
        for grp, tab in ((INTEGERS, table), (POLYNOMIALS, ptable)):
            rep = verify_generalized_theorem(G, order, grp, signed_table_function(tab, grp), sel)
            if not rep:
                report(f"generalized identity, trial {t} ({grp.name})", False,
                       f"order {list(order.sequence())}, selection "
                       f"{[list(mask_edges(B)) for B in sel]}: {rep.summary()}")
                return False
    report(f"generalized identity over {trials} random trials", True)
    return ok


def cmd_verify(args) -> int:
    G = load_hypergraph(args.file)
    passed = _verify(G, args.trials, args.seed, sys.stdout)
    print("verification passed" if passed else "verification FAILED")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_bench(args) -> int:
    if args.random is not None:
        n, m, s = args.random
        G = random_hypergraph(n, m, random.Random(s))
    elif args.file is not None:
        G = load_hypergraph(args.file)
    else:
        raise InputError("bench needs FILE or --random N M SEED")
    order = _order(G, args.order)
    start = time.perf_counter()
    P, admissible = broken_cycle_expansion(G, order)
    elapsed = (time.perf_counter() - start) * 1000
    total = 1 << G.edge_count
    report = {
        "input_digest": G.digest(),
        "method": "broken-cycle",
        "polynomial": P.to_json(),
        "term_counts": {"total": total, "admissible": admissible},
        "pruned_fraction": 1 - admissible / total,
        "elapsed": round(elapsed, 3),
    }
    print(json.dumps(report, indent=2))
    return EXIT_OK


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperchrome",
        description="Chromatic polynomials of hypergraphs via δ-cycles and broken cycles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("components", help="connected components of a spanning subgraph")
    p.add_argument("file")
    p.add_argument("--subset", help="comma-separated edge indices (default: all edges)")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("delta-cycles", help="list all δ-cycles")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_delta_cycles)

    p = sub.add_parser("broken-cycles", help="list broken cycles under an edge order")
    p.add_argument("file")
    p.add_argument("--order", help="edge indices from smallest to largest (default: listing order)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_broken_cycles)

    p = sub.add_parser("chromatic", help="chromatic polynomial or coloring counts")
    p.add_argument("file")
    p.add_argument("--method", choices=["oracle", "subset", "broken-cycle"], default="broken-cycle")
    p.add_argument("--order")
    p.add_argument("--max-k", type=int, help="largest color count for --method oracle (default |V|)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("verify", help="cross-check all methods and the generalized identity")
    p.add_argument("file")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="pruning statistics and timing as JSON")
    p.add_argument("file", nargs="?")
    p.add_argument("--random", nargs=3, type=int, metavar=("N", "M", "SEED"))
    p.add_argument("--order")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HypergraphParseError, HypergraphError, EdgeCapExceeded,
            ColoringBudgetExceeded, InputError, OSError) as exc:
        print(f"hyperchrome: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
