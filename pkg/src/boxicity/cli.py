"""Command-line entry point.

Exit status: 0 computed / accepted, 2 refuted or decided "no",
3 input or usage error, 4 work budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from typing import Sequence

from . import catalog, coline, linebox, oracle
from .certify import Cover, CoverMember, read_cover, verify_cover, write_cover
from .errors import BudgetExceeded, InputError
from .graph import Graph, line_graph, read_graph, serialize_edge_list
from .interval_order import DEFAULT_BUDGET, default_jobs, enumerate_maximal_io

EXIT_OK = 0
EXIT_NO = 2
EXIT_INPUT = 3
EXIT_BUDGET = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2, which means "no" here
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _emit(cover: Cover, out: str | None) -> None:
    if out:
        write_cover(cover, out)
        print(f"certificate written to {out}")


def cmd_kneser(args: argparse.Namespace) -> int:
    res = coline.kneser_boxicity(args.n, refute_up_to=args.refute_up_to, budget=args.budget, jobs=args.jobs)
    print(f"KG({args.n},2)")
    print(f"boxicity {res.value}")
    print(f"upper bound: {len(res.cover)}-member interval-order cover of L(K_{args.n}), verified")
    if res.lower_bound_verified:
        print(f"lower bound: no {args.n - 3}-member cover exists (exhaustive search)")
    else:
        print("lower bound: not recomputed at this size")
    _emit(res.cover, args.out)
    return EXIT_OK


def cmd_coline_decide(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    cover = coline.decide_boxicity_coline(g, args.k, budget=args.budget, jobs=args.jobs)
    if cover is not None:
        print(f"boxi(co-L(G)) <= {args.k}: cover with {len(cover)} members of {len(cover.target)} edges")
        _emit(cover, args.out)
        return EXIT_OK
    fam = coline.family_b(g, args.budget)
    target = line_graph(g).m
    biggest = max((len(fm.edges) for fm in fam), default=0)
    print(f"boxi(co-L(G)) > {args.k}")
    print(f"|E(L(G))| = {target}; {len(fam)} maximal interval-order subgraphs, largest has {biggest} edges")
    if args.k * biggest == target:
        print(f"{args.k} x {biggest} = {target}: any cover would have to be pairwise edge-disjoint")
    elif args.k * biggest < target:
        print(f"{args.k} x {biggest} < {target}: too few edges for any cover")
    print(f"exhaustive search over {args.k}-subfamilies: no cover")
    return EXIT_NO


def _completion_graph_text(g: Graph, comp: coline.CompletionResult) -> str:
    lg = line_graph(g)
    co = set(_co_line_edges(lg)) | set(comp.added_edges)
    return serialize_edge_list(Graph.from_edges(lg.n, co))


def _co_line_edges(lg: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(lg.n) for v in range(u + 1, lg.n) if not lg.adjacent(u, v)]


def cmd_igc(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    comp = coline.igc_minimum_completion(g, args.budget)
    print(f"minimum interval completion of co-L(G): {comp.total_edges} edges ({len(comp.added_edges)} added)")
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(_completion_graph_text(g, comp))
        print(f"completion written to {args.out}")
    return EXIT_OK


def cmd_completions(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    fam = coline.family_b(g, args.budget)
    lg = line_graph(g)
    pairs = lg.n * (lg.n - 1) // 2
    print(f"{len(fam)} minimal interval completions of co-L(G)")
    for fm in fam:
        print(f"  {pairs - len(fm.edges):6d} edges  (+{lg.m - len(fm.edges)})  {fm.tag}")
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    fam = catalog.enumerate_catalog(args.n)
    kinds = Counter(d.kind for d, _ in fam)
    print(f"{len(fam)} maximal interval-order subgraphs of L(K_{args.n})")
    for kind in catalog.KINDS:
        print(f"  {kind:4s} {kinds[kind]:7d} members of size {catalog.expected_size(kind, args.n)}")
    if args.list:
        for d, edges in fam:
            print(f"{d}\t{len(edges)}")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    fam = enumerate_maximal_io(g, args.budget, args.jobs)
    print(f"{len(fam)} maximal interval-order subgraphs")
    sizes = Counter(len(e) for e, _ in fam)
    for size in sorted(sizes, reverse=True):
        print(f"  {sizes[size]} of size {size}")
    cover = Cover(g.edge_set(), [CoverMember(e, c.ordering) for e, c in fam])
    _emit(cover, args.out)
    return EXIT_OK


def cmd_line_upper(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    if args.sample is not None and args.seed is None:
        raise InputError("--sample requires --seed")
    cover = linebox.line_upper_cover(g, samples=args.sample, seed=args.seed)
    bound = linebox.upper_bound(g.m)
    print(f"boxi(L(G)) <= {len(cover)} (general bound {bound}); covers {len(cover.target)} edges of co-L(G)")
    _emit(cover, args.out)
    return EXIT_OK


def cmd_refute(args: argparse.Namespace) -> int:
    with open(args.perms, encoding="utf-8") as fh:
        perms = linebox.parse_perms(fh.read())
    (a, c), (b, d) = linebox.refute_permutation_cover(args.n, perms)
    print(f"{len(perms)} permutations do not cover co-L(K_{args.n})")
    print(f"uncovered edge: {a}-{c} | {b}-{d}")
    return EXIT_NO


def cmd_oracle(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    res = oracle.brute_boxicity(g, cap=args.cap, budget=args.budget, jobs=args.jobs)
    if res is None:
        print(f"boxicity > {args.cap}")
        return EXIT_NO
    value, cover = res
    print(f"boxicity {value}")
    _emit(cover, args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    target = read_graph(args.target).edge_set()
    cover, announced, flag = read_cover(args.cover, target)
    ok = verify_cover(target, cover)
    if announced != len(target):
        print(f"target size mismatch: file says {announced}, target has {len(target)}")
        ok = False
    print(f"{len(cover)} members; {'complete, every member certified' if ok else 'REJECTED'}")
    if ok and not flag:
        print("note: file marks the cover incomplete")
    return EXIT_OK if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="boxicity", description="Exact boxicity tools via interval-order subgraphs.")
    p.add_argument("--jobs", type=int, default=default_jobs(), help="worker processes (default: all CPUs)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search work budget")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("kneser-boxicity", help="boxi(KG(n,2)) with certificates")
    s.add_argument("n", type=int)
    s.add_argument("--refute-up-to", type=int, default=6)
    s.add_argument("--out")
    s.set_defaults(func=cmd_kneser)

    s = sub.add_parser("coline-decide", help="decide boxi(co-L(G)) <= k")
    s.add_argument("--graph", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_coline_decide)

    s = sub.add_parser("igc", help="minimum interval completion of co-L(G)")
    s.add_argument("--graph", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_igc)

    s = sub.add_parser("completions", help="all minimal interval completions of co-L(G)")
    s.add_argument("--graph", required=True)
    s.set_defaults(func=cmd_completions)

    s = sub.add_parser("catalog", help="closed-form maximal interval-order subgraphs of L(K_n)")
    s.add_argument("n", type=int)
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("enumerate-io", help="all maximal interval-order subgraphs of a graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("line-upper", help="interval-order cover of co-L(G) from permutations")
    s.add_argument("--graph", required=True)
    s.add_argument("--sample", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_line_upper)

    s = sub.add_parser("refute-perms", help="uncovered co-L(K_n) edge for few permutations")
    s.add_argument("n", type=int)
    s.add_argument("--perms", required=True)
    s.set_defaults(func=cmd_refute)

    s = sub.add_parser("oracle", help="brute-force boxicity of a small graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--cap", type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("verify", help="independently check a cover certificate")
    s.add_argument("--target", required=True)
    s.add_argument("--cover", required=True)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
