"""Command-line surface: graph ingestion, computations, and verification suites.

Exit codes: 0 success, 2 malformed input, 3 precondition violation,
4 verification failure.  All JSON output is canonical (sorted keys, fixed
separators), so identical inputs produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import corpus
from .betti import betti_table, hs_oracle
from .edge_ideals import (
    comp_edge_ideal,
    comp_power_ideal,
    pd_formula,
    pd_of_power,
    power_generators,
    power_set_map,
    set_cycle,
    set_tree,
    set_via_even_connected,
)
from .errors import InputFormatError, OracleCapError, PreconditionError
from .graphs import (
    Graph,
    graph_from_dict,
    invert_permutation,
    is_connected,
    is_cycle_graph,
    is_tree,
    lex_labeled_copy,
)
from .monomials import MonomialIdeal, VeroneseSpec, veronese_type
from .shifts import (
    caterpillar_realization,
    check_hs_maximal_identity,
    hs_closed_form,
    hs_cycle_formula,
    hs_linear_quotients,
    hs_power,
    hs_tree_formula,
    j_ideal,
    k_ideal,
    veronese_structure_check,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_VERIFICATION = 4


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _load_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from exc
    graph, _ = graph_from_dict(data)
    return graph


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise PreconditionError("this command requires a connected graph")


def _parse_int_vector(text: str, name: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError as exc:
        raise InputFormatError(f"{name} must be a comma-separated integer list") from exc


def _print_ideal(ideal: MonomialIdeal, fmt: str) -> None:
    if fmt == "json":
        print(_dump(ideal.to_dict()))
    else:
        print(f"{ideal}  [{ideal.num_gens()} generators, n={ideal.n}]")


def cmd_ideal(args) -> int:
    g = _load_graph(args.graph)
    if not g.edges:
        raise InputFormatError("graph has no edges; the complementary edge ideal is undefined")
    if args.s == 1:
        ideal = comp_edge_ideal(g)
    else:
        _require_connected(g)
        ideal = comp_power_ideal(g, args.s)
    _print_ideal(ideal, args.format)
    return EXIT_OK


def cmd_pd(args) -> int:
    g = _load_graph(args.graph)
    _require_connected(g)
    closed = is_tree(g) or is_cycle_graph(g)
    rows = []
    mismatch = False
    for s in range(1, args.s_max + 1):
        row = {"s": s, "pd": pd_of_power(g, s)}
        if closed:
            row["closed_form"] = pd_formula(g, s)
            if row["closed_form"] != row["pd"]:
                mismatch = True
                row["mismatch"] = True
        rows.append(row)
    if args.format == "json":
        for row in rows:
            print(_dump(row))
    else:
        for row in rows:
            extra = f"  closed-form {row['closed_form']}" if closed else ""
            flag = "  MISMATCH" if row.get("mismatch") else ""
            print(f"s={row['s']}  pd={row['pd']}{extra}{flag}")
    return EXIT_VERIFICATION if mismatch else EXIT_OK


def cmd_hs(args) -> int:
    g = _load_graph(args.graph)
    _require_connected(g)
    if args.i < 0 or args.s < 1:
        raise PreconditionError("hs requires i >= 0 and s >= 1")
    ideal = hs_power(g, args.i, args.s)
    _print_ideal(ideal, args.format)
    if args.closed_form:
        formula = hs_closed_form(g, args.i, args.s)
        if formula is None:
            print("closed form: not applicable", file=sys.stderr)
        elif formula != ideal:
            print("closed form disagrees with linear quotients", file=sys.stderr)
            return EXIT_VERIFICATION
        else:
            print("closed form agrees", file=sys.stderr)
    return EXIT_OK


def cmd_setmap(args) -> int:
    g = _load_graph(args.graph)
    _require_connected(g)
    labeled, perm = lex_labeled_copy(g)
    inv = invert_permutation(perm)
    facts = power_generators(labeled, args.s)
    sm = power_set_map(labeled, args.s)
    for fact, su in zip(facts, sm.sets):
        monomial = [0] * g.n
        for v, e in enumerate(fact.monomial.exps, start=1):
            monomial[inv[v - 1] - 1] = e
        edges = sorted(
            tuple(sorted((inv[a - 1], inv[b - 1]))) for a, b in fact.edges.as_edge_list()
        )
        record = {
            "monomial": monomial,
            "edges": [list(e) for e in edges],
            "set": sorted(inv[v - 1] for v in su),
        }
        if args.format == "json":
            print(_dump(record))
        else:
            print(record)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    if not g.edges:
        raise InputFormatError("graph has no edges")
    if args.s == 1:
        ideal = comp_edge_ideal(g)
    else:
        _require_connected(g)
        ideal = comp_power_ideal(g, args.s)
    if args.i is not None:
        _print_ideal(hs_oracle(ideal, args.i), args.format)
        return EXIT_OK
    table = betti_table(ideal, gen_cap=args.gen_cap)
    doc = table.to_dict(ideal)
    if args.format == "json":
        print(_dump(doc))
    else:
        for row in doc["entries"]:
            print(f"i={row['i']}  deg={row['deg']}  beta={row['beta']}")
    return EXIT_OK


def cmd_caterpillar(args) -> int:
    profile = _parse_int_vector(args.profile, "--profile")
    if not profile or any(x < 1 for x in profile):
        raise PreconditionError("profile entries must be positive")
    if not 1 <= args.d <= sum(profile):
        raise PreconditionError(f"degree must lie in [1, {sum(profile)}]")
    tree, content, verdict = caterpillar_realization(VeroneseSpec(profile, args.d))
    doc = {
        "profile": list(profile),
        "d": args.d,
        "tree_edges": [list(e) for e in tree.graph.edges],
        "content": list(content.exps),
        "verdict": verdict,
    }
    if args.format == "json":
        print(_dump(doc))
    else:
        print(f"tree edges: {doc['tree_edges']}")
        print(f"content u = {content}")
        print(f"verdict: {verdict}")
    return EXIT_OK if verdict else EXIT_VERIFICATION


def cmd_veronese(args) -> int:
    caps = _parse_int_vector(args.caps, "--caps")
    if args.d < 0 or args.d > sum(caps):
        raise PreconditionError(f"degree must lie in [0, {sum(caps)}]")
    _print_ideal(veronese_type(VeroneseSpec(caps, args.d)), args.format)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------


def _tree_corpus(max_n: int, seed: int, cap: int = 250):
    for n in range(2, max_n + 1):
        trees = list(corpus.distance_labeled_trees(n))
        if len(trees) > cap:
            trees = random.Random(seed).sample(trees, cap)
            trees.sort(key=lambda t: t.graph.edges)
        yield from trees


def _cycle_corpus(max_n: int):
    yield from corpus.cycles(max_n)


def _all_profiles(total_max: int):
    def compositions(rem, prefix):
        if rem == 0:
            yield prefix
            return
        for first in range(1, rem + 1):
            yield from compositions(rem - first, prefix + (first,))

    for total in range(1, total_max + 1):
        yield from compositions(total, ())


def _suite_set_maps(max_n, seed, oracle_on):
    for t in _tree_corpus(max_n, seed):
        g = t.graph
        for s in range(1, 4):
            facts = power_generators(g, s)
            sm = power_set_map(g, s)
            ok = all(
                su == set_via_even_connected(g, f) == set_tree(t, f)
                for f, su in zip(facts, sm.sets)
            )
            yield {
                "check": "set-maps/tree",
                "instance": {"edges": [list(e) for e in g.edges], "n": g.n, "s": s},
                "verdict": ok,
                "lhs_gens": len(facts),
                "rhs_gens": len(facts),
            }
    for c in _cycle_corpus(max_n):
        g = c.graph
        for s in range(1, 4):
            facts = power_generators(g, s)
            sm = power_set_map(g, s)
            ok = all(
                su == set_via_even_connected(g, f) == set_cycle(c, f)
                for f, su in zip(facts, sm.sets)
            )
            yield {
                "check": "set-maps/cycle",
                "instance": {"n": g.n, "s": s},
                "verdict": ok,
                "lhs_gens": len(facts),
                "rhs_gens": len(facts),
            }


def _suite_hs_formulas(max_n, seed, oracle_on):
    for t in _tree_corpus(max_n, seed):
        for s in range(1, 4):
            sm = power_set_map(t.graph, s)
            for i in range(1, s + 1):
                lhs = hs_tree_formula(t, i, s)
                rhs = hs_linear_quotients(sm, i)
                yield {
                    "check": "hs-formulas/tree",
                    "instance": {
                        "edges": [list(e) for e in t.graph.edges],
                        "n": t.n,
                        "i": i,
                        "s": s,
                    },
                    "verdict": lhs == rhs,
                    "lhs_gens": lhs.num_gens(),
                    "rhs_gens": rhs.num_gens(),
                }
    for c in _cycle_corpus(max_n):
        for s in range(1, 4):
            sm = power_set_map(c.graph, s)
            for i in range(1, c.n):
                if s < i // 2:
                    continue
                lhs = hs_cycle_formula(c, i, s)
                rhs = hs_linear_quotients(sm, i)
                yield {
                    "check": "hs-formulas/cycle",
                    "instance": {"n": c.n, "i": i, "s": s},
                    "verdict": lhs == rhs,
                    "lhs_gens": lhs.num_gens(),
                    "rhs_gens": rhs.num_gens(),
                }


def _suite_maximal_identity(max_n, seed, oracle_on):
    graphs = [t.graph for t in _tree_corpus(min(max_n, 5), seed)]
    graphs += [c.graph for c in _cycle_corpus(min(max_n, 5))]
    for g in graphs:
        for i in range(1, g.n + 1):
            instance = {"edges": [list(e) for e in g.edges], "n": g.n, "i": i}
            if not oracle_on:
                yield {
                    "check": "maximal-identity",
                    "instance": instance,
                    "verdict": None,
                    "skipped": True,
                }
                continue
            ideal = comp_edge_ideal(g)
            result = check_hs_maximal_identity(ideal, i, set_map=power_set_map(g, 1))
            yield {
                "check": "maximal-identity",
                "instance": instance,
                "verdict": result.verdict,
                "lhs_gens": (result.hs_i + result.hs_prev_of_max_multiple).num_gens(),
                "rhs_gens": result.target.num_gens(),
            }


def _suite_veronese(max_n, seed, oracle_on):
    for t in _tree_corpus(max_n, seed):
        if t.n < 3:
            continue
        for i in range(1, t.n - 1):
            yield {
                "check": "veronese",
                "instance": {"edges": [list(e) for e in t.graph.edges], "n": t.n, "i": i},
                "verdict": veronese_structure_check(t, i),
                "lhs_gens": j_ideal(t, i).num_gens(),
                "rhs_gens": k_ideal(t, i).num_gens(),
            }


def _suite_caterpillar(max_n, seed, oracle_on):
    for profile in _all_profiles(min(max_n, 5)):
        for d in range(1, sum(profile) + 1):
            spec = VeroneseSpec(profile, d)
            _, _, verdict = caterpillar_realization(spec)
            yield {
                "check": "caterpillar",
                "instance": {"profile": list(profile), "d": d},
                "verdict": verdict,
                "lhs_gens": veronese_type(spec).num_gens(),
                "rhs_gens": veronese_type(spec).num_gens(),
            }


def _suite_monotonicity(max_n, seed, oracle_on):
    # n = 2 yields the unit ideal (pd 0); the 1-or-2 dichotomy starts at n = 3.
    graphs = [t.graph for t in _tree_corpus(max_n, seed) if t.n >= 3]
    graphs += [c.graph for c in _cycle_corpus(max_n)]
    for g in graphs:
        pds = [pd_of_power(g, s) for s in range(1, 5)]
        nondecr = all(a <= b for a, b in zip(pds, pds[1:]))
        first_ok = (pds[0] == 1) == is_tree(g) and pds[0] in (1, 2)
        strict_ok = True
        if g.n >= 3:
            scan = [pd_of_power(g, s) for s in range(1, g.n - 1)]
            strict_ok = all(
                b > a for a, b in zip(scan, scan[1:]) if a < g.n - 2
            )
        yield {
            "check": "monotonicity",
            "instance": {"edges": [list(e) for e in g.edges], "n": g.n},
            "verdict": nondecr and first_ok and strict_ok,
            "lhs_gens": pds[0],
            "rhs_gens": pds[-1],
        }


SUITES = {
    "set-maps": _suite_set_maps,
    "hs-formulas": _suite_hs_formulas,
    "maximal-identity": _suite_maximal_identity,
    "veronese": _suite_veronese,
    "caterpillar": _suite_caterpillar,
    "monotonicity": _suite_monotonicity,
}


def cmd_verify(args) -> int:
    if args.suite == "all":
        names = list(SUITES)
    elif args.suite in SUITES:
        names = [args.suite]
    else:
        raise InputFormatError(
            f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all"
        )
    if not 2 <= args.max_n <= 7:
        raise PreconditionError("--max-n must lie in [2, 7]")
    failed = False
    for name in names:
        for record in SUITES[name](args.max_n, args.seed, not args.no_oracle):
            print(_dump(record))
            if record.get("verdict") is False:
                failed = True
    return EXIT_VERIFICATION if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homshift",
        description="Homological shift ideals and projective dimensions of "
        "complementary edge ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, graph=True):
        if graph:
            p.add_argument("--graph", required=True, help="path to a graph JSON file")
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )

    p = sub.add_parser("ideal", help="print the complementary edge ideal or a power")
    add_common(p)
    p.add_argument("--s", type=int, default=1, help="power (default 1)")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("pd", help="projective dimension of powers")
    add_common(p)
    p.add_argument("--s-max", type=int, default=4, help="scan powers 1..s_max")
    p.set_defaults(func=cmd_pd)

    p = sub.add_parser("hs", help="a homological shift ideal of a power")
    add_common(p)
    p.add_argument("--i", type=int, required=True, help="homological index")
    p.add_argument("--s", type=int, default=1, help="power (default 1)")
    p.add_argument(
        "--closed-form",
        action="store_true",
        help="also evaluate the tree/cycle closed form and compare",
    )
    p.set_defaults(func=cmd_hs)

    p = sub.add_parser("setmap", help="per-generator colon sets of a power")
    add_common(p)
    p.add_argument("--s", type=int, default=1, help="power (default 1)")
    p.set_defaults(func=cmd_setmap)

    p = sub.add_parser("oracle", help="brute-force Betti table or shift ideal")
    add_common(p)
    p.add_argument("--s", type=int, default=1, help="power (default 1)")
    p.add_argument("--i", type=int, default=None, help="print HS_i instead of the table")
    p.add_argument("--gen-cap", type=int, default=60, help="refuse ideals above this generator count")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run a verification suite over the built-in corpus")
    add_common(p, graph=False)
    p.add_argument(
        "--suite",
        default="all",
        help=f"one of: {', '.join(SUITES)}, all (default all)",
    )
    p.add_argument("--max-n", type=int, default=5, help="largest vertex count (<= 7)")
    p.add_argument(
        "--no-oracle",
        action="store_true",
        help="skip Betti-oracle-backed checks, reporting them as skipped",
    )
    p.add_argument("--seed", type=int, default=0, help="seed for corpus sampling")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("caterpillar", help="realize a Veronese-type ideal on a caterpillar")
    add_common(p, graph=False)
    p.add_argument("--profile", required=True, help="comma-separated positive caps")
    p.add_argument("--d", type=int, required=True, help="Veronese degree")
    p.set_defaults(func=cmd_caterpillar)

    p = sub.add_parser("veronese", help="print an ideal of Veronese type")
    add_common(p, graph=False)
    p.add_argument("--caps", required=True, help="comma-separated cap vector")
    p.add_argument("--d", type=int, required=True, help="degree")
    p.set_defaults(func=cmd_veronese)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"precondition violation: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OracleCapError as exc:
        print(f"precondition violation: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
