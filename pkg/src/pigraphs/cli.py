"""Command-line interface.

Exit codes: 0 on success (all checks pass), 1 when a verification check
fails, 2 on usage or input errors.
"""

import argparse
import json
import sys

from . import families, graphs, pig, semigroups, skeletal, spectral, verify
from .errors import PigError
from .green import l_classes, r_classes


def _load_semigroup(path: str) -> semigroups.Semigroup:
    with open(path) as fh:
        return semigroups.from_json_dict(json.load(fh))


def _load_graph(path: str) -> graphs.Graph:
    with open(path) as fh:
        return graphs.from_json_dict(json.load(fh))


def _write(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_build(args) -> int:
    if args.family == "isn":
        s = families.symmetric_inverse(args.n)
    elif args.family == "brandt":
        s = families.brandt(families.cyclic_group(args.group_order),
                            args.indices)
    elif args.family == "semilattice":
        s = families.subset_meet_semilattice(args.n)
    elif args.family == "cyclic":
        s = families.cyclic_group(args.n)
    else:
        s = families.left_zero(args.n)
    if args.adjoin_zero:
        s = semigroups.adjoin_zero(s)
    _write(json.dumps(semigroups.to_json_dict(s), indent=2) + "\n", args.out)
    from .semigroups import idempotents
    print(f"order={s.order} zero={s.zero} identity={s.identity} "
          f"idempotents={len(idempotents(s))}", file=sys.stderr)
    return 0


def _build_graph(s, side, variant):
    if variant == "pig":
        return pig.left_pig(s) if side == "left" else pig.right_pig(s)
    g, _ = pig.s_left_pig(s) if side == "left" else pig.s_right_pig(s)
    return g


def cmd_graph(args) -> int:
    s = _load_semigroup(args.input)
    g = _build_graph(s, args.side, args.variant)
    if args.format == "json":
        text = json.dumps(graphs.to_json_dict(g), indent=2) + "\n"
    elif args.format == "dot":
        text = graphs.to_dot(g)
    else:
        text = graphs.to_edge_list(g)
    _write(text, args.out)
    return 0


def cmd_stats(args) -> int:
    g = _load_graph(args.graph)
    st = graphs.graph_stats(g)
    print(json.dumps({
        "order": g.order,
        "degrees": list(st.degrees),
        "edge_count": st.edge_count,
        "is_connected": st.is_connected,
        "is_complete": st.is_complete,
        "is_null": st.is_null,
        "components": len(graphs.components(g).classes),
    }, indent=2))
    return 0


def cmd_classes(args) -> int:
    s = _load_semigroup(args.input)
    part = l_classes(s) if args.side == "left" else r_classes(s)
    for cid, cls in enumerate(part.classes):
        members = ", ".join(s.label(x) for x in cls)
        print(f"class {cid}: {members}")
    return 0


def cmd_skeletal(args) -> int:
    g = _load_graph(args.graph)
    if args.op == "check":
        if args.map is None:
            print("--map is required for op=check", file=sys.stderr)
            return 2
        with open(args.map) as fh:
            raw = json.load(fh)["map"]
        phi = skeletal.VertexMap(g.order, max(raw) + 1, tuple(raw))
        h, _ = skeletal.quotient_by_partition(
            g, skeletal.Partition(
                tuple(raw),
                tuple(tuple(phi.fibre(v)) for v in range(phi.codomain_order))))
        report = skeletal.verify_skeletal(g, h, phi)
        print(json.dumps({
            "is_skeletal": report.is_skeletal,
            "witness": report.witness,
            "fibre_sizes": list(report.fibre_sizes),
        }, indent=2))
        return 0 if report.is_skeletal else 1
    if args.op == "max":
        h, phi = skeletal.max_skeletal(g)
        print(json.dumps({
            "graph": graphs.to_json_dict(h),
            "map": list(phi.map),
        }, indent=2))
        return 0
    if args.op == "is-skeleton":
        result = skeletal.is_skeleton(g)
        print("skeleton" if result else "has a proper skeletal")
        return 0
    result = skeletal.brute_force_has_proper_skeletal(g)
    print("proper skeletal found" if result else "no proper skeletal")
    return 0


def cmd_spectral(args) -> int:
    g = _load_graph(args.graph)
    if args.twin_report:
        report = spectral.twin_spectral_report(g)
        print(json.dumps({
            "all_pass": report.all_pass,
            "classes": [{
                "vertices": list(c.vertices),
                "size": c.size,
                "degree": c.degree,
                "adjacency_multiplicity": c.adjacency_multiplicity,
                "laplacian_multiplicity": c.laplacian_multiplicity,
                "signless_multiplicity": c.signless_multiplicity,
                "eigenvector_verified": c.eigenvector_verified,
            } for c in report.classes],
        }, indent=2))
        return 0 if report.all_pass else 1
    builders = {
        "A": spectral.adjacency_matrix,
        "L": spectral.laplacian_matrix,
        "Q": spectral.signless_laplacian_matrix,
    }
    m = builders[args.matrix](g)
    if args.lam is None:
        print(json.dumps({"matrix": args.matrix,
                          "rank": spectral.integer_rank(m)}))
    else:
        mult = spectral.eigen_multiplicity(m, args.lam)
        print(json.dumps({"matrix": args.matrix, "eigenvalue": args.lam,
                          "multiplicity": mult}))
    return 0


def cmd_verify(args) -> int:
    results = verify.run_suite(args.suite, n=args.n,
                               group_order=args.group_order,
                               indices=args.indices, seed=args.seed)
    ok = True
    for suite in results:
        for check in suite.checks:
            mark = "PASS" if check.passed else "FAIL"
            detail = f"  ({check.detail})" if check.detail else ""
            print(f"[{mark}] {suite.suite}: {check.name}{detail}")
            ok = ok and check.passed
    print("all checks passed" if ok else "some checks FAILED")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pig",
        description="Build finite semigroups, their principal ideal "
                    "graphs and class quotients, and verify their "
                    "structural properties exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a semigroup family")
    p.add_argument("--family", required=True,
                   choices=["isn", "brandt", "semilattice", "cyclic",
                            "leftzero"])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--group-order", type=int, default=1)
    p.add_argument("--indices", type=int, default=1)
    p.add_argument("--adjoin-zero", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("graph", help="build an ideal graph from a semigroup")
    p.add_argument("--input", required=True)
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.add_argument("--variant", choices=["pig", "spig"], default="pig")
    p.add_argument("--format", choices=["dot", "json", "edges"],
                   default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("stats", help="print statistics of a graph file")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("classes", help="print L or R classes")
    p.add_argument("--input", required=True)
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("skeletal", help="skeletal checks on a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--op", required=True,
                   choices=["check", "max", "is-skeleton", "brute"])
    p.add_argument("--map")
    p.set_defaults(func=cmd_skeletal)

    p = sub.add_parser("spectral", help="exact eigenvalue multiplicities")
    p.add_argument("--graph", required=True)
    p.add_argument("--matrix", choices=["A", "L", "Q"], default="A")
    p.add_argument("--lambda", dest="lam", type=int, default=None)
    p.add_argument("--twin-report", action="store_true")
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=list(verify.SUITES))
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--group-order", type=int, default=2)
    p.add_argument("--indices", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PigError, FileNotFoundError, json.JSONDecodeError, KeyError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
