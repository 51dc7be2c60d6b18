"""Command-line front end: ``dsc <command> ...``.

Exit codes: 0 success, 2 invalid input, 3 size cap or budget exceeded,
4 internal inconsistency or numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as dio
from .classes import is_sphere
from .complex import Graph, SimplicialComplex, barycentric, edge_refine, whitney
from .errors import DscError, InvalidInputError
from .experiments import (
    exhaustive_search, roots_csv, roots_experiment, roots_svg, sampling_search, search_csv,
)
from .generators import KINDS, generate, rng_for
from .refinement import (
    apply, eigen_functionals, ds_invariant_functionals, operator_matrix, perron_vector,
)
from .report import analyze


def _emit(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise InvalidInputError(f"{what}: expected comma separated integers, got {text!r}") from None


def cmd_analyze(args) -> int:
    report = analyze(dio.load(args.input))
    _emit(report.to_csv() if args.csv else json.dumps(report.to_json(), indent=2) + "\n", args.output)
    return 0


def cmd_generate(args) -> int:
    obj = generate(args.kind, args.params, args.seed)
    _emit(dio.dumps(obj), args.output)
    return 0


def _as_graph(obj: SimplicialComplex | Graph) -> Graph:
    if isinstance(obj, Graph):
        return obj
    g = obj.skeleton_graph()
    if whitney(g) != obj:
        raise InvalidInputError("edge refinement needs a graph or a Whitney complex")
    return g


def cmd_refine(args) -> int:
    if args.fvector:
        f = tuple(_int_list(args.fvector, "--fvector"))
        op = operator_matrix(len(f) - 1)
        seq = [list(f)]
        for _ in range(args.times):
            f = apply(op, f)
            seq.append(list(f))
        _emit(json.dumps({"f_vectors": seq}) + "\n", args.output)
        return 0
    if args.input is None:
        raise InvalidInputError("refine needs an input file or --fvector")
    obj = dio.load(args.input)
    if args.mode == "barycentric":
        c = whitney(obj) if isinstance(obj, Graph) else obj
        for _ in range(args.times):
            c = barycentric(c)
        _emit(dio.dumps(c), args.output)
        return 0
    g = _as_graph(obj)
    if args.edge:
        e = _int_list(args.edge, "--edge")
        if len(e) != 2:
            raise InvalidInputError("--edge expects a,b")
        g = edge_refine(g, e)
    elif args.random is not None:
        rng = rng_for(args.seed)
        for _ in range(args.random):
            edges = g.sorted_edges()
            if not edges:
                raise InvalidInputError("graph has no edges to refine")
            g = edge_refine(g, edges[int(rng.integers(len(edges)))])
    else:
        raise InvalidInputError("edge mode needs --edge a,b or --random k")
    _emit(dio.dumps(g), args.output)
    if args.check_sphere is not None:
        verdict = is_sphere(g, args.check_sphere)
        print(json.dumps({"is_sphere": verdict}), file=sys.stderr)
    return 0


def cmd_operator(args) -> int:
    d = args.dim
    if args.functionals:
        out = [phi.to_json() for phi in eigen_functionals(d)]
    elif args.invariants:
        out = [phi.to_json() for phi in ds_invariant_functionals(d)]
    elif args.perron:
        out = list(perron_vector(d))
    else:
        out = operator_matrix(d).to_json()["matrix"]
    _emit(json.dumps(out) + "\n", args.output)
    return 0


def cmd_experiment_roots(args) -> int:
    f = _int_list(args.fvector, "--fvector") if args.fvector else None
    rec = roots_experiment(f, dim=args.dim, steps=args.steps,
                           refinements=args.refinements, seed=args.seed)
    if args.output:
        Path(args.output + ".csv").write_text(roots_csv(rec), encoding="utf-8")
        Path(args.output + ".svg").write_text(roots_svg(rec), encoding="utf-8")
        Path(args.output + ".json").write_text(rec.to_json(), encoding="utf-8")
    else:
        sys.stdout.write(roots_csv(rec))
    return 3 if rec.summary["cap_note"] else 0


def cmd_experiment_search(args) -> int:
    if args.exhaustive:
        rec = exhaustive_search(args.n, connected=args.connected)
    else:
        rec = sampling_search(args.n, args.p, args.trials, args.seed, jobs=args.jobs)
    if args.output:
        Path(args.output + ".csv").write_text(search_csv(rec), encoding="utf-8")
        Path(args.output + ".json").write_text(rec.to_json(), encoding="utf-8")
    else:
        sys.stdout.write(search_csv(rec))
    print(json.dumps(rec.summary, sort_keys=True), file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dsc", description="Dehn-Sommerville and Gauss-Bonnet toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="report f/h-vectors, symmetry, classes and roots")
    a.add_argument("input", help="complex or graph JSON file")
    a.add_argument("--csv", action="store_true", help="emit field,value CSV instead of JSON")
    a.add_argument("-o", "--output")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("generate", help="write a named or random fixture")
    g.add_argument("kind", choices=sorted(KINDS))
    g.add_argument("params", nargs="*")
    g.add_argument("--seed", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    r = sub.add_parser("refine", help="Barycentric or edge refinement")
    r.add_argument("input", nargs="?")
    r.add_argument("--mode", choices=["barycentric", "edge"], default="barycentric")
    r.add_argument("--times", type=int, default=1, help="Barycentric iterations")
    r.add_argument("--fvector", help="refine an f-vector a,b,c,... through the operator")
    r.add_argument("--edge", help="edge a,b to refine")
    r.add_argument("--random", type=int, help="number of uniformly random edge refinements")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--check-sphere", type=int, metavar="D",
                   help="report on stderr whether the result is a D-sphere")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_refine)

    o = sub.add_parser("operator", help="inspect the refinement operator")
    o.add_argument("--dim", type=int, required=True)
    mode = o.add_mutually_exclusive_group()
    mode.add_argument("--matrix", action="store_true")
    mode.add_argument("--functionals", action="store_true")
    mode.add_argument("--invariants", action="store_true")
    mode.add_argument("--perron", action="store_true")
    o.add_argument("-o", "--output")
    o.set_defaults(func=cmd_operator)

    e = sub.add_parser("experiment", help="open question harnesses")
    esub = e.add_subparsers(dest="experiment", required=True)
    er = esub.add_parser("roots", help="roots under repeated Barycentric refinement")
    er.add_argument("--dim", type=int, default=2)
    er.add_argument("--steps", type=int, default=0, help="edge refinements of the start sphere")
    er.add_argument("--refinements", type=int, default=3)
    er.add_argument("--seed", type=int, default=0)
    er.add_argument("--fvector", help="start from this f-vector instead of a random sphere")
    er.add_argument("-o", "--output", help="path prefix for .csv, .svg and .json")
    er.set_defaults(func=cmd_experiment_roots)

    es = esub.add_parser("search", help="count Dehn-Sommerville graphs")
    es.add_argument("--n", type=int, required=True)
    es.add_argument("--p", type=float, default=0.5)
    es.add_argument("--trials", type=int, default=1000)
    es.add_argument("--seed", type=int, default=0)
    es.add_argument("--exhaustive", action="store_true", help="all graphs up to isomorphism, n <= 7")
    es.add_argument("--connected", action="store_true", help="exhaustive mode: connected graphs only")
    es.add_argument("--jobs", type=int, default=1)
    es.add_argument("-o", "--output", help="path prefix for .csv and .json")
    es.set_defaults(func=cmd_experiment_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DscError as exc:
        print(f"dsc: error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
