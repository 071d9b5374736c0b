"""Command-line front end.

Facet lists travel as FCT text, through file paths or ``-`` for standard
input; machine-readable JSON goes to standard output.  The human f-vector
summary of a generated or transformed complex goes to standard error
whenever the FCT text itself occupies standard output, and to standard
output when the text goes to a file.  Exit codes: 0 when everything
requested holds, 1 when some requested check fails, 2 for unusable
input, 3 for an internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, fct, homology, walkup
from .complexes import (
    SimplicialComplex,
    boundary_complex,
    f_vector,
    is_neighborly,
    is_pseudomanifold,
    is_pure,
)
from .dualgraph import dual_graph, to_dot
from .errors import (
    FctFormatError,
    InadmissibleHandleError,
    LemmaHypothesisError,
    PreconditionError,
    TriManifoldError,
    UnknownLemmaError,
)

CHECK_NAMES = (
    "pure",
    "pm",
    "neighborly",
    "stacked-ball",
    "stacked-sphere",
    "class-k",
    "class-kbar",
    "tight-neighborly",
)


def _read_input(path: str) -> SimplicialComplex:
    if path == "-":
        return fct.loads(sys.stdin.read())
    return fct.read_fct(path)


def _instance_name(path: str) -> str:
    return "stdin" if path == "-" else path


def _emit_fct(x: SimplicialComplex, out: str | None) -> None:
    fv = f_vector(x)
    summary = (
        f"dim {x.dim} f-vector {' '.join(map(str, fv.counts))} euler {fv.euler}"
    )
    if out is None or out == "-":
        sys.stdout.write(fct.dumps(x))
        print(summary, file=sys.stderr)
    else:
        fct.write_fct(x, out)
        print(summary)


def _emit_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _write_dot(x: SimplicialComplex, path: str) -> None:
    g = dual_graph(x)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_dot(g))


def _run_check(x: SimplicialComplex, name: str) -> dict:
    result: dict = {"id": name, "holds": None, "witness": None}
    try:
        if name == "pure":
            result["holds"] = is_pure(x)
        elif name == "pm":
            result["holds"] = is_pseudomanifold(x)
        elif name == "neighborly":
            result["holds"] = is_neighborly(x, 2)
        elif name == "stacked-ball":
            result["holds"] = walkup.is_stacked_ball(x)
        elif name == "stacked-sphere":
            result["holds"] = walkup.is_stacked_sphere(x)
        elif name == "class-k":
            report = walkup.class_membership(x)
            result["holds"] = report.in_class_k
            if not report.in_class_k:
                result["witness"] = {"failing_vertex": report.failing_vertex}
        elif name == "class-kbar":
            report = walkup.class_membership(x)
            result["holds"] = report.in_class_kbar
            if not report.in_class_kbar:
                result["witness"] = {"failing_vertex": report.failing_vertex}
        elif name == "tight-neighborly":
            tr = analysis.tight_neighborly_check(x)
            result["holds"] = tr.satisfies_inequality
            result["witness"] = {
                "equality": tr.is_equality,
                "lhs": tr.lhs,
                "rhs": tr.rhs,
                "beta1": tr.beta1,
            }
        else:
            raise ValueError(f"unknown check {name!r}")
    except (PreconditionError,) as exc:
        result["holds"] = False
        result["witness"] = {"error": str(exc)}
    return result


def cmd_gen(args) -> int:
    if args.kind == "kuehnel-solid":
        x = walkup.kuehnel_solid(args.d)
    elif args.kind == "kuehnel-torus":
        x = walkup.kuehnel_torus(args.d)
    else:
        if args.m is None:
            print("stacked-ball needs --m", file=sys.stderr)
            return 2
        x = walkup.random_stacked_ball(args.d, args.m, seed=args.seed)
    _emit_fct(x, args.output)
    return 0


def cmd_check(args) -> int:
    x = _read_input(args.input)
    names = [s.strip() for s in args.checks.split(",") if s.strip()]
    for name in names:
        if name not in CHECK_NAMES:
            print(f"unknown check {name!r}", file=sys.stderr)
            return 2
    if args.dot:
        _write_dot(x, args.dot)
    checks = [_run_check(x, name) for name in names]
    sys.stdout.write(analysis.render_report(_instance_name(args.input), checks))
    return 0 if all(c["holds"] for c in checks) else 1


def cmd_betti(args) -> int:
    x = _read_input(args.input)
    bv = homology.betti_z2(x)
    _emit_json(
        {
            "instance": _instance_name(args.input),
            "betti": list(bv.betti),
            "euler": f_vector(x).euler,
        }
    )
    return 0


def cmd_params(args) -> int:
    sols = analysis.parameter_solutions(args.beta1, args.dmax)
    _emit_json(
        {
            "beta1": args.beta1,
            "d_max": args.dmax,
            "solutions": [
                {"beta1": t.beta1, "d": t.d, "f0": t.f0} for t in sols
            ],
        }
    )
    return 0


def cmd_verify(args) -> int:
    x = _read_input(args.input)
    ids = [s.strip() for s in args.lemmas.split(",") if s.strip()]
    if args.dot:
        _write_dot(x, args.dot)
    checks = []
    for lid in ids:
        try:
            rep = analysis.verify_lemma(x, lid)
            checks.append(
                {
                    "id": f"lemma-{rep.lemma_id}",
                    "holds": rep.holds,
                    "witness": rep.witness,
                }
            )
        except LemmaHypothesisError as exc:
            checks.append(
                {
                    "id": f"lemma-{analysis.normalize_lemma_id(lid)}",
                    "holds": False,
                    "witness": {"hypothesis_error": str(exc)},
                }
            )
    sys.stdout.write(analysis.render_report(_instance_name(args.input), checks))
    return 0 if all(c["holds"] for c in checks) else 1


def cmd_iso(args) -> int:
    a = _read_input(args.a)
    b = _read_input(args.b)
    bij = analysis.are_isomorphic(a, b)
    _emit_json(
        {
            "isomorphic": bij is not None,
            "bijection": [list(p) for p in bij.pairs] if bij else None,
        }
    )
    return 0 if bij is not None else 1


def cmd_bar(args) -> int:
    x = _read_input(args.input)
    _emit_fct(walkup.bar_construction(x), args.output)
    return 0


def cmd_boundary(args) -> int:
    x = _read_input(args.input)
    bd = boundary_complex(x)
    if not bd.facets:
        print("input error: the complex is closed, its boundary is empty",
              file=sys.stderr)
        return 2
    _emit_fct(bd, args.output)
    return 0


def _parse_vertex_list(text: str) -> tuple:
    try:
        return tuple(sorted(int(t) for t in text.split(",") if t.strip()))
    except ValueError:
        raise ValueError(f"bad vertex list {text!r}") from None


def _parse_psi(text: str) -> dict:
    psi = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        left, sep, right = piece.partition(":")
        if not sep:
            raise ValueError(f"bad pair {piece!r}, expected src:dst")
        psi[int(left)] = int(right)
    return psi


def cmd_handle(args) -> int:
    x = _read_input(args.input)
    hmap = walkup.HandleMap.create(
        _parse_vertex_list(args.sigma1),
        _parse_vertex_list(args.sigma2),
        _parse_psi(args.psi),
    )
    _emit_fct(walkup.handle_addition(x, hmap), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trimanifold",
        description="generate, check and transform triangulated manifolds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a built-in complex as FCT")
    p.add_argument("kind", choices=["kuehnel-solid", "kuehnel-torus", "stacked-ball"])
    p.add_argument("--d", type=int, required=True, help="dimension parameter")
    p.add_argument("--m", type=int, help="facet count for stacked-ball")
    p.add_argument("--seed", type=int, default=0, help="stream seed for stacked-ball")
    p.add_argument("-o", "--output", help="FCT destination, default stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="run predicate checks, JSON verdicts")
    p.add_argument("input", help="FCT path or - for stdin")
    p.add_argument(
        "--checks", required=True, help="comma-separated: " + ",".join(CHECK_NAMES)
    )
    p.add_argument("--dot", help="also write the facet graph in DOT form")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("betti", help="mod-2 Betti numbers")
    p.add_argument("input")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("params", help="tightness equation solutions")
    p.add_argument("--beta1", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("verify", help="structural lemma checks")
    p.add_argument("input")
    p.add_argument(
        "--lemmas",
        default="2.2,2.3,2.4,2.5",
        help="comma-separated ids from " + ",".join(analysis.LEMMA_IDS),
    )
    p.add_argument("--dot", help="also write the facet graph in DOT form")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("iso", help="isomorphism test for two complexes")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("bar", help="pair-and-triple closure of a complex")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bar)

    p = sub.add_parser("boundary", help="boundary complex")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("handle", help="remove two facets and identify them")
    p.add_argument("input")
    p.add_argument("--sigma1", required=True, help="comma-separated vertices")
    p.add_argument("--sigma2", required=True, help="comma-separated vertices")
    p.add_argument("--psi", required=True, help="pairs src:dst, comma-separated")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_handle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FctFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (
        UnknownLemmaError,
        InadmissibleHandleError,
        PreconditionError,
        ValueError,
        OSError,
    ) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except TriManifoldError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
