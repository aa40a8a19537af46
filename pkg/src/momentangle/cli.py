"""Command-line front end.

Subcommands:

    build         construct a polytope or complex, emit canonical JSON
    betti         graded cohomology of the moment-angle manifold
    verify        compare computed vs predicted cut cohomology
    verify-corpus run the whole verification family, print a summary
    isotopy-check endpoint identities and injectivity probes

Polytope expressions are little prefix terms:

    simplex N | polygon M | cube [N] | product EXPR EXPR
    | cut-vertex EXPR V | path/to/file.json

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 resource
limit exceeded.  Output is deterministic: identical invocations give
byte-identical output regardless of --workers.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .homology import GradedGroups
from .isotopy import (
    endpoint_checks,
    f1_map,
    injectivity_probe,
    isotopy_map,
    standard_map,
)
from .moment_angle import (
    DEFAULT_MAX_VERTICES,
    SubsetLimitError,
    betti,
    moment_angle_cohomology,
)
from .polytopes import SimplePolytope, cube, polygon, product, simplex_polytope
from .simplicial import SimplicialComplex
from .surgery import theorem_corpus, verify_all_cuts, verify_cut_theorem

WORKERS_ENV_VAR = "MOMENTANGLE_WORKERS"


class UsageError(ValueError):
    pass


# -- expression parsing ----------------------------------------------------


def _tokenize(parts: Sequence[str]) -> list[str]:
    text = " ".join(parts).replace("(", " ( ").replace(")", " ) ")
    return text.split()


def _parse_int(tokens: list[str], what: str) -> int:
    if not tokens:
        raise UsageError(f"missing {what}")
    tok = tokens.pop(0)
    try:
        return int(tok)
    except ValueError:
        raise UsageError(f"expected an integer {what}, got {tok!r}") from None


def _looks_like_path(token: str) -> bool:
    return token.endswith(".json") or "/" in token or os.path.exists(token)


def _load_object(path: str) -> SimplePolytope | SimplicialComplex:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}") from exc
    if isinstance(data, dict) and "vertex_facets" in data:
        return SimplePolytope.from_json_dict(data)
    if isinstance(data, dict) and "maximal_faces" in data:
        return SimplicialComplex.from_json_dict(data)
    raise UsageError(
        f"{path}: JSON object is neither a polytope (vertex_facets) "
        "nor a complex (maximal_faces)"
    )


def _parse_expr(tokens: list[str]) -> SimplePolytope | SimplicialComplex:
    if not tokens:
        raise UsageError("empty expression")
    tok = tokens.pop(0)
    if tok == "(":
        inner = _parse_expr(tokens)
        if not tokens or tokens.pop(0) != ")":
            raise UsageError("unbalanced parentheses")
        return inner
    if tok == "simplex":
        return simplex_polytope(_parse_int(tokens, "dimension for simplex"))
    if tok == "polygon":
        return polygon(_parse_int(tokens, "edge count for polygon"))
    if tok == "cube":
        if tokens and tokens[0].lstrip("-").isdigit():
            return cube(_parse_int(tokens, "dimension for cube"))
        return cube(3)
    if tok == "product":
        left = _parse_expr(tokens)
        right = _parse_expr(tokens)
        if not isinstance(left, SimplePolytope) or not isinstance(
            right, SimplePolytope
        ):
            raise UsageError("product needs two polytopes")
        return product(left, right)
    if tok == "cut-vertex":
        base = _parse_expr(tokens)
        if not isinstance(base, SimplePolytope):
            raise UsageError("cut-vertex needs a polytope")
        return base.cut_vertex(_parse_int(tokens, "vertex index for cut-vertex"))
    if _looks_like_path(tok):
        return _load_object(tok)
    raise UsageError(f"unknown constructor {tok!r}")


def parse_expression(parts: Sequence[str]) -> SimplePolytope | SimplicialComplex:
    """Parse a complete prefix expression; leftover tokens are an error."""
    tokens = _tokenize(parts)
    obj = _parse_expr(tokens)
    if tokens:
        raise UsageError(f"unexpected trailing tokens: {' '.join(tokens)}")
    return obj


# -- output plumbing -------------------------------------------------------


def _emit(text: str, args) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _groups_rows(groups: GradedGroups) -> list[tuple[int, int, str]]:
    return [
        (d, groups.rank(d), ";".join(str(x) for x in groups.torsion(d)))
        for d in groups.degrees()
    ]


# -- subcommands -----------------------------------------------------------


def cmd_build(args) -> int:
    obj = parse_expression(args.expr)
    if args.csv:
        raise UsageError("build has no csv form; the output is a JSON object")
    _emit(_json_text(obj.to_json_dict()), args)
    return 0


def _complex_for(obj: SimplePolytope | SimplicialComplex) -> SimplicialComplex:
    return obj.dual_complex() if isinstance(obj, SimplePolytope) else obj


def cmd_betti(args) -> int:
    obj = parse_expression(args.expr)
    k = _complex_for(obj)
    groups = moment_angle_cohomology(
        k, workers=args.workers, max_vertices=args.max_subsets
    )
    poly = betti(groups)
    if args.json:
        payload = {
            "schema": 1,
            "kind": "betti",
            "input": obj.to_json_dict(),
            "groups": groups.to_json_dict(),
            "poincare": str(poly),
        }
        if isinstance(obj, SimplePolytope):
            payload.update(m=obj.m, n=obj.n, dim=obj.m + obj.n)
        _emit(_json_text(payload), args)
        return 0
    if args.csv:
        lines = ["degree,rank,torsion"]
        lines += [f"{d},{r},{t}" for d, r, t in _groups_rows(groups)]
        _emit("\n".join(lines), args)
        return 0
    lines = []
    if isinstance(obj, SimplePolytope):
        lines.append(
            f"moment-angle manifold: m={obj.m} facets, n={obj.n}, "
            f"dimension {obj.m + obj.n}"
        )
    else:
        lines.append(f"moment-angle complex on {obj.vertex_count} vertices")
    lines.append("degree  rank  torsion")
    for d, r, t in _groups_rows(groups):
        lines.append(f"{d:>6}  {r:>4}  {t or '-'}")
    lines.append(f"poincare: {poly}")
    _emit("\n".join(lines), args)
    return 0


def _report_lines(report) -> list[str]:
    verdict = "MATCH" if report.match else "MISMATCH"
    lines = [f"{report.polytope}, vertex {report.vertex}: {verdict}"]
    if report.match:
        lines.append(f"  both sides: {betti(report.lhs)}")
    else:
        lines.append(f"  lhs: {betti(report.lhs)}")
        lines.append(f"  rhs: {betti(report.rhs)}")
        for deg, (lr, lt), (rr, rt) in report.diff:
            lines.append(
                f"  degree {deg}: lhs rank {lr} torsion {list(lt)}"
                f" != rhs rank {rr} torsion {list(rt)}"
            )
    return lines


def cmd_verify(args) -> int:
    tokens = list(args.expr)
    if args.all_vertices:
        obj = parse_expression(tokens)
        if not isinstance(obj, SimplePolytope):
            raise UsageError("verify needs a polytope input")
        reports = verify_all_cuts(
            obj,
            workers=args.workers,
            max_vertices=args.max_subsets,
            description=" ".join(tokens),
        )
    else:
        if len(tokens) < 2:
            raise UsageError("verify needs an expression and a vertex index")
        try:
            vertex = int(tokens[-1])
        except ValueError:
            raise UsageError(
                f"last argument must be a vertex index, got {tokens[-1]!r}"
            ) from None
        obj = parse_expression(tokens[:-1])
        if not isinstance(obj, SimplePolytope):
            raise UsageError("verify needs a polytope input")
        reports = [
            verify_cut_theorem(
                obj,
                vertex,
                workers=args.workers,
                max_vertices=args.max_subsets,
                description=" ".join(tokens[:-1]),
            )
        ]
    all_match = all(r.match for r in reports)
    if args.json:
        payload = {
            "schema": 1,
            "kind": "verify",
            "all_match": all_match,
            "reports": [r.to_json_dict() for r in reports],
        }
        _emit(_json_text(payload), args)
    elif args.csv:
        lines = ["polytope,vertex,match,lhs,rhs"]
        lines += [
            f"{r.polytope},{r.vertex},{str(r.match).lower()},"
            f"{betti(r.lhs)},{betti(r.rhs)}"
            for r in reports
        ]
        _emit("\n".join(lines), args)
    else:
        lines = []
        for r in reports:
            lines.extend(_report_lines(r))
        lines.append(
            f"{len(reports)} vertex cut(s) checked: "
            + ("all match" if all_match else "MISMATCH FOUND")
        )
        _emit("\n".join(lines), args)
    return 0 if all_match else 1


def cmd_verify_corpus(args) -> int:
    rows = []
    all_match = True
    for name, p in theorem_corpus():
        reports = verify_all_cuts(
            p, workers=args.workers, max_vertices=args.max_subsets, description=name
        )
        ok = all(r.match for r in reports)
        all_match = all_match and ok
        rows.append((name, p.m, p.n, len(reports), ok))
    if args.json:
        payload = {
            "schema": 1,
            "kind": "verify-corpus",
            "all_match": all_match,
            "entries": [
                {"name": n, "m": m, "n": dim, "vertices": v, "match": ok}
                for n, m, dim, v, ok in rows
            ],
        }
        _emit(_json_text(payload), args)
    elif args.csv:
        lines = ["name,m,n,vertices,match"]
        lines += [
            f"{n},{m},{dim},{v},{str(ok).lower()}" for n, m, dim, v, ok in rows
        ]
        _emit("\n".join(lines), args)
    else:
        lines = [f"{'name':<18} {'m':>3} {'n':>3} {'vertices':>8}  result"]
        for n, m, dim, v, ok in rows:
            lines.append(
                f"{n:<18} {m:>3} {dim:>3} {v:>8}  {'match' if ok else 'MISMATCH'}"
            )
        lines.append(
            f"corpus: {len(rows)} polytopes, "
            + ("all cuts match" if all_match else "MISMATCH FOUND")
        )
        _emit("\n".join(lines), args)
    return 0 if all_match else 1


def cmd_isotopy_check(args) -> int:
    if args.k < 1:
        raise UsageError(f"torus dimension must be >= 1, got {args.k}")
    if args.samples < 2:
        raise UsageError(f"need at least 2 samples, got {args.samples}")
    seed = args.seed if args.seed is not None else args.seed_pos
    endpoints = endpoint_checks(args.k, args.samples, seed)
    probes = [
        injectivity_probe(
            standard_map(args.k), args.k, args.samples, seed, label="standard"
        )
    ]
    for t in (0.0, 0.5, 1.0):
        probes.append(
            injectivity_probe(
                isotopy_map(args.k, t),
                args.k,
                args.samples,
                seed,
                label=f"isotopy t={t}",
            )
        )
    if args.k == 1:
        for t in (0.0, 1.0):
            probes.append(
                injectivity_probe(
                    f1_map(t), 1, args.samples, seed, label=f"f1 t={t}"
                )
            )
    passed = endpoints.passed and all(p.passed for p in probes)
    if args.json:
        payload = {
            "schema": 1,
            "kind": "isotopy-check",
            "endpoints": endpoints.to_json_dict(),
            "probes": [p.to_json_dict() for p in probes],
            "passed": passed,
        }
        _emit(_json_text(payload), args)
    elif args.csv:
        lines = ["check,value,passed"]
        lines.append(
            f"endpoint-standard,{endpoints.max_standard_deviation!r},"
            f"{str(endpoints.max_standard_deviation <= endpoints.tolerance).lower()}"
        )
        lines.append(
            f"endpoint-radius,{endpoints.max_radius_deviation!r},"
            f"{str(endpoints.max_radius_deviation <= endpoints.tolerance).lower()}"
        )
        lines.append(
            f"endpoint-base,{endpoints.max_base_deviation!r},"
            f"{str(endpoints.max_base_deviation <= endpoints.tolerance).lower()}"
        )
        for p in probes:
            lines.append(f"probe {p.label},{p.violations},{str(p.passed).lower()}")
        _emit("\n".join(lines), args)
    else:
        lines = [f"isotopy check: k={args.k}, samples={args.samples}, seed={seed}"]
        lines.append(
            f"  t=1 vs standard torus: max deviation {endpoints.max_standard_deviation:.3e}"
        )
        lines.append(
            f"  t=0 circle radius:     max deviation {endpoints.max_radius_deviation:.3e}"
        )
        lines.append(
            f"  t=0 base stability:    max deviation {endpoints.max_base_deviation:.3e}"
        )
        for p in probes:
            sep = "inf" if p.min_separation == float("inf") else f"{p.min_separation:.3e}"
            lines.append(
                f"  probe {p.label}: {p.violations} violations, min separation {sep}"
            )
        lines.append("overall: " + ("PASS" if passed else "FAIL"))
        _emit("\n".join(lines), args)
    return 0 if passed else 1


# -- argument parsing ------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser, default_workers: int) -> None:
    sub.add_argument(
        "--workers",
        type=int,
        default=default_workers,
        help=f"parallel workers for subset enumeration (env {WORKERS_ENV_VAR})",
    )
    sub.add_argument(
        "--max-subsets",
        type=int,
        default=DEFAULT_MAX_VERTICES,
        metavar="E",
        help="largest vertex count m to enumerate (2^m subsets)",
    )
    fmt = sub.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output")
    fmt.add_argument("--csv", action="store_true", help="CSV output")
    sub.add_argument("--output", metavar="PATH", help="write output to a file")


def build_parser() -> argparse.ArgumentParser:
    try:
        default_workers = max(1, int(os.environ.get(WORKERS_ENV_VAR, "1")))
    except ValueError:
        default_workers = 1
    parser = argparse.ArgumentParser(
        prog="momentangle",
        description="moment-angle manifold cohomology and vertex-cut verification",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_build = subs.add_parser("build", help="construct a polytope or complex")
    p_build.add_argument("expr", nargs="+", help="constructor expression or file")
    _add_common(p_build, default_workers)
    p_build.set_defaults(func=cmd_build)

    p_betti = subs.add_parser("betti", help="cohomology of the moment-angle manifold")
    p_betti.add_argument("expr", nargs="+", help="constructor expression or file")
    _add_common(p_betti, default_workers)
    p_betti.set_defaults(func=cmd_betti)

    p_verify = subs.add_parser("verify", help="check the vertex-cut decomposition")
    p_verify.add_argument(
        "expr", nargs="+", help="expression plus trailing vertex index"
    )
    p_verify.add_argument(
        "--all-vertices", action="store_true", help="verify every vertex"
    )
    _add_common(p_verify, default_workers)
    p_verify.set_defaults(func=cmd_verify)

    p_corpus = subs.add_parser(
        "verify-corpus", help="run the standard verification family"
    )
    _add_common(p_corpus, default_workers)
    p_corpus.set_defaults(func=cmd_verify_corpus)

    p_iso = subs.add_parser("isotopy-check", help="torus embedding identity probes")
    p_iso.add_argument("k", type=int, help="torus dimension")
    p_iso.add_argument("samples", type=int, nargs="?", default=10000)
    p_iso.add_argument("seed_pos", type=int, nargs="?", default=42, metavar="seed")
    p_iso.add_argument("--seed", type=int, default=None, help="override the seed")
    _add_common(p_iso, default_workers)
    p_iso.set_defaults(func=cmd_isotopy_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except SubsetLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("hint: raise the cap with --max-subsets", file=sys.stderr)
        return 3
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
