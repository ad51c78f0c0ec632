"""Command-line front end for the whole toolkit.

Subcommands:

* ``gf`` — generating function of a graph's Laplacian-minor cone, either
  multivariate or specialized to one variable.
* ``series`` — exact power-series coefficients of a rational generating
  function, from a JSON file or computed from a graph family.
* ``check`` — verification pipelines: ``cyclic N M_MAX``,
  ``near_symmetry K``, ``reflexive N``, ``tree_equivalence SEED COUNT``.
* ``ehrhart`` — slice-simplex report (h*, reflexivity, normality).
* ``fpp`` — fundamental-parallelepiped lattice points of a minor cone.
* ``tree-inverse`` — combinatorial inverse of a tree minor at a leaf.

Exit codes: 0 for a completed run, including negative findings from
conjecture checks; 1 when a theorem-level identity fails; 2 for usage,
parse, or budget errors.  ``LAPCOMP_BUDGET`` overrides the built-in
enumeration budget; ``--budget`` overrides both.  All integers in JSON
output are decimal strings.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from .cone_engine import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    UnivariateRationalGF,
    cone_from_constraints,
    fpp_points,
    integer_point_transform,
    series_expand,
    specialize,
)
from .conjecture_lab import check_conjecture_cyclic, check_near_symmetry
from .ehrhart_reflexive import (
    build_slice_simplex,
    h_star,
    normality_probe,
    reflexivity_by_halfspaces,
    reflexivity_by_interior_counts,
)
from .graph_core import family_from_string, laplacian_minor, parse_graph
from .tree_transforms import (
    random_tree,
    tree_inverse_combinatorial,
    verify_tree_identities,
)

__all__ = ["main"]

_SPEC_MODES = {"total": "total", "first": "first_coordinate"}


class _TheoremViolation(Exception):
    """A theorem-level identity failed; the run exits with status 1."""


def _add_output_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true",
                   help="emit JSON instead of text")
    p.add_argument("--budget", type=int, default=None,
                   help="enumeration budget cap (default: LAPCOMP_BUDGET "
                        f"or {DEFAULT_BUDGET})")
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads; accepted for compatibility, output "
                        "is identical for any value")


def _add_graph_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", metavar="NAME:PARAMS",
                   help="built-in family, e.g. path:4, cycle:5, "
                        "leafed_cycle:3, kary:2,3, complete:4")
    p.add_argument("--file", metavar="PATH",
                   help="edge-list file: first line is the vertex count, "
                        "then one 'u v' pair per line; '#' comments allowed")
    p.add_argument("--minor", type=int, default=None, metavar="V",
                   help="vertex whose Laplacian minor to take "
                        "(default: the last vertex)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lapcomp",
        description="Exact generating functions and lattice-point counts "
                    "for graph Laplacian-minor cones.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gf = sub.add_parser("gf", help="generating function of a minor cone")
    _add_graph_options(p_gf)
    p_gf.add_argument("--spec", choices=sorted(_SPEC_MODES),
                      help="specialize to one variable: 'total' grades by "
                           "coordinate sum, 'first' by the first coordinate")
    _add_output_options(p_gf)

    p_series = sub.add_parser("series", help="power-series coefficients")
    p_series.add_argument("--family", metavar="NAME:PARAMS",
                          help="compute the generating function from a "
                               "built-in family first")
    p_series.add_argument("--minor", type=int, default=None, metavar="V",
                          help="minor vertex used with --family "
                               "(default: the last vertex)")
    p_series.add_argument("--spec", choices=sorted(_SPEC_MODES),
                          default="total",
                          help="specialization used with --family "
                               "(default: total)")
    p_series.add_argument("--file", metavar="PATH",
                          help="JSON file holding a univariate generating "
                               "function (as emitted by gf --spec ... --json)")
    p_series.add_argument("--order", type=int, required=True,
                          help="highest power to expand to")
    _add_output_options(p_series)

    p_check = sub.add_parser("check", help="run a verification pipeline")
    p_check.add_argument("target",
                         choices=["cyclic", "near_symmetry", "reflexive",
                                  "tree_equivalence"])
    p_check.add_argument("params", nargs="*", type=int,
                         help="cyclic: N M_MAX; near_symmetry: K; "
                              "reflexive: N; tree_equivalence: SEED COUNT")
    _add_output_options(p_check)

    p_ehr = sub.add_parser("ehrhart", help="slice-simplex report")
    p_ehr.add_argument("n", type=int, help="leafed cycle length")
    p_ehr.add_argument("--normal-m", type=int, default=2,
                       help="largest dilate for the normality probe "
                            "(0 skips it; default 2)")
    _add_output_options(p_ehr)

    p_fpp = sub.add_parser("fpp", help="parallelepiped lattice points")
    _add_graph_options(p_fpp)
    _add_output_options(p_fpp)

    p_ti = sub.add_parser("tree-inverse",
                          help="combinatorial minor inverse of a tree")
    _add_graph_options(p_ti)
    _add_output_options(p_ti)

    return parser


def _effective_budget(args) -> int:
    if args.budget is not None:
        if args.budget < 1:
            raise ValueError("budget must be positive")
        return args.budget
    env = os.environ.get("LAPCOMP_BUDGET")
    if env is not None:
        value = int(env)
        if value < 1:
            raise ValueError("LAPCOMP_BUDGET must be positive")
        return value
    return DEFAULT_BUDGET


def _check_threads(args) -> None:
    if args.threads < 1:
        raise ValueError("thread count must be positive")


def _load_graph(args):
    if (args.family is None) == (args.file is None):
        raise ValueError("give exactly one of --family or --file")
    if args.family is not None:
        return family_from_string(args.family)
    return parse_graph(Path(args.file).read_text())


def _minor_vertex(args, g) -> int:
    return args.minor if args.minor is not None else g.vertex_count - 1


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_gf(args) -> int:
    g = _load_graph(args)
    minor = laplacian_minor(g, _minor_vertex(args, g))
    cone = cone_from_constraints(minor.matrix)
    ipt = integer_point_transform(cone, budget=_effective_budget(args))
    if args.spec is None:
        _emit(args, str(ipt), ipt.to_json_dict())
    else:
        gf = specialize(ipt, _SPEC_MODES[args.spec])
        _emit(args, str(gf), gf.to_json_dict())
    return 0


def _cmd_series(args) -> int:
    if args.order < 0:
        raise ValueError("order must be nonnegative")
    if (args.family is None) == (args.file is None):
        raise ValueError("give exactly one of --family or --file")
    if args.file is not None:
        gf = UnivariateRationalGF.from_json_dict(
            json.loads(Path(args.file).read_text())
        )
    else:
        g = family_from_string(args.family)
        minor = laplacian_minor(g, _minor_vertex(args, g))
        cone = cone_from_constraints(minor.matrix)
        ipt = integer_point_transform(cone, budget=_effective_budget(args))
        gf = specialize(ipt, _SPEC_MODES[args.spec])
    coeffs = series_expand(gf, args.order)
    text = "[" + ", ".join(str(c) for c in coeffs) + "]"
    _emit(args, text, {
        "order": str(args.order),
        "coefficients": [str(c) for c in coeffs],
    })
    return 0


def _params(args, count: int, names: str) -> list[int]:
    if len(args.params) != count:
        raise ValueError(
            f"check {args.target} takes {count} parameter(s): {names}"
        )
    return args.params


def _check_cyclic(args) -> int:
    n, m_max = _params(args, 2, "N M_MAX")
    report = check_conjecture_cyclic(n, m_max)
    matches = sum(row["match"] for row in report.rows)
    lines = [
        f"m={row['m']}: coefficient {row['lhs']} vs classes {row['rhs']} "
        f"{'ok' if row['match'] else 'MISMATCH'}"
        for row in report.rows
    ]
    lines.append(f"{matches}/{len(report.rows)} match")
    _emit(args, "\n".join(lines), report.to_json_dict())
    return 0


def _check_near_symmetry(args) -> int:
    (k,) = _params(args, 1, "K")
    report = check_near_symmetry(k)
    lines = [f"k={report.k} (n={report.n})"]
    if report.division_exact:
        lines.append(f"f coefficients: {list(report.f)}")
        lines.append(f"difference:     {list(report.difference)}")
    else:
        lines.append("exact division failed; the conjectured rational form "
                      "does not hold")
    lines.append(f"expected:       {list(report.expected)}")
    lines.append(f"verdict: {report.verdict}")
    lines.append(f"numerator-level identity holds: {report.numerator_match}")
    _emit(args, "\n".join(lines), report.to_json_dict())
    return 0


def _check_reflexive(args) -> int:
    (n,) = _params(args, 1, "N")
    half = reflexivity_by_halfspaces(n)
    simplex = build_slice_simplex(n)
    by_counts = reflexivity_by_interior_counts(
        simplex, max(1, n - 1), budget=_effective_budget(args)
    )
    if half.reflexive != by_counts:
        raise _TheoremViolation(
            f"reflexivity tests disagree for n={n}: halfspaces say "
            f"{half.reflexive}, interior counts say {by_counts}"
        )
    text = (
        f"n={n}: reflexive={half.reflexive} ({half.reason}); "
        f"interior-count test agrees"
    )
    _emit(args, text, {
        "n": str(n),
        "halfspace": half.to_json_dict(),
        "interior_counts": by_counts,
        "reflexive": half.reflexive,
    })
    return 0


def _check_tree_equivalence(args) -> int:
    seed, count = _params(args, 2, "SEED COUNT")
    if count < 1:
        raise ValueError("trial count must be positive")
    rng = random.Random(seed)
    failures = []
    for trial in range(count):
        t = random_tree(rng.randint(2, 12), rng)
        leaf = rng.choice(t.leaves())
        for message in verify_tree_identities(t, leaf):
            failures.append({
                "trial": str(trial),
                "edges": [[str(a), str(b)] for a, b in t.edges],
                "leaf": str(leaf),
                "message": message,
            })
    payload = {
        "seed": str(seed),
        "count": str(count),
        "failures": failures,
    }
    if failures:
        text = "\n".join(
            f"trial {f['trial']}: {f['message']}" for f in failures
        )
        _emit(args, text, payload)
        return 1
    _emit(args, f"{count} random trees: all identities hold", payload)
    return 0


_CHECKS = {
    "cyclic": _check_cyclic,
    "near_symmetry": _check_near_symmetry,
    "reflexive": _check_reflexive,
    "tree_equivalence": _check_tree_equivalence,
}


def _cmd_check(args) -> int:
    return _CHECKS[args.target](args)


def _cmd_ehrhart(args) -> int:
    budget = _effective_budget(args)
    simplex = build_slice_simplex(args.n)
    data = h_star(simplex, budget=budget)
    half = reflexivity_by_halfspaces(args.n)
    by_counts = reflexivity_by_interior_counts(
        simplex, max(1, args.n - 1), budget=budget
    )
    if half.reflexive != by_counts:
        raise _TheoremViolation(
            f"reflexivity tests disagree for n={args.n}"
        )
    normal_up_to = None
    if args.normal_m > 0:
        normal_up_to = normality_probe(
            simplex, m_max=args.normal_m, budget=budget
        ).normal_up_to
    lines = [
        f"n={args.n}, dimension {simplex.dimension}",
        f"vertices: {list(simplex.vertices)}",
        f"dilate counts: {list(data.dilate_counts)}",
        f"h*: {list(data.h_star)}",
        f"palindromic={data.palindromic} unimodal={data.unimodal} "
        f"reflexive={half.reflexive}",
    ]
    if normal_up_to is not None:
        lines.append(f"normal up to dilate {normal_up_to}")
    _emit(args, "\n".join(lines), {
        "n": str(args.n),
        "vertices": [[str(e) for e in v] for v in simplex.vertices],
        "h_star": [str(e) for e in data.h_star],
        "dilate_counts": [str(e) for e in data.dilate_counts],
        "palindromic": data.palindromic,
        "unimodal": data.unimodal,
        "reflexive": half.reflexive,
        "normal_up_to": None if normal_up_to is None else str(normal_up_to),
    })
    return 0


def _cmd_fpp(args) -> int:
    g = _load_graph(args)
    minor = laplacian_minor(g, _minor_vertex(args, g))
    cone = cone_from_constraints(minor.matrix)
    points = fpp_points(cone, budget=_effective_budget(args))
    lines = [f"determinant {points.d}, {len(points.points)} lattice points"]
    lines += [f"digits {list(c)} -> point {list(lam)}"
              for c, lam in points.points]
    _emit(args, "\n".join(lines), {
        "determinant": str(points.d),
        "points": [
            {"digits": [str(e) for e in c], "point": [str(e) for e in lam]}
            for c, lam in points.points
        ],
    })
    return 0


def _cmd_tree_inverse(args) -> int:
    g = _load_graph(args)
    leaf = _minor_vertex(args, g)
    inv = tree_inverse_combinatorial(g, leaf)
    lines = [f"leaf {leaf}, vertex order {list(inv.vertices)}"]
    lines += [" ".join(str(e) for e in row) for row in inv.matrix]
    _emit(args, "\n".join(lines), {
        "leaf": str(leaf),
        "vertices": [str(v) for v in inv.vertices],
        "matrix": [[str(e) for e in row] for row in inv.matrix.to_lists()],
    })
    return 0


_COMMANDS = {
    "gf": _cmd_gf,
    "series": _cmd_series,
    "check": _cmd_check,
    "ehrhart": _cmd_ehrhart,
    "fpp": _cmd_fpp,
    "tree-inverse": _cmd_tree_inverse,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        _check_threads(args)
        return _COMMANDS[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: budget exhausted: {exc}", file=sys.stderr)
        return 2
    except _TheoremViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ArithmeticError as exc:
        print(f"error: internal identity failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
