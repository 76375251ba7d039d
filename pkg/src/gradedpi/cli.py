"""Batch command-line front end.

One verb per invocation; JSON reports for single verdicts, CSV for tabular
sweeps.  Exit codes: 0 = verdict computed (and true, for boolean verbs),
1 = verdict false / failed check, 2 = input error, 3 = resource budget
exceeded.  Reports embed the tool version, field mode and budget so runs
are reproducible and diffable.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .algebras import GradedAlgebra, SubalgebraPair
from .combinatorics import count_d_good, trivial_blocks
from .enclosures import fraction_to_decimal, int_to_str
from .errors import GradedPiError, ResourceGuardError
from .fields import Field
from .freepoly import multilinear_variables
from .grammar import parse_poly, print_poly
from .groups import GroupTable, cyclic_group, symmetric_group
from .identities import (
    DEFAULT_BUDGET,
    check_identity_general,
    check_identity_multilinear,
    codimension,
    compose_outer_graded,
    compose_outer_ordinary,
    generic_no_identity_check,
    left_ideal_witness,
)
from .semiidentities import (
    SemiContext,
    is_semi_identity,
    is_trivial_semi,
    pattern_split,
    theorem_degree,
)
from .serialize import load_algebra

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


def _meta(field: Field, budget: int) -> dict:
    return {
        "tool": "gradedpi",
        "version": __version__,
        "field": field.kind if field.kind == "rational" else f"prime:{field.p}",
        "budget": budget,
    }


def _emit_json(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _emit_csv(meta: dict, header: list, rows: list) -> None:
    out = sys.stdout
    out.write(f"# gradedpi {meta['version']} field={meta['field']} budget={meta['budget']}\n")
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(str(v) for v in row) + "\n")


def _parse_field(text: str) -> Field:
    if text == "rational":
        return Field.rationals()
    if text.startswith("p:"):
        return Field.prime(int(text[2:]))
    raise GradedPiError(f"bad field spec {text!r}; use 'rational' or 'p:P'")


def _parse_group(text: str) -> GroupTable:
    if text.startswith("cyclic:"):
        return cyclic_group(int(text.split(":", 1)[1]))
    if text.startswith("symmetric:"):
        return symmetric_group(int(text.split(":", 1)[1]))
    raise GradedPiError(f"bad group spec {text!r}; use 'cyclic:N' or 'symmetric:N'")


def _context(args) -> tuple[GradedAlgebra | None, SubalgebraPair | None, GroupTable, Field]:
    """Resolve the working algebra / group / field from the common flags."""
    field = _parse_field(getattr(args, "field", "rational"))
    algebra = pair = None
    if getattr(args, "algebra", None):
        algebra, pair = load_algebra(args.algebra)
        return algebra, pair, algebra.group, algebra.field
    if getattr(args, "group", None):
        return None, None, _parse_group(args.group), field
    raise GradedPiError("either --algebra or --group is required")


def _signature(text: str, group: GroupTable) -> tuple:
    try:
        counts = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise GradedPiError(f"bad signature {text!r}; expected comma-separated counts") from None
    if len(counts) != group.order:
        raise GradedPiError(
            f"signature needs {group.order} counts (one per group element), got {len(counts)}"
        )
    return counts


def _target(args, algebra, pair):
    on = getattr(args, "on", "A")
    if on == "A":
        return algebra
    if pair is None:
        raise GradedPiError(f"--on {on} needs a file with a subalgebras section")
    return pair.b if on == "B" else pair.c


# ---------------------------------------------------------------------------
# verb handlers
# ---------------------------------------------------------------------------


def _cmd_codim(args) -> int:
    algebra, pair, group, field = _context(args)
    if algebra is None:
        raise GradedPiError("codim needs --algebra")
    meta = _meta(algebra.field, args.budget)
    if args.signature:
        report = codimension(algebra, _signature(args.signature, group), budget=args.budget)
        doc = {"meta": meta, **report.as_dict()}
        _emit_json(doc)
        return EXIT_OK
    if args.max_degree is None:
        raise GradedPiError("codim needs --signature or --max-degree")
    rows = []
    for counts in _all_signatures(group.order, args.max_degree):
        rep = codimension(algebra, counts, budget=args.budget)
        rows.append(["|".join(map(str, counts)), rep.codimension, rep.strategy])
    _emit_csv(meta, ["signature", "codimension", "strategy"], rows)
    return EXIT_OK


def _all_signatures(k: int, max_degree: int):
    def rec(prefix, remaining, slots):
        if slots == 1:
            yield prefix + (remaining,)
            return
        for v in range(remaining + 1):
            yield from rec(prefix + (v,), remaining - v, slots - 1)

    for n in range(1, max_degree + 1):
        yield from rec((), n, k)


def _cmd_check(args) -> int:
    algebra, pair, group, field = _context(args)
    if algebra is None:
        raise GradedPiError("check needs --algebra")
    f = parse_poly(args.poly, group, algebra.field)
    target = _target(args, algebra, pair)
    if multilinear_variables(f) is not None:
        verdict = check_identity_multilinear(f, target)
        strategy = "multilinear-basis-tuples"
    else:
        verdict = check_identity_general(f, target, budget=args.budget)
        strategy = "interpolation-grid"
    _emit_json({
        "meta": _meta(algebra.field, args.budget),
        "poly": print_poly(f),
        "on": args.on,
        "identity": verdict,
        "strategy": strategy,
    })
    return EXIT_OK if verdict else EXIT_FALSE


def _cmd_semi_check(args) -> int:
    algebra, pair, group, field = _context(args)
    if algebra is None or pair is None:
        raise GradedPiError("semi-check needs --algebra with a subalgebras section")
    ctx = SemiContext.create(algebra, pair)
    f = parse_poly(args.poly, group, algebra.field)
    verdict = is_semi_identity(f, ctx, budget=args.budget)
    doc = {
        "meta": _meta(algebra.field, args.budget),
        "poly": print_poly(f),
        "semi_identity": verdict,
    }
    if verdict:
        doc["trivial"] = is_trivial_semi(f, ctx, budget=args.budget)
    _emit_json(doc)
    return EXIT_OK if verdict else EXIT_FALSE


def _cmd_counterexample(args) -> int:
    meta = _meta(Field.rationals(), args.budget)
    rows = []
    ok_all = True
    for n in range(0, args.max_degree + 1):
        for n0 in range(n + 1):
            ok, rank = generic_no_identity_check(n0, n - n0)
            ok_all = ok_all and ok
            rows.append([n0, n - n0, rank, "pass" if ok else "FAIL"])
    if args.format == "csv":
        _emit_csv(meta, ["neutral_vars", "degree1_vars", "rank", "status"], rows)
    else:
        _emit_json({
            "meta": meta,
            "signatures": [
                {"n0": r[0], "n1": r[1], "rank": r[2], "full_rank": r[3] == "pass"}
                for r in rows
            ],
            "no_identities": ok_all,
        })
    return EXIT_OK if ok_all else EXIT_FALSE


def _cmd_goodperms(args) -> int:
    meta = _meta(Field.rationals(), args.budget)
    rows = []
    for n in range(1, args.max_n + 1):
        for d in range(2, args.max_d + 1):
            res = count_d_good(n, d)
            rows.append([n, d, res.count, res.bound])
    _emit_csv(meta, ["n", "d", "good_count", "bound"], rows)
    return EXIT_OK


def _cmd_blocks(args) -> int:
    group = _parse_group(args.group)
    seq = [int(v) for v in args.seq.split(",")]
    blocks = trivial_blocks(group, seq, args.d)
    _emit_json({
        "meta": _meta(Field.rationals(), args.budget),
        "group_order": group.order,
        "blocks": [list(b) for b in blocks],
    })
    return EXIT_OK


def _cmd_bound(args) -> int:
    enc = theorem_degree(args.d1, args.d2, args.elt_order, args.group_order,
                         digit_cap=args.digit_cap)
    n_doc = (
        {"digits": enc.digits, "exact": int_to_str(enc.n)}
        if enc.n is not None
        else {
            "digits": enc.digits,
            "log10_lo": fraction_to_decimal(enc.log10_lo, 6, round_up=False),
            "log10_hi": fraction_to_decimal(enc.log10_hi, 6, round_up=True),
        }
    )
    _emit_json({
        "meta": _meta(Field.rationals(), args.budget),
        "alpha": {
            "lo": fraction_to_decimal(enc.alpha_lo, 6, round_up=False),
            "hi": fraction_to_decimal(enc.alpha_hi, 6, round_up=True),
        },
        "n": n_doc,
        "precision_bits": enc.precision_bits,
    })
    return EXIT_OK


def _cmd_split(args) -> int:
    algebra, pair, group, field = _context(args)
    f = parse_poly(args.poly, group, field if algebra is None else algebra.field)
    parts = pattern_split(f)
    _emit_json({
        "meta": _meta(f.field, args.budget),
        "components": [
            {
                "y_slots": [list(t) for t in pat.y_slots],
                "poly": print_poly(g),
            }
            for pat, g in sorted(parts.items(), key=lambda kv: kv[0].y_slots)
        ],
    })
    return EXIT_OK


def _cmd_witness(args) -> int:
    algebra, pair, group, field = _context(args)
    field = field if algebra is None else algebra.field
    f = parse_poly(args.poly, group, field)
    w = parse_poly(args.w, group, field)
    out = left_ideal_witness(f, w)
    _emit_json({
        "meta": _meta(field, args.budget),
        "witness": print_poly(out),
        "nonzero": not out.is_zero,
    })
    return EXIT_OK


def _cmd_compose(args) -> int:
    algebra, pair, group, field = _context(args)
    field = field if algebra is None else algebra.field
    f = parse_poly(args.f, group, field)
    g = parse_poly(args.g, group, field)
    if args.mode == "ordinary":
        out = compose_outer_ordinary(f, g)
    else:
        out = compose_outer_graded(f, g)
    _emit_json({
        "meta": _meta(field, args.budget),
        "mode": args.mode,
        "result": print_poly(out),
    })
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_common(sub, algebra=False, group=False, poly=False):
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                     help="cell budget for evaluation matrices")
    sub.add_argument("--field", default="rational", help="rational or p:P")
    sub.add_argument("--format", choices=["json", "csv"], default="json")
    sub.add_argument("--seed", type=int, default=None,
                     help="seed for randomized modes (reserved)")
    if algebra:
        sub.add_argument("--algebra", help="algebra description file (JSON)")
    if group:
        sub.add_argument("--group", help="cyclic:N or symmetric:N")
    if poly:
        sub.add_argument("--poly", required=True, help="polynomial in the text grammar")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedpi",
        description="graded polynomial identities: checks, codimensions, bounds",
    )
    parser.add_argument("--version", action="version", version=f"gradedpi {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("codim", help="codimension of a multilinear signature space")
    _add_common(p, algebra=True)
    p.add_argument("--signature", help="comma-separated counts per group element")
    p.add_argument("--max-degree", type=int, help="sweep all signatures up to this degree")
    p.set_defaults(func=_cmd_codim)

    p = sub.add_parser("check", help="graded identity check on A, B or C")
    _add_common(p, algebra=True, poly=True)
    p.add_argument("--on", choices=["A", "B", "C"], default="A")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("semi-check", help="graded semi-identity check for a pair (B, C)")
    _add_common(p, algebra=True, poly=True)
    p.set_defaults(func=_cmd_semi_check)

    p = sub.add_parser("counterexample",
                       help="symbolic no-identity ranks for the block counterexample")
    _add_common(p)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("goodperms", help="good permutation counts and bounds (CSV)")
    _add_common(p)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-d", type=int, default=3)
    p.set_defaults(func=_cmd_goodperms)

    p = sub.add_parser("blocks", help="pigeonhole split into identity-product blocks")
    _add_common(p, group=True)
    p.add_argument("--seq", required=True, help="comma-separated element indices")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_blocks)

    p = sub.add_parser("bound", help="degree bound calculator (alpha and alpha^alpha)")
    _add_common(p)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--elt-order", type=int, required=True)
    p.add_argument("--group-order", type=int, required=True)
    p.add_argument("--digit-cap", type=int, default=100_000)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("split", help="pattern decomposition of a Y/Z polynomial")
    _add_common(p, algebra=True, group=True, poly=True)
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("witness", help="left-ideal witness substitution")
    _add_common(p, algebra=True, group=True, poly=True)
    p.add_argument("--w", required=True, help="homogeneous polynomial in the grammar")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("compose", help="outer composition of two multilinear polynomials")
    _add_common(p, algebra=True, group=True)
    p.add_argument("--mode", choices=["ordinary", "graded"], required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.set_defaults(func=_cmd_compose)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceGuardError as exc:
        sys.stderr.write(f"resource guard: {exc}\n")
        return EXIT_GUARD
    except GradedPiError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except FileNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
