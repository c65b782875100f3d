"""Command-line front end: ``ncmotive <subcommand> [--json] [-f FILE | -e EXPR]``.

Exit codes: 0 success, 1 negative verdict (``iso`` non-isomorphic,
``bs-check`` no collection), 2 parse or validation error, 3 internal limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, TextIO

from . import brauer, csa, motive
from .brauer import BrauerClass, FieldModel
from .bs import admits_full_etale_collection, sod_motive, sod_triviality_check
from .csa import CentralSimpleAlgebra
from .errors import (
    IndexDegreeViolation,
    InvalidClass,
    ModelMismatch,
    NCMotiveError,
    ParseError,
    RankTooLarge,
    ValidationError,
)
from .motive import Motive
from .syntax import (
    COMMANDS,
    AlgebraSpec,
    BsCheckQuery,
    DecomposeQuery,
    GlobalLit,
    InfoQuery,
    IsoQuery,
    MotiveExpr,
    NameRef,
    Program,
    RationalLit,
    SodTerm,
    UnitTerm,
    VectorLit,
    format_motive,
    parse_program,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


# --- evaluation --------------------------------------------------------------


@dataclass
class Environment:
    model: FieldModel
    names: dict[str, CentralSimpleAlgebra] = field(default_factory=dict)


def _rational(lit: RationalLit):
    from fractions import Fraction

    if lit.den == 0:
        raise ValidationError("zero denominator", lit.line, lit.col)
    return Fraction(lit.num, lit.den)


def resolve_class(model: FieldModel, lit) -> BrauerClass:
    try:
        if isinstance(lit, VectorLit):
            return BrauerClass(model, lit.residues)
        if isinstance(lit, GlobalLit):
            return BrauerClass(model, [(place, _rational(inv)) for inv, place in lit.terms])
        value = _rational(lit)
        if model == brauer.TRIVIAL:
            if value % 1:
                raise InvalidClass("the trivial Brauer group has only the zero class")
            return BrauerClass(model, ())
        return BrauerClass(model, value)
    except InvalidClass as exc:
        raise ValidationError(str(exc), lit.line, lit.col) from None


def resolve_algebra(env: Environment, ref, label: Optional[str] = None) -> CentralSimpleAlgebra:
    if isinstance(ref, NameRef):
        try:
            return env.names[ref.name]
        except KeyError:
            raise ValidationError(f"unknown name {ref.name!r}", ref.line, ref.col) from None
    assert isinstance(ref, AlgebraSpec)
    cls = resolve_class(env.model, ref.cls)
    try:
        return csa.make_csa(env.model, cls, ref.degree, ref.name or label)
    except (IndexDegreeViolation, ModelMismatch) as exc:
        raise ValidationError(str(exc), ref.line, ref.col) from None


def resolve_motive(env: Environment, expr: MotiveExpr) -> Motive:
    out = motive.trivial_motive(env.model, 0)
    for term in expr.terms:
        if isinstance(term, UnitTerm):
            piece = motive.trivial_motive(env.model, term.count)
        elif isinstance(term, SodTerm):
            piece = sod_motive(resolve_algebra(env, term.ref))
        else:
            piece = motive.motive_of_csa(resolve_algebra(env, term.ref))
        out = motive.direct_sum(out, piece)
    return out


def bind(program: Program) -> Environment:
    env = Environment(program.field)
    for b in program.bindings:
        env.names[b.name] = resolve_algebra(env, b.spec, label=b.name)
    return env


# --- reports -----------------------------------------------------------------


def _plain(A: CentralSimpleAlgebra) -> str:
    return f"csa(class={A.brauer_class}, deg={A.degree})"


def _strs(classes) -> list[str]:
    return [str(c) for c in classes]


def info_report(A: CentralSimpleAlgebra) -> dict:
    c = A.brauer_class
    D = csa.underlying_division_algebra(A)
    return {
        "kind": "info",
        "field": str(A.model),
        "algebra": _plain(A),
        "name": A.label,
        "class": str(c),
        "order": brauer.order(c),
        "index": A.index,
        "index_assumed": brauer.index_is_assumed(A.model),
        "degree": A.degree,
        "split": A.is_split(),
        "division": A.is_division(),
        "division_algebra": _plain(D),
        "matrix_size": A.degree // A.index,
        "primary_decomposition": [
            {"prime": p, "class": str(F.brauer_class), "index": F.index}
            for p, F in csa.primary_decomposition_csa(A)
        ],
    }


def decompose_report(c: BrauerClass) -> dict:
    return {
        "kind": "decompose",
        "field": str(c.model),
        "class": str(c),
        "order": brauer.order(c),
        "parts": [
            {"prime": p, "class": str(part), "order": brauer.order(part)}
            for p, part in brauer.primary_decomposition(c).items()
        ],
    }


def iso_report(M1: Motive, M2: Motive, oracle_bound: int, require_witness: bool = False) -> dict:
    verdict = motive.is_isomorphic(M1, M2)
    rows = motive.compare_primes(M1, M2)
    failing = next((p for p, _, _, match in rows if not match), None)
    witness: dict = {"status": None, "bound": oracle_bound, "permutations": []}
    if M1.rank != M2.rank:
        witness["status"] = "rank-mismatch"
    elif M1.rank > oracle_bound:
        if require_witness:
            raise RankTooLarge(M1.rank, oracle_bound)
        witness["status"] = "skipped"
    else:
        found = motive.find_witnesses(M1, M2, oracle_bound)
        if (found is not None) != verdict:
            raise RuntimeError("permutation search disagrees with the multiset comparison")
        if found is None:
            witness["status"] = "none"
        else:
            witness["status"] = "found"
            witness["permutations"] = [{"prime": p, "sigma": list(s)} for p, s in found.items()]
    return {
        "kind": "iso",
        "field": str(M1.model),
        "left": _strs(M1.summands),
        "right": _strs(M2.summands),
        "rank_left": M1.rank,
        "rank_right": M2.rank,
        "isomorphic": verdict,
        "failing_prime": failing,
        "primes": [
            {"prime": p, "left": _strs(left), "right": _strs(right), "match": match}
            for p, left, right, match in rows
        ],
        "witness": witness,
    }


def bs_report(A: CentralSimpleAlgebra) -> dict:
    report = admits_full_etale_collection(A)
    if report.admits_collection:
        witness = {"kind": "split", "certificate": str(report.certificate)}
    else:
        witness = {
            "kind": "p-part-mismatch",
            "prime": report.failing_prime,
            "sod_parts": _strs(report.sod_parts),
            "trivial_parts": _strs(report.trivial_parts),
        }
    return {
        "kind": "bs-check",
        "field": str(A.model),
        "algebra": _plain(A),
        "degree": A.degree,
        "dimension": A.degree - 1,
        "split": A.is_split(),
        "admits_collection": report.admits_collection,
        "sod_classes": _strs(report.sod_classes),
        "sod_trivial": sod_triviality_check(A),
        "failing_prime": report.failing_prime,
        "witness": witness,
        "note": report.note,
    }


def run(program: Program, oracle_bound: int = motive.DEFAULT_ORACLE_BOUND, require_witness: bool = False):
    """Evaluate a parsed program; returns ``(report, exit_code)``."""
    env = bind(program)
    q = program.query
    if isinstance(q, InfoQuery):
        return info_report(resolve_algebra(env, q.ref)), EXIT_OK
    if isinstance(q, DecomposeQuery):
        return decompose_report(resolve_class(env.model, q.cls)), EXIT_OK
    if isinstance(q, IsoQuery):
        report = iso_report(
            resolve_motive(env, q.left), resolve_motive(env, q.right), oracle_bound, require_witness
        )
        report["left_expr"] = format_motive(q.left)
        report["right_expr"] = format_motive(q.right)
        return report, EXIT_OK if report["isomorphic"] else EXIT_NEGATIVE
    assert isinstance(q, BsCheckQuery)
    report = bs_report(resolve_algebra(env, q.ref))
    return report, EXIT_OK if report["admits_collection"] else EXIT_NEGATIVE


# --- rendering ---------------------------------------------------------------


def _set(items) -> str:
    return "{" + ", ".join(items) + "}"


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def render_text(report: dict) -> str:
    kind = report["kind"]
    lines = [f"field: {report['field']}"]
    if kind == "info":
        index = str(report["index"]) + (" (assumed = order)" if report["index_assumed"] else "")
        lines += [
            f"algebra: {report['algebra']}" + (f"  [{report['name']}]" if report["name"] else ""),
            f"class: {report['class']}",
            f"order: {report['order']}",
            f"index: {index}",
            f"degree: {report['degree']}",
            f"split: {_yn(report['split'])}",
            f"division: {_yn(report['division'])}",
            f"division algebra: {report['division_algebra']} (matrix size {report['matrix_size']})",
            "primary decomposition:",
        ]
        rows = report["primary_decomposition"] or [None]
        for row in rows:
            if row is None:
                lines.append("  (none: split)")
            else:
                lines.append(f"  p={row['prime']}: class {row['class']}, index {row['index']}")
    elif kind == "decompose":
        lines += [f"class: {report['class']}", f"order: {report['order']}", "parts:"]
        if not report["parts"]:
            lines.append("  (none: zero class)")
        for row in report["parts"]:
            lines.append(f"  p={row['prime']}: {row['class']} (order {row['order']})")
    elif kind == "iso":
        verdict = "isomorphic" if report["isomorphic"] else "not isomorphic"
        lines += [
            f"left:  {report['left_expr']}",
            f"       = {_set(report['left'])} (rank {report['rank_left']})",
            f"right: {report['right_expr']}",
            f"       = {_set(report['right'])} (rank {report['rank_right']})",
            f"verdict: {verdict}",
        ]
        if report["rank_left"] != report["rank_right"]:
            lines.append("reason: ranks differ")
        elif report["failing_prime"] is not None:
            lines.append(f"reason: {report['failing_prime']}-parts differ")
        for row in report["primes"]:
            mark = "ok" if row["match"] else "MISMATCH"
            lines.append(f"  p={row['prime']}: {_set(row['left'])} vs {_set(row['right'])}  {mark}")
        w = report["witness"]
        if w["status"] == "found":
            lines.append("witnesses (0-based, right[j] ~ left[sigma[j]]):")
            for perm in w["permutations"]:
                lines.append(f"  sigma_{perm['prime']} = {perm['sigma']}")
            if not w["permutations"]:
                lines.append("  (no relevant primes)")
        elif w["status"] == "skipped":
            lines.append(f"witnesses: skipped (rank exceeds oracle bound {w['bound']})")
        elif w["status"] == "none":
            lines.append("witnesses: none exist")
    else:
        verdict = "admits" if report["admits_collection"] else "does not admit"
        lines += [
            f"algebra: {report['algebra']}",
            f"Brauer-Severi variety of dimension {report['dimension']}",
            f"SOD motive: {_set(report['sod_classes'])}",
            f"SOD motive ~ U(k)^{report['degree']}: {_yn(report['sod_trivial'])}",
            f"verdict: {verdict} a full etale exceptional collection",
        ]
        w = report["witness"]
        if w["kind"] == "split":
            lines.append(f"certificate: class {w['certificate']} (split)")
        else:
            lines.append(
                f"obstruction at p={w['prime']}: {_set(w['sod_parts'])} vs {_set(w['trivial_parts'])}"
            )
        lines.append(f"note: {report['note']}")
    return "\n".join(lines) + "\n"


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


# --- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncmotive",
        description="Decide isomorphism of noncommutative motives of central simple algebras.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--json", action="store_true", help="emit a single JSON object")
    parser.add_argument(
        "--oracle-bound",
        type=int,
        default=motive.DEFAULT_ORACLE_BOUND,
        metavar="N",
        help="largest rank for the witness permutation search (default %(default)s)",
    )
    parser.add_argument(
        "--require-witness",
        action="store_true",
        help="iso: exit 3 instead of skipping witnesses when the rank exceeds the bound",
    )
    source = parser.add_mutually_exclusive_group()
    source.add_argument("-f", "--file", metavar="FILE", help="read the program from FILE")
    source.add_argument("-e", "--expr", metavar="EXPR", help="program text")
    return parser


def main(
    argv: Optional[list[str]] = None,
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.oracle_bound < 0:
        stderr.write("ncmotive: error: --oracle-bound must be >= 0\n")
        return EXIT_INPUT
    try:
        if args.expr is not None:
            text = args.expr
        elif args.file is not None:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = stdin.read()
    except OSError as exc:
        stderr.write(f"ncmotive: error: {exc}\n")
        return EXIT_INPUT
    try:
        program = parse_program(text, args.command)
        report, code = run(program, args.oracle_bound, args.require_witness)
    except ParseError as exc:
        stderr.write(f"ncmotive: syntax error: {exc}\n")
        return EXIT_INPUT
    except ValidationError as exc:
        stderr.write(f"ncmotive: invalid input: {exc}\n")
        return EXIT_INPUT
    except RankTooLarge as exc:
        stderr.write(f"ncmotive: limit: {exc}\n")
        return EXIT_LIMIT
    except NCMotiveError as exc:
        stderr.write(f"ncmotive: error: {exc}\n")
        return EXIT_INPUT
    stdout.write(render_json(report) if args.json else render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
