"""Command-line interface over the solver, deciders, and oracle.

Subcommands:

  decompose       solve sum(ai * Xi^2) == target constructively
  verify          re-evaluate a claimed solution against a target
  universal       decide universality of a form over its field
  universal-z     decide universality over the 2x2 integer matrices
  oracle          brute-force representability over small finite fields
  counterexample  show the GF(2)(x) failure of the counting criterion

Exit codes are stable: 0 for success or a Universal verdict, 2 for a
negative verdict or an unsolvable target, 3 for malformed input, 4 when
a resource bound (field enumeration limits) is exceeded.

With --json each command prints a single JSON object instead of text.
Matrices and elements appear as strings in the same grammar the parser
accepts, so emitted output can be fed back in unchanged.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .errors import (
    FieldTooLargeError,
    InfiniteFieldError,
    NotASquareError,
    NotUniversalFormError,
    ParseError,
)
from .fields import Field, FieldElement, field_from_string
from .matrices import DiagonalForm, Mat2
from .oracle import (
    SWEEP_MAX_ORDER,
    all_matrices,
    build_square_set,
    check_universal_exhaustive,
    representable_two_term,
)
from .solver import decompose
from .universality import UNIVERSAL, decide_universality, f2x_counterexample, lee_criterion

EXIT_OK = 0
EXIT_NEGATIVE = 2
EXIT_PARSE = 3
EXIT_LIMIT = 4


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; reserve 2 for negative verdicts
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="m2forms", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, *, field=True, coeffs=True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if field:
            p.add_argument("--field", required=True, help="Q | GF(p) | GF(p^k)[;modulus=...] | F2(X)")
        if coeffs:
            p.add_argument("--coeffs", required=True, help="comma-separated coefficients")
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        return p

    p = add("decompose", "solve sum(ai*Xi^2) == target")
    p.add_argument("--target", required=True, help="target matrix [[a,b],[c,d]]")

    p = add("verify", "evaluate a claimed solution against a target")
    p.add_argument("--target", required=True, help="target matrix [[a,b],[c,d]]")
    p.add_argument("--matrices", required=True, nargs="+", help="one matrix per coefficient")

    add("universal", "decide universality over the chosen field")

    add("universal-z", "decide universality over 2x2 integer matrices", field=False)

    p = add("oracle", "exhaustive representability over a small finite field")
    p.add_argument("--target", help="check one target instead of sweeping all")

    add("counterexample", "demonstrate the GF(2)(x) counterexample", field=False, coeffs=False)

    return parser


def _parse_coeffs(field: Field, text: str) -> list[FieldElement]:
    parts = text.split(",")
    if any(not part.strip() for part in parts):
        raise ParseError("empty coefficient", text, 0)
    return [field.parse(part) for part in parts]


def _parse_int_coeffs(text: str) -> list[int]:
    parts = text.split(",")
    coeffs = []
    for part in parts:
        part = part.strip()
        try:
            coeffs.append(int(part))
        except ValueError:
            raise ParseError("expected an integer coefficient", text, 0) from None
    return coeffs


def _emit(args, lines: list[str], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def _matrix_lines(matrices) -> list[str]:
    return [f"X{i + 1} = {m}" for i, m in enumerate(matrices)]


def _cmd_decompose(args) -> int:
    field = field_from_string(args.field)
    form = DiagonalForm(field, _parse_coeffs(field, args.coeffs))
    target = Mat2.parse(field, args.target)
    base = {
        "field": str(field),
        "coeffs": [str(c) for c in form.coeffs],
        "target": str(target),
    }
    try:
        result = decompose(form, target)
    except NotUniversalFormError as exc:
        _emit(
            args,
            [f"NotUniversalForm: {exc}", f"witness: {exc.witness}"],
            base | {"error": "NotUniversalForm", "message": str(exc), "witness": str(exc.witness)},
        )
        return EXIT_NEGATIVE
    except NotASquareError as exc:
        _emit(
            args,
            [f"NotASquare({exc.element})"],
            base | {"error": "NotASquare", "element": str(exc.element)},
        )
        return EXIT_NEGATIVE
    verified = form.evaluate(result.matrices) == target
    lines = _matrix_lines(result.matrices)
    lines.append("check: OK" if verified else "check: FAIL")
    _emit(args, lines, base | {"matrices": [str(m) for m in result.matrices], "verified": verified})
    return EXIT_OK if verified else EXIT_NEGATIVE


def _cmd_verify(args) -> int:
    field = field_from_string(args.field)
    form = DiagonalForm(field, _parse_coeffs(field, args.coeffs))
    target = Mat2.parse(field, args.target)
    matrices = [Mat2.parse(field, text) for text in args.matrices]
    value = form.evaluate(matrices)
    verified = value == target
    lines = ["check: OK"] if verified else ["check: FAIL", f"value: {value}"]
    _emit(
        args,
        lines,
        {
            "field": str(field),
            "coeffs": [str(c) for c in form.coeffs],
            "target": str(target),
            "matrices": [str(m) for m in matrices],
            "value": str(value),
            "verified": verified,
        },
    )
    return EXIT_OK if verified else EXIT_NEGATIVE


def _cmd_universal(args) -> int:
    field = field_from_string(args.field)
    form = DiagonalForm(field, _parse_coeffs(field, args.coeffs))
    verdict = decide_universality(form)
    if verdict.status == UNIVERSAL:
        lines = ["Universal"]
    elif verdict.witness is not None:
        lines = ["NotUniversal", f"witness: {verdict.witness}"]
    else:
        lines = [f"Undecided ({verdict.reason})"]
    _emit(
        args,
        lines,
        {
            "field": str(field),
            "coeffs": [str(c) for c in form.coeffs],
            "status": verdict.status,
            "witness": None if verdict.witness is None else str(verdict.witness),
            "reason": verdict.reason,
        },
    )
    return EXIT_OK if verdict.status == UNIVERSAL else EXIT_NEGATIVE


def _cmd_universal_z(args) -> int:
    coeffs = _parse_int_coeffs(args.coeffs)
    universal = lee_criterion(coeffs)
    _emit(
        args,
        ["Universal" if universal else "NotUniversal"],
        {"coeffs": coeffs, "universal": universal},
    )
    return EXIT_OK if universal else EXIT_NEGATIVE


def _cmd_oracle(args) -> int:
    field = field_from_string(args.field)
    coeffs = _parse_coeffs(field, args.coeffs)
    if len(coeffs) > 2:
        raise FieldTooLargeError("the oracle supports at most two coefficients")
    base = {"field": str(field), "coeffs": [str(c) for c in coeffs]}

    if args.target is not None:
        target = Mat2.parse(field, args.target)
        base["target"] = str(target)
        if len(coeffs) == 1:
            square_set = build_square_set(field, coeffs[0])
            found = (square_set.first_preimage[target],) if target in square_set else None
        else:
            found = representable_two_term(coeffs[0], coeffs[1], target, field)
        if found is None:
            _emit(args, ["unrepresentable"], base | {"representable": False, "matrices": None})
            return EXIT_NEGATIVE
        lines = _matrix_lines(found)
        lines.append("representable")
        _emit(args, lines, base | {"representable": True, "matrices": [str(m) for m in found]})
        return EXIT_OK

    if field.finite and field.order > SWEEP_MAX_ORDER:
        raise FieldTooLargeError(
            f"{field} has order {field.order}, above the sweep bound {SWEEP_MAX_ORDER}"
        )
    if len(coeffs) == 1:
        square_set = build_square_set(field, coeffs[0])
        counterexample = next((m for m in all_matrices(field) if m not in square_set), None)
        universal = counterexample is None
    else:
        universal, counterexample = check_universal_exhaustive(coeffs[0], coeffs[1], field)
    total = field.order**4
    base |= {"targets": total, "universal": universal}
    if universal:
        _emit(args, [f"all {total} targets representable"], base | {"counterexample": None})
        return EXIT_OK
    _emit(
        args,
        [f"not universal; first unrepresentable target: {counterexample}"],
        base | {"counterexample": str(counterexample)},
    )
    return EXIT_NEGATIVE


def _cmd_counterexample(args) -> int:
    form, target = f2x_counterexample()
    trace_sum = target.e11 + target.e22
    try:
        decompose(form, target)
    except NotASquareError as exc:
        failing = str(exc.element)
    else:  # pragma: no cover - would mean the solver overclaimed
        raise AssertionError("decompose unexpectedly succeeded on the counterexample")
    lines = [
        f"field: {form.field}",
        f"form: X1^2 + X2^2 over {form.field}",
        f"target: {target}",
        f"trace sum {trace_sum} is not a square, so no solution exists",
        f"decompose: NotASquare({failing})",
        "the two-nonzero-coefficient criterion requires a perfect field",
    ]
    payload = {
        "field": str(form.field),
        "coeffs": [str(c) for c in form.coeffs],
        "target": str(target),
        "trace_sum": str(trace_sum),
        "trace_sum_is_square": trace_sum.is_square(),
        "decompose_error": f"NotASquare({failing})",
    }
    _emit(args, lines, payload)
    return EXIT_OK


_HANDLERS = {
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "universal": _cmd_universal,
    "universal-z": _cmd_universal_z,
    "oracle": _cmd_oracle,
    "counterexample": _cmd_counterexample,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ParseError as exc:
        _report_error(args, "ParseError", str(exc))
        return EXIT_PARSE
    except (FieldTooLargeError, InfiniteFieldError) as exc:
        _report_error(args, type(exc).__name__.removesuffix("Error"), str(exc))
        return EXIT_LIMIT
    except ValueError as exc:
        # remaining ValueErrors (arity, field mismatch, bad modulus) are
        # malformed requests, same class as parse failures
        _report_error(args, "BadRequest", str(exc))
        return EXIT_PARSE


def _report_error(args, kind: str, message: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps({"error": kind, "message": message}))
    else:
        print(f"error: {message}", file=sys.stderr)


if __name__ == "__main__":
    raise SystemExit(main())
