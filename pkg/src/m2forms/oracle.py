"""Brute-force representability checks over small finite fields.

Independent of the constructive solver: everything here is plain
enumeration of all q**4 matrices.  Two-term queries precompute one
term's image set and look up the residual, so a full sweep costs
O(q**4) instead of O(q**8).  Enumeration is lexicographic in the entry
order (e11, e12, e21, e22) over each field's canonical element order,
which makes witnesses and first counterexamples deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field

from .errors import FieldTooLargeError, InfiniteFieldError
from .fields import Field, FieldElement
from .matrices import Mat2

MAX_ORDER = 16  # bound for building square sets
SWEEP_MAX_ORDER = 5  # bound for all-targets sweeps


def _check_finite(field: Field, bound: int):
    if not field.finite:
        raise InfiniteFieldError(f"cannot enumerate matrices over {field}")
    if field.order > bound:
        raise FieldTooLargeError(
            f"{field} has order {field.order}, above the bound {bound}"
        )


def all_matrices(field: Field):
    """All q**4 matrices, lexicographic by (e11, e12, e21, e22)."""
    elems = list(field.elements())
    for entries in itertools.product(elems, repeat=4):
        yield Mat2(*entries)


@dataclass(frozen=True)
class SquareSet:
    """The image set {coeff * X**2} over all 2x2 matrices of a small field.

    ``first_preimage`` maps each member to the first X (in enumeration
    order) whose scaled square it is.
    """

    field: Field
    coeff: FieldElement
    members: frozenset[Mat2]
    first_preimage: dict[Mat2, Mat2] = dataclass_field(repr=False)

    def __contains__(self, matrix: Mat2) -> bool:
        return matrix in self.members


def build_square_set(field: Field, coeff) -> SquareSet:
    """Enumerate {coeff * X**2 : X in M2(field)} for a field of order <= 16."""
    _check_finite(field, MAX_ORDER)
    coeff = field(coeff)
    first_preimage: dict[Mat2, Mat2] = {}
    for x in all_matrices(field):
        value = x.square().scale(coeff)
        if value not in first_preimage:
            first_preimage[value] = x
    return SquareSet(field, coeff, frozenset(first_preimage), first_preimage)


def representable_two_term(
    a1, a2, target: Mat2, field: Field, *, square_set: SquareSet | None = None
) -> tuple[Mat2, Mat2] | None:
    """First (X1, X2) with a1*X1**2 + a2*X2**2 == target, else None.

    Scans X1 in enumeration order and looks the residual up in the
    square set of a2 (reused across calls when passed in).
    """
    _check_finite(field, MAX_ORDER)
    a1 = field(a1)
    if square_set is None or square_set.coeff != field(a2):
        square_set = build_square_set(field, a2)
    for x1 in all_matrices(field):
        residual = target - x1.square().scale(a1)
        if residual in square_set.members:
            return x1, square_set.first_preimage[residual]
    return None


def check_universal_exhaustive(a1, a2, field: Field) -> tuple[bool, Mat2 | None]:
    """Sweep every target of a field of order <= 5.

    Returns (True, None) when every one of the q**4 targets is a value
    of a1*X1**2 + a2*X2**2, else (False, first unrepresentable target).
    """
    _check_finite(field, SWEEP_MAX_ORDER)
    set1 = build_square_set(field, a1)
    set2 = build_square_set(field, a2)
    values1 = list(set1.first_preimage)  # insertion order; deterministic
    for target in all_matrices(field):
        if not any(target - v in set2.members for v in values1):
            return False, target
    return True, None
