"""Constructive decomposition of a target matrix under a diagonal form.

Given coefficients with at least two nonzero entries and a target A, the
solver produces matrices X1, ..., Xm with sum(ai * Xi**2) == A, exactly.
Only the two lowest-index nonzero coefficients do any work; every other
slot gets the zero matrix.

Two constructions are used.  Away from characteristic 2 the diagonal gap
p - s is split across x1 - w1 and x1 + w1 so that x1 + w1 is 1 (or 2
when p == s), after which the off-diagonal entries follow by division
and the last entry balances the trace.  In characteristic 2 the same
system is driven by square roots instead: p + s = (x1 + x2 + w1 + w2)**2
picks out a unique root in a perfect field, with separate branches for
scalar targets and for targets that differ from scalar only off the
diagonal.  Over a non-perfect field the required root may not exist and
the solver raises NotASquareError naming the element that has none.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CharacteristicError,
    FieldMismatchError,
    NotUniversalFormError,
    ZeroCoefficientError,
)
from .fields import FieldElement
from .matrices import DiagonalForm, Mat2


@dataclass(frozen=True)
class Decomposition:
    """A verified solution: evaluating the form at ``matrices`` gives ``target``."""

    form: DiagonalForm
    target: Mat2
    matrices: tuple[Mat2, ...]

    def __post_init__(self):
        value = self.form.evaluate(self.matrices)
        if value != self.target:
            raise ValueError(
                f"matrices evaluate to {value}, not the target {self.target}"
            )


def _check_pair(a1: FieldElement, a2: FieldElement, target: Mat2):
    field = target.field
    if a1.field != field or a2.field != field:
        raise FieldMismatchError("coefficients and target must share one field")
    if a1.is_zero() or a2.is_zero():
        raise ZeroCoefficientError("both coefficients must be nonzero")
    return field


def decompose_pair_odd_char(
    a1: FieldElement, a2: FieldElement, target: Mat2
) -> tuple[Mat2, Mat2]:
    """Solve a1*X1**2 + a2*X2**2 == target away from characteristic 2.

    Fixes x2 = w2 = 0 and z2 = 1.  When the diagonal entries agree,
    x1 = w1 = 1; otherwise x1 and w1 are chosen so x1 - w1 carries the
    diagonal gap while x1 + w1 = 1.  Either way x1 + w1 is invertible,
    the off-diagonal entries divide out, and y2 balances the last entry.
    """
    field = _check_pair(a1, a2, target)
    if field.characteristic == 2:
        raise CharacteristicError("this construction requires characteristic != 2")
    p, q, r, s = target.entries()
    zero, one = field.zero(), field.one()
    two = one + one
    if p == s:
        x1 = w1 = one
    else:
        gap = p - s
        x1 = (gap + a1) / (two * a1)
        w1 = (a1 - gap) / (two * a1)
    t = x1 + w1
    assert not t.is_zero()  # equals 2 or 1 by construction
    y1 = q / (a1 * t)
    z1 = r / (a1 * t)
    y2 = (s - a1 * y1 * z1 - a1 * w1 * w1) / a2
    return Mat2(x1, y1, z1, w1), Mat2(zero, y2, one, zero)


def decompose_pair_char2(
    a1: FieldElement, a2: FieldElement, target: Mat2
) -> tuple[Mat2, Mat2]:
    """Solve a1*X1**2 + a2*X2**2 == target in characteristic 2.

    Branches on the target's shape:

      p != s          x1 = sqrt((p+s)/a1) is nonzero; everything else
                      divides out against it, with z2 = 1 balancing.
      scalar target   X1 = sqrt(p/a1) * I and X2 = 0.
      p == s, q != 0  x1 = sqrt(a2/a1) and w2 = 1, so the two x+w sums
                      are x1 and 1; z1 and z2 absorb p and r.
      p == s, r != 0  the previous branch on the transpose, transposed.

    Total over perfect fields.  Elsewhere the square roots may not
    exist, and NotASquareError carries the element with no root.
    """
    field = _check_pair(a1, a2, target)
    if field.characteristic != 2:
        raise CharacteristicError("this construction requires characteristic 2")
    p, q, r, s = target.entries()
    zero, one = field.zero(), field.one()
    if p != s:
        x1 = ((p + s) / a1).sqrt()
        assert not x1.is_zero()  # p + s != 0 here
        y1 = q / (a1 * x1)
        z1 = r / (a1 * x1)
        y2 = (s + a1 * y1 * z1) / a2
        return Mat2(x1, y1, z1, zero), Mat2(zero, y2, one, zero)
    if q.is_zero() and r.is_zero():
        c = (p / a1).sqrt()
        return Mat2(c, zero, zero, c), Mat2.zero(field)
    if not q.is_zero():
        x1 = (a2 / a1).sqrt()
        assert not x1.is_zero()
        balance = p + a2
        y1 = q / (a1 * x1)
        z1 = balance * x1 / q
        z2 = r / a2 + balance / q
        return Mat2(x1, y1, z1, zero), Mat2(zero, zero, z2, one)
    # p == s, q == 0, r != 0: mirror the q != 0 branch through the transpose
    X1, X2 = decompose_pair_char2(a1, a2, target.transpose())
    return X1.transpose(), X2.transpose()


def decompose(form: DiagonalForm, target: Mat2) -> Decomposition:
    """Represent ``target`` under ``form``, or explain why that fails.

    Uses the two lowest-index nonzero coefficients and fills the other
    slots with zero matrices.  Forms with fewer than two nonzero
    coefficients are refused outright with NotUniversalFormError whose
    witness [[0,1],[0,0]] is a matrix no single-term form represents.
    """
    field = form.field
    if target.field != field:
        raise FieldMismatchError(
            f"target over {target.field} but form over {field}"
        )
    nonzero = form.nonzero_indices()
    if len(nonzero) < 2:
        witness = Mat2(field.zero(), field.one(), field.zero(), field.zero())
        raise NotUniversalFormError(
            "forms with fewer than two nonzero coefficients are never universal",
            witness=witness,
        )
    i, j = nonzero[0], nonzero[1]
    a1, a2 = form.coeffs[i], form.coeffs[j]
    if field.characteristic == 2:
        x_i, x_j = decompose_pair_char2(a1, a2, target)
    else:
        x_i, x_j = decompose_pair_odd_char(a1, a2, target)
    matrices = [Mat2.zero(field)] * len(form)
    matrices[i] = x_i
    matrices[j] = x_j
    return Decomposition(form, target, tuple(matrices))
