"""2x2 matrices over a field, and diagonal quadratic forms in matrix variables.

Matrices are immutable and hashable, with entries e11, e12, e21, e22 all
from one field.  A DiagonalForm holds an ordered coefficient vector
(a1, ..., am) and evaluates sum(ai * Xi**2) at a tuple of matrices.
"""

from __future__ import annotations

from .errors import ArityMismatchError, FieldMismatchError, ParseError
from .fields import Field, FieldElement


class Mat2:
    """An immutable 2x2 matrix with entries from a single field."""

    __slots__ = ("e11", "e12", "e21", "e22")

    def __init__(self, e11, e12, e21, e22):
        if not isinstance(e11, FieldElement):
            raise TypeError("entries must be field elements; use Mat2.of to coerce")
        field = e11.field
        for entry in (e12, e21, e22):
            if not isinstance(entry, FieldElement) or entry.field != field:
                raise FieldMismatchError("all entries must come from one field")
        self.e11 = e11
        self.e12 = e12
        self.e21 = e21
        self.e22 = e22

    @classmethod
    def of(cls, field: Field, rows) -> Mat2:
        """Build a matrix from any 2x2 nest of values the field accepts."""
        (a, b), (c, d) = rows
        return cls(field(a), field(b), field(c), field(d))

    @classmethod
    def zero(cls, field: Field) -> Mat2:
        z = field.zero()
        return cls(z, z, z, z)

    @classmethod
    def identity(cls, field: Field) -> Mat2:
        z, o = field.zero(), field.one()
        return cls(o, z, z, o)

    @property
    def field(self) -> Field:
        return self.e11.field

    def entries(self):
        return (self.e11, self.e12, self.e21, self.e22)

    def _check(self, other) -> Mat2:
        if not isinstance(other, Mat2):
            raise TypeError(f"expected a matrix, got {other!r}")
        if other.field != self.field:
            raise FieldMismatchError(
                f"matrices over different fields: {self.field} and {other.field}"
            )
        return other

    def __add__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        self._check(other)
        return Mat2(
            self.e11 + other.e11,
            self.e12 + other.e12,
            self.e21 + other.e21,
            self.e22 + other.e22,
        )

    def __sub__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        self._check(other)
        return Mat2(
            self.e11 - other.e11,
            self.e12 - other.e12,
            self.e21 - other.e21,
            self.e22 - other.e22,
        )

    def __neg__(self):
        return Mat2(-self.e11, -self.e12, -self.e21, -self.e22)

    def __mul__(self, other):
        if isinstance(other, Mat2):
            self._check(other)
            return Mat2(
                self.e11 * other.e11 + self.e12 * other.e21,
                self.e11 * other.e12 + self.e12 * other.e22,
                self.e21 * other.e11 + self.e22 * other.e21,
                self.e21 * other.e12 + self.e22 * other.e22,
            )
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> Mat2:
        c = self.field(c)
        return Mat2(c * self.e11, c * self.e12, c * self.e21, c * self.e22)

    def square(self) -> Mat2:
        """The matrix product with itself."""
        return self * self

    def trace(self) -> FieldElement:
        return self.e11 + self.e22

    def det(self) -> FieldElement:
        return self.e11 * self.e22 - self.e12 * self.e21

    def transpose(self) -> Mat2:
        return Mat2(self.e11, self.e21, self.e12, self.e22)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries())

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __str__(self):
        return f"[[{self.e11},{self.e12}],[{self.e21},{self.e22}]]"

    def __repr__(self):
        return f"Mat2({self.e11!r}, {self.e12!r}, {self.e21!r}, {self.e22!r})"

    @classmethod
    def parse(cls, field: Field, text: str) -> Mat2:
        """Parse ``[[e,e],[e,e]]`` with entries in the field's grammar."""
        s = "".join(str(text).split())
        parts = _split_matrix(s)
        return cls(*(field.parse(part) for part in parts))


def _split_matrix(s: str):
    """Split ``[[a,b],[c,d]]`` into the four entry substrings."""

    def fail(msg, pos):
        raise ParseError(msg, s, pos)

    def read_entry(i, stop):
        depth = 0
        j = i
        while j < len(s):
            ch = s[j]
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == stop and depth == 0:
                if j == i:
                    fail("empty matrix entry", i)
                return s[i:j], j
            elif ch in "[]," and depth == 0:
                fail(f"unexpected {ch!r} in entry", j)
            j += 1
        fail(f"expected {stop!r}", len(s))

    def expect(i, token):
        if not s.startswith(token, i):
            fail(f"expected {token!r}", i)
        return i + len(token)

    i = expect(0, "[[")
    a, i = read_entry(i, ",")
    i += 1
    b, i = read_entry(i, "]")
    i = expect(i + 1, ",[")
    c, i = read_entry(i, ",")
    i += 1
    d, i = read_entry(i, "]")
    i = expect(i + 1, "]")
    if i != len(s):
        fail("trailing characters after matrix", i)
    return a, b, c, d


class DiagonalForm:
    """The diagonal quadratic form sum(ai * Xi**2) over a fixed field.

    Coefficients may be zero; which ones are nonzero is what decides
    universality over the 2x2 matrices.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        coeffs = tuple(field(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a form needs at least one coefficient")
        self.field = field
        self.coeffs = coeffs

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, DiagonalForm):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"DiagonalForm({self.field!r}, [{self}])"

    def nonzero_indices(self):
        return tuple(i for i, c in enumerate(self.coeffs) if not c.is_zero())

    def evaluate(self, matrices) -> Mat2:
        """The exact value sum(ai * matrices[i]**2)."""
        matrices = tuple(matrices)
        if len(matrices) != len(self.coeffs):
            raise ArityMismatchError(
                f"form has {len(self.coeffs)} coefficients but got {len(matrices)} matrices"
            )
        total = Mat2.zero(self.field)
        for coeff, mat in zip(self.coeffs, matrices):
            if mat.field != self.field:
                raise FieldMismatchError(
                    f"matrix over {mat.field} in a form over {self.field}"
                )
            total = total + mat.square().scale(coeff)
        return total
