"""Exact arithmetic for the four supported field families.

Four families are provided, each with a unique canonical form per element
so that equality of payloads is equality in the field:

  Rationals               reduced fractions (fractions.Fraction payloads)
  PrimeField(p)           residues in [0, p)
  ExtensionField(p, k)    polynomials of degree < k modulo a monic
                          irreducible modulus, as ascending coefficient
                          tuples over GF(p)
  RationalFunctionField2  quotients of GF(2)[x] polynomials in lowest
                          terms, packed into int pairs (see gf2x)

Field objects are lightweight descriptors that double as element
factories: ``GF5 = PrimeField(5); a = GF5(3)``.  Elements are immutable,
hashable, and support the usual operators plus ``frobenius``, ``sqrt``
and ``is_square``.  The first three families are perfect; the rational
function field is not, and its missing square roots are exactly what the
characteristic-2 solver reports via NotASquareError.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from . import gf2x, polys
from .errors import (
    CharacteristicError,
    FieldMismatchError,
    InfiniteFieldError,
    NotASquareError,
    ParseError,
)

_MAX_EXPONENT = 4096  # guardrail for parsed polynomial exponents

# witnesses make Miller-Rabin deterministic for n < 3.3 * 10**24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_PRIME_BOUND = 2**64

# ascending coefficient tuples; reproducible defaults for small extensions
_DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),  # t^2+t+1
    (2, 3): (1, 1, 0, 1),  # t^3+t+1
    (2, 4): (1, 1, 0, 0, 1),  # t^4+t+1
    (2, 5): (1, 0, 1, 0, 0, 1),  # t^5+t^2+1
    (3, 2): (1, 0, 1),  # t^2+1
    (3, 3): (1, 2, 0, 1),  # t^3+2t+1
    (5, 2): (1, 1, 1),  # t^2+t+1
}


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact below 3.3e24)."""
    if n < 2:
        return False
    for small in _MR_WITNESSES:
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _tonelli_shanks(a: int, p: int) -> int:
    """Square root of the quadratic residue a modulo an odd prime p."""
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c = s, pow(z, q, p)
    t, r = pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _parse_poly_text(text: str, var: str) -> dict[int, int]:
    """Parse ``text`` as a sum of terms in ``var``.

    Terms look like ``5``, ``t``, ``t^3``, ``2*t`` and are joined by '+'
    or '-'.  Returns accumulated signed coefficients by exponent; callers
    reduce them into their own field.
    """
    s = text
    n = len(s)
    if n == 0:
        raise ParseError("empty polynomial", text, 0)
    coeffs: dict[int, int] = {}
    i = 0
    first = True
    while i < n:
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-'", text, i)
        first = False
        j = i
        while j < n and s[j].isdigit():
            j += 1
        coeff = int(s[i:j]) if j > i else None
        i = j
        has_star = i < n and s[i] == "*"
        if has_star:
            i += 1
        exp = 0
        if i < n and s[i] == var:
            i += 1
            exp = 1
            if i < n and s[i] == "^":
                i += 1
                j = i
                while j < n and s[j].isdigit():
                    j += 1
                if j == i:
                    raise ParseError("expected exponent digits", text, i)
                exp = int(s[i:j])
                if exp > _MAX_EXPONENT:
                    raise ParseError("exponent too large", text, i)
                i = j
        elif has_star:
            raise ParseError(f"expected '{var}' after '*'", text, i)
        if coeff is None:
            if exp == 0:
                raise ParseError("expected a term", text, i)
            coeff = 1
        coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
    return coeffs


def _render_term(coeff: int, exp: int, var: str) -> str:
    if exp == 0:
        return str(coeff)
    base = var if exp == 1 else f"{var}^{exp}"
    return base if coeff == 1 else f"{coeff}*{base}"


class FieldElement:
    """Immutable canonical element of one of the supported fields.

    Equality and hashing go by field and payload, so ``==`` is exact
    equality of canonical forms.  Ints mix freely in arithmetic and are
    coerced into the element's field.
    """

    __slots__ = ("field", "payload")

    def __init__(self, field: Field, payload):
        self.field = field
        self.payload = payload

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"operands from different fields: {self.field} and {other.field}"
                )
            return other
        if isinstance(other, int):
            return self.field(other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.payload, rhs.payload))

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.payload, rhs.payload))

    def __rsub__(self, other):
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(lhs.payload, self.payload))

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.payload, rhs.payload))

    __rmul__ = __mul__

    def __truediv__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return FieldElement(self.field, self.field._div(self.payload, rhs.payload))

    def __rtruediv__(self, other):
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return FieldElement(self.field, self.field._div(lhs.payload, self.payload))

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.payload))

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inv() ** (-e)
        return FieldElement(self.field, self.field._pow(self.payload, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.payload == other.payload
        if isinstance(other, int):
            return self.payload == self.field._from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.payload))

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self) -> bool:
        return self.field._is_zero(self.payload)

    def inv(self) -> FieldElement:
        """Multiplicative inverse; raises ZeroDivisionError at zero."""
        return FieldElement(self.field, self.field._inv(self.payload))

    def frobenius(self) -> FieldElement:
        """The map a -> a**char, an automorphism of perfect fields."""
        ch = self.field.characteristic
        if ch == 0:
            raise CharacteristicError("frobenius is undefined in characteristic 0")
        return self**ch

    def sqrt(self) -> FieldElement:
        """An exact square root; raises NotASquareError if none exists.

        Total over the perfect characteristic-2 fields, where it inverts
        frobenius and the root is unique.  Where roots come in +/- pairs
        the smaller canonical payload is returned.
        """
        return FieldElement(self.field, self.field._sqrt(self.payload))

    def is_square(self) -> bool:
        try:
            self.sqrt()
        except NotASquareError:
            return False
        return True

    def __str__(self):
        return self.field._render(self.payload)

    def __repr__(self):
        return f"{self.field!r}({self.field._render(self.payload)})"


class Field:
    """Base descriptor for a supported field; calls make elements."""

    characteristic: int = 0
    perfect: bool = True
    order: int | None = None  # None when infinite

    @property
    def finite(self) -> bool:
        return self.order is not None

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"element of {value.field} is not in {self}")
            return value
        if isinstance(value, int):
            return FieldElement(self, self._from_int(value))
        if isinstance(value, str):
            return self.parse(value)
        payload = self._from_other(value)
        return FieldElement(self, payload)

    def zero(self) -> FieldElement:
        return FieldElement(self, self._from_int(0))

    def one(self) -> FieldElement:
        return FieldElement(self, self._from_int(1))

    def parse(self, text: str) -> FieldElement:
        """Parse element text in this field's grammar; whitespace is ignored."""
        s = "".join(str(text).split())
        if not s:
            raise ParseError("empty element", text, 0)
        return FieldElement(self, self._parse_payload(s))

    def elements(self):
        """Iterate all elements in canonical order (finite fields only)."""
        raise InfiniteFieldError(f"{self} is infinite")

    # payload-level hooks implemented by subclasses
    def _from_other(self, value):
        raise TypeError(f"cannot make a {self} element from {value!r}")

    def _div(self, a, b):
        return self._mul(a, self._inv(b))

    def _pow(self, a, e):
        result = self._from_int(1)
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result


class Rationals(Field):
    """The field of rational numbers with reduced-fraction payloads."""

    characteristic = 0
    perfect = True
    order = None

    _RE = re.compile(r"^-?\d+(?:/\d+)?$")

    def __eq__(self, other):
        return type(other) is Rationals

    def __hash__(self):
        return hash("m2forms.Rationals")

    def __repr__(self):
        return "Q"

    __str__ = __repr__

    def _from_int(self, n):
        return Fraction(n)

    def _from_other(self, value):
        if isinstance(value, Fraction):
            return value
        return super()._from_other(value)

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def _sqrt(self, a):
        if a < 0:
            raise NotASquareError(FieldElement(self, a))
        num = _isqrt_exact(a.numerator)
        den = _isqrt_exact(a.denominator)
        if num is None or den is None:
            raise NotASquareError(FieldElement(self, a))
        return Fraction(num, den)

    def _parse_payload(self, s):
        if not self._RE.match(s):
            raise ParseError("expected [-]digits[/digits]", s, 0)
        try:
            return Fraction(s)
        except ZeroDivisionError:
            raise ParseError("zero denominator", s, s.index("/") + 1) from None

    def _render(self, a):
        return str(a)

    def random_element(self, rng, bound: int = 10**6) -> FieldElement:
        num = rng.randint(-bound, bound)
        den = rng.randint(1, bound)
        return FieldElement(self, Fraction(num, den))


def _isqrt_exact(n: int) -> int | None:
    r = math.isqrt(n)
    return r if r * r == n else None


class PrimeField(Field):
    """GF(p) for prime p, with least nonnegative residue payloads."""

    perfect = True

    _RE = re.compile(r"^-?\d+$")

    def __init__(self, p: int):
        if p >= _PRIME_BOUND:
            raise ValueError(f"prime fields above 2**64 are not supported: {p}")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p

    def __eq__(self, other):
        return type(other) is PrimeField and other.p == self.p

    def __hash__(self):
        return hash(("m2forms.PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    __str__ = __repr__

    def _from_int(self, n):
        return n % self.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _neg(self, a):
        return -a % self.p

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return pow(a, self.p - 2, self.p)

    def _pow(self, a, e):
        return pow(a, e, self.p)

    def _is_zero(self, a):
        return a == 0

    def _sqrt(self, a):
        p = self.p
        if p == 2 or a == 0:
            return a
        if pow(a, (p - 1) // 2, p) != 1:
            raise NotASquareError(FieldElement(self, a))
        r = _tonelli_shanks(a, p)
        return min(r, p - r)

    def _parse_payload(self, s):
        if not self._RE.match(s):
            raise ParseError("expected [-]digits", s, 0)
        return int(s) % self.p

    def _render(self, a):
        return str(a)

    def elements(self):
        for a in range(self.p):
            yield FieldElement(self, a)

    def random_element(self, rng) -> FieldElement:
        return FieldElement(self, rng.randrange(self.p))


class ExtensionField(Field):
    """GF(p^k) as polynomials modulo a monic irreducible of degree k.

    Payloads are ascending coefficient tuples of degree < k.  A default
    modulus is supplied for the small fields used throughout the tests;
    elsewhere one must be given (as an ascending tuple or as text in t).
    Irreducibility is verified, which bounds supported fields to degree
    at most 8 over p at most 97.
    """

    perfect = True

    def __init__(self, p: int, k: int, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 2:
            raise ValueError("extension degree must be at least 2")
        if p > 97 or k > 8:
            raise ValueError(
                "irreducibility checking supports degree <= 8 over p <= 97 only"
            )
        self.p = p
        self.k = k
        self.characteristic = p
        self.order = p**k
        if modulus is None:
            try:
                modulus = _DEFAULT_MODULI[(p, k)]
            except KeyError:
                raise ValueError(
                    f"no default modulus for GF({p}^{k}); pass one explicitly"
                ) from None
        if isinstance(modulus, str):
            coeffs = _parse_poly_text("".join(modulus.split()), "t")
            dense = [0] * (max(coeffs) + 1)
            for e, c in coeffs.items():
                dense[e] = c
            modulus = polys.normalize(dense, p)
        else:
            modulus = polys.normalize(tuple(modulus), p)
        if polys.degree(modulus) != k:
            raise ValueError(f"modulus must have degree {k}")
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if not polys.is_irreducible(modulus, p):
            raise ValueError(f"modulus {_render_modulus(modulus)} is reducible over GF({p})")
        self.modulus = modulus

    def __eq__(self, other):
        return (
            type(other) is ExtensionField
            and other.p == self.p
            and other.k == self.k
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("m2forms.ExtensionField", self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    def __str__(self):
        return f"GF({self.p}^{self.k});modulus={_render_modulus(self.modulus)}"

    def _from_int(self, n):
        return polys.normalize((n,), self.p)

    def _add(self, a, b):
        return polys.add(a, b, self.p)

    def _sub(self, a, b):
        return polys.sub(a, b, self.p)

    def _mul(self, a, b):
        return polys.mod(polys.mul(a, b, self.p), self.modulus, self.p)

    def _neg(self, a):
        return polys.neg(a, self.p)

    def _inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero")
        return polys.inv_mod(a, self.modulus, self.p)

    def _pow(self, a, e):
        return polys.pow_mod(a, e, self.modulus, self.p)

    def _is_zero(self, a):
        return a == ()

    def _sqrt(self, a):
        p = self.p
        if p == 2:
            # invert the squaring automorphism: square k-1 more times
            out = a
            for _ in range(self.k - 1):
                out = self._mul(out, out)
            return out
        if not a:
            return a
        q = self.order
        if self._pow(a, (q - 1) // 2) != (1,):
            raise NotASquareError(FieldElement(self, a))
        # Tonelli-Shanks in the multiplicative group of GF(q)
        m2 = q - 1
        s = 0
        while m2 % 2 == 0:
            m2 //= 2
            s += 1
        z = None
        for idx in range(2, q):
            cand = self._payload_from_index(idx)
            if self._pow(cand, (q - 1) // 2) != (1,):
                z = cand
                break
        m, c = s, self._pow(z, m2)
        t, r = self._pow(a, m2), self._pow(a, (m2 + 1) // 2)
        while t != (1,):
            i, t2 = 0, t
            while t2 != (1,):
                t2 = self._mul(t2, t2)
                i += 1
            b = self._pow(c, 1 << (m - i - 1))
            m, c = i, self._mul(b, b)
            t, r = self._mul(t, c), self._mul(r, b)
        return min(r, self._neg(r))

    def _payload_from_index(self, idx: int):
        digits = []
        while idx:
            idx, rem = divmod(idx, self.p)
            digits.append(rem)
        return tuple(digits)

    def _parse_payload(self, s):
        coeffs = _parse_poly_text(s, "t")
        dense = [0] * (max(coeffs) + 1)
        for e, c in coeffs.items():
            dense[e] = c
        return polys.mod(polys.normalize(dense, self.p), self.modulus, self.p)

    def _render(self, a):
        if not a:
            return "0"
        terms = []
        for e in range(len(a) - 1, -1, -1):
            if a[e]:
                terms.append(_render_term(a[e], e, "t"))
        return "+".join(terms)

    def elements(self):
        for idx in range(self.order):
            yield FieldElement(self, self._payload_from_index(idx))

    def random_element(self, rng) -> FieldElement:
        return FieldElement(self, self._payload_from_index(rng.randrange(self.order)))


def _render_modulus(modulus) -> str:
    terms = []
    for e in range(len(modulus) - 1, -1, -1):
        if modulus[e]:
            terms.append(_render_term(modulus[e], e, "t"))
    return "+".join(terms)


class RationalFunctionField2(Field):
    """GF(2)(x), rational functions over GF(2) in one variable.

    Payloads are pairs of packed GF(2)[x] polynomials (see gf2x) in
    lowest terms with nonzero denominator; that form is unique because
    the only unit is 1.  This field has characteristic 2 but is not
    perfect: x has no square root, so ``sqrt`` is partial and the
    characteristic-2 solver can fail here, by design.
    """

    characteristic = 2
    perfect = False
    order = None

    def __eq__(self, other):
        return type(other) is RationalFunctionField2

    def __hash__(self):
        return hash("m2forms.RationalFunctionField2")

    def __repr__(self):
        return "F2(X)"

    __str__ = __repr__

    @staticmethod
    def _reduce(num: int, den: int):
        if den == 0:
            raise ZeroDivisionError("division by zero")
        if num == 0:
            return (0, 1)
        g = gf2x.gcd(num, den)
        return (gf2x.divmod_(num, g)[0], gf2x.divmod_(den, g)[0])

    def _from_int(self, n):
        return (n % 2, 1)

    def _add(self, a, b):
        return self._reduce(
            gf2x.mul(a[0], b[1]) ^ gf2x.mul(b[0], a[1]), gf2x.mul(a[1], b[1])
        )

    _sub = _add  # characteristic 2

    def _mul(self, a, b):
        return self._reduce(gf2x.mul(a[0], b[0]), gf2x.mul(a[1], b[1]))

    def _neg(self, a):
        return a

    def _inv(self, a):
        if a[0] == 0:
            raise ZeroDivisionError("division by zero")
        return (a[1], a[0])

    def _is_zero(self, a):
        return a[0] == 0

    def _sqrt(self, a):
        num = gf2x.sqrt(a[0])
        den = gf2x.sqrt(a[1])
        if num is None or den is None:
            raise NotASquareError(FieldElement(self, a))
        return (num, den)

    def _parse_payload(self, s):
        depth = 0
        slash = -1
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth < 0:
                    raise ParseError("unbalanced ')'", s, i)
            elif ch == "/" and depth == 0:
                slash = i
                break
        if slash == -1:
            if depth != 0:
                raise ParseError("unbalanced '('", s, len(s) - 1)
            return self._reduce(self._parse_poly_bits(_strip_parens(s)), 1)
        num_text = _strip_parens(s[:slash])
        den_text = _strip_parens(s[slash + 1 :])
        den = self._parse_poly_bits(den_text)
        if den == 0:
            raise ParseError("zero denominator", s, slash + 1)
        return self._reduce(self._parse_poly_bits(num_text), den)

    @staticmethod
    def _parse_poly_bits(s: str) -> int:
        coeffs = _parse_poly_text(s, "x")
        bits = 0
        for e, c in coeffs.items():
            if c % 2:
                bits |= 1 << e
        return bits

    def _render(self, a):
        num, den = a
        num_text = _render_bits(num)
        if den == 1:
            return num_text
        return f"({num_text})/({_render_bits(den)})"

    def random_element(self, rng, max_degree: int = 4) -> FieldElement:
        num = rng.randrange(1 << (max_degree + 1))
        den = 0
        while den == 0:
            den = rng.randrange(1 << (max_degree + 1))
        return FieldElement(self, self._reduce(num, den))


def _strip_parens(s: str) -> str:
    if len(s) >= 2 and s[0] == "(" and s[-1] == ")":
        depth = 0
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and i != len(s) - 1:
                    return s  # outer parens do not span the whole text
        return s[1:-1]
    return s


def _render_bits(bits: int) -> str:
    if bits == 0:
        return "0"
    terms = []
    for e in range(gf2x.degree(bits), -1, -1):
        if (bits >> e) & 1:
            terms.append(_render_term(1, e, "x"))
    return "+".join(terms)


_FIELD_RE = re.compile(r"^GF\((\d+)(?:\^(\d+))?\)(?:;modulus=(.+))?$")


def _prime_power(n: int):
    if n < 2:
        return None
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            m = n
            while m % d == 0:
                m //= d
                k += 1
            return (d, k) if m == 1 else None
        d += 1
    return (n, 1)


def field_from_string(text: str) -> Field:
    """Build a field from its descriptor string.

    Accepted forms: ``Q``, ``GF(p)``, ``GF(p^k)``, ``F2(X)``, with an
    optional ``;modulus=<poly in t>`` suffix on the GF forms.  A bare
    prime power such as ``GF(9)`` is taken as GF(3^2) with the default
    modulus.
    """
    s = "".join(text.split())
    if s == "Q":
        return Rationals()
    if s == "F2(X)":
        return RationalFunctionField2()
    m = _FIELD_RE.match(s)
    if not m:
        raise ParseError(f"unrecognized field: {text!r}", text, 0)
    base = int(m.group(1))
    modulus = m.group(3)
    if m.group(2) is None:
        pk = _prime_power(base)
        if pk is None:
            raise ParseError(f"{base} is not a prime power", text, 0)
        p, k = pk
    else:
        p, k = base, int(m.group(2))
        if not is_prime(p):
            raise ParseError(f"{p} is not prime", text, 0)
        if k < 1:
            raise ParseError("extension degree must be positive", text, 0)
    try:
        if k == 1:
            if modulus is not None:
                raise ParseError("prime fields take no modulus", text, 0)
            return PrimeField(p)
        return ExtensionField(p, k, modulus)
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc), text, 0) from None
