"""Polynomials over GF(2) packed into Python integers.

The polynomial b_n x^n + ... + b_1 x + b_0 is stored as the integer with
bit i equal to b_i, so addition is xor and the zero polynomial is 0.
All functions here take and return plain ints.
"""


def degree(a):
    """Degree of a, with degree(0) == -1."""
    return a.bit_length() - 1


def mul(a, b):
    """Product of packed polynomials a and b."""
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def divmod_(a, b):
    """Quotient and remainder of a divided by b, for nonzero b."""
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    q = 0
    db = degree(b)
    while a and degree(a) >= db:
        shift = degree(a) - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def mod(a, b):
    """Remainder of a modulo b, for nonzero b."""
    return divmod_(a, b)[1]


def gcd(a, b):
    """Greatest common divisor of packed polynomials a and b."""
    while b:
        a, b = b, mod(a, b)
    return a


def square(a):
    """Square of a; spreads each exponent e to 2e."""
    c = 0
    i = 0
    while a:
        if a & 1:
            c |= 1 << (2 * i)
        a >>= 1
        i += 1
    return c


def sqrt(a):
    """Square root of a, or None if some exponent is odd."""
    root = 0
    i = 0
    while a:
        if a & 1:
            if i & 1:
                return None
            root |= 1 << (i >> 1)
        a >>= 1
        i += 1
    return root
