"""A tour of the four exact field families.

Every element lives in a unique canonical form, so == is true equality:
reduced fractions over the rationals, least residues in GF(p), reduced
polynomials in GF(p^k), and gcd-reduced quotients in GF(2)(x).  Run me
with no arguments; I print what I compute.
"""

from m2forms import (
    ExtensionField,
    PrimeField,
    RationalFunctionField2,
    Rationals,
    field_from_string,
)


def show(label, value):
    print(f"  {label:<38} {value}")


def main():
    print("rationals: reduced fractions")
    Q = Rationals()
    show("parse('4/6')", Q.parse("4/6"))
    show("1/5 - (-1)", Q.parse("1/5") - Q.parse("-1"))
    show("sqrt(9/4)", Q.parse("9/4").sqrt())
    show("(-27/25) * (-25/27)", Q.parse("-27/25") * Q.parse("-25/27"))

    print("\nGF(7): least nonnegative residues")
    GF7 = PrimeField(7)
    show("parse('10')", GF7.parse("10"))
    show("3 * inv(3)", GF7(3) * GF7(3).inv())
    show("sqrt(2)  (3*3 = 9 = 2 mod 7)", GF7(2).sqrt())
    show("elements", [str(a) for a in GF7.elements()])

    print("\nGF(9) = GF(3)[t] / (t^2+1): polynomial residues")
    GF9 = ExtensionField(3, 2)
    t = GF9.parse("t")
    show("modulus (from str(field))", GF9)
    show("t * t  (reduces through t^2 = -1)", t * t)
    show("(t+1)^2", GF9.parse("t+1") ** 2)
    show("inv(t)", t.inv())
    show("frobenius(t) = t^3", t.frobenius())

    print("\nGF(2)(x): rational functions over GF(2), always in lowest terms")
    F2X = RationalFunctionField2()
    f = F2X.parse("(x^3+x)/(x^2+1)")
    show("parse('(x^3+x)/(x^2+1)')", f)  # common square factor cancels
    show("x/(x+1) + 1/(x+1)", F2X.parse("(x)/(x+1)") + F2X.parse("(1)/(x+1)"))
    show("char 2, so -f == f", -F2X.parse("x^2+x") == F2X.parse("x^2+x"))
    show("x is a square?", F2X.parse("x").is_square())
    show("x^2 is a square?", F2X.parse("x^2").is_square())

    print("\nfields from descriptor strings round-trip")
    for text in ["Q", "GF(5)", "GF(9)", "GF(2^3)", "F2(X)"]:
        field = field_from_string(text)
        order = field.order if field.finite else "infinite"
        show(f"field_from_string({text!r})", f"{field} (order {order})")


if __name__ == "__main__":
    main()
