"""Square roots by inverting the squaring map in characteristic 2.

In GF(2^k) the map a -> a^2 is a bijection (squaring is additive in
characteristic 2, and injective because a field has no nilpotents), so
every element has exactly one square root: a^(2^(k-1)).  That totality
is what the characteristic-2 decomposition solver leans on.  In odd
characteristic only half the units are squares and roots come in +/-
pairs; the solver for odd characteristic never needs them, but the
field API provides them anyway.
"""

from m2forms import ExtensionField, PrimeField

def main():
    GF8 = ExtensionField(2, 3)
    print(f"{GF8}: squaring permutes the field")
    print(f"  {'a':<10} {'a^2':<10} sqrt(a)")
    for a in GF8.elements():
        print(f"  {str(a):<10} {str(a * a):<10} {a.sqrt()}")
    roots = {str(a.sqrt()) for a in GF8.elements()}
    print(f"  all {len(roots)} roots distinct: sqrt is the inverse permutation\n")

    GF4 = ExtensionField(2, 2)
    t = GF4.parse("t")
    print(f"{GF4}: frobenius and sqrt undo each other")
    print(f"  frobenius(t) = t^2 = {t.frobenius()}")
    print(f"  sqrt(t)      = {t.sqrt()}  (and ({t.sqrt()})^2 = {t.sqrt() ** 2})")
    print(f"  sqrt(frobenius(t)) = {t.frobenius().sqrt()} = t\n")

    GF9 = ExtensionField(3, 2)
    print(f"{GF9}: odd characteristic, only some elements are squares")
    squares = [a for a in GF9.elements() if a.is_square()]
    non_squares = [a for a in GF9.elements() if not a.is_square()]
    print(f"  squares     ({len(squares)}): {', '.join(str(a) for a in squares)}")
    print(f"  non-squares ({len(non_squares)}): {', '.join(str(a) for a in non_squares)}")
    for a in squares:
        if not a.is_zero():
            r = a.sqrt()
            print(f"  sqrt({a}) = {r}, and indeed ({r})^2 = {r * r}")

    GF13 = PrimeField(13)
    print(f"\n{GF13}: prime field root finding (13 = 1 mod 4)")
    for n in [2, 3, 4, 10, 12]:
        a = GF13(n)
        if a.is_square():
            print(f"  sqrt({a}) = {a.sqrt()}")
        else:
            print(f"  {a} is not a quadratic residue")


if __name__ == "__main__":
    main()
