"""Brute force as an independent referee.

The oracle never looks at the constructive solver: it enumerates all
q^4 matrices over a small finite field, precomputes the image set
{a2 * X^2}, and answers representability questions by set lookup
(meet in the middle: scan X1, look up the residual).  Agreement between
two independent routes is the strongest check this package offers.
"""

from m2forms import (
    DiagonalForm,
    ExtensionField,
    Mat2,
    PrimeField,
    build_square_set,
    check_universal_exhaustive,
    decompose,
    representable_two_term,
)


def main():
    GF2 = PrimeField(2)
    GF3 = PrimeField(3)
    GF5 = PrimeField(5)
    GF4 = ExtensionField(2, 2)

    print("square sets: the one-term images {a * X^2}")
    for field, a in [(GF2, 1), (GF3, 1), (GF3, 2)]:
        squares = build_square_set(field, a)
        print(
            f"  {str(field):<6} a={a}: {len(squares.members):>3} distinct values"
            f" out of {field.order ** 4} matrices"
        )
    nilpotent = Mat2.of(GF3, [[0, 1], [0, 0]])
    print(f"  {nilpotent} in GF(3) square set? {nilpotent in build_square_set(GF3, 1)}")

    print("\ntwo terms hit everything (meet in the middle):")
    for field, a1, a2 in [(GF2, 1, 1), (GF3, 1, 2), (GF4, 1, 1), (GF5, 2, 3)]:
        ok, counterexample = check_universal_exhaustive(field(a1), field(a2), field)
        label = "all representable" if ok else f"missing {counterexample}"
        print(f"  {str(field):<6} ({a1},{a2}): {field.order ** 4:>4} targets, {label}")

    print("\ndegenerate pairs leave gaps:")
    ok, counterexample = check_universal_exhaustive(GF2(1), GF2(0), GF2)
    print(f"  GF(2) (1,0): universal={ok}, first gap {counterexample}")

    print("\noracle vs. solver on one GF(3) target:")
    target = Mat2.of(GF3, [[2, 1], [1, 2]])
    x1, x2 = representable_two_term(1, 2, target, GF3)
    print(f"  oracle  X1={x1} X2={x2}")
    form = DiagonalForm(GF3, [1, 2])
    s1, s2 = decompose(form, target).matrices
    print(f"  solver  X1={s1} X2={s2}")
    print("  different witnesses are fine; both evaluate back to the target:")
    print(f"    oracle route: {x1.square() + x2.square().scale(GF3(2)) == target}")
    print(f"    solver route: {form.evaluate((s1, s2)) == target}")

    print("\nfull agreement sweep, GF(3), all 81 targets, coefficients (1,2):")
    mismatches = 0
    for entries in (
        (a, b, c, d)
        for a in GF3.elements()
        for b in GF3.elements()
        for c in GF3.elements()
        for d in GF3.elements()
    ):
        t = Mat2(*entries)
        oracle_hit = representable_two_term(1, 2, t, GF3) is not None
        solver_value = form.evaluate(decompose(form, t).matrices)
        if not (oracle_hit and solver_value == t):
            mismatches += 1
    print(f"  mismatches: {mismatches}")


if __name__ == "__main__":
    main()
