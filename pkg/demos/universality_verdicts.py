"""When does sum(ai * Xi^2) hit every 2x2 matrix?

Over a perfect field the answer is a head count: two or more nonzero
coefficients suffice, one or zero never do.  The stubborn direction is
witnessed concretely: [[0,1],[0,0]] is not a*X^2 for any a and any X.
Over the 2x2 integer matrices (a ring, not a field) the criterion is
arithmetic instead: leave-one-out gcds of 1, plus at least three
coefficients not divisible by 4.
"""

from m2forms import (
    DiagonalForm,
    PrimeField,
    RationalFunctionField2,
    Rationals,
    decide_universality,
    lee_criterion,
    single_term_witness,
)


def verdict_line(form):
    verdict = decide_universality(form)
    text = verdict.status
    if verdict.witness is not None:
        text += f", witness {verdict.witness}"
    if verdict.status == "undecided":
        text += f" ({verdict.reason})"
    return text


def main():
    Q = Rationals()
    GF3 = PrimeField(3)
    F2X = RationalFunctionField2()

    print("verdicts by coefficient count:")
    for field, coeffs in [
        (Q, [0, 5, 7]),
        (Q, [5]),
        (GF3, [1, 2]),
        (GF3, [0, 0, 2]),
        (GF3, [0, 0, 0]),
        (F2X, [1, 1]),
        (F2X, [1, 0]),
    ]:
        form = DiagonalForm(field, coeffs)
        print(f"  {str(form):<12} over {str(field):<7} -> {verdict_line(form)}")
    print("  (the non-perfect GF(2)(x) gets 'undecided': see the counterexample demo)")

    print("\nwhy a single term fails, in equations:")
    witness, explanation = single_term_witness(GF3(2))
    print(f"  target {witness} forces, for X = [[x,y],[z,w]]:")
    for eq in explanation.equations:
        print(f"    {eq}")
    print(f"  {explanation.conclusion}")
    print(f"  exhaustive confirmation over all 81 matrices: {explanation.oracle_confirmed}")

    print("\ninteger coefficients, 2x2 integer matrices:")
    for coeffs in [(1, 1, 1), (1, 1), (2, 2, 3), (1, 2, 3), (4, 4, 4, 1, 1)]:
        tag = "universal" if lee_criterion(coeffs) else "not universal"
        print(f"  {str(coeffs):<18} {tag}")
    print("  (1,1) is too short to give three coefficients not divisible by 4;")
    print("  (2,2,3) fails the gcd clause (2 divides all but one);")
    print("  (4,4,4,1,1) has only two coefficients not divisible by 4")


if __name__ == "__main__":
    main()
