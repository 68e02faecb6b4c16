"""A worked two-term decomposition over the rationals, step by step.

Goal: write [[1/5, 2], [0, -1]] as 2*X1^2 + 1*X2^2 with exact rational
matrices X1, X2.  The construction pins the free entries of X2 first
(x2 = w2 = 0, z2 = 1), splits the diagonal gap p - s across X1's
diagonal so that x1 + w1 = 1, and then every remaining entry is forced.
"""

from m2forms import DiagonalForm, Mat2, Rationals, decompose

Q = Rationals()


def main():
    a1, a2 = Q(2), Q(1)
    target = Mat2.parse(Q, "[[1/5,2],[0,-1]]")
    p, q, r, s = target.entries()
    print(f"target  {target}")
    print(f"form    {a1}*X1^2 + {a2}*X2^2\n")

    print("hand derivation:")
    gap = p - s
    print(f"  diagonal gap     p - s = {gap}")
    x1 = (gap + a1) / (2 * a1)
    w1 = (a1 - gap) / (2 * a1)
    print(f"  split the gap    x1 = (p-s+a1)/(2*a1) = {x1}")
    print(f"                   w1 = (a1-(p-s))/(2*a1) = {w1}")
    print(f"  so x1 + w1 = {x1 + w1} and x1^2 - w1^2 = {x1 * x1 - w1 * w1} = (p-s)/a1")
    y1 = q / (a1 * (x1 + w1))
    z1 = r / (a1 * (x1 + w1))
    print(f"  off-diagonals    y1 = q/(a1*(x1+w1)) = {y1}")
    print(f"                   z1 = r/(a1*(x1+w1)) = {z1}")
    y2 = (s - a1 * y1 * z1 - a1 * w1 * w1) / a2
    print(f"  balance the tail y2 = (s - a1*y1*z1 - a1*w1^2)/a2 = {y2}\n")

    form = DiagonalForm(Q, [a1, a2])
    result = decompose(form, target)
    x1_mat, x2_mat = result.matrices
    print(f"solver  X1 = {x1_mat}")
    print(f"        X2 = {x2_mat}")
    assert x1_mat == Mat2(x1, y1, z1, w1)

    value = form.evaluate(result.matrices)
    print(f"\ncheck   2*X1^2 + X2^2 = {value}")
    print(f"        equals the target exactly: {value == target}")

    print("\nzero coefficients just get zero matrices:")
    padded = DiagonalForm(Q, [0, 2, 0, 1])
    padded_result = decompose(padded, target)
    for i, m in enumerate(padded_result.matrices, start=1):
        print(f"        X{i} = {m}")


if __name__ == "__main__":
    main()
