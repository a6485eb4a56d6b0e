"""Waring ranks of monomials: the closed formula in action.

For a monomial x1^a1 * ... * xn^an with the exponents sorted so that
a1 <= ... <= an, the rank is the product (a2+1)(a3+1)...(an+1).  This
script prints a small table and checks a few invariances.
"""

from waring import Monomial, parse_form, rank_monomial


def main():
    print("rank of x1^a * x2^b (binary monomials)")
    for a in range(1, 5):
        row = []
        for b in range(1, 5):
            m = Monomial(["x1", "x2"], [a, b])
            row.append(f"{rank_monomial(m):3d}")
        print(f"  a={a}: " + " ".join(row))

    print()
    print("square-free products x1*x2*...*xn have rank 2^(n-1):")
    for n in range(1, 7):
        m = Monomial([f"x{i + 1}" for i in range(n)], [1] * n)
        print(f"  n={n}: rank = {rank_monomial(m)}")

    print()
    print("rank is invariant under permuting the variables:")
    for text in ("x1^2*x2^3*x3", "x3*x1^3*x2^2", "x2*x3^2*x1^3"):
        m = parse_form(text).monomials[0]
        print(f"  {text:16s} -> {rank_monomial(m)}")


if __name__ == "__main__":
    main()
