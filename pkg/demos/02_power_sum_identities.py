"""Two classical power-sum identities, recovered by the exact solver.

1. 24 * x0*x1*x2 = (x0+x1+x2)^3 - (x0+x1-x2)^3 - (x0-x1+x2)^3 + (x0-x1-x2)^3
2. 9 * x*y^2 = sum over cube roots of unity e of e*(x + e*y)^3

Both are minimal: 4 cubes for x0*x1*x2 (rank 4) and 3 cubes for x*y^2
(rank 3).  The second one genuinely needs the cyclotomic field Q(z3).
"""

from waring import decompose_form, parse_form, verify_decomposition
from waring.serialize import pretty_decomposition


def show(text):
    form = parse_form(text)
    dec = decompose_form(form)
    report = verify_decomposition(form, dec)
    print(f"{text}  ->  {len(dec.terms)} terms, "
          f"verified exactly: {report.passed}")
    print(pretty_decomposition(dec))
    print()


def main():
    show("x0*x1*x2")
    show("x1*x2^2")


if __name__ == "__main__":
    main()
