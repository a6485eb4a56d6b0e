"""Apolarity lower bounds and Hilbert functions of monomial quotients.

The t-th catalecticant of a form F gives rank(F) >= rank of the matrix;
maximizing over t yields a certified lower bound.  For monomials the
annihilator is itself monomial, so Hilbert functions can be computed by
counting standard monomials, and the intersection identity behind rank
additivity can be checked degree by degree.
"""

from waring import catalecticant_lower_bound, parse_form, rank_monomial
from waring.apolarity import (
    claim_ideals,
    hf_table,
    verify_claim_identity,
)
from waring.forms import MonomialIdeal, perp_generators


def main():
    print("catalecticant lower bound vs exact rank:")
    for text in ("x1*x2*x3", "x1^2*x2^2", "x1*x2^3", "x1^2*x2^2*x3^2"):
        form = parse_form(text)
        bound = catalecticant_lower_bound(form)
        rank = rank_monomial(form.monomials[0])
        gap = "" if bound == rank else f"   (gap {rank - bound})"
        print(f"  {text:16s} bound = {bound:3d}   rank = {rank:3d}{gap}")

    print()
    print("Hilbert function of T/(X1^2, X2^3)  (the annihilator of x1*x2^2):")
    mono = parse_form("x1*x2^2").monomials[0]
    J = perp_generators(mono)
    table = hf_table(J, 5)
    for t, value in enumerate(table):
        print(f"  HF({t}) = {value}")
    print(f"  total = {sum(table)}")

    print()
    print("intersection identity for x1*x2^2 + x3^3:")
    ideals = claim_ideals(parse_form("x1*x2^2 + x3^3"))
    for i, J in enumerate(ideals):
        print(f"  J{i + 1} generators: {J.generators}")
    report = verify_claim_identity(ideals)
    print(f"  sum HF(T/(J1 ∩ J2)) = {report.lhs}, "
          f"predicted = {report.rhs}, per ideal = {report.per_ideal}, "
          f"passed = {report.passed}")


if __name__ == "__main__":
    main()
