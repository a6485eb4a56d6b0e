"""Extremal monomial ranks versus the generic rank.

In three variables the maximal monomial rank in degree d has a closed
form: ((d+1)/2)^2 for odd d and (d/2)(d/2+1) for even d.  Dividing the
maximal monomial rank by the generic rank and letting the degree grow
gives a ratio tending to n!/(n-1)^(n-1).
"""

from waring.rank import (
    asymptotic_ratio_report,
    generic_rank,
    max_monomial_rank_3vars,
    survey_max_monomial_rank,
)


def main():
    print("three variables: closed form vs exhaustive survey vs generic rank")
    print("  d   max(closed)  max(survey)  witness        generic")
    for d in range(3, 13):
        closed, witness = max_monomial_rank_3vars(d)
        survey = survey_max_monomial_rank(3, d)
        gen = generic_rank(d, 3)
        print(f"  {d:2d}   {closed:6d}       {survey.value:6d}      "
              f"{str(witness):14s} {gen.value:5d}")

    for n in (3, 4):
        report = asymptotic_ratio_report(n, 60)
        last = report.rows[-1]
        print()
        print(f"n = {n}: ratio at k = {last.k} is {last.ratio} "
              f"≈ {float(last.ratio):.4f}, limit = {report.limit} "
              f"≈ {float(report.limit):.4f}")


if __name__ == "__main__":
    main()
