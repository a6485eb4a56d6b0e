import random
from fractions import Fraction

import pytest

from waring.cyclotomic import CyclotomicNumber, cyclotomic_embed
from waring.linalg import (
    InconsistentSystemError,
    LinearSystem,
    UnderdeterminedSystemError,
    matrix_rank,
    solve_exact,
)


def test_identity_system():
    F = Fraction
    matrix = [[F(1), F(0)], [F(0), F(1)]]
    rhs = [F(3, 7), F(-2)]
    assert solve_exact(LinearSystem(matrix, rhs)) == rhs


def test_remark_four_cubes_system():
    # Coefficients of x0^3, x0^2*x1, x0^2*x2, x0*x1*x2 in (x0+e1*x1+e2*x2)^3
    # at the four sign points; the solution must be the 1/24 pattern.
    points = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    matrix = [
        [Fraction(1) for _ in points],
        [Fraction(3 * e1) for e1, e2 in points],
        [Fraction(3 * e2) for e1, e2 in points],
        [Fraction(6 * e1 * e2) for e1, e2 in points],
    ]
    rhs = [Fraction(0), Fraction(0), Fraction(0), Fraction(1)]
    gammas = solve_exact(LinearSystem(matrix, rhs))
    assert gammas == [Fraction(1, 24), Fraction(-1, 24),
                      Fraction(-1, 24), Fraction(1, 24)]


def test_xy2_system_over_zeta3():
    # rows indexed by x^3, x^2 y, x y^2, y^3 for columns (x + e y)^3,
    # e over the cube roots of unity; target x y^2.
    roots = [cyclotomic_embed(3, k, 3) for k in range(3)]
    one = CyclotomicNumber.from_rational(1, 3)
    matrix = [
        [one for _ in roots],
        [3 * e for e in roots],
        [3 * e * e for e in roots],
        [e ** 3 for e in roots],
    ]
    rhs = [one * 0, one * 0, one, one * 0]
    gammas = solve_exact(LinearSystem(matrix, rhs))
    assert gammas == [e / 9 for e in roots]


def test_solution_reproduces_rhs():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.randint(1, 5)
        matrix = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                   for _ in range(n)] for _ in range(n + 1)]
        solution = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
        rhs = [sum(a * x for a, x in zip(row, solution)) for row in matrix]
        try:
            got = solve_exact(LinearSystem(matrix, rhs))
        except UnderdeterminedSystemError:
            continue
        assert [sum(a * x for a, x in zip(row, got)) for row in matrix] == rhs


def test_inconsistent_system_reports_row():
    F = Fraction
    matrix = [[F(1), F(1)], [F(2), F(2)], [F(0), F(1)]]
    rhs = [F(1), F(3), F(0)]
    with pytest.raises(InconsistentSystemError):
        solve_exact(LinearSystem(matrix, rhs))


def test_underdetermined_system():
    F = Fraction
    matrix = [[F(1), F(2)], [F(2), F(4)]]
    rhs = [F(1), F(2)]
    with pytest.raises(UnderdeterminedSystemError) as exc:
        solve_exact(LinearSystem(matrix, rhs))
    assert exc.value.rank == 1


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        LinearSystem([[Fraction(1)]], [Fraction(1), Fraction(2)])


def test_matrix_rank():
    F = Fraction
    assert matrix_rank([]) == 0
    assert matrix_rank([[F(0), F(0)]]) == 0
    assert matrix_rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert matrix_rank([[F(1), F(2)], [F(0), F(1)], [F(5), F(7)]]) == 2
