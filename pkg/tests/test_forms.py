from fractions import Fraction

import pytest

from waring.forms import (
    CoprimeForm,
    MixedDegreeError,
    Monomial,
    MonomialIdeal,
    NonCoprimeError,
    ParseError,
    ci_point_ideal,
    decomposition_field_order,
    drop_unused_variables,
    parse_form,
    parse_homogeneous,
    perp_generators,
    render_form,
)
from waring.polynomials import Polynomial, apply_differential


def test_parse_basic():
    form = parse_form("x1^2*x2 + x3^3")
    assert form.r == 2
    assert form.degree == 3
    assert form.variables == ("x1", "x2", "x3")
    assert str(form.monomials[0]) == "x1^2*x2"


def test_parse_coefficients():
    form = parse_form("3/2*x*y*z")
    assert form.coefficients == [Fraction(3, 2)]
    form = parse_form("a^2*b - 5*c^3")
    assert form.coefficients == [Fraction(1), Fraction(-5)]


def test_parse_non_coprime_names_variable():
    with pytest.raises(NonCoprimeError) as exc:
        parse_form("x1*x2 + x2*x3")
    assert exc.value.variable == "x2"


def test_parse_mixed_degrees():
    with pytest.raises(MixedDegreeError) as exc:
        parse_form("x1^2 + x2^3")
    assert exc.value.degrees == (2, 3)


def test_parse_syntax_error_has_position():
    with pytest.raises(ParseError) as exc:
        parse_form("x1^2 ++ x2^2")
    assert exc.value.position == 6
    with pytest.raises(ParseError):
        parse_form("x1 @ x2")
    with pytest.raises(ParseError):
        parse_form("3 + x1")  # constant term


def test_parse_exponent_zero_factor_dropped():
    form = parse_form("x1^2*x2^0 + x3^2")
    assert str(form.monomials[0]) == "x1^2"


def test_parse_repeated_factor_merges():
    form = parse_form("x1*x1*x2")
    assert str(form.monomials[0]) == "x1^2*x2"


def test_render_round_trip():
    for text in ("x1^2*x2 + x3^3", "3/2*x*y*z", "a^2*b - 5*c^3",
                 "x1*x2 - x3^2 + 2*x4*x5"):
        form = parse_form(text)
        assert parse_form(render_form(form)) == form


def test_monomial_sorted_view_and_least_variable():
    m = Monomial(["x2", "x1"], [3, 1])
    assert m.sorted_exponents == (1, 3)
    assert m.least_variable == "x1"
    # tie broken by input order
    m = Monomial(["x2", "x1"], [2, 2])
    assert m.least_variable == "x2"


def test_monomial_rejects_zero_exponent():
    with pytest.raises(ValueError):
        Monomial(["x1"], [0])


def test_perp_generators():
    m = parse_form("x1*x2*x3").monomials[0]
    perp = perp_generators(m)
    assert perp.generators == ((0, 0, 2), (0, 2, 0), (2, 0, 0))

    m = parse_form("x1^5").monomials[0]
    assert perp_generators(m).generators == ((6,),)

    m = parse_form("x1*x2^3").monomials[0]
    perp = perp_generators(m)
    assert perp.generators == ((0, 4), (2, 0))
    target = m.as_polynomial(m.variables)
    for gen in perp.generators:
        assert apply_differential(Polynomial.monomial(gen), target).is_zero()


def test_ci_point_ideal_binary():
    m = parse_form("x1*x2").monomials[0]
    gens = ci_point_ideal(m)
    assert len(gens) == 1
    assert gens[0].terms == {(0, 2): 1, (2, 0): -1}


def test_ci_point_ideal_annihilates():
    for text in ("x1*x2^2", "x1^2*x2^2*x3^3", "x1*x2*x3", "x1^3*x2"):
        m = parse_form(text).monomials[0]
        target = m.as_polynomial(m.variables)
        gens = ci_point_ideal(m)
        assert len(gens) == m.n - 1
        for g in gens:
            assert apply_differential(g, target).is_zero()


def test_ci_point_ideal_single_variable_empty():
    m = parse_form("x1^4").monomials[0]
    assert ci_point_ideal(m) == []


def test_ci_point_ideal_sorted_exponents():
    m = parse_form("x1^2*x2^2*x3^3").monomials[0]
    gens = ci_point_ideal(m)
    # a = (2,2,3) sorted: generators X2^3 - X1^3 and X3^4 - X1^4
    assert gens[0].terms == {(0, 3, 0): 1, (3, 0, 0): -1}
    assert gens[1].terms == {(0, 0, 4): 1, (4, 0, 0): -1}


def test_drop_unused_variables():
    form = CoprimeForm([(Fraction(1), Monomial(["x1"], [3]))],
                       variables=["x1", "x2", "x3", "x4", "x5"])
    assert len(form.variables) == 5
    reduced = drop_unused_variables(form)
    assert reduced.variables == ("x1",)
    # idempotent on already-minimal forms
    assert drop_unused_variables(reduced) == reduced


def test_parse_homogeneous_allows_overlap():
    form = parse_homogeneous("x1*x2 + x2*x3 + x1*x2")
    assert form.degree == 2
    assert form.terms[(1, 1, 0)] == 2


def test_parse_homogeneous_rejects_cancellation():
    with pytest.raises(ValueError):
        parse_homogeneous("x1*x2 - x1*x2")


def test_monomial_ideal_minimalizes():
    ideal = MonomialIdeal(2, [(2, 0), (2, 1), (0, 3)])
    assert ideal.generators == ((0, 3), (2, 0))
    assert ideal.contains_monomial((5, 1))
    assert not ideal.contains_monomial((1, 2))


def test_decomposition_field_order():
    assert decomposition_field_order(parse_form("x1^4").monomials[0]) == 1
    assert decomposition_field_order(parse_form("x1*x2^2").monomials[0]) == 3
    assert decomposition_field_order(parse_form("x1*x2^2*x3^3").monomials[0]) == 12
