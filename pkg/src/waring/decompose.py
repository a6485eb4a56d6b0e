"""Roots-of-unity power-sum decompositions for coprime-monomial sums.

For a monomial x_1^a_1 ... x_n^a_n (exponents sorted ascending) the apolar
point set is the grid [1 : e_2 : ... : e_n] with e_i ranging over the
(a_i+1)-th roots of unity; the scalars come from an exact overdetermined
linear solve over Q(zeta_N), N = lcm of the root orders.  A sum of coprime
monomials is decomposed blockwise and the blocks concatenated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CyclotomicNumber, cyclotomic_embed
from .forms import CoprimeForm, Monomial, decomposition_field_order
from .linalg import LinearSystem, solve_exact, \
    InconsistentSystemError, UnderdeterminedSystemError
from .polynomials import Polynomial, compositions, multinomial
from .rank import rank_coprime_sum, rank_monomial


class DecompositionSolveError(RuntimeError):
    """The gamma system failed to have a unique solution.  The construction
    guarantees solvability, so this signals an implementation bug."""


@dataclass(frozen=True)
class DecompositionTerm:
    gamma: CyclotomicNumber
    linear: tuple          # CyclotomicNumbers, aligned to the namespace
    block: int             # index of the source monomial
    point: tuple           # apolar point coordinates, aligned to the block's variables

    def field_order(self) -> int:
        return self.gamma.order


@dataclass(frozen=True)
class PowerSumDecomposition:
    degree: int
    variables: tuple
    terms: tuple


def decomposition_points(monomial: Monomial):
    """All apolar grid points for a monomial, in lexicographic root-exponent
    order; coordinates are aligned to the monomial's input variable order,
    with 1 on the least-exponent variable."""
    order = decomposition_field_order(monomial)
    items = monomial.sorted_items
    positions = [monomial.variables.index(v) for v, _ in items]
    ranges = [range(a + 1) for _, a in items[1:]]
    points = []
    for root_exps in itertools.product(*ranges):
        coords = [None] * monomial.n
        coords[positions[0]] = CyclotomicNumber.from_rational(1, order)
        for (v, a), k in zip(items[1:], root_exps):
            coords[monomial.variables.index(v)] = cyclotomic_embed(a + 1, k, order)
        points.append(tuple(coords))
    return points


def solve_gammas(monomial: Monomial, coefficient=Fraction(1)) -> PowerSumDecomposition:
    """Decompose coefficient * M as a sum of rank(M) powers of the grid linear
    forms, solving the full overdetermined system exactly; the elimination
    doubles as a consistency check."""
    coefficient = Fraction(coefficient)
    if coefficient == 0:
        raise ValueError("coefficient must be nonzero")
    d = monomial.degree
    n = monomial.n
    order = decomposition_field_order(monomial)
    points = decomposition_points(monomial)
    target_exps = tuple(monomial.exponents)

    rows = list(compositions(d, n))
    # column j, row alpha: coefficient of x^alpha in L_j^d
    power_cache = []
    for coords in points:
        power_cache.append([[c ** k for k in range(d + 1)] for c in coords])
    matrix = []
    rhs = []
    zero = CyclotomicNumber.from_rational(0, order)
    for alpha in rows:
        mult = multinomial(d, alpha)
        row = []
        for powers in power_cache:
            entry = CyclotomicNumber.from_rational(mult, order)
            for j, a in enumerate(alpha):
                if a:
                    entry = entry * powers[j][a]
            row.append(entry)
        matrix.append(row)
        rhs.append(CyclotomicNumber.from_rational(coefficient, order)
                   if alpha == target_exps else zero)
    try:
        gammas = solve_exact(LinearSystem(matrix, rhs))
    except (InconsistentSystemError, UnderdeterminedSystemError) as exc:
        raise DecompositionSolveError(
            f"gamma system for {monomial} has no unique solution: {exc}") from exc
    terms = tuple(
        DecompositionTerm(gamma=g, linear=coords, block=0, point=coords)
        for g, coords in zip(gammas, points))
    return PowerSumDecomposition(d, monomial.variables, terms)


def decompose_form(form: CoprimeForm) -> PowerSumDecomposition:
    """Minimal power-sum decomposition of a validated coprime sum, obtained by
    decomposing each monomial block and concatenating."""
    variables = form.variables
    if form.degree == 1:
        # the form is itself a linear form: one d-th power
        coeffs = [CyclotomicNumber.from_rational(0, 1) for _ in variables]
        for c, m in form.terms:
            coeffs[variables.index(m.variables[0])] = \
                CyclotomicNumber.from_rational(c, 1)
        term = DecompositionTerm(
            gamma=CyclotomicNumber.from_rational(1, 1),
            linear=tuple(coeffs), block=0, point=tuple(coeffs))
        return PowerSumDecomposition(1, variables, (term,))
    terms = []
    for block, (coeff, mono) in enumerate(form.terms):
        part = solve_gammas(mono, coeff)
        positions = [variables.index(v) for v in mono.variables]
        zero = CyclotomicNumber.from_rational(0, part.terms[0].gamma.order
                                              if part.terms else 1)
        for t in part.terms:
            linear = [zero] * len(variables)
            for pos, c in zip(positions, t.linear):
                linear[pos] = c
            terms.append(DecompositionTerm(
                gamma=t.gamma, linear=tuple(linear), block=block, point=t.point))
    return PowerSumDecomposition(form.degree, variables, tuple(terms))


# -- verification ---------------------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    expansion_matches: bool
    mismatches: tuple      # (monomial text, expected, actual), first few
    blocks_independent: bool
    dependent_pair: tuple | None
    term_count: int
    expected_rank: int

    @property
    def term_count_matches(self) -> bool:
        return self.term_count == self.expected_rank

    @property
    def passed(self) -> bool:
        return self.expansion_matches and self.blocks_independent \
            and self.term_count_matches


def _proportional(u, v) -> bool:
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return True


def _monomial_text(variables, exps) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}"
                    for v, e in zip(variables, exps) if e) or "1"


def verify_decomposition(form: CoprimeForm,
                         decomposition: PowerSumDecomposition) -> VerificationReport:
    """Exactly expand the decomposition and diff it against the form; also
    check pairwise linear independence within each block and the term count
    against the closed-form rank.  Failures are report entries, not errors."""
    d = decomposition.degree
    expansion = Polynomial.zero(len(decomposition.variables))
    for t in decomposition.terms:
        expansion = expansion + poly_power_term(t, d)
    index = {v: i for i, v in enumerate(decomposition.variables)}
    target = Polynomial.zero(len(decomposition.variables))
    if tuple(form.variables) != tuple(decomposition.variables):
        # align the form into the decomposition's namespace
        for c, m in form.terms:
            exps = [0] * len(decomposition.variables)
            for v, e in zip(m.variables, m.exponents):
                if v not in index:
                    return VerificationReport(
                        False, ((str(m), str(c), "variable missing"),),
                        True, None, len(decomposition.terms),
                        rank_coprime_sum(form))
                exps[index[v]] = e
            target = target + Polynomial.monomial(exps, c)
    else:
        target = form.as_polynomial()
    residual = expansion - target
    mismatches = []
    for exps in sorted(residual.terms):
        actual = expansion.coefficient(exps)
        expected = target.coefficient(exps)
        mismatches.append((_monomial_text(decomposition.variables, exps),
                           str(expected), str(actual)))
        if len(mismatches) >= 10:
            break

    blocks = {}
    for t in decomposition.terms:
        blocks.setdefault(t.block, []).append(t)
    dependent_pair = None
    for block, terms in blocks.items():
        for i in range(len(terms)):
            for j in range(i + 1, len(terms)):
                if _proportional(terms[i].linear, terms[j].linear):
                    dependent_pair = (block, i, j)
                    break
            if dependent_pair:
                break
        if dependent_pair:
            break

    return VerificationReport(
        expansion_matches=residual.is_zero(),
        mismatches=tuple(mismatches),
        blocks_independent=dependent_pair is None,
        dependent_pair=dependent_pair,
        term_count=len(decomposition.terms),
        expected_rank=rank_coprime_sum(form))


def poly_power_term(term: DecompositionTerm, d: int) -> Polynomial:
    from .polynomials import poly_pow_linear
    return poly_pow_linear(term.linear, d).scale(term.gamma)


@dataclass(frozen=True)
class LeastVariableReport:
    entries: tuple   # (term index, block, variable, ok)
    passed: bool


def least_variable_check(form: CoprimeForm,
                         decomposition: PowerSumDecomposition) -> LeastVariableReport:
    """Every linear form in block i must involve the least-exponent variable
    of the i-th monomial (for degree 1, the single form must involve every
    block's variable)."""
    if len(decomposition.terms) != rank_coprime_sum(form):
        raise ValueError("decomposition length does not equal the rank")
    index = {v: i for i, v in enumerate(decomposition.variables)}
    entries = []
    if form.degree == 1:
        t = decomposition.terms[0]
        for block, (_, m) in enumerate(form.terms):
            v = m.least_variable
            entries.append((0, block, v, bool(t.linear[index[v]])))
    else:
        least = {block: m.least_variable
                 for block, (_, m) in enumerate(form.terms)}
        for i, t in enumerate(decomposition.terms):
            v = least[t.block]
            entries.append((i, t.block, v, bool(t.linear[index[v]])))
    return LeastVariableReport(tuple(entries), all(e[3] for e in entries))
