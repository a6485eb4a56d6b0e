"""Sparse multivariate polynomials and the differentiation action.

Terms are stored as a map from exponent tuples to coefficients.  Coefficients
may be `fractions.Fraction` or `CyclotomicNumber`; arithmetic is always exact.
Zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, perm


def compositions(total: int, parts: int):
    """Yield all tuples of `parts` non-negative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def multinomial(d: int, alpha) -> int:
    out = factorial(d)
    for a in alpha:
        out //= factorial(a)
    return out


class Polynomial:
    """A sparse polynomial over a fixed number of variables."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms=None):
        if num_vars < 1:
            raise ValueError("num_vars must be positive")
        clean = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != num_vars:
                raise ValueError(
                    f"exponent tuple {exps} has length {len(exps)}, expected {num_vars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if coeff:
                clean[tuple(exps)] = coeff
        self.num_vars = num_vars
        self.terms = clean

    @classmethod
    def zero(cls, num_vars: int) -> "Polynomial":
        return cls(num_vars, {})

    @classmethod
    def monomial(cls, exps, coeff=Fraction(1)) -> "Polynomial":
        return cls(len(exps), {tuple(exps): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.num_vars != other.num_vars:
            raise ValueError("variable count mismatch")
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return Polynomial(self.num_vars, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, scalar) -> "Polynomial":
        if not scalar:
            return Polynomial.zero(self.num_vars)
        return Polynomial(self.num_vars, {e: c * scalar for e, c in self.terms.items()})

    def evaluate(self, point):
        """Evaluate at a point given as a sequence of scalars."""
        if len(point) != self.num_vars:
            raise ValueError("point length mismatch")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            value = coeff
            for p, e in zip(point, exps):
                if e:
                    value = value * p ** e
            total = value + total
        return total

    def __eq__(self, other):
        return (isinstance(other, Polynomial)
                and self.num_vars == other.num_vars
                and self.terms.keys() == other.terms.keys()
                and all(self.terms[e] == other.terms[e] for e in self.terms))

    def __repr__(self):
        if not self.terms:
            return "Polynomial(0)"
        bits = []
        for exps in sorted(self.terms, reverse=True):
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exps) if e) or "1"
            bits.append(f"({self.terms[exps]})*{mono}")
        return "Polynomial(" + " + ".join(bits) + ")"


def poly_pow_linear(linear_coeffs, d: int) -> Polynomial:
    """Expand (sum_j c_j x_j)^d exactly via the multinomial theorem."""
    n = len(linear_coeffs)
    if d < 1:
        raise ValueError("exponent d must be positive")
    support = [j for j, c in enumerate(linear_coeffs) if c]
    if not support:
        return Polynomial.zero(n)
    terms = {}
    for alpha in compositions(d, len(support)):
        coeff = multinomial(d, alpha)
        value = coeff
        for j, a in zip(support, alpha):
            if a:
                value = linear_coeffs[j] ** a * value
        exps = [0] * n
        for j, a in zip(support, alpha):
            exps[j] = a
        terms[tuple(exps)] = value
    return Polynomial(n, terms)


def apply_differential(operator: Polynomial, target: Polynomial) -> Polynomial:
    """Apply a dual-variable operator to a polynomial, identifying the j-th
    dual variable with d/dx_j.

    A pure power X_j^k acting on x_j^m yields m!/(m-k)! x_j^(m-k) for k <= m
    and 0 otherwise; the action is extended bilinearly.
    """
    if operator.num_vars != target.num_vars:
        raise ValueError("operator and target must share the variable namespace")
    n = target.num_vars
    result = {}
    for beta, cb in operator.terms.items():
        for alpha, ca in target.terms.items():
            if any(a < b for a, b in zip(alpha, beta)):
                continue
            factor = 1
            for a, b in zip(alpha, beta):
                if b:
                    factor *= perm(a, b)
            exps = tuple(a - b for a, b in zip(alpha, beta))
            contrib = ca * cb * factor
            result[exps] = result.get(exps, Fraction(0)) + contrib
    return Polynomial(n, result)
