"""Monomials, validated sums of pairwise coprime monomials, and perp ideals.

The parser accepts the grammar

    form    := term (('+'|'-') term)*
    term    := (rational '*')? factor ('*' factor)*
    factor  := variable ('^' integer)?
    variable:= 'x' integer | letter
    rational:= integer ('/' positive-integer)?

Whitespace is insignificant.  Examples: "x1^2*x2 + x3^3", "3/2*x*y*z",
"a^2*b - 5*c^3".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .polynomials import Polynomial


class ParseError(ValueError):
    """Syntax error at a reported position in the input text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NonCoprimeError(ValueError):
    """Two monomials of a would-be coprime sum share a variable."""

    def __init__(self, variable: str, first: str, second: str):
        super().__init__(
            f"monomials {first} and {second} share the variable {variable}")
        self.variable = variable


class MixedDegreeError(ValueError):
    """Monomials of a would-be form have different total degrees."""

    def __init__(self, d1: int, d2: int):
        super().__init__(f"mixed degrees: {d1} vs {d2}")
        self.degrees = (d1, d2)


def _variable_key(name: str):
    """Canonical ordering: x1, x2, ... numerically, then bare letters."""
    m = re.fullmatch(r"x(\d+)", name)
    if m:
        return (0, int(m.group(1)), name)
    return (1, 0, name)


class Monomial:
    """A monomial with all exponents >= 1 over named variables.

    The input order of the variables is preserved; `sorted_items` gives the
    canonical ascending-exponent view (ties broken by input position), so the
    first entry is the designated least-exponent variable.
    """

    __slots__ = ("variables", "exponents")

    def __init__(self, variables, exponents):
        if len(variables) != len(exponents):
            raise ValueError("variables and exponents length mismatch")
        if not variables:
            raise ValueError("a monomial needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError(f"repeated variable in {variables}")
        if any(e < 1 for e in exponents):
            raise ValueError("all exponents must be >= 1")
        self.variables = tuple(variables)
        self.exponents = tuple(int(e) for e in exponents)

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def sorted_items(self):
        """(variable, exponent) pairs sorted by ascending exponent, ties by
        input position."""
        order = sorted(range(self.n), key=lambda i: (self.exponents[i], i))
        return [(self.variables[i], self.exponents[i]) for i in order]

    @property
    def sorted_exponents(self):
        return tuple(sorted(self.exponents))

    @property
    def least_variable(self) -> str:
        return self.sorted_items[0][0]

    def support(self):
        return set(self.variables)

    def exponent_of(self, name: str) -> int:
        try:
            return self.exponents[self.variables.index(name)]
        except ValueError:
            return 0

    def as_polynomial(self, namespace, coeff=Fraction(1)) -> Polynomial:
        exps = [0] * len(namespace)
        for v, e in zip(self.variables, self.exponents):
            exps[list(namespace).index(v)] = e
        return Polynomial.monomial(exps, coeff)

    def __eq__(self, other):
        return (isinstance(other, Monomial)
                and self.variables == other.variables
                and self.exponents == other.exponents)

    def __hash__(self):
        return hash((self.variables, self.exponents))

    def __str__(self):
        return "*".join(v if e == 1 else f"{v}^{e}"
                        for v, e in zip(self.variables, self.exponents))

    def __repr__(self):
        return f"Monomial({self})"


class CoprimeForm:
    """A validated sum of pairwise coprime monomials of a common degree."""

    def __init__(self, terms, variables=None):
        terms = [(Fraction(c), m) for c, m in terms]
        if not terms:
            raise ValueError("a form needs at least one monomial")
        for c, m in terms:
            if c == 0:
                raise ValueError(f"zero coefficient on {m}")
        d = terms[0][1].degree
        for _, m in terms[1:]:
            if m.degree != d:
                raise MixedDegreeError(d, m.degree)
        for i in range(len(terms)):
            for j in range(i + 1, len(terms)):
                shared = terms[i][1].support() & terms[j][1].support()
                if shared:
                    v = min(shared, key=_variable_key)
                    raise NonCoprimeError(v, str(terms[i][1]), str(terms[j][1]))
        used = set()
        for _, m in terms:
            used |= m.support()
        if variables is None:
            variables = sorted(used, key=_variable_key)
        else:
            missing = used - set(variables)
            if missing:
                raise ValueError(f"namespace is missing variables {sorted(missing)}")
        self.terms = terms
        self.variables = tuple(variables)
        self.degree = d

    @property
    def r(self) -> int:
        return len(self.terms)

    @property
    def monomials(self):
        return [m for _, m in self.terms]

    @property
    def coefficients(self):
        return [c for c, _ in self.terms]

    def as_polynomial(self) -> Polynomial:
        poly = Polynomial.zero(len(self.variables))
        for c, m in self.terms:
            poly = poly + m.as_polynomial(self.variables, c)
        return poly

    def __eq__(self, other):
        return (isinstance(other, CoprimeForm)
                and self.variables == other.variables
                and self.terms == other.terms)

    def __str__(self):
        return render_form(self)

    def __repr__(self):
        return f"CoprimeForm({self})"


class MonomialIdeal:
    """A monomial ideal given by a minimal list of exponent-vector generators."""

    def __init__(self, num_vars: int, generators, names=None):
        gens = [tuple(int(e) for e in g) for g in generators]
        for g in gens:
            if len(g) != num_vars:
                raise ValueError(f"generator {g} has wrong length")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in generator {g}")
        self.num_vars = num_vars
        self.generators = tuple(sorted(minimalize(gens)))
        self.names = tuple(names) if names else tuple(
            f"X{i + 1}" for i in range(num_vars))

    def contains_monomial(self, exps) -> bool:
        exps = tuple(exps)
        return any(all(e >= g for e, g in zip(exps, gen))
                   for gen in self.generators)

    def contains_power_of_every_variable(self) -> bool:
        covered = [False] * self.num_vars
        for gen in self.generators:
            nz = [i for i, e in enumerate(gen) if e]
            if len(nz) == 1:
                covered[nz[0]] = True
        return all(covered)

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal)
                and self.num_vars == other.num_vars
                and self.generators == other.generators)

    def __repr__(self):
        gens = ", ".join(
            "*".join(f"{self.names[i]}^{e}" if e > 1 else self.names[i]
                     for i, e in enumerate(g) if e) or "1"
            for g in self.generators)
        return f"MonomialIdeal({gens})"


def minimalize(gens):
    """Drop generators divisible by another generator."""
    out = []
    for g in gens:
        if any(h != g and all(a >= b for a, b in zip(g, h)) for h in gens):
            continue
        if g not in out:
            out.append(g)
    return out


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d+|[A-Za-z])|(?P<op>[-+*/^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}",
                             len(text) - len(stripped))
        if m.lastgroup:
            tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        pos = m.end()
    # trailing whitespace only
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None:
            raise ParseError("unexpected end of input", tok[2])
        if kind and tok[0] != kind or value and tok[1] != value:
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        terms = [self.term(sign=1)]
        while True:
            kind, value, pos = self.peek()
            if kind is None:
                return terms
            if kind != "op" or value not in "+-":
                raise ParseError(f"expected '+' or '-', got {value!r}", pos)
            self.take()
            terms.append(self.term(sign=-1 if value == "-" else 1))

    def term(self, sign: int):
        coeff = Fraction(sign)
        factors = []
        kind, value, pos = self.peek()
        if kind == "op" and value == "-":
            # tolerated leading sign inside a term, e.g. "-x1*x2"
            self.take()
            coeff = -coeff
            kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            num = int(value)
            den = 1
            if self.peek()[:2] == ("op", "/"):
                self.take()
                dtok = self.take("int")
                den = int(dtok[1])
                if den == 0:
                    raise ParseError("zero denominator", dtok[2])
            coeff *= Fraction(num, den)
            kind, value, pos = self.peek()
            if kind == "op" and value == "*":
                self.take()
            elif kind is None or (kind == "op" and value in "+-"):
                raise ParseError("constant term is not a monomial", pos)
            else:
                raise ParseError(f"expected '*' after coefficient, got {value!r}", pos)
        while True:
            factors.append(self.factor())
            if self.peek()[:2] == ("op", "*"):
                self.take()
                continue
            break
        return coeff, factors

    def factor(self):
        tok = self.take("var")
        name = tok[1]
        exp = 1
        if self.peek()[:2] == ("op", "^"):
            self.take()
            etok = self.take("int")
            exp = int(etok[1])
            if exp < 0:
                raise ParseError("negative exponent", etok[2])
        return name, exp, tok[2]


def _parse_terms(text: str):
    """Parse into a list of (coefficient, merged {variable: exponent}) pairs.

    Repeated factors multiply; exponent-0 factors are dropped (they denote the
    constant 1 and do not enlarge the variable set)."""
    raw = _Parser(text).parse()
    out = []
    for coeff, factors in raw:
        exps = {}
        for name, exp, _pos in factors:
            if exp:
                exps[name] = exps.get(name, 0) + exp
        out.append((coeff, exps))
    return out


def parse_form(text: str) -> CoprimeForm:
    """Parse and validate a sum of pairwise coprime monomials."""
    terms = []
    for coeff, exps in _parse_terms(text):
        if not exps:
            raise ParseError("constant term is not a monomial", 0)
        names = list(exps)
        terms.append((coeff, Monomial(names, [exps[v] for v in names])))
    return CoprimeForm(terms)


@dataclass(frozen=True)
class HomogeneousForm:
    """A homogeneous polynomial with rational coefficients, for bound-only
    commands; monomials need not be coprime or distinct in the input."""

    variables: tuple
    terms: dict  # exponent tuple -> Fraction
    degree: int

    def as_polynomial(self) -> Polynomial:
        return Polynomial(len(self.variables), dict(self.terms))


def parse_homogeneous(text: str) -> HomogeneousForm:
    """Relaxed parse: merges like terms, allows shared variables, but still
    requires all monomials to have one common degree."""
    raw = _parse_terms(text)
    used = set()
    for _, exps in raw:
        used |= set(exps)
    if not used:
        raise ParseError("constant input has no variables", 0)
    variables = tuple(sorted(used, key=_variable_key))
    index = {v: i for i, v in enumerate(variables)}
    degree = None
    merged = {}
    for coeff, exps in raw:
        d = sum(exps.values())
        if degree is None:
            degree = d
        elif d != degree:
            raise MixedDegreeError(degree, d)
        key = [0] * len(variables)
        for v, e in exps.items():
            key[index[v]] = e
        key = tuple(key)
        merged[key] = merged.get(key, Fraction(0)) + coeff
    merged = {k: v for k, v in merged.items() if v}
    if not merged:
        raise ValueError("the form cancels to zero")
    return HomogeneousForm(variables, merged, degree)


def coprime_form_to_homogeneous(form: CoprimeForm) -> HomogeneousForm:
    poly = form.as_polynomial()
    return HomogeneousForm(form.variables, dict(poly.terms), form.degree)


def render_form(form: CoprimeForm) -> str:
    """Canonical text rendering; parse_form(render_form(F)) == F up to
    namespace pruning."""
    parts = []
    for coeff, mono in form.terms:
        body = str(mono)
        mag = abs(coeff)
        piece = body if mag == 1 else f"{mag}*{body}"
        if not parts:
            parts.append(piece if coeff > 0 else f"-{piece}")
        else:
            parts.append(("+ " if coeff > 0 else "- ") + piece)
    return " ".join(parts)


# -- apolarity-side constructions ---------------------------------------------


def perp_generators(monomial: Monomial) -> MonomialIdeal:
    """The perp ideal of a monomial: pure powers X_j^(a_j+1), one per variable
    in the support."""
    gens = []
    for i, e in enumerate(monomial.exponents):
        g = [0] * monomial.n
        g[i] = e + 1
        gens.append(g)
    names = tuple(f"X{v[1:]}" if v.startswith("x") and v[1:].isdigit() else v.upper()
                  for v in monomial.variables)
    return MonomialIdeal(monomial.n, gens, names)


def ci_point_ideal(monomial: Monomial):
    """Binomial generators X_j^(a_j+1) - X_1^(a_j+1) (sorted view, j >= 2) of
    the complete-intersection point ideal inside the perp ideal.

    Returned as Polynomials in the dual variables, aligned to the monomial's
    input variable order.  Empty for a single variable."""
    if monomial.n == 1:
        return []
    order = sorted(range(monomial.n),
                   key=lambda i: (monomial.exponents[i], i))
    first = order[0]
    gens = []
    for i in order[1:]:
        a = monomial.exponents[i]
        lead = [0] * monomial.n
        lead[i] = a + 1
        tail = [0] * monomial.n
        tail[first] = a + 1
        gens.append(Polynomial(monomial.n, {tuple(lead): Fraction(1),
                                            tuple(tail): Fraction(-1)}))
    return gens


def drop_unused_variables(form: CoprimeForm) -> CoprimeForm:
    """Restrict the namespace to the variables actually appearing; the rank is
    unchanged by removing unused variables."""
    return CoprimeForm(form.terms)


def decomposition_field_order(monomial: Monomial) -> int:
    """lcm of the root orders a_i+1 over the non-minimal sorted exponents."""
    exps = monomial.sorted_exponents
    if len(exps) == 1:
        return 1
    return lcm(*[a + 1 for a in exps[1:]])
