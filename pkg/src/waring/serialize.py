"""Lossless JSON serialization for forms and decompositions.

Schema:
  rational            "p/q" or "p"
  CyclotomicNumber    {"order": N, "coeffs": ["p/q", ...]}
  linear form         ordered coefficient array aligned to a declared
                      variable list
  decomposition       {"degree": d, "variables": [...],
                       "terms": [{"gamma": ..., "linear": [...],
                                  "block": i, "point": [...]}]}
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cyclotomic import CyclotomicNumber
from .decompose import DecompositionTerm, PowerSumDecomposition


def fraction_to_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fraction_from_str(s: str) -> Fraction:
    return Fraction(s)


def cyclo_to_json(x: CyclotomicNumber) -> dict:
    return {"order": x.order, "coeffs": [fraction_to_str(c) for c in x.coeffs]}


def cyclo_from_json(obj: dict) -> CyclotomicNumber:
    return CyclotomicNumber(obj["order"], [Fraction(c) for c in obj["coeffs"]])


def decomposition_to_json(d: PowerSumDecomposition) -> dict:
    return {
        "degree": d.degree,
        "variables": list(d.variables),
        "terms": [
            {
                "gamma": cyclo_to_json(t.gamma),
                "linear": [cyclo_to_json(c) for c in t.linear],
                "block": t.block,
                "point": [cyclo_to_json(c) for c in t.point],
            }
            for t in d.terms
        ],
    }


def decomposition_from_json(obj: dict) -> PowerSumDecomposition:
    terms = tuple(
        DecompositionTerm(
            gamma=cyclo_from_json(t["gamma"]),
            linear=tuple(cyclo_from_json(c) for c in t["linear"]),
            block=t["block"],
            point=tuple(cyclo_from_json(c) for c in t["point"]),
        )
        for t in obj["terms"]
    )
    return PowerSumDecomposition(obj["degree"], tuple(obj["variables"]), terms)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


# -- pretty printing -------------------------------------------------------------


def pretty_cyclo(x: CyclotomicNumber) -> str:
    """Human rendering: plain rationals for order <= 2, zN^k tokens otherwise."""
    if x.is_rational():
        return fraction_to_str(x.rational_value())
    return str(x)


def pretty_linear(variables, coeffs) -> str:
    parts = []
    for v, c in zip(variables, coeffs):
        if not c:
            continue
        text = pretty_cyclo(c)
        if text == "1":
            piece, negative = v, False
        elif text == "-1":
            piece, negative = v, True
        elif any(op in text[1:] for op in "+-") or "/" in text or "*" in text:
            piece, negative = f"({text})*{v}", False
        else:
            negative = text.startswith("-")
            piece = f"{text.lstrip('-')}*{v}"
        if not parts:
            parts.append(("-" if negative else "") + piece)
        else:
            parts.append(("- " if negative else "+ ") + piece)
    return " ".join(parts) if parts else "0"


def pretty_decomposition(d: PowerSumDecomposition) -> str:
    lines = []
    for t in d.terms:
        gamma = pretty_cyclo(t.gamma)
        if any(op in gamma[1:] for op in "+-") or "*" in gamma:
            gamma = f"({gamma})"
        lines.append(f"{gamma} * ({pretty_linear(d.variables, t.linear)})^{d.degree}"
                     f"   [block {t.block}]")
    return "\n".join(lines)
