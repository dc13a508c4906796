"""Action on ``Q[x]`` in the monomial basis, built from the generators only.

This module deliberately avoids the multiplication table of
:mod:`orelab.i1.element`: ``H`` is applied as ``D`` after multiplication by
``x``, and ``e_ij`` is applied through its definition
``I^i D^j - I^(i+1) D^(j+1)``.  It is the reference the symbolic product
is checked against.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .element import I1Element
from .poly import PolyH

QxPoly = dict[int, Fraction]  # exponent -> coefficient


def _clean(p: Mapping[int, Fraction]) -> QxPoly:
    return {k: Fraction(c) for k, c in p.items() if c}


def deriv(p: QxPoly) -> QxPoly:
    return _clean({k - 1: c * k for k, c in p.items() if k > 0})


def integrate(p: QxPoly) -> QxPoly:
    return _clean({k + 1: c / (k + 1) for k, c in p.items()})


def times_x(p: QxPoly) -> QxPoly:
    return {k + 1: c for k, c in p.items()}


def apply_H(p: QxPoly) -> QxPoly:
    return deriv(times_x(p))


def padd(p: QxPoly, q: QxPoly, scale: Fraction = Fraction(1)) -> QxPoly:
    out = dict(p)
    for k, c in q.items():
        out[k] = out.get(k, 0) + scale * c
    return _clean(out)


def _repeat(f, n: int, p: QxPoly) -> QxPoly:
    for _ in range(n):
        p = f(p)
    return p


def apply_poly_H(alpha: PolyH, p: QxPoly) -> QxPoly:
    """``alpha(H) p`` by Horner's scheme with the operator ``H``."""
    acc: QxPoly = {}
    for c in reversed(alpha.coeffs):
        acc = padd(apply_H(acc), p, c)
    return acc


def apply_e(i: int, j: int, p: QxPoly) -> QxPoly:
    first = _repeat(integrate, i, _repeat(deriv, j, p))
    second = _repeat(integrate, i + 1, _repeat(deriv, j + 1, p))
    return padd(first, second, Fraction(-1))


def act(a: I1Element, p: Mapping[int, Fraction]) -> QxPoly:
    p = _clean(p)
    out: QxPoly = {}
    for d, alpha in a.graded.items():
        if d < 0:
            term = apply_poly_H(alpha, _repeat(deriv, -d, p))
        else:
            term = _repeat(integrate, d, apply_poly_H(alpha, p))
        out = padd(out, term)
    for (i, j), c in a.lam.items():
        out = padd(out, apply_e(i, j, p), c)
    return out


def monomial(k: int, c=1) -> QxPoly:
    return {k: Fraction(c)}


def format_qx(p: Mapping[int, Fraction]) -> str:
    if not p:
        return "0"
    parts = []
    for k in sorted(p, reverse=True):
        c = Fraction(p[k])
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        mag = abs(c)
        mag_s = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        body = mag_s if not mono else (mono if mag == 1 else f"{mag_s}*{mono}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)
