"""The skew Laurent polynomial ring ``Q[H][D, D^-1; tau]`` with ``tau(H) = H + 1``.

The quotient of the operator algebra by its ideal of finite-rank operators
is this ring, via ``D -> D``, ``I -> D^-1``, ``H -> H``.  Elements are kept
with polynomial coefficients on the left of powers of ``D``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from ..linalg import nullspace, primitive, rank_mod_p
from .element import I1Element, join_terms
from .parser import Node, evaluate, parse
from .poly import ONE, PolyH
from .poly import H as _H


class B1Element:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, PolyH] | None = None):
        object.__setattr__(self, "terms", {e: p for e, p in (terms or {}).items() if p})

    def __setattr__(self, name, value):
        raise AttributeError("B1Element is immutable")

    @classmethod
    def scalar(cls, c) -> "B1Element":
        return cls({0: PolyH.const(c)})

    @classmethod
    def D(cls, n: int = 1) -> "B1Element":
        return cls({n: ONE})

    @classmethod
    def H(cls) -> "B1Element":
        return cls({0: _H})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = B1Element.scalar(other)
        if not isinstance(other, B1Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "B1Element":
        other = _coerce(other)
        t = dict(self.terms)
        for e, p in other.terms.items():
            t[e] = t[e] + p if e in t else p
        return B1Element(t)

    __radd__ = __add__

    def __neg__(self) -> "B1Element":
        return B1Element({e: -p for e, p in self.terms.items()})

    def __sub__(self, other) -> "B1Element":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "B1Element":
        return _coerce(other) - self

    def __mul__(self, other) -> "B1Element":
        return b1_mul(self, _coerce(other))

    def __rmul__(self, other) -> "B1Element":
        return b1_mul(_coerce(other), self)

    def __pow__(self, n: int) -> "B1Element":
        if n < 0:
            if len(self.terms) != 1 or next(iter(self.terms.values())) != ONE:
                raise ValueError("only powers of D may be inverted")
            (e,) = self.terms
            return B1Element.D(e * n)
        out = B1Element.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def exponent_range(self) -> tuple[int, int]:
        return min(self.terms), max(self.terms)

    def __str__(self) -> str:
        terms: list[tuple[Fraction, str]] = []
        for e in sorted(self.terms, reverse=True):
            p = self.terms[e]
            nz = [k for k, c in enumerate(p.coeffs) if c]
            if e == 0:
                terms += [(p.coeffs[k], "" if k == 0 else ("H" if k == 1 else f"H^{k}"))
                          for k in reversed(nz)]
                continue
            op = "D" if e == 1 else f"D^{e}"
            if len(nz) == 1:
                k = nz[0]
                mono = "" if k == 0 else ("H*" if k == 1 else f"H^{k}*")
                terms.append((p.coeffs[k], mono + op))
            else:
                terms.append((Fraction(1), f"({p})*{op}"))
        return join_terms(terms)

    def __repr__(self) -> str:
        return f"B1Element({self})"


def _coerce(x) -> B1Element:
    if isinstance(x, B1Element):
        return x
    if isinstance(x, (int, Fraction)):
        return B1Element.scalar(x)
    if isinstance(x, PolyH):
        return B1Element({0: x})
    raise TypeError(f"cannot use {type(x).__name__} in B1")


def b1_mul(a: B1Element, b: B1Element) -> B1Element:
    """``(alpha D^m)(beta D^n) = alpha beta(H+m) D^(m+n)``."""
    out: dict[int, PolyH] = {}
    for m, alpha in a.terms.items():
        for n, beta in b.terms.items():
            p = alpha * beta.shift(m)
            out[m + n] = out[m + n] + p if m + n in out else p
    return B1Element(out)


def to_B1(a: I1Element) -> B1Element:
    """Image in the quotient by finite-rank operators: ``I^i alpha -> alpha(H-i) D^-i``."""
    return B1Element({-d: (p if d <= 0 else p.shift(-d)) for d, p in a.graded.items()})


class _B1Algebra:
    @staticmethod
    def num(c):
        return B1Element.scalar(c)

    @staticmethod
    def gen(name):
        if name == "D":
            return B1Element.D(1)
        if name == "I":
            return B1Element.D(-1)
        if name == "H":
            return B1Element.H()
        return B1Element.D(-1) * B1Element.H()  # x = I H

    @staticmethod
    def e(i, j):
        return B1Element()

    @staticmethod
    def pow(value, n, base):
        return value ** n


def b1_normalize(expr: str | Node) -> B1Element:
    tree = parse(expr, allow_negative_powers=True) if isinstance(expr, str) else expr
    return evaluate(tree, _B1Algebra)


# -- Ore multipliers ------------------------------------------------------------

class OreWindowExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OreResult:
    u: B1Element
    v: B1Element
    window: tuple[int, int]

    def check(self, a: B1Element, b: B1Element) -> bool:
        return self.u * a == self.v * b


def window_schedule(cap: int) -> Iterator[tuple[int, int]]:
    """``(0,0), (0,1), (1,1), (1,2), (2,2), ...``: raise ``h`` first, then ``d``."""
    d = h = 0
    while d <= cap:
        yield d, h
        if h == d:
            h += 1
        else:
            d += 1


def _basis_products(x: B1Element, d: int, h: int) -> list[B1Element]:
    return [B1Element({e: PolyH.monomial(k)}) * x for e in range(d + 1) for k in range(h + 1)]


def _solve_window(a: B1Element, b: B1Element, d: int, h: int) -> tuple[B1Element, B1Element] | None:
    cols = _basis_products(a, d, h) + [-p for p in _basis_products(b, d, h)]
    keys = sorted({(e, k) for c in cols for e, p in c.terms.items() for k in range(len(p.coeffs))})
    index = {key: r for r, key in enumerate(keys)}
    rows = [[Fraction(0)] * len(cols) for _ in keys]
    for j, c in enumerate(cols):
        for e, p in c.terms.items():
            for k, coef in enumerate(p.coeffs):
                if coef:
                    rows[index[(e, k)]][j] = coef
    if rank_mod_p(rows) == len(cols):
        return None  # full rank mod p forces full rank over Q
    basis = nullspace(rows, len(cols))
    if not basis:
        return None
    vec = primitive(basis[0])
    half = (d + 1) * (h + 1)

    def build(coeffs):
        terms: dict[int, list[int]] = {}
        for n, c in enumerate(coeffs):
            e, k = divmod(n, h + 1)
            terms.setdefault(e, [0] * (h + 1))[k] = c
        return B1Element({e: PolyH(cs) for e, cs in terms.items()})

    return build(vec[:half]), build(vec[half:])


def ore_multipliers(a: B1Element, b: B1Element, cap: int = 12) -> OreResult:
    """Nonzero ``u, v`` with ``u a = v b``, from the smallest window that admits one."""
    if a.is_zero() or b.is_zero():
        raise ValueError("Ore multipliers need nonzero arguments")
    for d, h in window_schedule(cap):
        found = _solve_window(a, b, d, h)
        if found is not None:
            u, v = found
            result = OreResult(u, v, (d, h))
            if not result.check(a, b) or u.is_zero() or v.is_zero():
                raise AssertionError("Ore solver produced an invalid pair")
            return result
    raise OreWindowExceeded(f"no solution with D-degree window <= {cap}")
