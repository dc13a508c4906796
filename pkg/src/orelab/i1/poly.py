"""Polynomials in ``H`` with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import comb, floor
from typing import Iterable


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class PolyH:
    """Dense coefficients, lowest degree first, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyH is immutable")

    @classmethod
    def const(cls, c) -> "PolyH":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "PolyH":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def const_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyH):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == PolyH.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other) -> "PolyH":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return PolyH(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "PolyH":
        return PolyH(-c for c in self.coeffs)

    def __sub__(self, other) -> "PolyH":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "PolyH":
        return _coerce(other) - self

    def __mul__(self, other) -> "PolyH":
        if isinstance(other, (int, Fraction)):
            return PolyH(c * other for c in self.coeffs)
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return PolyH()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyH(out)

    __rmul__ = __mul__

    def __call__(self, h) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * h + c
        return acc

    def shift(self, k) -> "PolyH":
        """``p(H + k)``."""
        if k == 0 or len(self.coeffs) <= 1:
            return self
        k = _frac(k)
        out = [Fraction(0)] * len(self.coeffs)
        for n, c in enumerate(self.coeffs):
            if c:
                for j in range(n + 1):
                    out[j] += c * comb(n, j) * k ** (n - j)
        return PolyH(out)

    def nonneg_integer_roots(self) -> list[int]:
        """Roots in ``{0, 1, 2, ...}`` (Cauchy bound, then direct evaluation)."""
        if not self.coeffs:
            raise ValueError("zero polynomial has every number as a root")
        if len(self.coeffs) == 1:
            return []
        lead = self.coeffs[-1]
        bound = 1 + max(abs(c / lead) for c in self.coeffs[:-1])
        return [k for k in range(floor(bound) + 1) if self(k) == 0]

    def __repr__(self) -> str:
        return f"PolyH({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("H" if k == 1 else f"H^{k}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{fmt_rational(mag)}*{mono}"
            else:
                body = fmt_rational(mag)
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)


def _coerce(x) -> PolyH:
    if isinstance(x, PolyH):
        return x
    if isinstance(x, (int, Fraction)):
        return PolyH.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial in H")


ZERO = PolyH()
ONE = PolyH.const(1)
H = PolyH.monomial(1)
