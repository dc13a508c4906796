"""Canonical forms in the algebra of polynomial integro-differential operators.

Every element is stored as

    sum_i a_{-i}(H) D^i  +  a_0(H)  +  sum_i I^i a_i(H)  +  sum lam_ij e_ij

with ``D`` the derivative, ``I`` the integral, ``H = D x`` and
``e_ij = I^i D^j - I^(i+1) D^(j+1)``.  Internally the non-finite part is a
single map ``graded: degree -> PolyH``; degree ``-i`` holds ``a_{-i}`` (poly
on the left of ``D^i``) and degree ``+i`` holds ``a_i`` (poly on the right of
``I^i``).  ``e_ij`` has degree ``i - j``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .poly import ONE, PolyH, fmt_rational
from .poly import H as _H


def _clean_graded(graded: Mapping[int, PolyH]) -> dict[int, PolyH]:
    return {d: p for d, p in graded.items() if p}


def _clean_lam(lam: Mapping[tuple[int, int], Fraction]) -> dict[tuple[int, int], Fraction]:
    out = {}
    for (i, j), c in lam.items():
        if i < 0 or j < 0:
            raise ValueError(f"matrix unit index must be non-negative, got e({i},{j})")
        c = Fraction(c)
        if c:
            out[(i, j)] = c
    return out


class I1Element:
    __slots__ = ("graded", "lam", "_hash")

    def __init__(self, graded: Mapping[int, PolyH] | None = None,
                 lam: Mapping[tuple[int, int], Fraction] | None = None):
        object.__setattr__(self, "graded", _clean_graded(graded or {}))
        object.__setattr__(self, "lam", _clean_lam(lam or {}))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("I1Element is immutable")

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls) -> "I1Element":
        return cls()

    @classmethod
    def scalar(cls, c) -> "I1Element":
        return cls({0: PolyH.const(c)})

    @classmethod
    def poly(cls, p: PolyH) -> "I1Element":
        return cls({0: p})

    @classmethod
    def D(cls, n: int = 1) -> "I1Element":
        return cls({-n: ONE}) if n else cls.scalar(1)

    @classmethod
    def I(cls, n: int = 1) -> "I1Element":
        return cls({n: ONE}) if n else cls.scalar(1)

    @classmethod
    def H(cls) -> "I1Element":
        return cls({0: _H})

    @classmethod
    def x(cls) -> "I1Element":
        return cls({1: _H})

    @classmethod
    def e(cls, i: int, j: int, c=1) -> "I1Element":
        return cls(lam={(i, j): c})

    @classmethod
    def from_parts(cls, neg: Mapping[int, PolyH] | None = None, mid: PolyH | None = None,
                   pos: Mapping[int, PolyH] | None = None,
                   lam: Mapping[tuple[int, int], Fraction] | None = None) -> "I1Element":
        graded: dict[int, PolyH] = {}
        for i, p in (neg or {}).items():
            if i < 1:
                raise ValueError("neg keys must be >= 1")
            graded[-i] = p
        for i, p in (pos or {}).items():
            if i < 1:
                raise ValueError("pos keys must be >= 1")
            graded[i] = p
        if mid is not None:
            graded[0] = mid
        return cls(graded, lam)

    # -- views -------------------------------------------------------------
    @property
    def neg(self) -> dict[int, PolyH]:
        return {-d: p for d, p in self.graded.items() if d < 0}

    @property
    def mid(self) -> PolyH:
        return self.graded.get(0, PolyH())

    @property
    def pos(self) -> dict[int, PolyH]:
        return {d: p for d, p in self.graded.items() if d > 0}

    def is_zero(self) -> bool:
        return not self.graded and not self.lam

    def in_F(self) -> bool:
        return not self.graded

    def in_KH_plus_F(self) -> bool:
        return set(self.graded) <= {0}

    def degrees(self) -> set[int]:
        return set(self.graded) | {i - j for i, j in self.lam}

    def graded_component(self, k: int) -> "I1Element":
        g = {k: self.graded[k]} if k in self.graded else {}
        return I1Element(g, {ij: c for ij, c in self.lam.items() if ij[0] - ij[1] == k})

    def finite_part(self) -> "I1Element":
        return I1Element(lam=self.lam)

    def non_finite_part(self) -> "I1Element":
        return I1Element(self.graded)

    # -- arithmetic ----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = I1Element.scalar(other)
        if not isinstance(other, I1Element):
            return NotImplemented
        return self.graded == other.graded and self.lam == other.lam

    def __hash__(self) -> int:
        if self._hash is None:
            h = hash((frozenset(self.graded.items()), frozenset(self.lam.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __add__(self, other) -> "I1Element":
        other = _coerce(other)
        g = dict(self.graded)
        for d, p in other.graded.items():
            g[d] = g[d] + p if d in g else p
        lam = dict(self.lam)
        for ij, c in other.lam.items():
            lam[ij] = lam.get(ij, 0) + c
        return I1Element(g, lam)

    __radd__ = __add__

    def __neg__(self) -> "I1Element":
        return I1Element({d: -p for d, p in self.graded.items()},
                         {ij: -c for ij, c in self.lam.items()})

    def __sub__(self, other) -> "I1Element":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "I1Element":
        return _coerce(other) - self

    def __mul__(self, other) -> "I1Element":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return mul(self, _coerce(other))

    def __rmul__(self, other) -> "I1Element":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return mul(_coerce(other), self)

    def __pow__(self, n: int) -> "I1Element":
        if n < 0:
            raise ValueError("negative powers are not defined in this algebra")
        out = I1Element.scalar(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "I1Element":
        c = Fraction(c)
        return I1Element({d: p * c for d, p in self.graded.items()},
                         {ij: v * c for ij, v in self.lam.items()})

    def star(self) -> "I1Element":
        return star(self)

    # -- divided-power basis -------------------------------------------------
    def column(self, k: int) -> dict[int, Fraction]:
        """Coordinates of ``self * v_k`` where ``v_k = x^k / k!``."""
        out: dict[int, Fraction] = {}
        for d, p in self.graded.items():
            if d < 0 and k < -d:
                continue
            # D^i v_k = v_{k-i} then alpha(H); I^i alpha(H) v_k = alpha(k+1) v_{k+i}
            c = p(k + d + 1) if d < 0 else p(k + 1)
            if c:
                out[k + d] = out.get(k + d, 0) + c
        for (i, j), c in self.lam.items():
            if j == k:
                out[i] = out.get(i, 0) + c
        return {r: c for r, c in out.items() if c}

    # -- printing ------------------------------------------------------------
    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"I1Element({self})"

    def to_dict(self) -> dict:
        return {
            "neg": {str(i): [str(c) for c in p.coeffs] for i, p in sorted(self.neg.items())},
            "mid": [str(c) for c in self.mid.coeffs],
            "pos": {str(i): [str(c) for c in p.coeffs] for i, p in sorted(self.pos.items())},
            "lam": {f"{i},{j}": str(c) for (i, j), c in sorted(self.lam.items())},
        }


def _coerce(x) -> I1Element:
    if isinstance(x, I1Element):
        return x
    if isinstance(x, (int, Fraction)):
        return I1Element.scalar(x)
    if isinstance(x, PolyH):
        return I1Element.poly(x)
    raise TypeError(f"cannot use {type(x).__name__} as an operator")


def _add_into(g: dict[int, PolyH], d: int, p: PolyH) -> None:
    if p:
        g[d] = g[d] + p if d in g else p


def _add_lam(lam: dict, i: int, j: int, c: Fraction) -> None:
    if c:
        lam[(i, j)] = lam.get((i, j), 0) + c


def _graded_times_graded(m: int, a: PolyH, n: int, b: PolyH, g: dict, lam: dict) -> None:
    if m <= 0 and n <= 0:
        # a D^p * b D^q = a b(H+p) D^(p+q)
        _add_into(g, m + n, a * b.shift(-m))
    elif m <= 0:
        p, q = -m, n
        if p >= q:
            # a D^(p-q) b = a b(H+p-q) D^(p-q)
            _add_into(g, m + n, a * b.shift(p - q))
        else:
            # a I^(q-p) b = I^(q-p) a(H+q-p) b
            _add_into(g, m + n, a.shift(q - p) * b)
    elif n <= 0:
        # I^p (a b) D^q = I^p D^q c(H-q)
        p, q = m, -n
        c = a * b
        if p >= q:
            _add_into(g, p - q, c.shift(-q))
            for k in range(q):
                _add_lam(lam, k + p - q, k, -c(k + 1 - q))
        else:
            _add_into(g, p - q, c.shift(-p))
            for k in range(p):
                _add_lam(lam, k, k + q - p, -c(k + 1 - p))
    else:
        # I^p a I^q b = I^(p+q) a(H+q) b
        _add_into(g, m + n, a.shift(n) * b)


def mul(a: I1Element, b: I1Element) -> I1Element:
    g: dict[int, PolyH] = {}
    lam: dict[tuple[int, int], Fraction] = {}
    for m, pa in a.graded.items():
        for n, pb in b.graded.items():
            _graded_times_graded(m, pa, n, pb, g, lam)
        for (k, l), c in b.lam.items():
            if m < 0:
                if k >= -m:
                    _add_lam(lam, k + m, l, c * pa(k + m + 1))
            else:
                _add_lam(lam, k + m, l, c * pa(k + 1))
    for (k, l), c in a.lam.items():
        for n, pb in b.graded.items():
            if n < 0:
                _add_lam(lam, k, l - n, c * pb(l + 1))
            elif l >= n:
                _add_lam(lam, k, l - n, c * pb(l - n + 1))
        for (k2, l2), c2 in b.lam.items():
            if l == k2:
                _add_lam(lam, k, l2, c * c2)
    return I1Element(g, lam)


def star(a: I1Element) -> I1Element:
    """Involution fixing ``H`` and swapping ``D`` with ``I``."""
    return I1Element({-d: p for d, p in a.graded.items()},
                     {(j, i): c for (i, j), c in a.lam.items()})


def graded_component(a: I1Element, k: int) -> I1Element:
    return a.graded_component(k)


def in_F(a: I1Element) -> bool:
    return a.in_F()


def in_KH_plus_F(a: I1Element) -> bool:
    return a.in_KH_plus_F()


# -- printing ------------------------------------------------------------------

def _coef_and_body(p: PolyH) -> tuple[Fraction, str | None]:
    """Split a single monomial ``c*H^k`` into ``(c, 'H^k')``; None body for constants."""
    k = p.degree
    c = p.coeffs[k]
    return c, (None if k == 0 else ("H" if k == 1 else f"H^{k}"))


def _power(sym: str, n: int) -> str:
    return sym if n == 1 else f"{sym}^{n}"


def _term(d: int, p: PolyH) -> tuple[Fraction, str]:
    """Signed coefficient and unsigned body for one graded term."""
    op = _power("D", -d) if d < 0 else _power("I", d)
    if sum(1 for c in p.coeffs if c) == 1:
        c, body = _coef_and_body(p)
        if body is None:
            return c, op
        return c, (f"{body}*{op}" if d < 0 else f"{op}*{body}")
    return Fraction(1), (f"({p})*{op}" if d < 0 else f"{op}*({p})")


def format_element(a: I1Element) -> str:
    terms: list[tuple[Fraction, str]] = []
    for d in sorted(a.graded):
        p = a.graded[d]
        if d == 0:
            for k in range(p.degree, -1, -1):
                if p.coeffs[k]:
                    terms.append((p.coeffs[k], "" if k == 0 else _power("H", k)))
        else:
            terms.append(_term(d, p))
    for (i, j) in sorted(a.lam):
        terms.append((a.lam[(i, j)], f"e({i},{j})"))
    return join_terms(terms)


def join_terms(terms: list[tuple[Fraction, str]]) -> str:
    """Render signed ``(coefficient, body)`` pairs; an empty body is a constant."""
    if not terms:
        return "0"
    out = []
    for n, (c, body) in enumerate(terms):
        mag = abs(c)
        if not body:
            text = fmt_rational(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{fmt_rational(mag)}*{body}"
        if n == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append((" - " if c < 0 else " + ") + text)
    return "".join(out)
