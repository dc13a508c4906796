"""Exact Gaussian elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        den = 1
        for x in row:
            den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def _content_free(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    return [x // g for x in row] if g > 1 else row


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns.

    Elimination runs fraction-free on integer rows; only the final scaling
    by the pivots produces fractions.
    """
    A = _integer_rows(rows)
    if not A:
        return [], []
    ncols = len(A[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv_row = A[r]
        a = piv_row[c]
        support = [j for j, y in enumerate(piv_row) if y]
        for i in range(len(A)):
            b = A[i][c]
            if i != r and b:
                g = gcd(a, b)
                fa, fb = a // g, b // g
                row = A[i]
                if fa != 1:
                    row = [x * fa for x in row]
                for j in support:
                    row[j] -= fb * piv_row[j]
                A[i] = _content_free(row)
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    out = [[Fraction(x, row[c]) for x in row] for row, c in zip(A, pivots)]
    out += [[Fraction(0)] * ncols for _ in range(len(A) - len(pivots))]
    return out, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


PRIME = (1 << 61) - 1


def rank_mod_p(rows: Sequence[Sequence], p: int = PRIME) -> int | None:
    """Rank of the reduction mod ``p``, or ``None`` if ``p`` divides a denominator.

    Never exceeds the rational rank, so a full rank mod ``p`` certifies it.
    """
    A = []
    for row in rows:
        out = []
        for x in row:
            x = Fraction(x)
            if x.denominator % p == 0:
                return None
            out.append(x.numerator * pow(x.denominator, -1, p) % p)
        A.append(out)
    r = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        support = [j for j, y in enumerate(A[r]) if y]
        for i in range(r + 1, len(A)):
            f = A[i][c]
            if f:
                row = A[i]
                for j in support:
                    row[j] = (row[j] - f * A[r][j]) % p
        r += 1
        if r == len(A):
            break
    return r


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{v : A v = 0}``, one vector per free column, in column order."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def primitive(v: Sequence[Fraction]) -> list[int]:
    """Scale to coprime integers with a positive first nonzero entry."""
    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    first = next(x for x in ints if x != 0)
    return [-x for x in ints] if first < 0 else ints


def det(rows: Sequence[Sequence]) -> Fraction:
    A = [[Fraction(x) for x in row] for row in rows]
    n = len(A)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        d *= A[c][c]
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] / A[c][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return d
