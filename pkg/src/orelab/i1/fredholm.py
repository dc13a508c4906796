"""Kernel, cokernel and index of operators acting on ``Q[x]``.

Everything is computed in the divided-power basis ``v_k = x^k / k!``, where
``D v_k = v_(k-1)``, ``I v_k = v_(k+1)``, ``H v_k = (k+1) v_k`` and
``e_ij v_k = delta_jk v_i``.  In this basis the involution is the matrix
transpose.

Let ``d`` be the top degree of the non-finite part and ``c(k)`` the entry it
puts at row ``k + d`` of column ``k``.  Past the window ``N0`` (beyond every
root of ``c``, every matrix-unit row and the columns ``D^(-d)`` kills),
column ``k`` has a nonzero leading entry at row ``k + d`` that nothing else
reaches.  So kernel vectors live in ``span(v_0..v_N0)`` and the cokernel
is the cokernel of the finite block with rows ``0..N0+d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..linalg import rank
from .element import I1Element, star
from .poly import PolyH

Dim = Union[int, str]

INFINITE = "infinite"
UNDEFINED = "undefined"
S_SETS = ("S_r0", "S_l0", "S_0")


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class FredholmData:
    kernel_dim: Dim
    cokernel_dim: Dim
    index: Dim
    window: int | None

    def as_tuple(self) -> tuple[Dim, Dim, Dim]:
        return (self.kernel_dim, self.cokernel_dim, self.index)

    @property
    def is_fredholm(self) -> bool:
        return self.index != UNDEFINED

    def to_dict(self) -> dict:
        return {"kernel_dim": self.kernel_dim, "cokernel_dim": self.cokernel_dim,
                "index": self.index, "window": self.window}

    def __str__(self) -> str:
        return f"kernel_dim={self.kernel_dim} cokernel_dim={self.cokernel_dim} index={self.index}"


def diagonal_function(a: I1Element) -> tuple[int, PolyH]:
    """Top non-finite degree ``d`` and ``c`` with ``a v_k = c(k) v_(k+d) + lower``."""
    if a.in_F():
        raise PreconditionError("element lies in F")
    d = max(a.graded)
    alpha = a.graded[d]
    return d, alpha.shift(1 + min(d, 0))


def certified_window(a: I1Element) -> int:
    d, c = diagonal_function(a)
    candidates = [0, -d - 1]
    candidates += [k for k in c.nonneg_integer_roots()]
    candidates += [i - d for i, _ in a.lam]
    return max(candidates)


def window_matrix(a: I1Element, ncols: int, nrows: int | None = None) -> list[list[Fraction]]:
    """Rows ``0..nrows-1`` and columns ``0..ncols-1`` in the divided-power basis.

    With ``nrows=None`` every row touched by those columns is kept.
    """
    cols = [a.column(k) for k in range(ncols)]
    if nrows is None:
        nrows = 1 + max((r for col in cols for r in col), default=-1)
    M = [[Fraction(0)] * ncols for _ in range(nrows)]
    for k, col in enumerate(cols):
        for r, c in col.items():
            if r < nrows:
                M[r][k] = c
    return M


def kernel_dim_at(a: I1Element, K: int) -> int:
    """Nullity of ``a`` restricted to ``span(v_0..v_K)``."""
    M = window_matrix(a, K + 1)
    return (K + 1) - (rank(M) if M else 0)


def fredholm(a: I1Element) -> FredholmData:
    if a.in_F():
        return FredholmData(INFINITE, INFINITE, UNDEFINED, None)
    d, _ = diagonal_function(a)
    N0 = certified_window(a)
    R0 = N0 + d
    M = window_matrix(a, N0 + 1, R0 + 1)
    kernel = (N0 + 1) - (rank(M) if M else 0)
    # cokernel of the block = kernel of its transpose, read off from star(a)
    T = window_matrix(star(a), R0 + 1, N0 + 1)
    cokernel = (R0 + 1) - (rank(T) if T and T[0] else 0)
    return FredholmData(kernel, cokernel, kernel - cokernel, N0)


def is_bijective(a: I1Element) -> bool:
    return fredholm(a).as_tuple() == (0, 0, 0)


def s_membership(a: I1Element, which: str) -> bool:
    if which == "S_r0":
        return is_bijective(a)
    if which == "S_l0":
        return is_bijective(star(a))
    if which == "S_0":
        return a.in_KH_plus_F() and is_bijective(a)
    raise ValueError(f"unknown set {which!r}; expected one of {', '.join(S_SETS)}")


def m_factor(u: I1Element) -> tuple[I1Element, I1Element]:
    """Split ``u`` in ``S_0`` as ``v * w`` with ``v`` diagonal and ``w`` in ``1 + F``.

    ``v = alpha(H) + sum e_ii`` over the ``i >= 0`` with ``alpha(i+1) = 0``.
    """
    if not s_membership(u, "S_0"):
        raise PreconditionError(f"{u} is not in S_0")
    alpha = u.mid
    patched = set(alpha.shift(1).nonneg_integer_roots())
    v = I1Element({0: alpha}, {(i, i): 1 for i in patched})

    def diag(i: int) -> Fraction:
        return alpha(i + 1) + (1 if i in patched else 0)

    lam = dict(u.lam)
    for i in patched:
        lam[(i, i)] = lam.get((i, i), 0) - 1
    w = I1Element.scalar(1) + I1Element(lam={(i, j): c / diag(i) for (i, j), c in lam.items()})
    if v * w != u:
        raise AssertionError(f"factorization check failed for {u}")
    return v, w
