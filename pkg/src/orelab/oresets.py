"""Ore sets, denominator sets and their localizations in finite rings.

Everything here is exact and exhaustive.  Right-sided questions are
answered on the opposite ring, so only the left-sided code exists.

Two facts about finite rings are used throughout and are checked
independently by :mod:`orelab.oracle`:

* an element that is both left and right regular is a unit, so the
  largest regular denominator set of a finite ring is its unit group, and
* the image of a localizable Ore set in ``R / p(S)`` consists of units,
  so the universal localization is the factor ring ``R / p(S)`` itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .bitset import contains, is_subset, iter_bits, mask_of, popcount, to_list
from .finring import (FiniteRing, IdealData, RingMorphism, all_ideals,
                      ideal_generated_by, quotient_ring)

NOT_ORE = "not-ore"
ORE = "ore"
DENOMINATOR = "denominator"
_RANK = {NOT_ORE: 0, ORE: 1, DENOMINATOR: 2}

MODES = ("left", "right", "two-sided")


class ContainsZeroError(ValueError):
    """A multiplicative closure reached zero; ``chain`` multiplies out to 0."""

    def __init__(self, chain: tuple[int, ...]):
        self.chain = chain
        super().__init__("multiplicative closure contains zero: "
                         + "*".join(map(str, chain)) + " = 0")


class DegenerateLocalization(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class MultSet:
    ring: FiniteRing
    members: int

    def __post_init__(self):
        R, m = self.ring, self.members
        if not contains(m, R.one):
            raise ValueError("multiplicative set must contain 1")
        if contains(m, R.zero):
            raise ValueError("multiplicative set must not contain 0")
        els = to_list(m)
        for a in els:
            row = R.M[a]
            for b in els:
                if not contains(m, row[b]):
                    raise ValueError(f"not multiplicatively closed: {a}*{b}")

    def __eq__(self, other) -> bool:
        return isinstance(other, MultSet) and other.ring is self.ring and other.members == self.members

    def __hash__(self) -> int:
        return hash((id(self.ring), self.members))

    def __contains__(self, x: int) -> bool:
        return contains(self.members, x)

    def __len__(self) -> int:
        return popcount(self.members)

    def __le__(self, other: "MultSet") -> bool:
        return is_subset(self.members, other.members)

    def elements(self) -> list[int]:
        return to_list(self.members)

    def __repr__(self) -> str:
        return f"MultSet({self.elements()})"


def closure_mask(R: FiniteRing, gens: Iterable[int], start: int | None = None) -> int:
    """Multiplicative closure of ``gens`` together with ``start`` (default ``{1}``).

    Raises :class:`ContainsZeroError` with a product chain if 0 is reached.
    """
    M = R.M
    # word[x] is a product chain of generators equal to x
    base = [R.one] if start is None else to_list(start)
    word: dict[int, tuple[int, ...]] = {x: (x,) if x != R.one else () for x in base}
    todo = list(word)
    for g in gens:
        if g not in word:
            word[g] = (g,)
            todo.append(g)
    if R.zero in word:
        raise ContainsZeroError(word[R.zero] or (R.zero,))
    while todo:
        x = todo.pop()
        for y in list(word):
            for p, w in ((M[x][y], word[x] + word[y]), (M[y][x], word[y] + word[x])):
                if p not in word:
                    if p == R.zero:
                        raise ContainsZeroError(w)
                    word[p] = w
                    todo.append(p)
    return mask_of(word)


def fast_closure_mask(R: FiniteRing, start: int, gens: Iterable[int]) -> int:
    """Closure of a closed set ``start`` with extra ``gens``; vectorized, no witness.

    Every element of the result is a word in ``start`` and ``gens``, so it
    suffices to multiply the frontier on the right by the generator set.
    """
    G = np.array(sorted(set(to_list(start)) | set(gens)), dtype=np.int64)
    have = np.zeros(R.size, dtype=bool)
    have[G] = True
    have[R.one] = True
    frontier = np.flatnonzero(have)
    mul = R.mul
    while frontier.size:
        prods = np.unique(mul[np.ix_(frontier, G)])
        new = prods[~have[prods]]
        have[new] = True
        frontier = new
    if have[R.zero]:
        # recompute the slow way for a witness chain
        closure_mask(R, gens, start=start)
    return mask_of(int(x) for x in np.flatnonzero(have))


def multiplicative_closure(R: FiniteRing, gens: Iterable[int]) -> MultSet:
    return MultSet(R, closure_mask(R, gens))


def units_set(R: FiniteRing) -> MultSet:
    return MultSet(R, R.units_mask)


# --- annihilators and classification ----------------------------------------

def ass_left(R: FiniteRing, S: int) -> int:
    """``{r : s r = 0 for some s in S}``."""
    M, z = R.M, R.zero
    out = 0
    for s in iter_bits(S):
        row = M[s]
        for r in range(R.size):
            if row[r] == z:
                out |= 1 << r
    return out


def ass_right(R: FiniteRing, S: int) -> int:
    """``{r : r s = 0 for some s in S}``."""
    return ass_left(R.opposite, S)


def left_ore_witness(R: FiniteRing, S: int) -> tuple[int, int] | None:
    """A pair ``(s, r)`` with ``S r`` disjoint from ``R s``, or ``None`` if ``S`` is left Ore."""
    M = R.M
    els = to_list(S)
    for s in els:
        Rs = mask_of(M[x][s] for x in range(R.size))
        for r in range(R.size):
            if not any(contains(Rs, M[t][r]) for t in els):
                return s, r
    return None


@dataclass(frozen=True)
class Classification:
    side: str
    status: str
    ass: IdealData
    ass_is_ideal: bool
    ore_witness: tuple[int, int] | None = None
    denominator_witness: int | None = None

    @property
    def is_ore(self) -> bool:
        return self.status != NOT_ORE

    @property
    def is_denominator(self) -> bool:
        return self.status == DENOMINATOR

    def at_least(self, status: str) -> bool:
        return _RANK[self.status] >= _RANK[status]


def _classify_left(R: FiniteRing, S: int, side: str) -> Classification:
    ass = ass_left(R, S)
    witness = left_ore_witness(R, S)
    kind = "two-sided"
    if witness is not None:
        return Classification(side, NOT_ORE, IdealData(kind, ass), False, ore_witness=witness)
    # rs = 0 for some s must force tr = 0 for some t
    bad = ass_left(R.opposite, S) & ~ass
    if bad:
        return Classification(side, ORE, IdealData(kind, ass), True,
                              denominator_witness=next(iter_bits(bad)))
    return Classification(side, DENOMINATOR, IdealData(kind, ass), True)


def classify(R: FiniteRing, S: MultSet | int, side: str = "left") -> Classification:
    """Left/right Ore and denominator status of ``S`` with ``ass`` and failure witnesses.

    For the right side, ``ass`` is ``{r : r s = 0}``.  When the set is not
    Ore, ``ass`` is returned as a raw set and ``ass_is_ideal`` is False.
    """
    mask = S.members if isinstance(S, MultSet) else S
    if side not in ("left", "right"):
        raise ValueError(f"side must be left or right, not {side!r}")
    key = ("classify", mask, side)
    if key not in R.memo:
        R.memo[key] = _classify_left(R if side == "left" else R.opposite, mask, side)
    return R.memo[key]


def classify_two_sided(R: FiniteRing, S: MultSet | int) -> str:
    left, right = classify(R, S, "left"), classify(R, S, "right")
    if left.is_denominator and right.is_denominator and left.ass.members == right.ass.members:
        return DENOMINATOR
    if left.is_ore and right.is_ore:
        return ORE
    return NOT_ORE


def status(R: FiniteRing, S: MultSet | int, mode: str) -> str:
    if mode == "two-sided":
        return classify_two_sided(R, S)
    return classify(R, S, mode).status


def ass_for(R: FiniteRing, S: MultSet | int, mode: str) -> int:
    """``ass_r`` for the right side, ``ass_l`` otherwise."""
    return classify(R, S, "right" if mode == "right" else "left").ass.members


def join(R: FiniteRing, S1: MultSet, S2: MultSet) -> MultSet:
    """The subsemigroup generated by ``S1`` and ``S2``."""
    return MultSet(R, fast_closure_mask(R, S1.members, S2.elements()))


# --- the ideal p(S) ---------------------------------------------------------

@dataclass(frozen=True)
class PIdeal:
    ideal: IdealData
    chain: tuple[int, ...]
    proper: bool

    @property
    def tag(self) -> str:
        return "proper" if self.proper else "improper"


def p_ideal(R: FiniteRing, S: MultSet, mode: str = "left") -> PIdeal:
    """Least ideal modulo which the image of the Ore set ``S`` is a regular denominator set.

    ``p_1`` is the two-sided ideal generated by ``ass_l(S) + ass_r(S)``;
    ``p_{k+1}`` pulls back the same ideal computed in ``R/p_k``.  The chain
    strictly grows until it stabilizes; the result is ``improper`` (equal
    to ``R``) exactly when ``S`` is not localizable.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    st = classify_two_sided(R, S) if mode == "two-sided" else classify(R, S, mode).status
    if st == NOT_ORE:
        raise ValueError(f"p_ideal needs a {mode} Ore set")
    full = R.full_mask
    current = 1 << R.zero
    chain = []
    while True:
        if current & S.members:
            # S meets the ideal: its image contains 0, so everything is absorbed
            nxt = full
        else:
            Q, pi = quotient_ring(R, IdealData("two-sided", current))
            T = pi.image_mask(S.members)
            gens = to_list(ass_left(Q, T) | ass_right(Q, T))
            J = ideal_generated_by(Q, gens, "two-sided").members
            nxt = pi.preimage_mask(J)
        if nxt == current:
            break
        chain.append(nxt)
        current = nxt
        if current == full:
            break
    gens = tuple(to_list(current))
    return PIdeal(IdealData("two-sided", current, gens), tuple(chain), current != full)


def is_localizable(R: FiniteRing, S: MultSet, mode: str = "left") -> bool:
    return p_ideal(R, S, mode).proper


@dataclass(frozen=True, eq=False)
class LocalizationResult:
    quotient: FiniteRing
    map: RingMorphism
    inverted_image: int
    kernel: IdealData
    p: PIdeal | None = field(default=None, repr=False)

    def check(self, S: MultSet) -> list[str]:
        """Names of the failed localization conditions (empty when all hold)."""
        Q, phi = self.quotient, self.map
        failed = []
        if not is_subset(phi.image_mask(S.members), Q.units_mask):
            failed.append("images of S are units")
        # every element is phi(s)^-1 phi(r): here phi is onto, so s = 1 works
        if len(set(phi.map)) != Q.size:
            failed.append("every element is a left fraction")
        if phi.kernel() != self.kernel.members:
            failed.append("kernel")
        return failed


def localize(R: FiniteRing, S: MultSet, mode: str = "left") -> LocalizationResult:
    """Universal localization ``R -> R/p(S)`` of an Ore set (classical ``S^-1 R`` for denominator sets)."""
    p = p_ideal(R, S, mode)
    if not p.proper:
        raise DegenerateLocalization("p(S) = R: the localization is the zero ring")
    Q, pi = quotient_ring(R, p.ideal)
    res = LocalizationResult(Q, pi, pi.image_mask(S.members), p.ideal, p)
    failed = res.check(S)
    if failed:
        raise AssertionError(f"localization conditions failed: {failed}")
    return res


# --- largest and maximal denominator sets -----------------------------------

def largest_candidate(R: FiniteRing, a: IdealData) -> int:
    """Preimage of the unit group of ``R/a``."""
    Q, pi = quotient_ring(R, a)
    return pi.preimage_mask(Q.units_mask)


def largest_denominator_set(R: FiniteRing, a: IdealData, side: str = "left") -> MultSet | None:
    """``S_a(R)``, or ``None`` when ``a`` is not in ``Ass_side(R)``.

    ``side`` may be ``left``, ``right`` or ``two-sided``.
    """
    if contains(a.members, R.one):
        raise ValueError("ideal must be proper")
    T = largest_candidate(R, a)
    if status(R, T, side) != DENOMINATOR:
        return None
    if ass_for(R, T, side) != a.members:
        return None
    return MultSet(R, T)


def enumerate_ass(R: FiniteRing, side: str = "left") -> list[IdealData]:
    """``Ass_side(R)``: the ideals ``a`` for which ``S_a(R)`` exists."""
    out = []
    for a in all_ideals(R, "two-sided"):
        if contains(a.members, R.one):
            continue
        if largest_denominator_set(R, a, side) is not None:
            out.append(a)
    return out


def largest_sets(R: FiniteRing, side: str = "left") -> dict[int, MultSet]:
    """Map ``a.members -> S_a(R)`` over ``Ass_side(R)``."""
    out = {}
    for a in enumerate_ass(R, side):
        out[a.members] = largest_denominator_set(R, a, side)
    return out


def maximal_masks(masks: Iterable[int]) -> list[int]:
    masks = sorted(set(masks))
    return [m for m in masks if not any(m != o and is_subset(m, o) for o in masks)]


def max_denominator_sets(R: FiniteRing, side: str = "left") -> list[MultSet]:
    """Maximal denominator sets, i.e. the maximal ``S_a(R)`` under inclusion."""
    largest = largest_sets(R, side)
    return [MultSet(R, m) for m in maximal_masks(S.members for S in largest.values())]


def localization_radical(R: FiniteRing, side: str = "left") -> IdealData:
    """Intersection of ``ass(S)`` over the maximal denominator sets."""
    out = R.full_mask
    for S in max_denominator_sets(R, side):
        out &= ass_for(R, S, side)
    return IdealData("two-sided", out)


def is_localization_maximal(R: FiniteRing, side: str = "left") -> bool:
    return [a.members for a in enumerate_ass(R, side)] == [1 << R.zero]


# --- the lattice Den(R, 0) --------------------------------------------------

DEN0_SIZE_LIMIT = 16


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Den0Lattice:
    nodes: tuple[int, ...]
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.nodes) - 1


def den0_lattice(R: FiniteRing, limit: int = DEN0_SIZE_LIMIT) -> Den0Lattice:
    """Multiplicatively closed subsets of the units containing 1, with join and meet tables.

    Join is the closure of the union, meet the intersection; the lattice
    laws are verified on every triple before returning.
    """
    if R.size > limit:
        raise BudgetExceeded(f"den0_lattice is limited to rings of size <= {limit}")
    U = R.units_mask
    nodes = {1 << R.one}
    frontier = list(nodes)
    while frontier:
        nxt = []
        for X in frontier:
            for u in iter_bits(U & ~X):
                Y = closure_mask(R, [u], start=X)
                if Y not in nodes:
                    nodes.add(Y)
                    nxt.append(Y)
        frontier = nxt
    ordered = sorted(nodes, key=lambda m: (popcount(m), m))
    index = {m: i for i, m in enumerate(ordered)}
    n = len(ordered)
    join_t = [[index[closure_mask(R, to_list(ordered[j]), start=ordered[i])] for j in range(n)]
              for i in range(n)]
    meet_t = [[index[ordered[i] & ordered[j]] for j in range(n)] for i in range(n)]
    _check_lattice(ordered, join_t, meet_t)
    return Den0Lattice(tuple(ordered), tuple(map(tuple, join_t)), tuple(map(tuple, meet_t)))


def _check_lattice(nodes, join_t, meet_t) -> None:
    n = len(nodes)
    for i in range(n):
        for j in range(n):
            J, Mt = join_t[i][j], meet_t[i][j]
            # least upper bound / greatest lower bound in the inclusion order
            if not (is_subset(nodes[i], nodes[J]) and is_subset(nodes[j], nodes[J])):
                raise AssertionError("join is not an upper bound")
            if not (is_subset(nodes[Mt], nodes[i]) and is_subset(nodes[Mt], nodes[j])):
                raise AssertionError("meet is not a lower bound")
            for k in range(n):
                if is_subset(nodes[i], nodes[k]) and is_subset(nodes[j], nodes[k]):
                    if not is_subset(nodes[J], nodes[k]):
                        raise AssertionError("join is not least")
                if is_subset(nodes[k], nodes[i]) and is_subset(nodes[k], nodes[j]):
                    if not is_subset(nodes[k], nodes[Mt]):
                        raise AssertionError("meet is not greatest")
