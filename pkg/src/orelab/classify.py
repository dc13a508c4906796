"""Closed-form predictions for finite commutative and finite semisimple rings.

A finite commutative ring is a product of local rings ``R_1 x ... x R_s``.
The predictions below (Ass, largest denominator sets, maximal
localizations) are built from that decomposition alone and are compared
with :mod:`orelab.oresets` and :mod:`orelab.oracle` in the test-suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .bitset import popcount
from .finring import (FiniteRing, IdealData, RingMorphism, all_ideals,
                      central_idempotent_decomposition, ideal_generated_by,
                      is_semiprime, jacobson_radical, regular_elements)
from . import oresets as ore


class NotCommutative(ValueError):
    pass


def _kernel(p: RingMorphism) -> int:
    return p.kernel()


@dataclass
class CommProfile:
    minimal_primes: list[IdealData]
    predicted_Ass: list[IdealData]
    predicted_largest: dict[tuple[int, ...], ore.MultSet]
    factors: list[tuple[int, FiniteRing, RingMorphism]] = field(repr=False, default_factory=list)
    extension: bool = False  # s = 1: the {0} prediction extends the product rule


def comm_profile(R: FiniteRing) -> CommProfile:
    """Minimal primes, predicted ``Ass(R)`` and predicted ``S_a(R)`` for commutative ``R``.

    With local factors ``R_i`` and projections ``sigma_i``:
    ``p_i = sigma_i^-1(m_i)``, ``a(I) = intersection of ker(sigma_i) for i in I``
    and ``S_a(I) = R minus the union of p_i for i in I``, for nonempty ``I``.
    """
    if not R.is_commutative:
        raise NotCommutative(f"{R.label} is not commutative")
    factors = central_idempotent_decomposition(R)
    s = len(factors)
    primes = []
    kernels = []
    for _, F, p in factors:
        m = F.full_mask & ~F.units_mask  # maximal ideal of the local factor
        primes.append(IdealData("two-sided", p.preimage_mask(m)))
        kernels.append(_kernel(p))
    ass: dict[int, IdealData] = {}
    largest: dict[tuple[int, ...], ore.MultSet] = {}
    for k in range(1, s + 1):
        for I in itertools.combinations(range(s), k):
            a = R.full_mask
            bad = 0
            for i in I:
                a &= kernels[i]
                bad |= primes[i].members
            ass.setdefault(a, IdealData("two-sided", a))
            largest[I] = ore.MultSet(R, R.full_mask & ~bad)
    predicted = sorted(ass.values(), key=lambda I: (popcount(I.members), I.members))
    return CommProfile(primes, predicted, largest, factors, extension=(s == 1))


@dataclass
class SemisimpleProfile:
    simple_factors: list[tuple[int, FiniteRing, RingMorphism]]
    minimal_primes: list[IdealData]
    predicted_Ass: list[IdealData]
    max_ass: list[IdealData]


def is_semisimple(R: FiniteRing) -> bool:
    return jacobson_radical(R) == 1 << R.zero


def semisimple_profile(R: FiniteRing) -> SemisimpleProfile:
    """Prediction for a finite semisimple ring ``R = R_1 x ... x R_s`` with simple ``R_i``.

    ``p_i = ker(R -> R_i)``, ``Ass(R) = {intersection of p_i, i in I}``,
    ``maxAss(R) = {p_i}`` and ``R / p_i = R_i``.
    """
    if not is_semisimple(R):
        raise ValueError(f"{R.label} is not semisimple")
    factors = central_idempotent_decomposition(R)
    primes = [IdealData("two-sided", p.kernel()) for _, _, p in factors]
    ass = {}
    for k in range(1, len(primes) + 1):
        for I in itertools.combinations(primes, k):
            a = R.full_mask
            for P in I:
                a &= P.members
            ass.setdefault(a, IdealData("two-sided", a))
    predicted = sorted(ass.values(), key=lambda I: (popcount(I.members), I.members))
    return SemisimpleProfile(factors, primes, predicted, primes)


# --- Goldie conditions at finite scale --------------------------------------

def left_ideals(R: FiniteRing) -> list[IdealData]:
    return all_ideals(R, "left")


def is_essential_left_ideal(R: FiniteRing, L: int) -> bool:
    """``L`` meets every nonzero left ideal; principal ones ``R x`` suffice."""
    zero = 1 << R.zero
    for x in range(R.size):
        if x == R.zero:
            continue
        Rx = ideal_generated_by(R, [x], "left").members
        if L & Rx == zero:
            return False
    return True


@dataclass
class GoldieReport:
    conditions: dict[str, bool]
    notes: dict[str, str]
    semiprime_witness: list[int] | None = None

    @property
    def consistent(self) -> bool:
        return len(set(self.conditions.values())) == 1

    @property
    def value(self) -> bool:
        return all(self.conditions.values())


def goldie_report(R: FiniteRing) -> GoldieReport:
    """Evaluate the five equivalent Goldie conditions on a finite ring.

    Regular elements of a finite ring are units, so the largest left
    quotient ring and the classical one both equal ``R`` (realized as the
    localization at the unit group).  Chain conditions and finite rank
    hold automatically.
    """
    units = ore.units_set(R)
    Q = ore.localize(R, units, "left").quotient
    q_semisimple = is_semisimple(Q)

    regular = regular_elements(R, "both")
    qcl_exists = regular == R.units_mask
    qcl_semisimple = qcl_exists and is_semisimple(Q)

    # left order in a semisimple ring: R -> Q_cl injective and Q_cl semisimple
    order = qcl_semisimple and Q.size == R.size

    semiprime, witness = is_semiprime(R)

    essential_ok = True
    for L in left_ideals(R):
        if is_essential_left_ideal(R, L.members) != bool(L.members & regular):
            essential_ok = False
            break

    conditions = {
        "Q_l(R) semisimple": q_semisimple,
        "Q_cl(R) exists and is semisimple": qcl_semisimple,
        "left order in a semisimple ring": order,
        "finite rank, ACC on annihilators, semiprime": semiprime,
        "essential left ideals contain regular elements": essential_ok,
    }
    notes = {
        "finite rank": "automatic (finite ring)",
        "ACC on left annihilators": "automatic (finite ring)",
        "S_0(R)": "unit group; equals the regular elements" if qcl_exists else "differs from regular elements",
    }
    return GoldieReport(conditions, notes, None if witness is None else witness.elements())
