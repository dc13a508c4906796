"""Brute-force ground truth for :mod:`orelab.oresets`.

The oracle enumerates multiplicative sets outright and classifies each
one; it never uses the preimage-of-units shortcut.  ``verify_paper_identities``
runs the named identity checks that the CLI ``verify`` command reports.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .bitset import contains, is_subset, iter_bits, popcount, to_list
from .finring import (FiniteRing, IdealData, automorphisms, product_coords,
                      quotient_ring, ring_homomorphisms)
from . import oresets as ore
from .oresets import ContainsZeroError, MultSet


@dataclass(frozen=True)
class EnumerationBudget:
    max_ring_size_full: int = 12
    max_generator_arity: int = 3
    sample_count: int = 100_000
    seed: int = 0

    def full(self, R: FiniteRing) -> bool:
        return R.size <= self.max_ring_size_full


def _closures_full(R: FiniteRing) -> set[int]:
    """Every multiplicatively closed subset containing 1 and avoiding 0.

    Each such set is the closure of its own elements, so adding one
    element at a time from ``{1}`` reaches all of them.
    """
    seen = {1 << R.one}
    frontier = [1 << R.one]
    nonzero = R.full_mask & ~(1 << R.zero)
    while frontier:
        nxt = []
        for X in frontier:
            for g in iter_bits(nonzero & ~X):
                try:
                    Y = ore.closure_mask(R, [g], start=X)
                except ContainsZeroError:
                    continue
                if Y not in seen:
                    seen.add(Y)
                    nxt.append(Y)
        frontier = nxt
    return seen


def _closures_sampled(R: FiniteRing, budget: EnumerationBudget) -> set[int]:
    rng = random.Random(budget.seed)
    nonzero = [x for x in range(R.size) if x != R.zero]
    seen = {1 << R.one, R.units_mask}
    for _ in range(budget.sample_count):
        k = rng.randint(1, budget.max_generator_arity)
        gens = rng.sample(nonzero, min(k, len(nonzero)))
        try:
            seen.add(ore.closure_mask(R, gens))
        except ContainsZeroError:
            pass
    return seen


def enumerate_mult_sets(R: FiniteRing, budget: EnumerationBudget | None = None) -> Iterator[MultSet]:
    """Multiplicative sets of ``R`` without repeats, in (size, mask) order.

    Complete when ``R.size <= budget.max_ring_size_full``; otherwise closures
    of random generator sets.
    """
    budget = budget or EnumerationBudget()
    masks = _closures_full(R) if budget.full(R) else _closures_sampled(R, budget)
    for m in sorted(masks, key=lambda m: (popcount(m), m)):
        yield MultSet(R, m)


def golden_lines(R: FiniteRing, label: str, side: str, sets) -> list[str]:
    """Golden-file rows: ``<label> <side> <status> <sorted ids>``, one set per line."""
    return [f"{label} {side} {ore.status(R, S, side)} " + " ".join(map(str, S.elements()))
            for S in sets]


@dataclass
class Profile:
    ass: list[int]
    largest: dict[int, int]
    max_den: list[int]
    radical: int
    certified: bool = True

    def key(self) -> tuple:
        return (sorted(self.ass), sorted(self.largest.items()), sorted(self.max_den), self.radical)


def brute_profile(R: FiniteRing, side: str = "left", budget: EnumerationBudget | None = None) -> Profile:
    """Ass, largest set per ideal, maximal denominator sets and radical from enumeration alone."""
    budget = budget or EnumerationBudget()
    by_ass: dict[int, int] = {}
    for S in enumerate_mult_sets(R, budget):
        if ore.status(R, S, side) != ore.DENOMINATOR:
            continue
        a = ore.ass_for(R, S, side)
        by_ass[a] = by_ass.get(a, 0) | S.members
    max_den = [m for m in by_ass.values()
               if not any(m != o and is_subset(m, o) for o in by_ass.values())]
    radical = R.full_mask
    for m in max_den:
        radical &= ore.ass_for(R, m, side)
    return Profile(sorted(by_ass), by_ass, sorted(max_den), radical, certified=budget.full(R))


def closed_form_profile(R: FiniteRing, side: str = "left") -> Profile:
    largest = {a: S.members for a, S in ore.largest_sets(R, side).items()}
    return Profile(sorted(largest), largest,
                   sorted(S.members for S in ore.max_denominator_sets(R, side)),
                   ore.localization_radical(R, side).members)


# --- identity checks --------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    status: str
    witness: object = None
    anchor: str = ""


@dataclass
class VerificationReport:
    ring: str
    checks: list[CheckResult] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.status != "FAIL" for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == "FAIL"]

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "ring": self.ring,
            "ok": self.ok,
            "checks": [{"name": c.name, "status": c.status, "anchor": c.anchor,
                        "witness": _jsonable(c.witness)} for c in self.checks],
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def _jsonable(w):
    if w is None or isinstance(w, (bool, int, str, float)):
        return w
    if isinstance(w, dict):
        return {str(k): _jsonable(v) for k, v in w.items()}
    if isinstance(w, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in w]
    return str(w)


# check name -> statement it certifies (mirrored in the README table)
ANCHORS = {
    "join_theorem": "join of two denominator sets with the same ass is a denominator set with that ass",
    "largest_is_union": "S_a(R) is the union of all denominator sets with ass a",
    "p_equals_ass": "p(S) = ass(S) for every denominator set",
    "two_sided_localizable": "every left-and-right Ore set has p(S) != R",
    "left_ore_localizable_search": "records left Ore sets with p(S) = R (none asserted)",
    "max_den_nonempty": "maxDen(R) is non-empty",
    "max_quotient_structure": "S = preimage of units of Q_a(R) and Ass(Q_a(R)) = {0}",
    "saturation": "S_a(R) is S-saturated for denominator S inside it",
    "automorphism_stability": "sigma(S_a(R)) = S_sigma(a)(R) for automorphisms sigma",
    "product_units": "S_0(R1 x R2) = S_0(R1) x S_0(R2)",
    "universal_property": "homomorphisms inverting S factor uniquely through R -> R/p(S)",
    "oracle_agreement": "brute-force profile equals the closed-form profile",
    "goldie_equivalence": "the finite-scale Goldie conditions agree",
    "regular_equals_units": "both-sided regular elements are the units",
}

SIDES_ALL = ("left", "right", "two-sided")
MICRO_SIZE = 8


class _Checker:
    def __init__(self, R: FiniteRing, budget: EnumerationBudget, join_impl=None,
                 hom_targets=()):
        self.R = R
        self.budget = budget
        self.join_impl = join_impl or ore.join
        self.hom_targets = hom_targets
        self.sets = list(enumerate_mult_sets(R, budget))
        self.status = {side: {S.members: ore.status(R, S, side) for S in self.sets}
                       for side in SIDES_ALL}
        self.report = VerificationReport(R.label)

    def run(self, name: str, fn: Callable[[], object]) -> None:
        try:
            witness = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed run
            self.report.checks.append(CheckResult(name, "FAIL", f"{type(exc).__name__}: {exc}",
                                                  ANCHORS.get(name, "")))
            return
        if isinstance(witness, CheckResult):
            witness.anchor = ANCHORS.get(name, "")
            self.report.checks.append(witness)
        elif witness is None:
            self.report.checks.append(CheckResult(name, "PASS", None, ANCHORS.get(name, "")))
        else:
            self.report.checks.append(CheckResult(name, "FAIL", witness, ANCHORS.get(name, "")))

    def denominators(self, side: str) -> list[MultSet]:
        return [S for S in self.sets if self.status[side][S.members] == ore.DENOMINATOR]

    # -- individual checks; each returns None on success or a witness

    def _generators(self, S: MultSet) -> list[int]:
        gens, span = [], 1 << self.R.one
        for x in S.elements():
            if not contains(span, x):
                gens.append(x)
                span = ore.fast_closure_mask(self.R, span, [x])
        return gens

    def _join_masks(self, S1: MultSet, S2: MultSet) -> int | None:
        """``join(S1, S2)`` folded one generator of ``S2`` at a time, memoized."""
        memo = self._step_memo
        X = S1.members
        for g in self._gens[S2.members]:
            key = (X, g)
            if key not in memo:
                try:
                    memo[key] = ore.fast_closure_mask(self.R, X, [g])
                except ContainsZeroError:
                    memo[key] = None
            X = memo[key]
            if X is None:
                return None
        return X

    def join_theorem(self):
        R = self.R
        cached = self.join_impl is ore.join
        self._step_memo: dict[tuple[int, int], int | None] = {}
        self._gens = {S.members: self._generators(S) for S in self.sets} if cached else {}
        for side in SIDES_ALL:
            groups: dict[int, list[MultSet]] = {}
            for S in self.denominators(side):
                groups.setdefault(ore.ass_for(R, S, side), []).append(S)
            for a, members in groups.items():
                for i, S1 in enumerate(members):
                    for S2 in members[i:]:
                        if cached:
                            J = self._join_masks(S1, S2)
                            if J is None:
                                return (side, S1.elements(), S2.elements(), "contains zero")
                        else:
                            try:
                                J = self.join_impl(R, S1, S2).members
                            except (ContainsZeroError, ValueError) as exc:
                                return (side, S1.elements(), S2.elements(), str(exc))
                        if ore.status(R, J, side) != ore.DENOMINATOR or ore.ass_for(R, J, side) != a:
                            return (side, S1.elements(), S2.elements(), to_list(J))
        return None

    def largest_is_union(self):
        R = self.R
        for side in SIDES_ALL:
            union: dict[int, int] = {}
            for S in self.denominators(side):
                a = ore.ass_for(R, S, side)
                union[a] = union.get(a, 0) | S.members
            closed = {a: S.members for a, S in ore.largest_sets(R, side).items()}
            if union != closed:
                diff = sorted(set(union.items()) ^ set(closed.items()))
                return (side, [(to_list(a), to_list(m)) for a, m in diff[:2]])
        return None

    def p_equals_ass(self):
        R = self.R
        for side in ("left", "right", "two-sided"):
            for S in self.denominators(side):
                p = ore.p_ideal(R, S, side)
                if p.ideal.members != ore.ass_for(R, S, side):
                    return (side, S.elements(), to_list(p.ideal.members))
        return None

    def two_sided_localizable(self):
        R = self.R
        for S in self.sets:
            if self.status["left"][S.members] != ore.NOT_ORE and self.status["right"][S.members] != ore.NOT_ORE:
                if not ore.p_ideal(R, S, "two-sided").proper:
                    return S.elements()
        return None

    def left_ore_localizable_search(self):
        # open question: report, never fail
        R = self.R
        found = []
        for S in self.sets:
            if self.status["left"][S.members] != ore.NOT_ORE and not ore.p_ideal(R, S, "left").proper:
                found.append(S.elements())
        return CheckResult("left_ore_localizable_search", "INFO",
                           {"non_localizable_left_ore_sets": found[:5], "count": len(found)})

    def max_den_nonempty(self):
        for side in SIDES_ALL:
            if not ore.max_denominator_sets(self.R, side):
                return side
        return None

    def max_quotient_structure(self):
        R = self.R
        for side in SIDES_ALL:
            for S in ore.max_denominator_sets(R, side):
                a = IdealData("two-sided", ore.ass_for(R, S, side))
                A, pi = quotient_ring(R, a)
                if pi.preimage_mask(A.units_mask) != S.members:
                    return (side, S.elements(), "S != preimage of units")
                # S_0(A) is the unit group of the finite ring A
                if not is_subset(pi.image_mask(S.members), A.units_mask):
                    return (side, S.elements(), "image not in units")
                if [b.members for b in ore.enumerate_ass(A, side)] != [1 << A.zero]:
                    return (side, S.elements(), "Ass(A) != {0}")
        return None

    def saturation(self):
        R = self.R
        M = R.M
        for side in ("left", "right"):
            largest = ore.largest_sets(R, side)
            for S in self.denominators(side):
                a = ore.ass_for(R, S, side)
                T = largest.get(a)
                if T is None:
                    return (side, S.elements(), "no largest set for its ass")
                for s in S.elements():
                    for r in range(R.size):
                        if contains(T.members, M[s][r]) and not contains(T.members, r):
                            return (side, S.elements(), ("s*r", s, r))
                        if contains(T.members, M[r][s]) and not contains(T.members, r):
                            return (side, S.elements(), ("r*s", r, s))
        return None

    def automorphism_stability(self):
        R = self.R
        if R.size > MICRO_SIZE:
            return CheckResult("automorphism_stability", "SKIP", f"size > {MICRO_SIZE}")
        for sigma in automorphisms(R):
            for side in SIDES_ALL:
                largest = ore.largest_sets(R, side)
                for a, S in largest.items():
                    sa = sigma.image_mask(a)
                    T = largest.get(sa)
                    if T is None or sigma.image_mask(S.members) != T.members:
                        return (side, sigma.map, to_list(a))
        return None

    def product_units(self):
        R = self.R
        if not R.factors:
            return CheckResult("product_units", "SKIP", "not a product ring")
        expected = 0
        for x in range(R.size):
            if all(contains(F.units_mask, c) for F, c in zip(R.factors, product_coords(R, x))):
                expected |= 1 << x
        for side in SIDES_ALL:
            S = ore.largest_denominator_set(R, IdealData("two-sided", 1 << R.zero), side)
            if S is None or S.members != expected:
                return (side, None if S is None else S.elements(), to_list(expected))
        return None

    def universal_property(self):
        R = self.R
        if R.size > MICRO_SIZE:
            return CheckResult("universal_property", "SKIP", f"size > {MICRO_SIZE}")
        targets = [Q for Q in self.hom_targets if Q.size <= MICRO_SIZE] or [R]
        homs = {id(Q): list(ring_homomorphisms(R, Q)) for Q in targets}
        for S in self.sets:
            if self.status["left"][S.members] == ore.NOT_ORE:
                continue
            if not ore.is_localizable(R, S, "left"):
                continue
            loc = ore.localize(R, S, "left")
            L, pi = loc.quotient, loc.map
            for Q in targets:
                down = list(ring_homomorphisms(L, Q))
                for f in homs[id(Q)]:
                    if not is_subset(f.image_mask(S.members), Q.units_mask):
                        continue
                    factor = [h for h in down if h.compose(pi).map == f.map]
                    if len(factor) != 1:
                        return (S.elements(), Q.label, f.map, len(factor))
        return None

    def oracle_agreement(self):
        R = self.R
        if not self.budget.full(R):
            return CheckResult("oracle_agreement", "SKIP", "ring above full-enumeration budget")
        for side in SIDES_ALL:
            b = brute_profile(R, side, self.budget)
            c = closed_form_profile(R, side)
            if b.key() != c.key():
                return (side, "brute", b.key(), "closed", c.key())
        return None

    def regular_equals_units(self):
        from .finring import regular_elements
        R = self.R
        if regular_elements(R, "both") != R.units_mask:
            return to_list(regular_elements(R, "both") ^ R.units_mask)
        return None

    def goldie_equivalence(self):
        from .classify import goldie_report
        rep = goldie_report(self.R)
        if not rep.consistent:
            return rep.conditions
        return None


def verify_paper_identities(R: FiniteRing, budget: EnumerationBudget | None = None, *,
                            join_impl=None, hom_targets=()) -> VerificationReport:
    """Run every named identity check on ``R``; FAIL entries carry a witness."""
    budget = budget or EnumerationBudget()
    t0 = time.perf_counter()
    c = _Checker(R, budget, join_impl=join_impl, hom_targets=hom_targets)
    for name in ANCHORS:
        c.run(name, getattr(c, name))
    c.report.seconds = time.perf_counter() - t0
    return c.report


def mutated_join(R: FiniteRing, S1: MultSet, S2: MultSet) -> MultSet:
    """A deliberately wrong join for harness self-tests: also closes over the
    smallest nonzero non-unit, which changes the ass ideal or hits zero."""
    extra = [x for x in range(R.size) if x != R.zero and not contains(R.units_mask, x)][:1]
    return MultSet(R, ore.closure_mask(R, S1.elements() + S2.elements() + extra))
