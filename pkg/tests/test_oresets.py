import pytest

from orelab import oresets as ore
from orelab.bitset import is_subset, mask_of, to_list
from orelab.finring import IdealData, ideal_generated_by
from orelab.oracle import EnumerationBudget, enumerate_mult_sets
from orelab.oresets import ContainsZeroError, MultSet
from orelab.ringspec import parse_ring

E11, E12, E22, ONE_T = 4, 2, 1, 5
SPAN_E11_E12 = [0, E12, E11, E11 | E12]


def S(R, ids):
    return MultSet(R, mask_of(ids))


def ideal(R, ids):
    return IdealData("two-sided", mask_of(ids))


# --- closure ---------------------------------------------------------------

def test_closure_examples(z6, z4):
    assert ore.multiplicative_closure(z6, [3]).elements() == [1, 3]
    assert ore.multiplicative_closure(z6, [2]).elements() == [1, 2, 4]
    with pytest.raises(ContainsZeroError) as exc:
        ore.multiplicative_closure(z4, [2])
    assert exc.value.chain == (2, 2)


def test_multset_validation(z6):
    with pytest.raises(ValueError):
        MultSet(z6, mask_of([1, 2]))   # 2*2 = 4 missing
    with pytest.raises(ValueError):
        MultSet(z6, mask_of([2, 4]))   # no identity
    with pytest.raises(ValueError):
        MultSet(z6, mask_of([0, 1]))


# --- classification ----------------------------------------------------------

def test_classify_z6(z6):
    c = ore.classify(z6, S(z6, [1, 3]), "left")
    assert c.status == ore.DENOMINATOR
    assert c.ass.elements() == [0, 2, 4]


def test_classify_triangular_asymmetry(t2):
    T = S(t2, [ONE_T, E22])
    left = ore.classify(t2, T, "left")
    assert left.status == ore.DENOMINATOR
    assert left.ass.elements() == SPAN_E11_E12
    right = ore.classify(t2, T, "right")
    assert right.status == ore.NOT_ORE
    assert right.ore_witness == (E22, E12)


def test_identity_set_is_denominator(corpus):
    for R in corpus.values():
        for side in ("left", "right"):
            c = ore.classify(R, S(R, [R.one]), side)
            assert c.status == ore.DENOMINATOR and c.ass.members == 1 << R.zero


def test_classify_matches_definitions(t2, corpus):
    """Ore and denominator conditions re-checked straight from the definitions."""
    for R in [t2, corpus["t2f3"], corpus["f2c3"]]:
        M = R.M
        for T in enumerate_mult_sets(R, EnumerationBudget(64)):
            s_ids = T.elements()
            ore_ok = all(any(any(M[t][r] == M[x][s] for x in range(R.size)) for t in s_ids)
                         for s in s_ids for r in range(R.size))
            ass = [r for r in range(R.size) if any(M[s][r] == R.zero for s in s_ids)]
            rev = all(any(M[t][r] == R.zero for t in s_ids)
                      for r in range(R.size) if any(M[r][s] == R.zero for s in s_ids))
            c = ore.classify(R, T, "left")
            expected = ore.DENOMINATOR if ore_ok and rev else ore.ORE if ore_ok else ore.NOT_ORE
            assert c.status == expected, (R.label, s_ids)
            assert c.ass.elements() == ass


# --- join ----------------------------------------------------------------------

def test_join_examples(z6, corpus):
    assert ore.join(z6, S(z6, [1, 3]), S(z6, [1, 3])).elements() == [1, 3]
    J = ore.join(z6, S(z6, [1, 5]), S(z6, [1, 3]))
    assert J.elements() == [1, 3, 5]
    c = ore.classify(z6, J, "left")
    assert c.status == ore.DENOMINATOR and c.ass.elements() == [0, 2, 4]
    z12 = corpus["z12"]
    with pytest.raises(ContainsZeroError):
        ore.join(z12, S(z12, [1, 4]), S(z12, [1, 9]))


# --- p(S), localization ---------------------------------------------------------

def test_p_ideal_triangular(t2):
    p = ore.p_ideal(t2, S(t2, [ONE_T, E22]), "left")
    assert p.proper and p.ideal.elements() == SPAN_E11_E12
    assert len(p.chain) == 1


def test_p_equals_ass_on_denominators(corpus):
    for name in ("z6", "z12", "t2f2", "f2c2", "z4xz2"):
        R = corpus[name]
        for T in enumerate_mult_sets(R):
            c = ore.classify(R, T, "left")
            if c.status == ore.DENOMINATOR:
                p = ore.p_ideal(R, T, "left")
                assert p.proper and p.ideal.members == c.ass.members
                assert ore.is_localizable(R, T, "left")


def test_identity_set_localizable(corpus):
    for R in corpus.values():
        p = ore.p_ideal(R, S(R, [R.one]), "left")
        assert p.proper and p.ideal.members == 1 << R.zero


def test_localize_examples(z6, t2, corpus):
    loc = ore.localize(z6, S(z6, [1, 3]))
    assert loc.quotient.size == 2 and to_list(loc.kernel.members) == [0, 2, 4]
    assert loc.check(S(z6, [1, 3])) == []
    for R in corpus.values():
        U = ore.units_set(R)
        res = ore.localize(R, U)
        assert res.quotient is R and res.map.map == tuple(range(R.size))
    loc_t = ore.localize(t2, S(t2, [ONE_T, E22]), "left")
    assert loc_t.quotient.size == 2 and loc_t.kernel.elements() == SPAN_E11_E12


# --- largest sets, Ass, maxDen -------------------------------------------------------

def test_largest_examples(z6):
    assert ore.largest_denominator_set(z6, ideal(z6, [0, 2, 4])).elements() == [1, 3, 5]
    assert ore.largest_denominator_set(z6, ideal(z6, [0, 3])).elements() == [1, 2, 4, 5]
    assert ore.largest_denominator_set(z6, ideal(z6, [0])).elements() == [1, 5]


def test_largest_reports_absence(z4):
    assert ore.largest_denominator_set(z4, ideal(z4, [0, 2])) is None


@pytest.mark.parametrize("side", ["left", "right", "two-sided"])
def test_ass_z6(z6, side):
    assert [I.elements() for I in ore.enumerate_ass(z6, side)] == [[0], [0, 3], [0, 2, 4]]


def test_ass_simple_and_local(m2, z4):
    assert [I.elements() for I in ore.enumerate_ass(m2)] == [[0]]
    assert [I.elements() for I in ore.enumerate_ass(z4)] == [[0]]
    assert ore.is_localization_maximal(z4)


def test_ass_triangular_sides(t2):
    assert [I.elements() for I in ore.enumerate_ass(t2, "left")] == [[0], SPAN_E11_E12]
    assert [I.elements() for I in ore.enumerate_ass(t2, "right")] == [[0], [0, 1, 2, 3]]
    assert [I.elements() for I in ore.enumerate_ass(t2, "two-sided")] == [[0]]


def test_maxden_examples(z6, m2, corpus):
    assert [T.elements() for T in ore.max_denominator_sets(z6)] == [[1, 3, 5], [1, 2, 4, 5]]
    assert ore.localization_radical(z6).elements() == [0]
    assert [T.members for T in ore.max_denominator_sets(m2)] == [m2.units_mask]
    assert ore.localization_radical(m2).elements() == [0]
    assert ore.is_localization_maximal(m2)
    assert not ore.is_localization_maximal(z6)
    for R in corpus.values():
        for side in ("left", "right"):
            assert ore.max_denominator_sets(R, side)
            if [I.members for I in ore.enumerate_ass(R, side)] == [1 << R.zero]:
                assert [T.members for T in ore.max_denominator_sets(R, side)] == [R.units_mask]


def test_every_denominator_set_lies_in_its_largest(corpus):
    for name in ("z12", "t2f2", "z4xz2", "f3c2"):
        R = corpus[name]
        for T in enumerate_mult_sets(R):
            c = ore.classify(R, T, "left")
            if c.status != ore.DENOMINATOR:
                continue
            big = ore.largest_denominator_set(R, c.ass, "left")
            assert big is not None and is_subset(T.members, big.members)


# --- Den0 lattice ---------------------------------------------------------------

def test_den0_examples(z6, corpus):
    L = ore.den0_lattice(z6)
    assert [to_list(m) for m in L.nodes] == [[1], [1, 5]]
    assert len(ore.den0_lattice(corpus["z8"]).nodes) == 5
    for R in corpus.values():
        if R.size > 16:
            continue
        L = ore.den0_lattice(R)
        assert all(L.meet[0][j] == 0 for j in range(len(L.nodes)))
        assert L.nodes[-1] == R.units_mask


def test_den0_budget_refusal(corpus):
    with pytest.raises(ore.BudgetExceeded):
        ore.den0_lattice(corpus["m2f2xz3"])


def test_two_sided_ore_sets_localizable(corpus):
    for name in ("t2f2", "t2f3", "m2f2", "f2c3"):
        R = corpus[name]
        for T in enumerate_mult_sets(R, EnumerationBudget(64)):
            if ore.classify(R, T, "left").is_ore and ore.classify(R, T, "right").is_ore:
                assert ore.p_ideal(R, T, "two-sided").proper


def test_quotient_spec_ring_is_analyzable():
    R = parse_ring("quotient(zmod(12),[6])")
    assert R.size == 6
    assert [I.elements() for I in ore.enumerate_ass(R)] == [[0], [0, 3], [0, 2, 4]]
    assert ideal_generated_by(R, [2]).elements() == [0, 2, 4]
