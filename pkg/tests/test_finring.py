import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from orelab.bitset import mask_of, to_list
from orelab.finring import (RingError, all_ideals, central_idempotent_decomposition,
                            check_axioms, ideal_generated_by, is_ideal, is_semiprime,
                            quotient_ring, regular_elements, table_ring, zmod)
from orelab.ringspec import parse_ring

E11, E12, E22 = 4, 2, 1


def test_zmod6_basics(z6):
    assert (z6.size, z6.one, z6.zero) == (6, 1, 0)
    assert z6.M[4][5] == 2 and z6.A[4][5] == 3


def test_matrix_and_triangular_sizes(m2, t2):
    assert m2.size == 16
    assert t2.size == 8
    assert t2.one == E11 | E22
    # e11 e12 = e12, e12 e22 = e12, e12 e11 = 0
    assert t2.M[E11][E12] == E12 and t2.M[E12][E22] == E12 and t2.M[E12][E11] == 0


def test_zmod_rejects_small_modulus():
    with pytest.raises(ValueError):
        zmod(1)


def test_table_failure_names_axiom():
    add = [[0, 1], [1, 0]]
    mul = [[0, 0], [0, 0]]
    with pytest.raises(RingError) as exc:
        table_ring(add, mul, one=1)
    assert exc.value.axiom == "multiplicative identity"
    assert exc.value.witness


def test_nonassociative_table_rejected():
    # Z/3 addition with a commutative but non-associative product
    add = np.array([[(i + j) % 3 for j in range(3)] for i in range(3)])
    mul = np.array([[(i * j) % 3 for j in range(3)] for i in range(3)])
    mul[2, 2] = 2
    with pytest.raises(RingError):
        check_axioms(add, mul, 0, 1)


def test_corpus_axioms_exhaustive(corpus):
    for R in corpus.values():
        check_axioms(R.add, R.mul, R.zero, R.one)


@pytest.mark.parametrize("spec,expected", [("zmod(6)", [1, 5]), ("zmod(4)", [1, 3])])
def test_regular_elements_examples(spec, expected):
    assert to_list(regular_elements(parse_ring(spec), "both")) == expected


def test_regular_sides_triangular(t2):
    M = t2.M
    left = [r for r in range(8) if all(M[r][x] != 0 for x in range(1, 8))]
    right = [r for r in range(8) if all(M[x][r] != 0 for x in range(1, 8))]
    assert to_list(regular_elements(t2, "left")) == left
    assert to_list(regular_elements(t2, "right")) == right
    assert regular_elements(t2, "both") == t2.units_mask


def test_regular_equals_units_on_corpus(corpus):
    for R in corpus.values():
        assert regular_elements(R, "both") == R.units_mask, R.label


def test_units_solve_both_equations(corpus):
    for R in corpus.values():
        for u in to_list(R.units_mask):
            assert any(R.M[u][x] == R.one and R.M[x][u] == R.one for x in range(R.size))


def test_ideal_generated_examples(z6, t2, corpus):
    assert to_list(ideal_generated_by(z6, [2]).members) == [0, 2, 4]
    for R in corpus.values():
        for kind in ("left", "right", "two-sided"):
            assert ideal_generated_by(R, [], kind).members == 1 << R.zero
    assert to_list(ideal_generated_by(t2, [E11]).members) == sorted([0, E11, E12, E11 | E12])


def test_ideal_generated_is_least(t2):
    """Cross-check against a scan of every two-sided ideal."""
    for x in range(t2.size):
        got = ideal_generated_by(t2, [x]).members
        supersets = [I.members for I in all_ideals(t2) if I.members >> x & 1]
        assert got in supersets
        assert all(got & S == got for S in supersets)


def test_all_ideals_are_ideals(corpus):
    for R in corpus.values():
        if R.size > 16:
            continue
        for kind in ("left", "right", "two-sided"):
            for I in all_ideals(R, kind):
                assert is_ideal(R, I.members, kind)


def test_quotient_examples(z6, t2):
    Q, pi = quotient_ring(z6, ideal_generated_by(z6, [2]))
    assert Q.size == 2 and pi.check() is None
    Q0, pi0 = quotient_ring(z6, ideal_generated_by(z6, []))
    assert Q0 is z6 and pi0.map == tuple(range(6))
    Qt, _ = quotient_ring(t2, ideal_generated_by(t2, [E11, E12]))
    assert Qt.size == 2


def test_quotient_rejects_improper(z6):
    with pytest.raises(ValueError):
        quotient_ring(z6, ideal_generated_by(z6, [1]))


def test_quotient_round_trip(corpus):
    for R in corpus.values():
        if R.size > 16:
            continue
        for I in all_ideals(R):
            if I.members >> R.one & 1:
                continue
            Q, pi = quotient_ring(R, I)
            assert pi.kernel() == I.members
            assert pi.check() is None
            assert len(set(pi.map)) == Q.size == R.size // len(I)
            # canonical representative is the least id of each coset
            for x in range(R.size):
                coset = [y for y in range(R.size) if pi(y) == pi(x)]
                assert min(coset) == min(y for y in range(R.size) if pi(y) == pi(min(coset)))


def test_semiprime_examples(z6, z4, m2):
    assert is_semiprime(z6) == (True, None)
    ok, witness = is_semiprime(z4)
    assert not ok and witness.elements() == [0, 2]
    assert is_semiprime(m2)[0]


def test_central_idempotents_examples(z6, z4):
    dec = central_idempotent_decomposition(z6)
    assert [e for e, _, _ in dec] == [3, 4]
    assert sorted(F.size for _, F, _ in dec) == [2, 3]
    assert [e for e, _, _ in central_idempotent_decomposition(z4)] == [1]
    prod = parse_ring("product(zmod(2), zmod(3))")
    assert sorted(F.size for _, F, _ in central_idempotent_decomposition(prod)) == [2, 3]


def test_central_idempotents_invariants(corpus):
    for R in corpus.values():
        dec = central_idempotent_decomposition(R)
        es = [e for e, _, _ in dec]
        total = R.zero
        for e in es:
            total = R.A[total][e]
            assert all(R.M[e][x] == R.M[x][e] for x in range(R.size))
        assert total == R.one
        for e in es:
            for f in es:
                assert R.M[e][f] == (e if e == f else R.zero)
        assert math.prod(F.size for _, F, _ in dec) == R.size
        for _, F, p in dec:
            assert p.check() is None
        joint = {tuple(p(x) for _, _, p in dec) for x in range(R.size)}
        assert len(joint) == R.size


@given(st.integers(2, 40))
def test_zmod_units_are_coprime_residues(n):
    R = zmod(n)
    assert R.units_mask == mask_of(k for k in range(n) if math.gcd(k, n) == 1)


@given(st.integers(2, 24), st.data())
def test_zmod_ideals_are_divisor_ideals(n, data):
    R = zmod(n)
    x = data.draw(st.integers(0, n - 1))
    d = math.gcd(x, n)
    assert to_list(ideal_generated_by(R, [x]).members) == list(range(0, n, d))
