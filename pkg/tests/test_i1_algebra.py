import random
from fractions import Fraction
from importlib.resources import files
from math import factorial

import pytest
from hypothesis import given

from i1gen import elements, rand_element
from orelab.i1 import (ExprSyntaxError, I1Element, PolyH, act, graded_component, in_F,
                       in_KH_plus_F, monomial, parse, parse_element, star)
from orelab.i1.act import apply_e

P = parse_element
D, I, H, ONE = I1Element.D(), I1Element.I(), I1Element.H(), I1Element.scalar(1)


def e(i, j, c=1):
    return I1Element.e(i, j, c)


# --- parsing and printing -----------------------------------------------------------

@pytest.mark.parametrize("text,expected", [
    ("D*I", "1"), ("I*D", "1 - e(0,0)"), ("H*e(2,2)", "3*e(2,2)"), ("x", "I*H"),
    ("D*H", "(H + 1)*D"), ("-3/4 + 2*D^2", "2*D^2 - 3/4"), ("(H - 1)^2", "H^2 - 2*H + 1"),
    ("I^2*H^3", "I^2*H^3"), ("e(1,0) - 2*e(0,1)", "-2*e(0,1) + e(1,0)"), ("0*D", "0"),
])
def test_normalize_examples(text, expected):
    assert str(P(text)) == expected


def test_golden_normal_forms():
    text = (files("orelab") / "data" / "golden" / "i1_normal_forms.txt").read_text()
    for line in text.splitlines():
        expr, form = line.split("\t")
        assert str(P(expr)) == form, expr


@given(elements())
def test_printed_form_parses_back(a):
    assert P(str(a)) == a


@pytest.mark.parametrize("text,pos", [
    ("D*(H", 4), ("D^-1", 2), ("e(1)", 3), ("H + ", 4), ("2**D", 2), ("D^x", 2), ("y", 0),
    ("e(1,2", 5), ("D^1/2", 2), ("", 0), ("H)", 1),
])
def test_syntax_errors(text, pos):
    with pytest.raises(ExprSyntaxError) as exc:
        parse(text)
    assert exc.value.pos == pos


# --- multiplication --------------------------------------------------------------

def test_matrix_unit_relations():
    for i in range(6):
        for j in range(6):
            for k in range(6):
                for l in range(6):
                    assert e(i, j) * e(k, l) == (e(i, l) if j == k else I1Element.zero())
            assert D ** (i + 1) * e(i, j) == 0
            assert e(i, j) * I ** (j + 1) == 0


def test_defining_relations():
    one_minus = ONE - I * D
    assert D * I - 1 == 0
    assert H * I - I * H - I == 0
    assert H * D - D * H + D == 0
    assert H * one_minus - one_minus == 0
    assert one_minus * H - one_minus == 0


def test_matrix_unit_definition():
    for i in range(5):
        for j in range(5):
            assert I ** i * D ** j - I ** (i + 1) * D ** (j + 1) == e(i, j)


def test_eigenvalues():
    for i in range(6):
        assert H * e(i, i) == e(i, i) * H == e(i, i, i + 1)


def test_star_examples():
    assert star(D) == I and star(I) == D and star(H) == H
    assert star(e(2, 5)) == e(5, 2)
    assert e(0, 1) * e(1, 0) == e(0, 0)
    assert e(0, 1) * e(0, 1) == 0
    assert D ** 2 * e(1, 5) == 0


@given(elements(), elements())
def test_star_is_anti_automorphism(a, b):
    assert star(a * b) == star(b) * star(a)
    assert star(star(a)) == a
    assert in_F(star(a)) == in_F(a)


@given(elements(), elements(), elements())
def test_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(elements(), elements())
def test_grading(a, b):
    ab = a * b
    degs = a.degrees() | b.degrees()
    span = range(min(degs, default=0) * 2 - 1, max(degs, default=0) * 2 + 2)
    for k in span:
        expected = I1Element.zero()
        for i in a.degrees():
            for j in b.degrees():
                if i + j == k:
                    expected = expected + graded_component(a, i) * graded_component(b, j)
        assert graded_component(ab, k) == expected


def test_component_examples():
    assert graded_component(P("I*H + D"), 1) == P("I*H")
    assert in_F(e(3, 7))
    assert in_KH_plus_F(P("H^2 + e(0,0)"))
    assert not in_KH_plus_F(D)


# --- action ------------------------------------------------------------------------

def test_act_examples():
    assert act(D, monomial(3)) == {2: 3}
    assert act(I, monomial(3)) == {4: Fraction(1, 4)}
    assert act(H, monomial(4)) == {4: 5}
    assert act(e(0, 0), {0: 1, 2: 1}) == {0: 1}


def test_matrix_unit_scalar_in_monomial_basis():
    """``e_ij x^k = delta_jk (j!/i!) x^i``, checked against the defining formula."""
    for i in range(6):
        for j in range(6):
            for k in range(8):
                got = apply_e(i, j, monomial(k))
                assert got == ({i: Fraction(factorial(j), factorial(i))} if j == k else {})


def test_divided_power_basis():
    """``column`` is exact: ``a (x^k/k!)`` read back in the same basis, against ``act``."""
    rng = random.Random(3)
    for _ in range(40):
        a = rand_element(rng)
        for k in range(12):
            via_act = act(a, {k: Fraction(1, factorial(k))})
            col = a.column(k)
            assert via_act == {r: c / factorial(r) for r, c in col.items()}


def test_star_is_transpose_in_divided_powers():
    rng = random.Random(11)
    for _ in range(20):
        a = rand_element(rng)
        s = star(a)
        for r in range(20):
            for c in range(20):
                assert a.column(c).get(r, 0) == s.column(r).get(c, 0)


@given(elements(max_grade=2), elements(max_grade=2))
def test_action_faithful_small(a, b):
    for k in range(8):
        p = monomial(k)
        assert act(a * b, p) == act(a, act(b, p))


def test_poly_shift_and_roots():
    p = PolyH([-6, 1, 1])   # (H+3)(H-2)
    assert p.shift(1) == PolyH([-4, 3, 1])
    assert p.nonneg_integer_roots() == [2]
    assert PolyH([0, -1, 1]).nonneg_integer_roots() == [0, 1]
    assert PolyH([5]).nonneg_integer_roots() == []
