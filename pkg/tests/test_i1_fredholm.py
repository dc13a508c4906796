import random

import pytest

from i1gen import rand_kh_plus_f, rand_non_finite
from orelab.i1 import (I1Element, PreconditionError, fredholm, kernel_dim_at, m_factor,
                       parse_element, s_membership, star)
from orelab.i1.fredholm import window_matrix
from orelab.linalg import rank

P = parse_element


@pytest.mark.parametrize("text,expected", [
    ("D", (1, 0, 1)), ("I", (0, 1, -1)), ("H", (0, 0, 0)),
    ("e(0,0)", ("infinite", "infinite", "undefined")),
    ("D^3", (3, 0, 3)), ("x", (0, 1, -1)), ("1 - x*D", (1, 1, 0)), ("(H-3)*D", (2, 1, 1)),
    ("H^2 - 4", (1, 1, 0)), ("I*D + e(0,0)", (0, 0, 0)), ("D + e(0,3)", (1, 0, 1)),
    ("0", ("infinite", "infinite", "undefined")),
])
def test_fixtures(text, expected):
    assert fredholm(P(text)).as_tuple() == expected


def test_index_is_minus_top_degree():
    rng = random.Random(5)
    for _ in range(60):
        a = rand_non_finite(rng)
        f = fredholm(a)
        assert f.index == -max(a.graded)
        assert f.kernel_dim - f.cokernel_dim == f.index


def test_window_stability():
    rng = random.Random(8)
    for _ in range(50):
        a = rand_non_finite(rng, max_deg=3)
        f = fredholm(a)
        assert kernel_dim_at(a, f.window) == kernel_dim_at(a, f.window + 10) == f.kernel_dim


def test_kernel_vectors_lift():
    """Solving on the window gives genuine kernel elements of the infinite operator."""
    from orelab.linalg import nullspace
    rng = random.Random(9)
    for _ in range(30):
        a = rand_non_finite(rng)
        f = fredholm(a)
        M = window_matrix(a, f.window + 1)
        for v in nullspace(M, f.window + 1) if M else []:
            image = {}
            for k, c in enumerate(v):
                for r, x in a.column(k).items():
                    image[r] = image.get(r, 0) + c * x
            assert all(x == 0 for x in image.values())


def test_cokernel_of_star_is_kernel_of_transpose():
    """Cokernel is not the kernel of star(a) in general; 1 - x D shows the gap is real."""
    a = P("1 - x*D")
    assert fredholm(a).cokernel_dim == 1
    assert fredholm(star(a)).kernel_dim == 1
    b = P("D")
    assert fredholm(b).cokernel_dim == 0 and fredholm(star(b)).kernel_dim == 0


@pytest.mark.parametrize("text,which,expected", [
    ("H", "S_0", True), ("1 + e(0,1)", "S_0", True), ("D", "S_0", False), ("D", "S_r0", False),
    ("D", "S_l0", False), ("H - 1", "S_0", False), ("H - 1 + e(0,0)", "S_0", True),
    ("I*D + e(0,0)", "S_0", True), ("1 + e(0,0)", "S_0", True), ("1 - e(0,0)", "S_0", False),
])
def test_membership_examples(text, which, expected):
    assert s_membership(P(text), which) is expected


def test_membership_rejects_unknown_set():
    with pytest.raises(ValueError):
        s_membership(P("H"), "S_x")


def test_factor_examples():
    assert m_factor(P("H")) == (P("H"), I1Element.scalar(1))
    v, w = m_factor(P("(H-2) + e(1,1)"))
    assert (v, w) == (P("H - 2 + e(1,1)"), I1Element.scalar(1))
    assert fredholm(v).as_tuple() == (0, 0, 0)
    v, w = m_factor(P("H*(1 + e(0,2))"))
    assert (v, w) == (P("H"), P("1 + e(0,2)"))


def test_factor_precondition():
    with pytest.raises(PreconditionError):
        m_factor(P("D"))
    with pytest.raises(PreconditionError):
        m_factor(P("H - 1"))


def test_factor_random():
    rng = random.Random(21)
    done = 0
    while done < 40:
        u = rand_kh_plus_f(rng)
        if not s_membership(u, "S_0"):
            continue
        v, w = m_factor(u)
        assert v * w == u
        assert set(v.graded) <= {0} and all(i == j for i, j in v.lam)
        assert (w - 1).in_F()
        assert fredholm(w).as_tuple() == (0, 0, 0)
        done += 1


def test_window_matrix_rank_small():
    M = window_matrix(P("D"), 3)
    assert M == [[0, 1, 0], [0, 0, 1]] and rank(M) == 2
