import sympy
from sympy.matrices.normalforms import smith_normal_form
from hypothesis import given, settings, strategies as st

from fuchsian_poincare import intmatrix


@st.composite
def square(draw, max_n=6, bound=4):
    n = draw(st.integers(0, max_n))
    return tuple(tuple(draw(st.integers(-bound, bound)) for _ in range(n)) for _ in range(n))


@st.composite
def rect(draw, max_n=5, bound=6):
    m = draw(st.integers(1, max_n))
    n = draw(st.integers(1, max_n))
    return tuple(tuple(draw(st.integers(-bound, bound)) for _ in range(n)) for _ in range(m))


@given(square())
def test_det_matches_sympy(a):
    expected = sympy.Matrix(a).det() if a else 1
    assert intmatrix.det(a) == expected


@settings(max_examples=80)
@given(square())
def test_faddeev_leverrier(a):
    c, adj = intmatrix.faddeev_leverrier(a)
    n = len(a)
    if n == 0:
        assert c == [1]
        return
    t = sympy.Symbol("t")
    expected = sympy.Poly(sympy.Matrix(a).charpoly(t).as_expr(), t).all_coeffs()[::-1]
    assert c == [int(x) for x in expected]
    assert sympy.Matrix(adj) == sympy.Matrix(a).adjugate()


def test_charpoly_small():
    c, adj = intmatrix.faddeev_leverrier(((0, 1), (1, 0)))
    assert c == [-1, 0, 1]
    assert adj == ((0, -1), (-1, 0))


@settings(max_examples=80)
@given(rect())
def test_smith_invariants_match_sympy(a):
    snf = smith_normal_form(sympy.Matrix(a), domain=sympy.ZZ)
    expected = [abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0]
    got = intmatrix.smith_invariants(a)
    assert got == expected
    assert all(y % x == 0 for x, y in zip(got, got[1:]))


@settings(max_examples=80)
@given(rect())
def test_integer_kernel(a):
    ker = intmatrix.integer_kernel(a)
    n = len(a[0])
    assert len(ker) == n - sympy.Matrix(a).rank()
    for v in ker:
        assert all(x == 0 for x in intmatrix.matvec(a, v))
    if ker:
        assert intmatrix.smith_invariants(ker) == [1] * len(ker)
