import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motzeta import L, ONE, MotiveExpr, SeriesExpr, cover_symbol, factor, open_symbol, preset, from_dual_graph
from motzeta.invariants import volume_poincare, weil_series
from motzeta.series import (
    equality_degree,
    first_difference,
    series_equal_to_degree,
    series_expand,
    series_identical,
    series_limit,
    series_subst_T,
)

from conftest import motives, serieses

E = MotiveExpr.symbol(open_symbol("E1"))
C12 = MotiveExpr.symbol(cover_symbol("E1", "E2"))
Linv = MotiveExpr.lpow(-1)


def test_add_examples():
    s = factor(0, 1, C12)
    assert s + SeriesExpr() == s
    assert factor(1, 2, 3) + factor(1, 2, L) == factor(1, 2, 3 + L)
    assert (factor(1, 2, E) + factor(1, 2, -E)).is_zero()


def test_mul_examples():
    s = factor(2, 3, E)
    assert s * SeriesExpr.constant(1) == s
    assert (factor(0, 1) * factor(0, 1)).terms == {((0, 1), (0, 1)): ONE}
    lhs = factor(-1, 1, (L - 1) * E) * SeriesExpr.constant(Linv)
    assert lhs == factor(-1, 1, Linv * (L - 1) * E)


def test_expand_examples():
    assert series_expand(factor(0, 1), 3) == [0, 1, 1, 1]
    assert series_expand(factor(0, 1) * factor(0, 1), 4) == [0, 0, 1, 2, 3]
    assert series_expand(factor(-1, 2), 4) == [0, 0, Linv, 0, MotiveExpr.lpow(-2)]


def test_expand_cap():
    with pytest.raises(ValueError):
        series_expand(factor(0, 1), 65)
    assert len(series_expand(factor(0, 1), 80, max_degree=None)) == 81


def test_subst_examples():
    nu, N = 5, 6
    assert series_subst_T(factor(-nu, N), 1) == factor(N - nu, N)
    s = factor(3, 2, E)
    assert series_subst_T(s, 0) == s
    assert series_subst_T(factor(0, 1), 2) == factor(2, 1)


def test_limit_examples():
    assert series_limit(factor(4, 7)) == -ONE
    assert series_limit(SeriesExpr.constant(E)) == E
    coeff = Linv * (L - 1) * C12
    assert series_limit(SeriesExpr({((0, 1), (0, 1)): coeff})) == coeff


def test_equal_to_degree_examples():
    s = factor(0, 1)
    assert series_equal_to_degree(s, s, 7)
    assert not series_equal_to_degree(s, s * s, 2)
    assert first_difference(s, s * s, 2) == 1
    node = from_dual_graph(preset("node").config)
    assert series_equal_to_degree(volume_poincare(node), weil_series(node), 10)


def test_different_representations_identified():
    # f(0,1)^2 = f(0,2) * (1 + 2 f(0,1))
    x = factor(0, 1)
    lhs = x * x
    rhs = factor(0, 2) * (SeriesExpr.constant(1) + 2 * x)
    assert lhs != rhs
    assert series_identical(lhs, rhs)
    assert not series_identical(lhs, rhs + factor(0, 5))


def test_text_and_json():
    s = SeriesExpr({((0, 1), (0, 1)): Linv * (L - 1) * C12})
    assert s.render() == "([~E_{1,2}^o] - L^-1*[~E_{1,2}^o]) * (T^1/(1 - T^1))^2"
    assert factor(-1, 2, 3).render() == "3 * (L^-1*T^2/(1 - L^-1*T^2))"
    assert SeriesExpr.from_json(s.to_json()) == s
    assert SeriesExpr().render() == "0"


@settings(max_examples=100, deadline=None)
@given(serieses(), serieses())
def test_expand_is_ring_morphism(s, t):
    D = 20
    es, et = series_expand(s, D), series_expand(t, D)
    assert series_expand(s + t, D) == [a + b for a, b in zip(es, et)]
    conv = [sum((es[i] * et[d - i] for i in range(d + 1)), MotiveExpr.const(0)) for d in range(D + 1)]
    assert series_expand(s * t, D) == conv


@given(serieses(), serieses(), motives())
def test_limit_linear(s, t, x):
    assert series_limit(s + t) == series_limit(s) + series_limit(t)
    assert series_limit(s * x) == x * series_limit(s)


@given(serieses(), st.integers(-3, 3), st.integers(-3, 3))
def test_subst_composes(s, c1, c2):
    assert series_subst_T(series_subst_T(s, c1), c2) == series_subst_T(s, c1 + c2)


@settings(max_examples=50, deadline=None)
@given(serieses(max_terms=2, max_factors=2), st.integers(-2, 2))
def test_subst_scales_coefficients(s, c):
    D = 12
    a, b = series_expand(series_subst_T(s, c), D), series_expand(s, D)
    assert a == [b[d].mul_lpow(c * d) for d in range(D + 1)]


@settings(max_examples=60, deadline=None)
@given(serieses(max_terms=2, max_factors=2), serieses(max_terms=2, max_factors=2))
def test_equality_degree_is_decisive(s, t):
    # agreement up to the bound must coincide with agreement far beyond it
    D = equality_degree(s, t)
    assert series_equal_to_degree(s, t, D) == series_equal_to_degree(s, t, D + 25)
