import json

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from univalence.errors import DomainError, ZeroConstantTerm
from univalence.series import (
    NormalizedFunction,
    TruncatedSeries,
    add,
    derivative,
    evaluate,
    from_literal,
    mul,
    reciprocal,
    scale_argument,
    to_literal,
)


def S(*c, order=None):
    return TruncatedSeries(c, order=order)


def koebe(order=64):
    n = np.arange(order + 1)
    return NormalizedFunction(TruncatedSeries(np.where(n > 0, (-1.0) ** (n - 1) * n, 0)))


complexes = st.builds(complex, st.floats(-1, 1), st.floats(-1, 1))


def series_strategy(max_order=64, const_min=0.0):
    @st.composite
    def build(draw):
        n = draw(st.integers(0, max_order))
        c = draw(st.lists(complexes, min_size=n + 1, max_size=n + 1))
        if abs(c[0]) < const_min:
            c[0] = complex(const_min, 0) if c[0] == 0 else c[0] * const_min / abs(c[0])
        return TruncatedSeries(c)
    return build()


class TestExamples:
    def test_add(self):
        assert add(S(1, 1, order=4), S(1, -1, order=4)).allclose(S(2, order=4), 0)
        s = S(1, 2, 3)
        assert add(s, TruncatedSeries.zero(2)).allclose(s, 0)
        assert add(S(1, 2, 1), S(-1, -2, -1)).allclose(TruncatedSeries.zero(2), 0)

    def test_add_takes_min_order(self):
        assert add(S(1, 1, 1, 1), S(1, 1)).order == 1

    def test_mul(self):
        assert mul(S(1, 1, order=5), S(1, 1, order=5)).allclose(S(1, 2, 1, order=5), 0)
        alt = TruncatedSeries((-1.0) ** np.arange(11))
        assert mul(S(1, 1, order=10), alt).allclose(S(1, order=10), 0)
        assert mul(S(1, 2, 1), S(1, order=2)).allclose(S(1, 2, 1), 0)

    def test_reciprocal_geometric(self):
        r = reciprocal(S(1, 1, order=8))
        assert r.allclose(TruncatedSeries((-1.0) ** np.arange(9)), 0)

    def test_reciprocal_koebe(self):
        # independent route: sympy expansion of (1+z)^2
        z = sp.symbols("z")
        k_over_z = [complex(koebe(16).series[n + 1]) for n in range(16)]
        expected = sp.Poly(sp.series(1 / sp.Add(*[c.real * z**n for n, c in enumerate(k_over_z)]),
                                     z, 0, 16).removeO(), z).all_coeffs()[::-1]
        r = reciprocal(TruncatedSeries(k_over_z))
        assert np.allclose(r.coeffs[:3], [1, 2, 1])
        assert np.allclose(r.coeffs[:len(expected)], np.array(expected, dtype=float), atol=1e-12)
        assert np.max(np.abs(r.coeffs[3:])) < 1e-12

    def test_reciprocal_constant(self):
        assert reciprocal(S(2)).allclose(S(0.5), 0)

    def test_reciprocal_zero_constant(self):
        with pytest.raises(ZeroConstantTerm):
            reciprocal(S(0, 1))

    def test_derivative(self):
        assert derivative(S(0, 1, 1)).allclose(S(1, 2), 0)
        d = derivative(S(1))
        assert d.order == 0 and d[0] == 0
        assert derivative(S(0, 1, 0.5)).allclose(S(1, 1), 0)

    def test_derivative_reduces_order(self):
        assert derivative(S(1, 2, 3, 4)).order == 2

    def test_eval(self):
        assert evaluate(S(1, 2, 1), 0) == 1
        assert evaluate(S(0, 1, 1), -0.5) == pytest.approx(-0.25)
        assert evaluate(S(0, 1, 0.5), 0.5) == pytest.approx(0.625)

    def test_eval_vectorized(self):
        z = np.array([0, 0.5, -0.5j])
        assert np.allclose(evaluate(S(1, 2, 1), z), (1 + z) ** 2)

    def test_scale_normalized(self):
        f = NormalizedFunction.from_coeffs([0, 1, 1])
        assert np.allclose(scale_argument(f, 0.5).coeffs, [0, 1, 0.5])
        f3 = NormalizedFunction.from_coeffs([0, 1, 1, 1])
        assert np.allclose(scale_argument(f3, 0.5).coeffs, [0, 1, 0.5, 0.25])
        assert np.array_equal(scale_argument(f3, 1.0).coeffs, f3.coeffs)

    def test_scale_raw(self):
        assert np.allclose(scale_argument(S(1, 1, 1), 0.5).coeffs, [1, 0.5, 0.25])

    @pytest.mark.parametrize("r", [0.0, -0.1, 1.5])
    def test_scale_domain(self, r):
        with pytest.raises(DomainError):
            scale_argument(S(1, 1), r)


class TestNormalized:
    def test_a2(self):
        assert NormalizedFunction.from_coeffs([0, 1, 0.5]).a2 == 0.5
        assert NormalizedFunction.from_coeffs([0, 1]).a2 == 0

    @pytest.mark.parametrize("c", [[1, 1, 0], [0, 0.9, 1], [0]])
    def test_rejects_unnormalized(self, c):
        with pytest.raises(ValueError):
            NormalizedFunction.from_coeffs(c)

    def test_immutable(self):
        s = S(1, 2)
        with pytest.raises(ValueError):
            s.coeffs[0] = 5


class TestLiteral:
    def test_round_trip(self):
        s = S(0, 1, 0.5 + 0.25j)
        assert to_literal(s) == [[0, 0], [1, 0], [0.5, 0.25]]
        assert from_literal(json.dumps(to_literal(s))).allclose(s, 0)

    def test_order_pads(self):
        s = from_literal("[[0,0],[1,0],[0.5,0]]", order=5)
        assert s.order == 5 and s[2] == 0.5 and s[5] == 0

    @pytest.mark.parametrize("bad", ["[]", "{}", "[[1]]", "[[1, 2, 3]]", '[["a", 0]]', "not json"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            from_literal(bad)


@st.composite
def invertible_series(draw):
    """|a0| in [0.1, 1] with sum_{n>=1} |a_n| <= |a0|/2, so the reciprocal stays O(1/|a0|)."""
    n = draw(st.integers(0, 64))
    a0 = draw(st.floats(0.1, 1)) * np.exp(1j * draw(st.floats(0, 2 * np.pi)))
    tail = np.array(draw(st.lists(complexes, min_size=n, max_size=n)), dtype=complex)
    mass = np.sum(np.abs(tail))
    if mass > 0:
        tail *= draw(st.floats(0, 0.5)) * abs(a0) / mass
    return TruncatedSeries(np.concatenate([[a0], tail]))


@settings(max_examples=200, deadline=None)
@given(invertible_series())
def test_reciprocal_round_trip(a):
    assert mul(a, reciprocal(a)).allclose(S(1, order=a.order), 1e-12)


@settings(max_examples=100, deadline=None)
@given(st.lists(complexes, min_size=65, max_size=65), st.lists(complexes, min_size=65, max_size=65),
       st.floats(0, 0.5), st.floats(0, 2 * np.pi))
def test_eval_is_multiplicative(a, b, r, t):
    a, b = TruncatedSeries(a), TruncatedSeries(b)
    z = r * np.exp(1j * t)
    assert abs(evaluate(mul(a, b), z) - evaluate(a, z) * evaluate(b, z)) < 1e-9


@settings(max_examples=100, deadline=None)
@given(series_strategy(), series_strategy())
def test_derivative_is_linear(a, b):
    n = min(a.order, b.order)
    a, b = a.truncate(n), b.truncate(n)
    lhs = derivative(add(a, b))
    rhs = add(derivative(a), derivative(b))
    # n*(a+b) and n*a + n*b round differently; the gap is a few ulps of the operands
    scale = np.abs(derivative(a).coeffs) + np.abs(derivative(b).coeffs)
    assert np.all(np.abs(lhs.coeffs - rhs.coeffs) <= 4 * np.finfo(float).eps * scale)


dyadic = st.integers(-2**20, 2**20).map(lambda k: k / 2**10)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 64).flatmap(lambda n: st.tuples(
    st.lists(dyadic, min_size=n + 1, max_size=n + 1), st.lists(dyadic, min_size=n + 1, max_size=n + 1))))
def test_derivative_is_linear_exactly_on_dyadics(pair):
    a, b = TruncatedSeries(pair[0]), TruncatedSeries(pair[1])
    lhs = derivative(add(a, b))
    rhs = add(derivative(a), derivative(b))
    assert np.array_equal(lhs.coeffs, rhs.coeffs)


@settings(max_examples=100, deadline=None)
@given(series_strategy(), st.floats(0.01, 1), st.floats(0.01, 1))
def test_scale_composes(a, r1, r2):
    two_step = scale_argument(scale_argument(a, r1), r2)
    assert two_step.allclose(scale_argument(a, r1 * r2), 1e-14)


@settings(max_examples=100, deadline=None)
@given(st.lists(complexes, min_size=1, max_size=30), st.floats(0.01, 1), st.floats(0.01, 1))
def test_scale_composes_normalized(tail, r1, r2):
    f = NormalizedFunction.from_tail(tail)
    two_step = scale_argument(scale_argument(f, r1), r2)
    assert two_step.series.allclose(scale_argument(f, r1 * r2).series, 1e-14)
