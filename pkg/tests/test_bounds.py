from fractions import Fraction
from math import exp, factorial, log

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from greenbound.bounds import (
    BoundParams,
    BoundTerm,
    binom_conv,
    bound_tail_integral,
    evaluate_terms,
    expm_bound,
    green_bound,
    green_bound_terms,
    lemma_derivative_bound,
    upper_incomplete_gamma_int,
)
from greenbound.errors import InvalidInput
from greenbound.jets import tilde_exp


def test_binom_conv_examples():
    assert binom_conv(4, 2) == 6
    assert binom_conv(-1, -1) == 1
    assert binom_conv(2, -1) == 0


def test_derivative_bound_examples():
    assert lemma_derivative_bound(0, 2.0, 0, 1.0, 5.0) == pytest.approx(exp(-2))
    assert lemma_derivative_bound(1, 2.0, 0, 1.0, 5.0) == pytest.approx(2 * exp(-2))
    assert lemma_derivative_bound(1, 1.0, 1, 1.0, 1.0) == pytest.approx(0.75 * exp(-1))
    with pytest.raises(InvalidInput):
        lemma_derivative_bound(1, 0.0, 1, 1.0, 1.0)


def test_green_bound_examples():
    for t in (0.1, 1.0, 4.0):
        p = BoundParams(t, 1.0, 0, 1, 1.0, float("inf"))
        assert green_bound(p) == pytest.approx(exp(-t), rel=1e-15)
        p = BoundParams(t, 2.0, 1, 1, 1.0, 2.0)
        assert green_bound(p) == pytest.approx(4 / 3 * exp(-t), rel=1e-14)
    with pytest.raises(InvalidInput):
        green_bound(BoundParams(0.0, 1.0, 1, 1, 1.0, 1.0))


def test_green_bound_empty_halves():
    assert green_bound(BoundParams(1.0, 1.0, 2, 0, float("inf"), 1.0)) == 0
    assert green_bound(BoundParams(-1.0, 1.0, 0, 2, 1.0, float("inf"))) == 0


def test_k3_m3_expansion():
    t, normA, gm, gp = 0.7, 1.3, 0.4, 0.9
    B, g = 2 * normA, gm + gp
    hand = exp(-gm * t) * (
        B**3 / g**3 + t * B**4 / g**3 + 3 * B**4 / g**4
        + t**2 / 2 * B**5 / g**3 + 3 * t * B**5 / g**4 + 6 * B**5 / g**5
    )
    assert green_bound(BoundParams(t, normA, 3, 3, gm, gp)) == pytest.approx(hand, rel=1e-14)


def test_terms_examples():
    assert green_bound_terms(0, 1) == [BoundTerm(Fraction(1), 0, 0, 0, 0)]
    assert green_bound_terms(1, 1) == [BoundTerm(Fraction(1), 0, 1, 1, 1)]
    assert len(green_bound_terms(3, 3)) == 6
    # t < 0 swaps the roles of k and m
    assert green_bound_terms(2, 5, -1) == green_bound_terms(5, 2, +1)


@settings(max_examples=60, deadline=None)
@given(
    st.integers(0, 5), st.integers(0, 5), st.floats(0.01, 20), st.floats(0, 5),
    st.floats(0.01, 3), st.floats(0.01, 3), st.sampled_from([1, -1]),
)
def test_terms_match_sum(k, m, t, normA, gm, gp, sign):
    if k + m == 0:
        return
    p = BoundParams(sign * t, normA, k, m, gm, gp)
    want = green_bound(p)
    got = evaluate_terms(green_bound_terms(k, m, sign), p)
    assert got == pytest.approx(want, rel=1e-12, abs=1e-300)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 5), st.integers(1, 5), st.floats(0.01, 20), st.floats(0, 5), st.floats(0.01, 3), st.floats(0.01, 3))
def test_bound_is_the_derivative_chain(k, m, t, normA, gm, gp):
    # ||G(t)|| <= B^k * sum_{j<m} B^j / j! * (bound on the j-th derivative)
    B = 2 * normA
    chain = B**k * sum(B**j / factorial(j) * lemma_derivative_bound(j, t, k, gm, gp) for j in range(m))
    assert green_bound(BoundParams(t, normA, k, m, gm, gp)) == pytest.approx(chain, rel=1e-12, abs=1e-300)


def test_mirror_for_negative_t():
    p = BoundParams(-1.7, 1.1, 2, 3, 0.3, 0.8)
    q = BoundParams(1.7, 1.1, 3, 2, 0.8, 0.3)
    assert green_bound(p) == pytest.approx(green_bound(q), rel=1e-15)


def test_log_domain_matches_high_precision():
    mpmath.mp.dps = 50
    k, m, normA, gm, gp = 2, 3, 4.0, 0.5, 0.7
    for t in (74.0, 76.0, 150.0):  # threshold t * normA = 300 sits in between
        B, g = mpmath.mpf(2 * normA), mpmath.mpf(gm + gp)
        total = mpmath.mpf(0)
        for j in range(m):
            for i in range(j + 1):
                total += (mpmath.mpf(t) ** (j - i) / mpmath.factorial(j - i)
                          * mpmath.binomial(k + i - 1, k - 1) * B ** (k + j) / g ** (k + i))
        ref = float(mpmath.exp(-gm * t) * total)
        assert green_bound(BoundParams(t, normA, k, m, gm, gp)) == pytest.approx(ref, rel=1e-12)


def test_expm_bound_examples():
    assert expm_bound(3.0, 1.0, 1, 1.0) == pytest.approx(exp(-3))
    assert expm_bound(1.0, 1.0, 2, 1.0) == pytest.approx(3 * exp(-1))
    assert expm_bound(0.5, 1.2, 30, 0.7) == pytest.approx(exp((2 * 1.2 - 0.7) * 0.5), rel=1e-12)
    with pytest.raises(InvalidInput):
        expm_bound(-1.0, 1.0, 2, 1.0)


@pytest.mark.parametrize("N", [1, 2, 4, 6])
def test_expm_bound_is_k0_specialization(N):
    for t in (0.3, 2.0):
        p = BoundParams(t, 1.7, 0, N, 0.4, float("inf"))
        assert green_bound(p) == pytest.approx(expm_bound(t, 1.7, N, 0.4), rel=1e-13)


def test_incomplete_gamma():
    assert upper_incomplete_gamma_int(0, 0.0) == 1
    assert upper_incomplete_gamma_int(3, 0.0) == pytest.approx(6)
    x = 2.3
    assert upper_incomplete_gamma_int(4, x) == pytest.approx(float(mpmath.gammainc(5, x)), rel=1e-14)


def test_tail_examples():
    p = BoundParams(1.0, 1.0, 0, 1, 1.0, float("inf"))
    assert bound_tail_integral(p, 0.0) == pytest.approx(1)
    assert bound_tail_integral(p, log(2)) == pytest.approx(0.5)
    # the t e^{-t} summand: k=0, m=2, normA=1/2 gives e^{-t}(1 + t)
    p2 = BoundParams(1.0, 0.5, 0, 2, 1.0, float("inf"))
    assert bound_tail_integral(p2, 0.0) == pytest.approx(2)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.floats(0.3, 3), st.floats(0.3, 2), st.floats(0.3, 2), st.floats(0, 5))
def test_tail_against_quadrature(k, m, normA, gm, gp, W):
    if k + m == 0:
        return
    p = BoundParams(1.0, normA, k, m, gm, gp)
    right = quad(lambda t: green_bound(BoundParams(t, normA, k, m, gm, gp)), W, W + 50, epsabs=0, epsrel=1e-12, limit=200)[0] if m else 0.0
    left = quad(lambda t: green_bound(BoundParams(-t, normA, k, m, gm, gp)), W, W + 50, epsabs=0, epsrel=1e-12, limit=200)[0] if k else 0.0
    numeric = right + left
    tail = bound_tail_integral(p, W)
    assert tail >= numeric * (1 - 1e-10)
    if green_bound(BoundParams(W + 50, normA, k, m, gm, gp)) * 50 < 1e-9 * numeric and (
        not k or green_bound(BoundParams(-W - 50, normA, k, m, gm, gp)) * 50 < 1e-9 * numeric
    ):
        assert tail == pytest.approx(numeric, rel=1e-6)


def test_decay_property():
    eps = 0.5
    p = dict(normA=3.0, k=3, m=3, gamma_minus=1.0, gamma_plus=0.5)
    scaled = lambda t: exp((p["gamma_minus"] - eps) * t) * green_bound(BoundParams(t, **p))
    ts = np.linspace(1, 200 / eps, 400)
    vals = np.array([scaled(t) for t in ts])
    start = int(np.argmax(vals))
    assert np.all(np.diff(vals[start:]) <= 0)
    assert scaled(200 / eps) < 1e-6


@settings(max_examples=30, deadline=None)
@given(
    st.integers(0, 2**32 - 1), st.integers(0, 3), st.integers(0, 4),
    st.sampled_from([0.1, 1.0, 5.0]),
)
def test_derivative_bound_dominance(seed, k, l, t):
    r = np.random.default_rng(seed)
    gm, gp = r.uniform(0.05, 1.5), r.uniform(0.05, 1.5)
    mu = gp + r.uniform(0, 3, k) + 1j * r.uniform(-3, 3, k)
    mu[:1] = gp + 1j * mu[:1].imag  # attains the gap
    f = tilde_exp(t, mu)
    bound = lemma_derivative_bound(l, t, k, gm, gp)
    for _ in range(10):
        z = -gm - r.uniform(0, 3) + 1j * r.uniform(-4, 4)
        assert abs(f.jet(z, l).derivative(l)) <= bound * (1 + 1e-10)
