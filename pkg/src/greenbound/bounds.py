"""Closed-form estimates for Green's function and the matrix exponential.

For ``t > 0``, with ``B = 2||A||`` and ``gamma = gamma_minus + gamma_plus``::

    ||G(t)|| <= exp(-gamma_minus t) * sum_{j<m} sum_{i<=j}
                t^{j-i}/(j-i)! * C(k+i-1, k-1) * B^{k+j} / gamma^{k+i}

and symmetrically for ``t < 0`` with ``k <-> m``, ``gamma_minus <-> gamma_plus``
and ``t -> |t|``.  ``C(-1, -1) = 1`` and ``C(i-1, -1) = 0`` for ``i >= 1``, which
makes ``k = 0`` (a Hurwitz matrix) the classical bound on ``||exp(At)||``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, exp, factorial, isfinite, lgamma, log

from .errors import InvalidInput
from .linalg import op_norm

__all__ = [
    "BoundParams",
    "BoundTerm",
    "binom_conv",
    "lemma_derivative_bound",
    "green_bound",
    "green_bound_terms",
    "evaluate_terms",
    "expm_bound",
    "bound_tail_integral",
    "upper_incomplete_gamma_int",
    "params_for",
]

_LOG_DOMAIN_THRESHOLD = 300.0


@dataclass(frozen=True)
class BoundParams:
    t: float
    normA: float
    k: int
    m: int
    gamma_minus: float
    gamma_plus: float

    def __post_init__(self):
        if self.k < 0 or self.m < 0 or self.k + self.m < 1:
            raise InvalidInput("need k, m >= 0 and k + m >= 1")
        if self.normA < 0:
            raise InvalidInput("normA must be nonnegative")
        if not (self.gamma_minus > 0 and self.gamma_plus > 0):
            raise InvalidInput("gamma constants must be positive")

    @property
    def gamma(self):
        return self.gamma_minus + self.gamma_plus


@dataclass(frozen=True)
class BoundTerm:
    """``coef * 2^pow_two * |t|^pow_t * ||A||^pow_normA / gamma^pow_inv_gamma``."""

    coef: Fraction
    pow_t: int
    pow_normA: int
    pow_inv_gamma: int
    pow_two: int

    def value(self, t, normA, gamma):
        return (
            float(self.coef)
            * 2.0**self.pow_two
            * abs(t) ** self.pow_t
            * normA**self.pow_normA
            / gamma**self.pow_inv_gamma
        )


def params_for(A, d, t):
    """BoundParams for matrix ``A`` with dichotomy data ``d`` (tight constants)."""
    return BoundParams(float(t), op_norm(A), d.k, d.m, d.gamma_minus, d.gamma_plus)


def binom_conv(a, b):
    """``C(a, b)`` extended by ``C(-1, -1) = 1`` and ``C(a, -1) = 0`` for ``a >= 0``."""
    if b == -1:
        return 1 if a == -1 else 0
    if b < -1 or a < 0:
        raise InvalidInput(f"binom_conv({a}, {b}) outside the bound formulas' range")
    return comb(a, b)


def lemma_derivative_bound(l, t, k, gamma_minus, gamma_plus):
    """Upper bound for ``|d^l/dz^l  e^{zt} / prod_{j<=k}(z - mu_j)|`` when ``Re z <= -gamma_minus``."""
    if not t > 0:
        raise InvalidInput("t must be positive")
    gamma = gamma_minus + gamma_plus
    total = 0.0
    for i in range(l + 1):
        c = binom_conv(k + i - 1, k - 1)
        if c == 0:
            continue
        # (k+i-1)!/(k-1)! = C(k+i-1, k-1) i!
        total += t ** (l - i) * comb(l, i) * c * factorial(i) / gamma ** (k + i)
    return exp(-gamma_minus * t) * total


def _side(p):
    """(|t|, decay rate, prefix count, sum count, gamma) for the sign of ``p.t``."""
    if p.t > 0:
        return p.t, p.gamma_minus, p.k, p.m
    if p.t < 0:
        return -p.t, p.gamma_plus, p.m, p.k
    raise InvalidInput("t = 0 is excluded")


def _double_sum(a, b):
    """Yield ``(j, i, C(a+i-1, a-1))`` with nonzero binomial, ``j < b``, ``i <= j``."""
    for j in range(b):
        for i in range(j + 1):
            c = binom_conv(a + i - 1, a - 1)
            if c:
                yield j, i, c


def _nlog(x, n):
    return n * log(x) if n else 0.0


def green_bound(p):
    s, decay, a, b = _side(p)
    B = 2.0 * p.normA
    gamma = p.gamma
    if s * p.normA <= _LOG_DOMAIN_THRESHOLD:
        total = 0.0
        for j, i, c in _double_sum(a, b):
            total += s ** (j - i) / factorial(j - i) * c * B ** (a + j) / gamma ** (a + i)
        return exp(-decay * s) * total
    logs = [
        _nlog(s, j - i) - lgamma(j - i + 1) + log(c) + _nlog(B, a + j) - _nlog(gamma, a + i)
        for j, i, c in _double_sum(a, b)
    ]
    if not logs:
        return 0.0
    top = max(logs)
    return float(exp(top - decay * s) * sum(exp(v - top) for v in logs)) if isfinite(top) else 0.0


def green_bound_terms(k, m, sign_of_t=1):
    """Symbolic summands of :func:`green_bound` (without the exponential factor)."""
    if sign_of_t > 0:
        a, b = k, m
    elif sign_of_t < 0:
        a, b = m, k
    else:
        raise InvalidInput("sign_of_t must be +1 or -1")
    return [
        BoundTerm(Fraction(c, factorial(j - i)), j - i, a + j, a + i, a + j)
        for j, i, c in _double_sum(a, b)
    ]


def evaluate_terms(terms, p):
    """Numeric value of a term list, including the exponential factor."""
    s, decay, _, _ = _side(p)
    return exp(-decay * s) * sum(term.value(s, p.normA, p.gamma) for term in terms)


def expm_bound(t, normA, N, gamma_minus):
    """``exp(-gamma_minus t) * sum_{j<N} (2 t ||A||)^j / j!``."""
    if not t > 0:
        raise InvalidInput("t must be positive")
    x = 2.0 * t * normA
    return exp(-gamma_minus * t) * sum(x**j / factorial(j) for j in range(N))


def upper_incomplete_gamma_int(q, x):
    """``Gamma(q + 1, x) = int_x^inf s^q e^{-s} ds`` for integer ``q >= 0``."""
    e = exp(-x)
    g = e
    for r in range(1, q + 1):
        g = r * g + x**r * e
    return g


def _tail(s0, decay, a, b, B, gamma):
    total = 0.0
    x = decay * s0
    for j, i, c in _double_sum(a, b):
        q = j - i
        # int_{s0}^inf e^{-decay s} s^q ds = Gamma(q+1, decay s0) / decay^{q+1}
        integral = upper_incomplete_gamma_int(q, x) / decay ** (q + 1)
        total += integral / factorial(q) * c * B ** (a + j) / gamma ** (a + i)
    return total


def bound_tail_integral(p, W):
    """``int_{|t| > W} green_bound(t) dt`` over both half-axes (``p.t`` is ignored)."""
    if not W >= 0:
        raise InvalidInput("W must be nonnegative")
    B = 2.0 * p.normA
    right = _tail(W, p.gamma_minus, p.k, p.m, B, p.gamma) if p.m else 0.0
    left = _tail(W, p.gamma_plus, p.m, p.k, B, p.gamma) if p.k else 0.0
    return right + left
