"""Truncated Taylor series ("jets") and the analytic functions built on them.

A :class:`Jet` stores ``coeffs[r] = f^{(r)}(center) / r!`` for ``r = 0..order``.
Arithmetic between jets at the same center is exact truncated power-series
arithmetic, which is all the confluent divided-difference machinery needs.
"""

from math import factorial

import numpy as np

from .errors import EvaluationError, InvalidInput

__all__ = [
    "Jet",
    "AnalyticFn",
    "exp_fn",
    "exp_plus",
    "exp_minus",
    "reciprocal_product",
    "tilde_exp",
    "tilde_exp_plus",
    "tilde_exp_minus",
    "left_indicator",
    "polynomial",
    "constant",
]


class Jet:
    __slots__ = ("center", "coeffs")

    def __init__(self, center, coeffs):
        self.center = complex(center)
        self.coeffs = np.array(coeffs, dtype=np.complex128).ravel()
        if self.coeffs.size == 0:
            raise InvalidInput("a jet needs at least one coefficient")

    @property
    def order(self):
        return self.coeffs.size - 1

    @classmethod
    def constant(cls, center, value, order):
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = value
        return cls(center, c)

    @classmethod
    def variable(cls, center, order):
        """The jet of the identity map ``z -> z``."""
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = center
        if order >= 1:
            c[1] = 1.0
        return cls(center, c)

    def derivative(self, r):
        """``f^{(r)}(center)``."""
        return self.coeffs[r] * factorial(r)

    def truncate(self, order):
        return Jet(self.center, self.coeffs[: order + 1])

    def _coerce(self, other):
        if isinstance(other, Jet):
            if other.center != self.center:
                raise InvalidInput("jets at different centers")
            n = min(self.coeffs.size, other.coeffs.size)
            return self.coeffs[:n], other.coeffs[:n]
        return self.coeffs, None

    def __add__(self, other):
        a, b = self._coerce(other)
        if b is None:
            a = a.copy()
            a[0] += other
            return Jet(self.center, a)
        return Jet(self.center, a + b)

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.center, -self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce(other)
        if b is None:
            return Jet(self.center, a * other)
        n = a.size
        return Jet(self.center, np.convolve(a, b)[:n])

    __rmul__ = __mul__

    def reciprocal(self):
        b = self.coeffs
        if b[0] == 0:
            raise EvaluationError(f"division by a jet vanishing at {self.center}")
        n = b.size
        q = np.zeros(n, dtype=np.complex128)
        q[0] = 1.0 / b[0]
        for r in range(1, n):
            q[r] = -np.dot(b[1 : r + 1], q[r - 1 :: -1][:r]) / b[0]
        return Jet(self.center, q)

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return Jet(self.center, self.coeffs / other)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def exp(self):
        """``exp`` composed with this jet."""
        h = self.coeffs
        n = h.size
        g = np.zeros(n, dtype=np.complex128)
        g[0] = np.exp(h[0])
        k = np.arange(1, n)
        for r in range(1, n):
            g[r] = np.dot(k[:r] * h[1 : r + 1], g[r - 1 :: -1][:r]) / r
        return Jet(self.center, g)

    def __repr__(self):
        return f"Jet(center={self.center!r}, coeffs={self.coeffs!r})"


class AnalyticFn:
    """An analytic function known through its jets.

    ``jet(center, order)`` returns a :class:`Jet`.  Calling the object
    evaluates the function at scalars or arrays; ``values`` may supply a
    vectorized evaluator, otherwise order-0 jets are used.  ``poles`` lists
    known singularities so contour quadrature can keep clear of them.
    """

    def __init__(self, jet, values=None, poles=(), name="f"):
        self._jet = jet
        self._values = values
        self.poles = np.asarray(poles, dtype=np.complex128).ravel()
        self.name = name

    def jet(self, center, order):
        if order < 0:
            raise InvalidInput("jet order must be nonnegative")
        return self._jet(complex(center), int(order))

    def __call__(self, z):
        if self._values is not None:
            return self._values(np.asarray(z, dtype=np.complex128))
        z = np.asarray(z, dtype=np.complex128)
        out = np.array([self._jet(complex(w), 0).coeffs[0] for w in z.ravel()])
        return out.reshape(z.shape)

    def __mul__(self, other):
        def jet(c, order):
            return self.jet(c, order) * other.jet(c, order)

        def values(z):
            return self(z) * other(z)

        poles = np.concatenate([self.poles, other.poles])
        return AnalyticFn(jet, values, poles, name=f"({self.name})*({other.name})")

    def __repr__(self):
        return f"AnalyticFn({self.name})"


def _exp_coeffs(center, t, order):
    r = np.arange(order + 1)
    powers = np.array([t**i / factorial(i) for i in r], dtype=np.complex128)
    return np.exp(center * t) * powers


def exp_fn(t=1.0):
    """``z -> exp(z t)``."""
    t = float(t)

    def jet(c, order):
        return Jet(c, _exp_coeffs(c, t, order))

    return AnalyticFn(jet, lambda z: np.exp(z * t), name=f"exp_{t:g}")


def _half_plane_exp(t, keep_left):
    t = float(t)

    def inside(c):
        if c.real == 0:
            raise EvaluationError("half-plane exponential is undefined on the imaginary axis")
        return (c.real < 0) == keep_left

    def jet(c, order):
        if inside(c):
            return Jet(c, _exp_coeffs(c, t, order))
        return Jet(c, np.zeros(order + 1))

    def values(z):
        mask = (z.real < 0) if keep_left else (z.real > 0)
        return np.where(mask, np.exp(np.where(mask, z, 0) * t), 0)

    return jet, values


def exp_plus(t):
    """``exp(z t)`` on the open left half-plane, zero on the right."""
    jet, values = _half_plane_exp(t, keep_left=True)
    return AnalyticFn(jet, values, name=f"exp+_{float(t):g}")


def exp_minus(t):
    """``exp(z t)`` on the open right half-plane, zero on the left."""
    jet, values = _half_plane_exp(t, keep_left=False)
    return AnalyticFn(jet, values, name=f"exp-_{float(t):g}")


def _reciprocal_product_coeffs(c, poles, order):
    # 1/(z - p) = sum_r (-1)^r (c - p)^{-r-1} (z - c)^r
    out = np.zeros(order + 1, dtype=np.complex128)
    out[0] = 1.0
    r = np.arange(order + 1)
    for p in poles:
        d = c - p
        if d == 0:
            raise EvaluationError(f"pole at {p} coincides with evaluation point")
        factor = (-1.0) ** r / d ** (r + 1)
        out = np.convolve(out, factor)[: order + 1]
    if not np.all(np.isfinite(out)):
        raise EvaluationError(f"reciprocal product overflows at {c}")
    return out


def reciprocal_product(poles):
    """``z -> 1 / prod_i (z - poles[i])``."""
    poles = np.asarray(poles, dtype=np.complex128).ravel()

    def jet(c, order):
        return Jet(c, _reciprocal_product_coeffs(c, poles, order))

    def values(z):
        return 1.0 / np.prod(z[..., None] - poles, axis=-1)

    return AnalyticFn(jet, values, poles, name="1/prod(z-p)")


def tilde_exp(t, poles):
    """``z -> exp(z t) / prod_i (z - poles[i])``."""
    t = float(t)
    poles = np.asarray(poles, dtype=np.complex128).ravel()

    def jet(c, order):
        e = _exp_coeffs(c, t, order)
        return Jet(c, np.convolve(e, _reciprocal_product_coeffs(c, poles, order))[: order + 1])

    def values(z):
        return np.exp(z * t) / np.prod(z[..., None] - poles, axis=-1)

    return AnalyticFn(jet, values, poles, name=f"exp_{t:g}/prod(z-p)")


def tilde_exp_plus(t, mu):
    """Divisor of ``exp+_t`` by the right-half-plane roots ``mu``; used on the left roots."""
    return tilde_exp(t, mu)


def tilde_exp_minus(t, nu):
    """Divisor of ``exp-_t`` by the left-half-plane roots ``nu``; used on the right roots."""
    return tilde_exp(t, nu)


def left_indicator():
    """1 on ``Re z < 0``, 0 on ``Re z > 0``; all derivatives vanish."""

    def jet(c, order):
        if c.real == 0:
            raise EvaluationError("indicator is undefined on the imaginary axis")
        return Jet.constant(c, 1.0 if c.real < 0 else 0.0, order)

    return AnalyticFn(jet, lambda z: (z.real < 0).astype(np.complex128), name="1[Re<0]")


def polynomial(coeffs):
    """Polynomial with monomial coefficients ``coeffs[0] + coeffs[1] z + ...``."""
    a = np.asarray(coeffs, dtype=np.complex128).ravel()

    def jet(c, order):
        z = Jet.variable(c, order)
        acc = Jet.constant(c, 0.0, order)
        for ak in a[::-1]:
            acc = acc * z + ak
        return acc

    return AnalyticFn(jet, lambda z: np.polyval(a[::-1], z), name=f"poly{list(a)}")


def constant(value):
    value = complex(value)
    return AnalyticFn(
        lambda c, order: Jet.constant(c, value, order),
        lambda z: np.full(z.shape, value, dtype=np.complex128),
        name=f"const({value:g})",
    )
