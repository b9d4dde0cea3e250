"""Truncated formal power series over an exact coefficient ring.

A series holds plain coefficients a_0..a_N of t^i (not EGF-normalized) and an
inclusive truncation order N. Terms beyond N are unknown, never assumed zero:
operations that lose information (derivative, division by a series of positive
valuation) shrink the bound instead of padding. The EGF normalization
(multiply by n!) happens in exactly one place, `umbral_apply`, which is the
linear functional sending f(t) to n! * [t^n] f(t).

Coefficients live in one of two rings: exact rationals, or polynomials in x
over exact rationals (for bivariate generating functions).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .exact import int_pow
from .polynomials import Polynomial, poly_text

Coeff = Union[Fraction, Polynomial]


class CoefficientRing:
    """Ring hooks: coercion, units, and inversion of units."""

    name: str = "?"

    def coerce(self, value) -> Coeff:
        raise NotImplementedError

    def zero(self) -> Coeff:
        raise NotImplementedError

    def one(self) -> Coeff:
        raise NotImplementedError

    def is_unit(self, c: Coeff) -> bool:
        raise NotImplementedError

    def invert_unit(self, c: Coeff) -> Coeff:
        raise NotImplementedError

    def render(self, c: Coeff) -> str:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<ring {self.name}>"


class _ScalarRing(CoefficientRing):
    name = "scalar"

    def coerce(self, value):
        if isinstance(value, Polynomial):
            raise TypeError("polynomial coefficient in a scalar-ring series")
        return Fraction(value)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def is_unit(self, c):
        return c != 0

    def invert_unit(self, c):
        if c == 0:
            raise ZeroDivisionError("zero is not a unit")
        return 1 / Fraction(c)

    def render(self, c):
        return str(c)


class _PolyRing(CoefficientRing):
    name = "poly"

    def coerce(self, value):
        if isinstance(value, Polynomial):
            return value
        return Polynomial.constant(Fraction(value))

    def zero(self):
        return Polynomial.zero()

    def one(self):
        return Polynomial.one()

    def is_unit(self, c):
        # Units of Q[x] are the nonzero constants.
        return c.degree == 0

    def invert_unit(self, c):
        if c.degree != 0:
            raise ZeroDivisionError("only nonzero constant polynomials are units")
        return Polynomial.constant(1 / c.constant_term)

    def render(self, c):
        text = poly_text(c)
        return text if c.degree <= 0 else f"({text})"


SCALAR = _ScalarRing()
POLY_IN_X = _PolyRing()


class TruncatedSeries:
    """Coefficients a_0..a_N of t^0..t^N; length is always order_bound + 1."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CoefficientRing, coeffs: Iterable):
        self.ring = ring
        self.coeffs: tuple[Coeff, ...] = tuple(ring.coerce(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the t^0 coefficient")

    @classmethod
    def from_coeffs(cls, ring: CoefficientRing, coeffs: Sequence, order: int) -> "TruncatedSeries":
        """Build from the leading coefficients, zero-padded up to `order`."""
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        pad = [ring.zero()] * (order + 1 - len(coeffs))
        return cls(ring, list(coeffs) + pad)

    @classmethod
    def zero(cls, ring: CoefficientRing, order: int) -> "TruncatedSeries":
        return cls.from_coeffs(ring, (), order)

    @classmethod
    def one(cls, ring: CoefficientRing, order: int) -> "TruncatedSeries":
        return cls.from_coeffs(ring, (ring.one(),), order)

    @classmethod
    def constant(cls, ring: CoefficientRing, value, order: int) -> "TruncatedSeries":
        return cls.from_coeffs(ring, (value,), order)

    @property
    def order_bound(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Coeff:
        if i < 0 or i > self.order_bound:
            raise IndexError(f"coefficient {i} is beyond the truncation order {self.order_bound}")
        return self.coeffs[i]

    @property
    def constant_term(self) -> Coeff:
        return self.coeffs[0]

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient; None if zero up to the bound."""
        zero = self.ring.zero()
        for i, c in enumerate(self.coeffs):
            if c != zero:
                return i
        return None

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order_bound:
            raise ValueError("cannot extend a truncated series; higher terms are unknown")
        if order < 0:
            raise ValueError("order must be >= 0")
        return TruncatedSeries(self.ring, self.coeffs[: order + 1])

    def _check_ring(self, other: "TruncatedSeries") -> None:
        if self.ring is not other.ring:
            raise TypeError(f"ring mismatch: {self.ring.name} vs {other.ring.name}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_ring(other)
        n = min(self.order_bound, other.order_bound)
        return TruncatedSeries(self.ring, (self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_ring(other)
        n = min(self.order_bound, other.order_bound)
        return TruncatedSeries(self.ring, (self.coeffs[i] - other.coeffs[i] for i in range(n + 1)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.ring, (-c for c in self.coeffs))

    def scale(self, factor) -> "TruncatedSeries":
        f = self.ring.coerce(factor)
        return TruncatedSeries(self.ring, (f * c for c in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_ring(other)
        n = min(self.order_bound, other.order_bound)
        zero = self.ring.zero()
        out = [zero] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == zero:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != zero:
                    out[i + j] += a * b
        return TruncatedSeries(self.ring, out)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """f(g(t)) by Horner's scheme; g must have zero constant term."""
        self._check_ring(inner)
        if inner.constant_term != self.ring.zero():
            raise ValueError("composition needs an inner series with zero constant term")
        bound = min(self.order_bound, inner.order_bound)
        g = inner.truncate(bound)
        # Coefficients of f beyond `bound` cannot reach [t^i] for i <= bound
        # because g has valuation >= 1, so Horner starts at f_bound.
        acc = TruncatedSeries.constant(self.ring, self.coeffs[bound], bound)
        for i in range(bound - 1, -1, -1):
            acc = acc * g
            acc = TruncatedSeries(
                self.ring, (acc.coeffs[0] + self.coeffs[i],) + acc.coeffs[1:]
            )
        return acc

    def recip(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be a unit.

        Solves f * g = 1 coefficient by coefficient:
        g_0 = 1/f_0 and g_n = -g_0 * sum_{i=1..n} f_i g_{n-i}.
        """
        if not self.ring.is_unit(self.constant_term):
            raise ZeroDivisionError("series reciprocal needs a unit constant term")
        inv0 = self.ring.invert_unit(self.constant_term)
        out = [inv0]
        zero = self.ring.zero()
        for n in range(1, self.order_bound + 1):
            acc = zero
            for i in range(1, n + 1):
                if self.coeffs[i] != zero:
                    acc += self.coeffs[i] * out[n - i]
            out.append(-(inv0 * acc))
        return TruncatedSeries(self.ring, out)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """f / g as a genuine power series, truncated at N - valuation(g).

        Requires valuation(f) >= valuation(g) (no Laurent terms) and a unit
        leading coefficient in g.
        """
        self._check_ring(other)
        v = other.valuation()
        if v is None:
            raise ZeroDivisionError("division by a series that vanishes up to its bound")
        if not self.ring.is_unit(other.coeffs[v]):
            raise ZeroDivisionError("divisor's leading coefficient is not a unit")
        n = min(self.order_bound, other.order_bound)
        if v > 0:
            fv = self.valuation()
            if fv is not None and fv < v:
                raise ValueError(
                    f"division would need Laurent terms: valuation {fv} < {v}"
                )
        f = TruncatedSeries(self.ring, self.coeffs[v : n + 1])
        g = TruncatedSeries(self.ring, other.coeffs[v : n + 1])
        return f * g.recip()

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            return self.recip() ** (-k)
        result = TruncatedSeries.one(self.ring, self.order_bound)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self) -> "TruncatedSeries":
        """Termwise d/dt; the order bound drops by one."""
        if self.order_bound < 1:
            raise ValueError("cannot differentiate a series known only to order 0")
        return TruncatedSeries(
            self.ring, ((i + 1) * self.coeffs[i + 1] for i in range(self.order_bound))
        )

    def to_poly_ring(self) -> "TruncatedSeries":
        """Lift a scalar-ring series to the polynomial ring (constants in x)."""
        if self.ring is POLY_IN_X:
            return self
        return TruncatedSeries(POLY_IN_X, self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((id(self.ring), self.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries<{self.ring.name}, N={self.order_bound}>({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return series_text(self)


def series_text(f: TruncatedSeries, var: str = "t") -> str:
    """Render "a0 + a1*t + a2*t^2 + ..." with every coefficient shown."""
    parts = []
    for i, c in enumerate(f.coeffs):
        rendered = f.ring.render(c)
        if i == 0:
            parts.append(rendered)
        elif i == 1:
            parts.append(f"{rendered}*{var}")
        else:
            parts.append(f"{rendered}*{var}^{i}")
    return " + ".join(parts).replace("+ -", "- ")


def series_json(f: TruncatedSeries, egf: bool = False) -> list:
    """Ordered coefficient array; `egf` multiplies coefficient i by i!.

    Scalar coefficients render as "p/q" strings; polynomial coefficients as
    ordered arrays of "p/q" strings (index = power of x).
    """
    out = []
    for i, c in enumerate(f.coeffs):
        value = c * math.factorial(i) if egf else c
        if isinstance(value, Polynomial):
            out.append([str(q) for q in value.coeffs])
        else:
            out.append(str(value))
    return out


def umbral_apply(f: TruncatedSeries, n: int) -> Coeff:
    """The linear functional pairing: n! * [t^n] f(t)."""
    if n < 0:
        raise ValueError("umbral_apply requires n >= 0")
    if n > f.order_bound:
        raise ValueError(f"n = {n} exceeds the truncation order {f.order_bound}")
    return f.coeffs[n] * math.factorial(n)


def t_series(order: int) -> TruncatedSeries:
    """The series t itself."""
    return TruncatedSeries.from_coeffs(SCALAR, (0, 1), order)


def log1p_series(order: int) -> TruncatedSeries:
    """log(1+t) = t - t^2/2 + t^3/3 - ..."""
    return TruncatedSeries(
        SCALAR,
        [Fraction(0)] + [Fraction((-1) ** (i + 1), i) for i in range(1, order + 1)],
    )


def exp_series(order: int) -> TruncatedSeries:
    """e^t = sum t^i / i!."""
    return TruncatedSeries(SCALAR, [Fraction(1, math.factorial(i)) for i in range(order + 1)])


def expm1_series(order: int, c: Fraction | int = 1) -> TruncatedSeries:
    """e^(c*t) - 1 for exact rational c."""
    c = Fraction(c)
    return TruncatedSeries(
        SCALAR,
        [Fraction(0)] + [c**i / math.factorial(i) for i in range(1, order + 1)],
    )


def lif_series(k: int, order: int) -> TruncatedSeries:
    """Polylogarithm factorial series: coefficient of t^m is 1/(m! (m+1)^k).

    The index k may be negative; (m+1)^k is then a genuine integer factor.
    """
    return TruncatedSeries(
        SCALAR,
        [int_pow(m + 1, -k) / math.factorial(m) for m in range(order + 1)],
    )


def binomial_series(a: Fraction | int, order: int) -> TruncatedSeries:
    """(1+t)^a for exact rational a: coefficients a(a-1)...(a-j+1)/j!."""
    a = Fraction(a)
    coeffs = [Fraction(1)]
    for j in range(1, order + 1):
        coeffs.append(coeffs[-1] * (a - (j - 1)) / j)
    return TruncatedSeries(SCALAR, coeffs)


def binomial_pow_poly(c: Polynomial, order: int) -> TruncatedSeries:
    """(1+t)^c(x) over the polynomial ring: coefficient of t^j is binom(c(x), j).

    Built by the falling-factorial recurrence b_j = b_{j-1} * (c - j + 1) / j,
    so every coefficient is an exact polynomial in x.
    """
    coeffs: list[Polynomial] = [Polynomial.one()]
    for j in range(1, order + 1):
        coeffs.append(coeffs[-1] * (c - (j - 1)) * Fraction(1, j))
    return TruncatedSeries(POLY_IN_X, coeffs)
