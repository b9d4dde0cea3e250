"""Dense univariate polynomials over exact rationals, signed Stirling numbers
of the first kind, and the falling/rising factorial bases.

The Stirling triangle is filled by the recurrence
``s(n+1, m) = s(n, m-1) - n*s(n, m)``; the factorial-basis polynomials are
built by direct multiplication so they can serve as an independent oracle for
the triangle.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[Fraction, int]

NEG_INF = float("-inf")


def _trim(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Polynomial:
    """Immutable dense polynomial; coefficient i belongs to x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs: tuple[Fraction, ...] = _trim(Fraction(c) for c in coeffs)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> "Polynomial":
        if power < 0:
            raise ValueError("monomial power must be >= 0")
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int | float:
        """Degree, or -inf for the zero polynomial (so deg(p*q) = deg p + deg q)."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def _coerce(self, other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,))
        return None

    def __add__(self, other) -> "Polynomial":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "Polynomial":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> "Polynomial":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if self.is_zero or q.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(q.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("polynomial powers must be >= 0")
        result = Polynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, a: Scalar) -> Fraction:
        """Evaluate at a point by Horner's rule."""
        acc = Fraction(0)
        a = Fraction(a)
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def shift(self, c: Scalar) -> "Polynomial":
        """Return q with q(x) = p(x + c)."""
        c = Fraction(c)
        if c == 0:
            return self
        x_plus_c = Polynomial((c, 1))
        acc = Polynomial()
        for a in reversed(self.coeffs):
            acc = acc * x_plus_c + a
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(c * (i + 1) for i, c in enumerate(self.coeffs[1:]))

    def __eq__(self, other) -> bool:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self.coeffs == q.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return poly_text(self)


def poly_text(p: Polynomial, var: str = "x") -> str:
    """Render "c_d*x^d + ... + c_1*x + c_0", omitting zero terms."""
    if p.is_zero:
        return "0"
    terms = []
    for power in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[power]
        if c == 0:
            continue
        if power == 0:
            terms.append(str(c))
        elif power == 1:
            terms.append(f"{c}*{var}")
        else:
            terms.append(f"{c}*{var}^{power}")
    return " + ".join(terms).replace("+ -", "- ")


def poly_json(p: Polynomial) -> list[str]:
    """Ordered coefficient array (index = power) of "p/q" strings."""
    return [str(c) for c in p.coeffs]


class Stirling1Table:
    """Triangle of signed Stirling numbers of the first kind.

    Rows grow on demand under a lock, so a long-running service can share one
    table across requests; lookups into already-built rows are lock-free.
    """

    def __init__(self, n_max: int = 0):
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()
        if n_max > 0:
            self.extend(n_max)

    def extend(self, n_max: int) -> None:
        with self._lock:
            while len(self._rows) <= n_max:
                n = len(self._rows) - 1
                prev = self._rows[-1]
                row = [0] * (n + 2)
                for m in range(n + 2):
                    left = prev[m - 1] if 1 <= m <= n + 1 else 0
                    right = prev[m] if m <= n else 0
                    row[m] = left - n * right
                self._rows.append(row)

    @property
    def n_max(self) -> int:
        return len(self._rows) - 1

    def value(self, n: int, m: int) -> int:
        if n < 0 or m < 0 or m > n:
            return 0
        if n >= len(self._rows):
            self.extend(n)
        return self._rows[n][m]


_TABLE = Stirling1Table()


def stirling1(n: int, m: int) -> int:
    """Signed S1(n, m): the coefficient of x^m in the falling factorial (x)_n."""
    return _TABLE.value(n, m)


def falling_factorial(n: int) -> Polynomial:
    """(x)_n = x(x-1)...(x-n+1), built by direct multiplication.

    Deliberately not derived from the Stirling triangle: coefficient
    extraction from this product is the independent check on `stirling1`.
    """
    if n < 0:
        raise ValueError("falling_factorial requires n >= 0")
    p = Polynomial.one()
    for i in range(n):
        p = p * Polynomial((-i, 1))
    return p


def rising_factorial(n: int) -> Polynomial:
    """x^(n) = x(x+1)...(x+n-1); coefficient of x^l is (-1)^(n-l) * S1(n, l)."""
    if n < 0:
        raise ValueError("rising_factorial requires n >= 0")
    p = Polynomial.one()
    for i in range(n):
        p = p * Polynomial((i, 1))
    return p
