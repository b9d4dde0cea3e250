"""Companion special-number families, computed straight from their
generating functions through the truncated-series ring.

Definition-first: every family reads n! * [t^n] of its defining series.
Closed-form shortcuts (binomial convolutions for the polynomial forms) are
cross-checked against the series in the test suite, never trusted alone.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import binomial
from .polynomials import Polynomial
from .series import (
    SCALAR,
    TruncatedSeries,
    binomial_series,
    expm1_series,
    lif_series,
    log1p_series,
    t_series,
    umbral_apply,
)


@lru_cache(maxsize=None)
def bernoulli_series(order: int) -> TruncatedSeries:
    """t / (e^t - 1), the ordinary Bernoulli EGF."""
    return (expm1_series(order + 1) / t_series(order + 1)).recip()


@lru_cache(maxsize=None)
def _bernoulli_power(r: int, order: int) -> TruncatedSeries:
    return bernoulli_series(order) ** r


@lru_cache(maxsize=None)
def cauchy_series(order: int) -> TruncatedSeries:
    """t / log(1+t), the Cauchy-number EGF."""
    return t_series(order + 1) / log1p_series(order + 1)


@lru_cache(maxsize=None)
def norlund_series(order: int) -> TruncatedSeries:
    """t / ((1+t) log(1+t)), whose EGF coefficients are B_n^(n)."""
    one_plus_t = TruncatedSeries.from_coeffs(SCALAR, (1, 1), order + 1)
    return t_series(order + 1) / (one_plus_t * log1p_series(order + 1))


def bernoulli(n: int) -> Fraction:
    """Ordinary Bernoulli number B_n (B_1 = -1/2 convention)."""
    return umbral_apply(bernoulli_series(n), n)


def bernoulli_higher(n: int, r: int) -> Fraction:
    """Higher-order Bernoulli number B_n^(r); r may be negative."""
    return umbral_apply(_bernoulli_power(r, n), n)


def bernoulli_higher_poly(n: int, r: int) -> Polynomial:
    """B_n^(r)(x) by binomial convolution of B^(r) numbers with e^(xt)."""
    return Polynomial(
        [binomial(n, j) * bernoulli_higher(n - j, r) for j in range(n + 1)]
    )


def norlund(n: int) -> Fraction:
    """Norlund number B_n^(n), read off its own generating function."""
    return umbral_apply(norlund_series(n), n)


def cauchy(n: int) -> Fraction:
    """Cauchy number of the first kind C_n."""
    return umbral_apply(cauchy_series(n), n)


@lru_cache(maxsize=None)
def _carlitz_series(r: int, a: Fraction, order: int) -> TruncatedSeries:
    return (cauchy_series(order) ** r) * binomial_series(a, order)


def carlitz_beta(n: int, r: int, a: Fraction | int = 0) -> Fraction:
    """Carlitz beta_n^(r)(a): n! * [t^n] of (t/log(1+t))^r (1+t)^a."""
    return umbral_apply(_carlitz_series(r, Fraction(a), n), n)


@lru_cache(maxsize=None)
def _frobenius_number_series(r: int, lam: Fraction, order: int) -> TruncatedSeries:
    if lam == 1:
        raise ValueError("Frobenius-Euler parameter lambda must differ from 1")
    # ((1-lam)/(e^t - lam))^r: normalize e^t - lam so its constant term is 1.
    exp = [Fraction(c) for c in expm1_series(order).coeffs]
    exp[0] = Fraction(1) - lam
    base = TruncatedSeries(SCALAR, [c / (1 - lam) for c in exp])
    return base ** (-r)


def frobenius_euler(n: int, r: int, lam: Fraction | int) -> Polynomial:
    """Frobenius-Euler polynomial H_n^(r)(x|lambda); monic of degree n."""
    if r < 0:
        raise ValueError("frobenius_euler requires r >= 0")
    lam = Fraction(lam)
    s = _frobenius_number_series(r, lam, n)
    numbers = [umbral_apply(s, j) for j in range(n + 1)]
    return Polynomial([binomial(n, j) * numbers[n - j] for j in range(n + 1)])


def clear_caches() -> None:
    """Drop every memoized series (used by the mutation self-tests)."""
    bernoulli_series.cache_clear()
    _bernoulli_power.cache_clear()
    cauchy_series.cache_clear()
    norlund_series.cache_clear()
    _carlitz_series.cache_clear()
    _frobenius_number_series.cache_clear()
