"""Exact rational scalars and the elementary combinatorics everything else uses.

Scalars are `fractions.Fraction` throughout: always reduced, positive
denominator, so equality of computed values is plain structural equality.
The string form ``str(Fraction(...))`` is exactly the "p/q" (or "p") wire
format used by the CSV/JSON emitters.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence

Rational = Fraction


def rational_str(value: Fraction | int) -> str:
    """Render an exact rational as "p/q", or just "p" when q = 1."""
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    """Parse the "p/q" wire format (also accepts a bare integer)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def binomial(n: int, k: int) -> int:
    """C(n, k), with value 0 whenever k < 0 or k > n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / (parts_1! ... parts_m! (n - sum)!); the final block is implicit."""
    if n < 0:
        raise ValueError("multinomial requires n >= 0")
    total = 0
    denom = 1
    for p in parts:
        if p < 0:
            raise ValueError("multinomial parts must be nonnegative")
        total += p
        denom *= math.factorial(p)
    if total > n:
        raise ValueError(f"parts sum {total} exceeds n = {n}")
    denom *= math.factorial(n - total)
    return math.factorial(n) // denom


def int_pow(base: int, k: int) -> Fraction:
    """base**k as an exact rational; k may be negative."""
    if base < 1:
        raise ValueError("int_pow requires base >= 1")
    return Fraction(base) ** k


def weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Yield every tuple of `parts` naturals summing to `total`, exactly once.

    Lexicographic order; the count is C(total + parts - 1, parts - 1). Lazy on
    purpose: callers sum over ~50k compositions at the largest grid points.
    """
    if total < 0:
        raise ValueError("weak_compositions requires total >= 0")
    if parts < 1:
        raise ValueError("weak_compositions requires parts >= 1")
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in weak_compositions(total - head, parts - 1):
            yield (head,) + rest
