"""Exact arithmetic primitives: big integers, reduced rationals, and
degree-capped power series over Q.

Everything here is pure and exact. Rational values are `fractions.Fraction`
(always reduced, positive denominator), so integrality and gcd statements
downstream are decided without rounding error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Sequence


def factorial(n: int) -> int:
    """n! for n >= 0."""
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k > n."""
    return math.comb(n, k)


@lru_cache(maxsize=None)
def stirling2(d: int, j: int) -> int:
    """Stirling number of the second kind S(d, j).

    Additive recurrence S(d, j) = j*S(d-1, j) + S(d-1, j-1) with S(0, 0) = 1;
    no intermediate division, so every value stays integral by construction.
    """
    if d < 0 or j < 0:
        raise ValueError("stirling2 requires nonnegative arguments")
    if d == 0:
        return 1 if j == 0 else 0
    if j == 0:
        return 0
    return j * stirling2(d - 1, j) + stirling2(d - 1, j - 1)


def stirling2_oracle(d: int, j: int) -> int:
    """Independent inclusion-exclusion route to S(d, j).

    (1/j!) * sum_{i=0}^{j} (-1)^(j-i) C(j, i) i^d. The division must be exact;
    a remainder would mean the two Stirling routes disagree.
    """
    if d < 1 or j < 1:
        raise ValueError("stirling2_oracle requires d >= 1 and j >= 1")
    total = sum((-1) ** (j - i) * binomial(j, i) * i**d for i in range(j + 1))
    quotient, remainder = divmod(total, factorial(j))
    if remainder:
        raise ArithmeticError(f"inclusion-exclusion sum for S({d},{j}) is not divisible by {j}!")
    return quotient


@dataclass(frozen=True)
class TruncPoly:
    """Polynomial over Q truncated at degree `cap` (t^(cap+1) = 0).

    Models the cohomology of a projective space tall enough that truncation
    never bites below the cap. Coefficient of t^d sits at index d.
    """

    cap: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.cap < 0:
            raise ValueError("cap must be nonnegative")
        if len(self.coeffs) != self.cap + 1:
            raise ValueError("coefficient vector must have length cap + 1")

    @classmethod
    def from_coeffs(cls, cap: int, coeffs: Iterable[Fraction | int]) -> TruncPoly:
        vec = [Fraction(c) for c in coeffs]
        if len(vec) > cap + 1:
            raise ValueError("more coefficients than the cap allows")
        vec.extend(Fraction(0) for _ in range(cap + 1 - len(vec)))
        return cls(cap, tuple(vec))

    @classmethod
    def one(cls, cap: int) -> TruncPoly:
        return cls.from_coeffs(cap, [1])

    def coeff(self, d: int) -> Fraction:
        if not 0 <= d <= self.cap:
            raise ValueError(f"degree {d} outside 0..{self.cap}")
        return self.coeffs[d]


def trunc_mul(p: TruncPoly, q: TruncPoly) -> TruncPoly:
    """Product of two capped polynomials, discarding degrees above the cap."""
    if p.cap != q.cap:
        raise ValueError(f"cap mismatch: {p.cap} != {q.cap}")
    cap = p.cap
    out = [Fraction(0)] * (cap + 1)
    for i, a in enumerate(p.coeffs):
        if not a:
            continue
        # j <= cap - i keeps every written index within the cap
        for j in range(cap - i + 1):
            b = q.coeffs[j]
            if b:
                out[i + j] += a * b
    return TruncPoly(cap, tuple(out))


def _exp_minus_one(cap: int) -> TruncPoly:
    return TruncPoly(cap, tuple(Fraction(0) if d == 0 else Fraction(1, factorial(d)) for d in range(cap + 1)))


def exp_minus_one_pow(j: int, cap: int) -> TruncPoly:
    """(e^t - 1)^j truncated at degree cap.

    The coefficient of t^d equals j! * S(d, j) / d!; this routine never uses
    that closed form, it multiplies the series out, which is what makes it an
    independent cross-check.
    """
    if j < 1:
        raise ValueError("exponent must be positive")
    base = _exp_minus_one(cap)
    result = base
    for _ in range(j - 1):
        result = trunc_mul(result, base)
    return result


def gcd_list(values: Sequence[int]) -> int:
    """gcd of absolute values; 0 exactly when every input is 0."""
    if not values:
        raise ValueError("gcd of an empty list is undefined")
    return reduce(math.gcd, (abs(v) for v in values))
