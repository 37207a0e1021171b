"""Chern character coefficients on complex projective space, the parity rule
of the complexification map on symplectic K-theory of spheres, and the integer
generator images those two ingredients produce.

Let x = L - 1 be the reduced Hopf class on CP^N, so ch(x) = e^t - 1 in terms of
the degree-2 cohomology generator t. The coefficient of t^d in ch(x^j) is
computed in three modes:

  CLOSED_FORM    j! * S(d, j) / d!  via Stirling numbers (the default),
  CONVOLUTION    the t^d coefficient of the multiplied-out series (e^t - 1)^j,
  PAPER_LITERAL  the restricted-index sums exactly as printed in the
                 derivation this engine audits; kept only so discrepancies
                 between that derivation and the recomputation can be
                 reported, never used in the default pipeline.

Sign conventions: generator image entries are stored as absolute values.
Downstream only subgroup membership matters, and subgroups of Z are blind to
sign.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import exp_minus_one_pow, factorial, gcd_list, stirling2


class LiteralFormulaError(ValueError):
    """PAPER_LITERAL was asked for a coefficient it has no printed sum for."""


class NonIntegralEntryError(ArithmeticError):
    """A generator image entry came out non-integral: mode/formula mismatch."""


class ChMode(enum.Enum):
    CLOSED_FORM = "closed"
    CONVOLUTION = "convolution"
    PAPER_LITERAL = "paper"


@dataclass(frozen=True)
class KspGenerator:
    """A K-group basis element zeta_a (x) x^j living over S^(2a).

    `index` numbers the element within its family, `sphere_half_dim` is a with
    the element sitting over S^(2a), and `power` is the exponent j of the
    reduced Hopf class it maps onto.
    """

    index: int
    sphere_half_dim: int
    power: int

    def __post_init__(self) -> None:
        if self.index < 1 or self.sphere_half_dim < 1 or self.power < 1:
            raise ValueError("index, sphere_half_dim and power must be positive")

    @property
    def sphere_dim(self) -> int:
        return 2 * self.sphere_half_dim

    @property
    def quarter_dim(self) -> int:
        """k such that the generator's shifted K-group is that of S^(4k).

        These basis elements live in degree -2 over S^(4k-2), which suspends
        to plain K-theory of S^(4k); the parity rule below reads k.
        """
        return (self.sphere_dim + 2) // 4


def psi_basis(m: int, n: int) -> list[KspGenerator]:
    """Basis over S^(4m-1) ^ Q_(n-m+1): element i has power 2i-1 and lives
    over S^(4(m+i)-2), for i = 1..n-m+1."""
    if not 1 <= m < n:
        raise ValueError("requires 1 <= m < n")
    return [KspGenerator(index=i, sphere_half_dim=2 * (m + i) - 1, power=2 * i - 1) for i in range(1, n - m + 2)]


def theta_basis(m: int, n: int) -> list[KspGenerator]:
    """Two-element basis over a suspended rank-2 quasi-projective space: the
    inclusion-induced class over S^(4(n-m)-2) mapping to x, and the top class
    over S^(4(n-m)+2) mapping to x^3."""
    if not 0 <= m < n:
        raise ValueError("requires 0 <= m < n")
    return [
        KspGenerator(index=1, sphere_half_dim=2 * (n - m) - 1, power=1),
        KspGenerator(index=2, sphere_half_dim=2 * (n - m) + 1, power=3),
    ]


@dataclass(frozen=True)
class GeneratorImage:
    """Integer coefficients, one per K-group basis element, of the top
    cohomology class hit by a map out of that K-group."""

    label: str
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("a generator image needs at least one entry")


@dataclass(frozen=True)
class ZSubgroup:
    """The subgroup gZ of Z, g >= 0; g = 0 is the zero subgroup."""

    generator: int

    def __post_init__(self) -> None:
        if self.generator < 0:
            raise ValueError("subgroup generator must be nonnegative")


def sigma(k: int) -> int:
    """Multiplier of the complexification map on quaternionic K-theory of
    S^(4k): 1 when k is odd, 2 when k is even.

    This single parity rule reproduces every printed case split for the
    generator families handled here (the tests enumerate them all).
    """
    if k < 1:
        raise ValueError("sigma is defined for k >= 1")
    return 1 if k % 2 == 1 else 2


def ch_coeff(d: int, j: int, mode: ChMode = ChMode.CLOSED_FORM) -> Fraction:
    """Coefficient of t^d in ch(x^j), in the requested mode.

    Zero for j > d in every mode: (e^t - 1)^j starts at t^j.
    """
    if d < 1 or j < 1:
        raise ValueError("ch_coeff requires d >= 1 and j >= 1")
    if j > d:
        return Fraction(0)
    if mode is ChMode.CLOSED_FORM:
        return Fraction(factorial(j) * stirling2(d, j), factorial(d))
    if mode is ChMode.CONVOLUTION:
        return exp_minus_one_pow(j, d).coeff(d)
    return _literal_coeff(d, j)


def _ch2_true(e: int) -> Fraction:
    # full (unrestricted) t^e coefficient of ch(x^2); zero at e = 1
    return Fraction(2 * stirling2(e, 2), factorial(e))


def _literal_coeff(d: int, j: int) -> Fraction:
    """The printed restricted-index sums, reproduced verbatim.

    Only four coefficient families are ever written out in the audited
    derivation: j = 1, j = 2, j = 3, and the top power j = d (with d odd in
    the last three). Everything else raises.
    """
    if j == 1:
        return Fraction(1, factorial(d))
    if j == d:
        return _literal_top(d)
    if d % 2 == 0:
        raise LiteralFormulaError(f"literal mode covers only odd degrees beyond j=1, got d={d}")
    q = (d - 1) // 2
    if j == 2:
        # upper summation limit stops at q = (d-1)/2, omitting the symmetric
        # half of the full convolution; this halves the true value
        return sum((Fraction(1, factorial(k) * factorial(d - k)) for k in range(1, q + 1)), Fraction(0))
    if j == 3:
        total = Fraction(0)
        # prefix ch_s(x) times a convolution with both inner indices >= s
        for s in range(1, q):
            inner = Fraction(0)
            for i1 in range(s, (d - s) // 2 + 1):
                i2 = d - s - i1
                if i2 >= i1:
                    inner += Fraction(1, factorial(i1) * factorial(i2))
            total += Fraction(1, factorial(s)) * inner
        # trailing term substitutes the previously computed full ch(x^2)
        for i1 in range(1, d):
            total += Fraction(1, factorial(i1)) * _ch2_true(d - i1)
        return total
    raise LiteralFormulaError(f"literal mode has no printed sum for ch_{d}(x^{j})")


@lru_cache(maxsize=None)
def _ascending_tuples(total: int, parts: int, minimum: int) -> int:
    # tuples i_1 <= ... <= i_parts with every entry >= minimum summing to total
    if parts == 0:
        return 1 if total == 0 else 0
    return sum(_ascending_tuples(total - v, parts - 1, v) for v in range(minimum, total // parts + 1))


def _literal_top(d: int) -> Fraction:
    """Top-power coefficient: every summand is a product of ch_i(x^i) = 1
    factors, so each printed term just counts its index tuples.

    The leading term fixes all d-1 indices to 1 (one tuple); the term with
    prefix ch_s(x^s) counts ascending tuples of length (d-1)/2 - s + 1 with
    entries >= s summing to d - s. At d = 3 the display degenerates: the
    leading and final terms share a prefix but are different sums, and both
    count 1, giving 2 (the value the audited derivation itself uses).
    """
    if d == 1:
        return Fraction(1)
    if d % 2 == 0:
        raise LiteralFormulaError(f"literal top-power sum needs odd degree, got d={d}")
    q = (d - 1) // 2
    total = 1
    for s in range(2, q + 1):
        total += _ascending_tuples(d - s, q - s + 1, s)
    if q == 1:
        total += 1
    return Fraction(total)


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegralEntryError(f"{what} is not an integer: {value}")
    return abs(int(value))


def psi_generators(m: int, n: int, mode: ChMode = ChMode.CLOSED_FORM) -> GeneratorImage:
    """Images of the rank-(n-m+1) basis under the top-cohomology composite:
    entry i is sigma(m+i) * (2n+1)! * ch_(2n-2m+1)(x^(2i-1)), as a positive
    integer."""
    basis = psi_basis(m, n)
    d = 2 * (n - m) + 1
    scale = factorial(2 * n + 1)
    entries = tuple(
        _integral(
            sigma(gen.quarter_dim) * scale * ch_coeff(d, gen.power, mode),
            f"psi entry i={gen.index} at (m={m}, n={n})",
        )
        for gen in basis
    )
    return GeneratorImage(label="PSI", entries=entries)


def theta_generators(m: int, n: int, mode: ChMode = ChMode.CLOSED_FORM) -> GeneratorImage:
    """Images of the two-element basis: sigma-weighted (2(n-m)+1)! times the
    degree-3 coefficients of ch(x) and ch(x^3).

    m = 0 instantiates the suspended rank-2 computation whose cokernel is the
    q2 mapping group; the label records that specialization.
    """
    basis = theta_basis(m, n)
    scale = factorial(2 * (n - m) + 1)
    entries = tuple(
        _integral(
            sigma(gen.quarter_dim) * scale * ch_coeff(3, gen.power, mode),
            f"theta entry i={gen.index} at (m={m}, n={n})",
        )
        for gen in basis
    )
    return GeneratorImage(label="PSI_PRIME" if m == 0 else "THETA", entries=entries)


def beta_k_generators(m: int, n: int, k: int, mode: ChMode = ChMode.CLOSED_FORM) -> GeneratorImage:
    """Degree-k images of the two suspended generators theta_1, theta_2 in the
    top cohomology group, as nonnegative integers [|k|*g1, |k|*g2].

    PAPER_LITERAL takes (g1, g2) verbatim from the printed table. The other
    modes recompute g1 from the top Chern class of the complexified class,
    c_q = (q-1)! * |ch_q| at q = 2(n-m+1), whose relevant component is the
    degree-3 ch(x) coefficient 1/3!, doubled by quaternionization when n-m+1
    is odd; g2 is sigma(n-m+1) * (2(n-m+1)-1)! from the top-cell pinch.
    """
    if not 1 <= m < n:
        raise ValueError("requires 1 <= m < n")
    delta1 = n - m + 1
    f2 = factorial(2 * delta1 - 1)
    if mode is ChMode.PAPER_LITERAL:
        g1, g2 = (Fraction(f2, 6), Fraction(2 * f2)) if delta1 % 2 == 0 else (Fraction(f2, 3), Fraction(f2))
    else:
        qdouble = 1 if delta1 % 2 == 0 else 2
        g1 = qdouble * f2 * ch_coeff(3, 1, mode)
        g2 = Fraction(sigma(delta1) * f2)
    entries = (
        _integral(abs(k) * g1, f"beta_k entry 1 at (m={m}, n={n}, k={k})"),
        _integral(abs(k) * g2, f"beta_k entry 2 at (m={m}, n={n}, k={k})"),
    )
    return GeneratorImage(label="BETA_K", entries=entries)


def im_subgroup(image: GeneratorImage) -> ZSubgroup:
    """Subgroup of Z generated by the image entries: gZ with g their gcd."""
    return ZSubgroup(generator=gcd_list(image.entries))
