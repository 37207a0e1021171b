"""Exact-arithmetic engine for orders of symplectic gauge groups over S^(4m).

The package computes, in exact rational arithmetic, the integer invariants
that classify principal Sp(n)-gauge groups over the sphere S^(4m): Chern
character coefficients of powers of the hyperplane class, images of induced
maps on K-theory as subgroups of the integers, orders of Samelson products,
and the gcd invariant that separates homotopy types of gauge groups.

Every computation that admits two independent routes (a closed form and a
gcd of generator images, or a closed convolution and a summation formula)
keeps both routes available so they can be cross-checked.
"""

from __future__ import annotations

from .chern import (
    ChMode,
    GeneratorImage,
    KspGenerator,
    LiteralFormulaError,
    NonIntegralEntryError,
    ZSubgroup,
    beta_k_generators,
    ch_coeff,
    im_subgroup,
    psi_basis,
    psi_generators,
    sigma,
    theta_basis,
    theta_generators,
)
from .exact import TruncPoly, exp_minus_one_pow, gcd_list, stirling2, stirling2_oracle, trunc_mul
from .orders import (
    Check,
    CyclicGroup,
    Discrepancy,
    Factorization,
    GaugeParams,
    NonIntegralOrderError,
    VerifyReport,
    count_invariant_classes,
    discrepancy_report,
    gauge_coker_order,
    gauge_invariant,
    gauge_modulus,
    gauge_necessary_equiv,
    im_alpha_k,
    mapping_group_order,
    modulus_divisors,
    q2_group_order,
    q2_group_order_formula,
    samelson_order,
    samelson_order_formula,
)

__version__ = "0.1.0"

__all__ = [
    "ChMode",
    "Check",
    "CyclicGroup",
    "Discrepancy",
    "Factorization",
    "GaugeParams",
    "GeneratorImage",
    "KspGenerator",
    "LiteralFormulaError",
    "NonIntegralEntryError",
    "NonIntegralOrderError",
    "TruncPoly",
    "VerifyReport",
    "ZSubgroup",
    "beta_k_generators",
    "ch_coeff",
    "count_invariant_classes",
    "discrepancy_report",
    "exp_minus_one_pow",
    "gauge_coker_order",
    "gauge_invariant",
    "gauge_modulus",
    "gauge_necessary_equiv",
    "gcd_list",
    "im_alpha_k",
    "im_subgroup",
    "mapping_group_order",
    "modulus_divisors",
    "psi_basis",
    "psi_generators",
    "q2_group_order",
    "q2_group_order_formula",
    "samelson_order",
    "samelson_order_formula",
    "sigma",
    "stirling2",
    "stirling2_oracle",
    "theta_basis",
    "theta_generators",
    "trunc_mul",
    "__version__",
]
