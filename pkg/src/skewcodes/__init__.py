"""Selfdual skew cyclic codes over finite fields of odd characteristic.

Decides existence of, counts, uniformly samples and exhaustively enumerates
the selfdual left ideals of K[X;theta]/(P(X^r)) for a palindromic central
modulus P over the fixed field F, through an explicit bijection with
families of isotropic subspaces; includes a brute-force oracle for small
instances, twisted enumeration and the purely inseparable product walk.
"""

from .codes import (
    BudgetExceeded,
    CodeParameters,
    SkewCode,
    TwistSpec,
    code_from_subspaces,
    count_selfdual,
    dual_code,
    enumerate_selfdual,
    exists_selfdual,
    exists_selfdual_reason,
    generator_matrix,
    get_decomposition,
    inseparable_counts,
    inseparable_enumerate,
    inseparable_enumerate_distinct,
    is_selfdual,
    is_selforthogonal,
    min_distance,
    random_selfdual,
    subspaces_from_code,
    twisted_bullet,
    twisted_enumerate,
)
from .decomposition import Decomposition, FactorComponent, build_decomposition
from .finite_field import (
    AbsoluteGalois,
    ExtensionField,
    PrimeField,
    QuotientGalois,
    RelativeExtension,
    canonical_modulus,
    is_square,
    make_extension,
    sqrt,
)
from .geometry import (
    SesquiSpace,
    count_isotropic,
    enumerate_isotropic_maximal,
    enumerate_subspaces,
    hyperbolic_decomposition,
    q_binomial,
    random_isotropic_maximal,
    random_subspace,
    solve_isotropy_equation,
    witt_index_is_maximal,
)
from .oracle import OracleReport, brute_codes, brute_isotropic
from .ore import OrePoly, OreQuotient, OreRing

__version__ = "0.1.0"

__all__ = [
    "AbsoluteGalois",
    "BudgetExceeded",
    "CodeParameters",
    "Decomposition",
    "ExtensionField",
    "FactorComponent",
    "OracleReport",
    "OrePoly",
    "OreQuotient",
    "OreRing",
    "PrimeField",
    "QuotientGalois",
    "RelativeExtension",
    "SesquiSpace",
    "SkewCode",
    "TwistSpec",
    "brute_codes",
    "brute_isotropic",
    "build_decomposition",
    "canonical_modulus",
    "code_from_subspaces",
    "count_isotropic",
    "count_selfdual",
    "dual_code",
    "enumerate_isotropic_maximal",
    "enumerate_selfdual",
    "enumerate_subspaces",
    "exists_selfdual",
    "exists_selfdual_reason",
    "generator_matrix",
    "get_decomposition",
    "hyperbolic_decomposition",
    "inseparable_counts",
    "inseparable_enumerate",
    "inseparable_enumerate_distinct",
    "is_selfdual",
    "is_selforthogonal",
    "is_square",
    "make_extension",
    "min_distance",
    "q_binomial",
    "random_isotropic_maximal",
    "random_selfdual",
    "random_subspace",
    "solve_isotropy_equation",
    "sqrt",
    "subspaces_from_code",
    "twisted_bullet",
    "twisted_enumerate",
    "witt_index_is_maximal",
]
