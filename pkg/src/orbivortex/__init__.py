"""Exact topology and index theory of SO(3) vortex moduli on orbifold surfaces."""

from .errors import (
    DomainError,
    InvariantViolation,
    NoConePoints,
    NotCoprime,
    NotSmooth,
    OrbifoldError,
    SurfaceMismatch,
)
from .index import (
    chi_line,
    chi_u2,
    h1_vanishes,
    serre_dual,
    zeta_weight_sum,
    zeta_weight_sum_closed,
    zeta_weight_sum_numeric,
)
from .moduli import (
    AbelianStratum,
    FlatStatus,
    FlatTag,
    LineReduction,
    ModuliReport,
    OrbifoldU2Bundle,
    abelian_strata,
    classification_report,
    compatible_reductions,
    degree_condition,
    enumerate_u2_bundles,
    flat_expected_dim,
    flat_status,
    irreducible_dim,
    morse_index,
    odd_determinant,
)
from .orbifold import (
    DivisorClass,
    OrbifoldLineBundle,
    OrbifoldSurface,
    c1,
    canonical_bundle,
    dual,
    euler_characteristic,
    fundamental_line_bundle,
    line_bundle_from_divisor,
    picard_power,
    power,
    tensor,
    trivial_bundle,
)
from .seifert import (
    SeifertManifold,
    SeifertMonopoleReport,
    c_eta,
    s1_times_sigma_report,
    seifert_monopole_report,
    u2_critical_parameters,
)

__version__ = "0.1.0"
