"""Brauer classes, central simple algebras and their noncommutative motives."""

from .brauer import (
    GLOBAL,
    INF,
    LOCAL,
    REAL,
    TRIVIAL,
    AbstractAbelian,
    BrauerClass,
    FieldModel,
    GlobalRationals,
    LocalField,
    RealField,
    TrivialBr,
    add,
    canonical_key,
    class_index,
    neg,
    order,
    p_part,
    primary_decomposition,
    support_primes,
    zero_class,
)
from .bs import (
    BrauerSeveriVariety,
    ObstructionReport,
    admits_full_etale_collection,
    sod_motive,
    sod_triviality_check,
)
from .csa import (
    CentralSimpleAlgebra,
    make_csa,
    matrix_algebra,
    primary_decomposition_csa,
    tensor,
    tensor_power,
    underlying_division_algebra,
)
from .errors import (
    IndexDegreeViolation,
    InvalidClass,
    ModelMismatch,
    NCMotiveError,
    ParseError,
    RankTooLarge,
    ValidationError,
)
from .motive import (
    Motive,
    direct_sum,
    find_witnesses,
    is_isomorphic,
    is_isomorphic_oracle,
    motive_of,
    motive_of_csa,
    relevant_primes,
    trivial_motive,
)

__version__ = "0.1.0"
