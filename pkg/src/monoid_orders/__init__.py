"""Exact orders of finite reductive monoids with zero.

Everything is computed symbolically as integer-coefficient polynomials in q
and only then evaluated at concrete prime powers, so inexact divisions (which
would signal bugs or inconsistent lattice data) can never hide.
"""

from .crosssection import (
    CrossSectionLattice,
    LatticeEntry,
    is_j_irreducible,
    j_irreducible_lattice,
    load_lattice,
    symplectic_lattice,
)
from .errors import (
    ClassificationFailure,
    EnumerationTooLarge,
    GroupTooLarge,
    IndexOutOfRange,
    InvalidSupport,
    InvariantViolation,
    MonoidOrdersError,
    NonExactDivision,
    NonPrimeModulus,
    NotJIrreducible,
    UnsupportedType,
)
from .oracle import (
    PrimeFieldMatrix,
    RankHistogram,
    count_subspaces,
    enumerate_rank_histogram,
    rank,
)
from .orders import (
    GroupSizes,
    OrderReport,
    gl_strata,
    group_sizes,
    h_polynomial,
    isotropy_size,
    order_thm31,
    order_thm33,
    order_thm34,
    order_thm41,
    symplectic_h_polynomial,
    symplectic_order,
    symplectic_stratum,
)
from .qpoly import (
    QPolynomial,
    div_exact,
    eval_big,
    gaussian_binomial,
    is_palindromic,
)
from .rootsystem import (
    CartanType,
    RootSystemData,
    build,
    connected_components,
    degrees,
    parse_subset,
    poincare_product,
    positive_count_of_subset,
    subset_poincare,
)
from .weyl import (
    WeylElement,
    WeylGroup,
    generate,
    length_gen_poly,
    min_coset_reps,
    parabolic,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
