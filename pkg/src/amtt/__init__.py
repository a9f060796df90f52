"""Exact verification toolkit for the all-minors matrix tree theorem."""

from .errors import (
    AmttError,
    ContractError,
    DimensionError,
    DomainError,
    InvariantError,
    ResourceGuardError,
    VertexIndexError,
)
from .forests import (
    OrientedForest,
    enumerate_forests,
    has_oriented_path,
    induced_bijection,
    is_descendant,
    is_valid_forest,
)
from .linalg import (
    ExactMatrix,
    VertexSubset,
    det_exact,
    is_semi_laplacian,
    minor,
    random_semi_laplacian,
)
from .poly import EdgePolynomial
from .signs import (
    cancellation_pairs,
    epsilon,
    epsilon_double_prime,
    epsilon_prime,
    glue,
    reattach,
    sgn_bijection,
)
from .theorem import (
    VerificationReport,
    forest_monomial,
    forest_sum,
    generic_semi_laplacian,
    partial_forest_sum,
    partial_minor_det,
    symbolic_verify,
    verify_identity,
)

__version__ = "0.1.0"
