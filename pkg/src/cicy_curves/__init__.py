"""Census of CICY threefolds in a product of two projective spaces and finiteness certificates
for the smooth rational curves they contain."""

from .census import (
    Census,
    CensusEntry,
    census_partition_report,
    duplicate_pairs,
    enumerate_census,
    p1_doubling_partner,
)
from .cohomology import (
    CohomologyQuery,
    IdealSheafQuery,
    NegativeResultWarning,
    curve_restriction_degree,
    degenerate_twist_reduction,
    h0_ideal_sheaf,
    h_product,
    h_projective_space,
)
from .configuration import (
    Bidegree,
    BoundViolation,
    CodimMismatch,
    ColumnSumViolation,
    ConfigurationError,
    ConfigurationMatrix,
    FactorDims,
    RowSumViolation,
    TwistDegree,
    UnitFactorColumn,
    canonical_form,
    codimension_bound_check,
    is_block_diagonal,
    is_degenerate,
    validate_configuration,
)
from .finiteness import (
    AmbientTooSmall,
    DimensionReport,
    FinitenessCertificate,
    PreconditionViolation,
    Vanishing,
    Verdict,
    dim_family,
    dim_moduli_curves,
    fiber_dimension,
    finiteness_certificate,
    h1_vanishing_by_regularity,
    in_w_set,
    z_set,
)
from .verify import VerificationReport, verify_paper

__version__ = "0.1.0"
