"""Generalized determinant of rectangular real matrices."""

from ._gdet import (
    CapacityError,
    CramerSolution,
    DimensionError,
    DomainError,
    GdetError,
    GdetResult,
    InconsistentError,
    ParseError,
    RankError,
    SingularError,
    ToleranceConfig,
    VolumeResult,
    check_cauchy_binet,
    check_left_multiplication,
    check_multiplication,
    cramer_solve,
    gdet,
    gdet_exact_oracle,
    gdet_minor_oracle,
    generalized_volume,
    gram_magnitude,
    in_subspace,
    in_variety,
    parse_matrix,
    principal_rows,
    qr_factor,
    render_matrix,
    sigma_max_oracle,
    sign,
    sign_oracle,
    singular_value_magnitude,
    singular_values,
)

__all__ = [name for name in dir() if not name.startswith("_")]
