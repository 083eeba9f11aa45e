"""Quasi-Christoffel and quasi-Geronimus polynomials of order one."""

from .chains import ChainData, chain_sequence, quasi_chain_sequence
from .classical import JacobiParams, LaguerreParams, jacobi_recurrence, laguerre_recurrence
from .errors import (
    DegenerateParameterError,
    DegreeLimitError,
    DomainError,
    ExistenceError,
    MissingCoefficientError,
    NotARootError,
    NotOrthogonalizableError,
    NumericFailure,
    QuasiSpectralError,
    ShapeError,
)
from .jacobi_matrix import IntertwinerM, TridiagonalOperator, commutation_residual, intertwiner, truncate
from .opuc import (
    VerblunskySequence,
    christoffel_opuc,
    christoffel_opuc_poly,
    classify_unit_disc,
    quasi_christoffel_opuc,
    quasi_christoffel_opuc_poly,
    szego_sequence,
)
from .poly_core import MonicPolynomial, RecurrenceCoefficients, build_sequence, eval_recurrence
from .quasi import (
    Family,
    QuasiCoefficientFamily,
    compact_form_residual,
    gamma_closed_form,
    orthogonality_residual,
    quasi_coeffs,
    quasi_polynomial,
    quasi_recurrence,
    transformed_base,
)
from .spectral import (
    ChristoffelFamily,
    GeronimusFamily,
    christoffel_polynomial,
    christoffel_recurrence,
    geronimus_polynomial,
    geronimus_recurrence,
    jacobi_geronimus_family,
)
from .zeros import ZeroSet, classify_support, general_roots, interlace, ops_zeros

__version__ = "0.1.0"
