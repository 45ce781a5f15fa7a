"""Finite-dimensional quantum model of a price-limited stock market.

States live on the return lattice {-q/100, ..., q/100}; the rate-of-return
and trend operators are a finite-Fourier-conjugate pair, the equilibrium
distribution is a theta-function Gaussian, and time evolution follows a
Schroedinger-type equation under a trader-information Hamiltonian.
"""

from ._qsm import (
    DimensionMismatchError,
    EigenSystem,
    EvolutionParams,
    GridSpec,
    HermitianOperator,
    IntegrationMethod,
    InvalidArgumentError,
    MostProbableReturn,
    NormalizationError,
    NumericError,
    PotentialSpec,
    StateVector,
    Trajectory,
    basis_state,
    check_ruzzi,
    dft_forward,
    dft_inverse,
    dft_inverse_matrix,
    dft_matrix,
    eigendecompose,
    expectation,
    g_alpha,
    gaussian_state,
    hamiltonian_at,
    inner_product,
    integrate_tdse,
    is_normalized,
    make_grid,
    most_probable_return,
    normalize,
    price_operator,
    probabilities,
    propagate_static,
    propagator_matrix,
    rate_of_return_operator,
    trend_basis_state,
    trend_operator,
    zero_state,
)

__all__ = [
    "DimensionMismatchError",
    "EigenSystem",
    "EvolutionParams",
    "GridSpec",
    "HermitianOperator",
    "IntegrationMethod",
    "InvalidArgumentError",
    "MostProbableReturn",
    "NormalizationError",
    "NumericError",
    "PotentialSpec",
    "StateVector",
    "Trajectory",
    "basis_state",
    "check_ruzzi",
    "dft_forward",
    "dft_inverse",
    "dft_inverse_matrix",
    "dft_matrix",
    "eigendecompose",
    "expectation",
    "g_alpha",
    "gaussian_state",
    "hamiltonian_at",
    "inner_product",
    "integrate_tdse",
    "is_normalized",
    "make_grid",
    "most_probable_return",
    "normalize",
    "price_operator",
    "probabilities",
    "propagate_static",
    "propagator_matrix",
    "rate_of_return_operator",
    "trend_basis_state",
    "trend_operator",
    "zero_state",
]
