#pragma once

#include "qsm/state.hpp"

namespace qsm {

/// Unitary d-point Fourier matrix: rows are trend indices k, columns return
/// indices n (both signed), entries exp(-2*pi*i*k*n/d)/sqrt(d).
Matrix dft_matrix(const GridSpec& grid);

/// Inverse transform matrix, kernel exp(+2*pi*i*k*n/d)/sqrt(d). Equals the
/// adjoint of dft_matrix.
Matrix dft_inverse_matrix(const GridSpec& grid);

/// F[psi](k/100) = (1/sqrt(d)) * sum_n exp(-2*pi*i*k*n/d) * psi(n/100).
StateVector dft_forward(const StateVector& psi);

/// F^-1[psi](n/100) = (1/sqrt(d)) * sum_k exp(+2*pi*i*k*n/d) * psi(k/100).
StateVector dft_inverse(const StateVector& psi);

} // namespace qsm
