#pragma once

#include "qsm/grid.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace qsm {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Complex wave function on the return lattice, stored in lattice order
/// n = -q..q. |psi(n/100)|^2 is the probability of a return of n percent.
struct StateVector {
    GridSpec grid;
    Vector amplitudes;

    StateVector() = default;
    /// Validates that `a` has grid.d entries and every amplitude is finite.
    StateVector(GridSpec g, Vector a);

    [[nodiscard]] Complex operator()(int n) const { return amplitudes(grid.offset(n)); }
    [[nodiscard]] Complex& operator()(int n) { return amplitudes(grid.offset(n)); }
    [[nodiscard]] double norm() const { return amplitudes.norm(); }
    [[nodiscard]] int size() const { return static_cast<int>(amplitudes.size()); }
};

StateVector zero_state(const GridSpec& grid);

/// Canonical basis vector delta_n (a return eigenstate).
StateVector basis_state(const GridSpec& grid, int n);

/// Trend basis vector Phi_n(k/100) = exp(2*pi*i*k*n/d)/sqrt(d), a discrete
/// plane wave and trend eigenstate.
StateVector trend_basis_state(const GridSpec& grid, int n);

/// Scalar product sum_n conj(a(n/100)) * b(n/100); conjugate-linear in `a`.
Complex inner_product(const StateVector& a, const StateVector& b);

/// psi / ||psi||. Throws NormalizationError when ||psi||^2 < 1e-300.
StateVector normalize(const StateVector& psi);

[[nodiscard]] bool is_normalized(const StateVector& psi, double tol = 1e-10);

/// |psi(n/100)|^2 in lattice order. Requires a normalized state.
std::vector<double> probabilities(const StateVector& psi);

} // namespace qsm
