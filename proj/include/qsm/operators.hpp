#pragma once

#include "qsm/fourier.hpp"

#include <vector>

namespace qsm {

/// Dense d x d Hermitian matrix acting on states over a grid.
///
/// Construction measures the hermiticity defect max|A - A^dagger|: a defect
/// below `tol` is symmetrized away as (A + A^dagger)/2, a larger one is
/// rejected with InvalidArgument.
class HermitianOperator {
public:
    static constexpr double kHermiticityTol = 1e-10;

    HermitianOperator(GridSpec grid, Matrix entries, double tol = kHermiticityTol);

    [[nodiscard]] const GridSpec& grid() const { return grid_; }
    [[nodiscard]] const Matrix& entries() const { return entries_; }
    [[nodiscard]] Complex entry(int n, int m) const {
        return entries_(grid_.offset(n), grid_.offset(m));
    }

    [[nodiscard]] StateVector apply(const StateVector& psi) const;

private:
    GridSpec grid_;
    Matrix entries_;
};

/// Spectral decomposition of a Hermitian operator: ascending eigenvalues and
/// the matching orthonormal eigenvectors.
struct EigenSystem {
    std::vector<double> eigenvalues;
    std::vector<StateVector> eigenvectors;
};

/// Rate-of-return operator R: diagonal with entries n/100. R delta_n = (n/100) delta_n.
HermitianOperator rate_of_return_operator(const GridSpec& grid);

/// Trend operator T = F^-1 R F, the conjugate observable of the return.
/// T Phi_n = (n/100) Phi_n; its entries have zero diagonal and purely
/// imaginary off-diagonal values.
HermitianOperator trend_operator(const GridSpec& grid);

/// Price operator p0*(I + R); diagonal entries p0*(1 + n/100). Requires p0 > 0.
HermitianOperator price_operator(const GridSpec& grid, double p0);

/// <psi, op psi> for a normalized psi. The imaginary part of the raw scalar
/// product must not exceed 1e-10 and is discarded.
double expectation(const HermitianOperator& op, const StateVector& psi);

EigenSystem eigendecompose(const HermitianOperator& op);

} // namespace qsm
