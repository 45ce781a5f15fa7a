#include "qsm/operators.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>
#include <utility>

namespace qsm {

HermitianOperator::HermitianOperator(GridSpec grid, Matrix entries, double tol)
    : grid_(grid)
    , entries_(std::move(entries))
{
    if (entries_.rows() != grid_.d || entries_.cols() != grid_.d) {
        throw DimensionMismatch("operator must be " + std::to_string(grid_.d) + "x" +
                                std::to_string(grid_.d) + ", got " + std::to_string(entries_.rows()) +
                                "x" + std::to_string(entries_.cols()));
    }
    const double defect = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (defect > tol) {
        throw InvalidArgument("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    entries_ = 0.5 * (entries_ + entries_.adjoint().eval());
}

StateVector HermitianOperator::apply(const StateVector& psi) const
{
    if (psi.grid != grid_) {
        throw DimensionMismatch("operator and state live on different grids");
    }
    return StateVector(grid_, entries_ * psi.amplitudes);
}

HermitianOperator rate_of_return_operator(const GridSpec& grid)
{
    Matrix m = Matrix::Zero(grid.d, grid.d);
    for (int n = -grid.q; n <= grid.q; ++n) {
        m(grid.offset(n), grid.offset(n)) = grid.value(n);
    }
    return HermitianOperator(grid, std::move(m));
}

HermitianOperator trend_operator(const GridSpec& grid)
{
    const Matrix r = rate_of_return_operator(grid).entries();
    Matrix t = dft_inverse_matrix(grid) * r * dft_matrix(grid);
    return HermitianOperator(grid, std::move(t));
}

HermitianOperator price_operator(const GridSpec& grid, double p0)
{
    if (!(p0 > 0.0)) {
        throw InvalidArgument("price base p0 must be positive, got " + std::to_string(p0));
    }
    Matrix m = Matrix::Zero(grid.d, grid.d);
    for (int n = -grid.q; n <= grid.q; ++n) {
        m(grid.offset(n), grid.offset(n)) = p0 * (1.0 + grid.value(n));
    }
    return HermitianOperator(grid, std::move(m));
}

double expectation(const HermitianOperator& op, const StateVector& psi)
{
    if (psi.grid != op.grid()) {
        throw DimensionMismatch("operator and state live on different grids");
    }
    if (!is_normalized(psi)) {
        throw InvalidArgument("expectation requires a normalized state");
    }
    const Complex raw = psi.amplitudes.dot(op.entries() * psi.amplitudes);
    if (std::abs(raw.imag()) > 1e-10) {
        throw NumericError("expectation value has residual imaginary part " +
                           std::to_string(raw.imag()));
    }
    return raw.real();
}

EigenSystem eigendecompose(const HermitianOperator& op)
{
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op.entries());
    if (solver.info() != Eigen::Success) {
        throw NumericError("eigendecomposition failed to converge");
    }
    EigenSystem sys;
    const int d = op.grid().d;
    sys.eigenvalues.reserve(static_cast<std::size_t>(d));
    sys.eigenvectors.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        sys.eigenvalues.push_back(solver.eigenvalues()(i));
        sys.eigenvectors.emplace_back(op.grid(), solver.eigenvectors().col(i));
    }
    return sys;
}

} // namespace qsm
