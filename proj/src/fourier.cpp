#include "qsm/fourier.hpp"

#include <cmath>
#include <numbers>

namespace qsm {

namespace {

// Kernel matrix with entries exp(sign * 2*pi*i*k*n/d)/sqrt(d). The phase is
// reduced mod d before the trig call so conjugate entries pair up exactly.
Matrix kernel(const GridSpec& grid, int sign)
{
    const int d = grid.d;
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    Matrix m(d, d);
    for (int k = -grid.q; k <= grid.q; ++k) {
        for (int n = -grid.q; n <= grid.q; ++n) {
            const int r = ((sign * k * n) % d + d) % d;
            m(grid.offset(k), grid.offset(n)) = std::polar(scale, 2.0 * std::numbers::pi * r / d);
        }
    }
    return m;
}

} // namespace

Matrix dft_matrix(const GridSpec& grid)
{
    return kernel(grid, -1);
}

Matrix dft_inverse_matrix(const GridSpec& grid)
{
    return kernel(grid, +1);
}

StateVector dft_forward(const StateVector& psi)
{
    return StateVector(psi.grid, dft_matrix(psi.grid) * psi.amplitudes);
}

StateVector dft_inverse(const StateVector& psi)
{
    return StateVector(psi.grid, dft_inverse_matrix(psi.grid) * psi.amplitudes);
}

} // namespace qsm
