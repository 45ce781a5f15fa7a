#include "qsm/theta_gaussian.hpp"

#include "qsm/fourier.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qsm {

namespace {

void validate(const ThetaGaussianSpec& spec)
{
    if (!(spec.alpha > 0.0)) {
        throw InvalidArgument("gaussian width alpha must be positive, got " +
                              std::to_string(spec.alpha));
    }
    if (!(spec.truncation_tol > 0.0)) {
        throw InvalidArgument("truncation tolerance must be positive");
    }
}

} // namespace

double g_alpha(const ThetaGaussianSpec& spec, int n)
{
    validate(spec);
    if (!spec.grid.contains(n)) {
        throw InvalidArgument("lattice index " + std::to_string(n) + " outside -q..q with q=" +
                              std::to_string(spec.grid.q));
    }
    const double d = spec.grid.d;
    const double c = spec.alpha * std::numbers::pi / d;
    double sum = std::exp(-c * n * n);
    // Terms are positive and monotone decreasing in |m| for |n| <= q < d/2,
    // so stopping when the next +/-m pair is below tolerance bounds the tail.
    for (int m = 1;; ++m) {
        const double up = std::exp(-c * (m * d + n) * (m * d + n));
        const double down = std::exp(-c * (m * d - n) * (m * d - n));
        if (std::max(up, down) < spec.truncation_tol) {
            break;
        }
        sum += up + down;
    }
    return sum;
}

StateVector gaussian_state(const ThetaGaussianSpec& spec)
{
    validate(spec);
    Vector a(spec.grid.d);
    for (int n = -spec.grid.q; n <= spec.grid.q; ++n) {
        a(spec.grid.offset(n)) = g_alpha(spec, n);
    }
    return normalize(StateVector(spec.grid, std::move(a)));
}

double check_ruzzi(double alpha, const GridSpec& grid)
{
    const ThetaGaussianSpec direct{alpha, grid};
    const ThetaGaussianSpec dual{1.0 / alpha, grid};
    Vector g(grid.d);
    Vector expected(grid.d);
    const double scale = 1.0 / std::sqrt(alpha);
    for (int n = -grid.q; n <= grid.q; ++n) {
        g(grid.offset(n)) = g_alpha(direct, n);
        expected(grid.offset(n)) = scale * g_alpha(dual, n);
    }
    const Vector transformed = dft_matrix(grid) * g;
    return (transformed - expected).cwiseAbs().maxCoeff();
}

} // namespace qsm
