#include "qsm/state.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace qsm {

namespace {

void require_same_grid(const StateVector& a, const StateVector& b)
{
    if (a.grid != b.grid) {
        throw DimensionMismatch("states live on different grids (d=" +
                                std::to_string(a.grid.d) + " vs d=" + std::to_string(b.grid.d) + ")");
    }
}

void require_index(const GridSpec& grid, int n)
{
    if (!grid.contains(n)) {
        throw InvalidArgument("lattice index " + std::to_string(n) + " outside -q..q with q=" +
                              std::to_string(grid.q));
    }
}

} // namespace

StateVector::StateVector(GridSpec g, Vector a)
    : grid(g)
    , amplitudes(std::move(a))
{
    if (amplitudes.size() != grid.d) {
        throw DimensionMismatch("amplitude count " + std::to_string(amplitudes.size()) +
                                " does not match lattice size " + std::to_string(grid.d));
    }
    if (!amplitudes.allFinite()) {
        throw InvalidArgument("state contains non-finite amplitudes");
    }
}

StateVector zero_state(const GridSpec& grid)
{
    return StateVector(grid, Vector::Zero(grid.d));
}

StateVector basis_state(const GridSpec& grid, int n)
{
    require_index(grid, n);
    Vector a = Vector::Zero(grid.d);
    a(grid.offset(n)) = 1.0;
    return StateVector(grid, std::move(a));
}

StateVector trend_basis_state(const GridSpec& grid, int n)
{
    require_index(grid, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(grid.d));
    Vector a(grid.d);
    for (int k = -grid.q; k <= grid.q; ++k) {
        const int r = ((k * n) % grid.d + grid.d) % grid.d;
        a(grid.offset(k)) = std::polar(scale, 2.0 * std::numbers::pi * r / grid.d);
    }
    return StateVector(grid, std::move(a));
}

Complex inner_product(const StateVector& a, const StateVector& b)
{
    require_same_grid(a, b);
    return a.amplitudes.dot(b.amplitudes); // Eigen conjugates the left factor
}

StateVector normalize(const StateVector& psi)
{
    const double norm_sq = psi.amplitudes.squaredNorm();
    if (norm_sq < 1e-300) {
        throw NormalizationError("cannot normalize a zero state");
    }
    return StateVector(psi.grid, psi.amplitudes / std::sqrt(norm_sq));
}

bool is_normalized(const StateVector& psi, double tol)
{
    return std::abs(psi.amplitudes.squaredNorm() - 1.0) <= tol;
}

std::vector<double> probabilities(const StateVector& psi)
{
    if (!is_normalized(psi)) {
        throw InvalidArgument("probabilities requires a normalized state");
    }
    std::vector<double> p(static_cast<std::size_t>(psi.grid.d));
    for (int i = 0; i < psi.grid.d; ++i) {
        p[static_cast<std::size_t>(i)] = std::norm(psi.amplitudes(i));
    }
    return p;
}

} // namespace qsm
