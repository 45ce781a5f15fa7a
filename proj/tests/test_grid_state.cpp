#include "qsm/state.hpp"
#include "qsm/theta_gaussian.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace qsm;

TEST_CASE("make_grid builds the odd lattice d = 2q+1")
{
    const GridSpec g10 = make_grid(10);
    CHECK(g10.q == 10);
    CHECK(g10.d == 21);
    CHECK(g10.value(-10) == -0.10);
    CHECK(g10.value(0) == 0.0);
    CHECK(g10.value(10) == 0.10);
    CHECK(g10.value(-3) == -g10.value(3));

    const GridSpec g1 = make_grid(1);
    CHECK(g1.d == 3);
    CHECK(g1.value(-1) == -0.01);

    CHECK(make_grid(50).d == 101);
}

TEST_CASE("make_grid rejects q < 1")
{
    CHECK_THROWS_AS(make_grid(0), InvalidArgument);
    CHECK_THROWS_AS(make_grid(-2), InvalidArgument);
}

TEST_CASE("state construction validates length and finiteness")
{
    const GridSpec grid = make_grid(2);
    CHECK_THROWS_AS(StateVector(grid, Vector::Zero(4)), DimensionMismatch);

    Vector bad = Vector::Zero(grid.d);
    bad(0) = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS(StateVector(grid, bad), InvalidArgument);
}

TEST_CASE("canonical basis is orthonormal under the scalar product")
{
    const GridSpec grid = make_grid(10);
    const StateVector d3 = basis_state(grid, 3);
    const StateVector d5 = basis_state(grid, 5);
    CHECK(inner_product(d3, d3) == Complex(1.0, 0.0));
    CHECK(inner_product(d3, d5) == Complex(0.0, 0.0));
}

TEST_CASE("trend basis is orthonormal (roots-of-unity sums)")
{
    const GridSpec grid = make_grid(10);
    const StateVector p2 = trend_basis_state(grid, 2);
    const StateVector p7 = trend_basis_state(grid, 7);
    CHECK(std::abs(inner_product(p2, p2) - Complex(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(inner_product(p2, p7)) < 1e-12);
}

TEST_CASE("inner product is conjugate-linear in its first argument")
{
    const GridSpec grid = make_grid(5);
    std::mt19937_64 rng{11U};
    const StateVector a = testutil::random_state(grid, rng);
    const StateVector b = testutil::random_state(grid, rng);
    const Complex i(0.0, 1.0);
    const StateVector ia(grid, i * a.amplitudes);
    CHECK(std::abs(inner_product(ia, b) - (-i) * inner_product(a, b)) < 1e-14);
}

TEST_CASE("inner product rejects mismatched grids")
{
    const StateVector a = basis_state(make_grid(5), 0);
    const StateVector b = basis_state(make_grid(6), 0);
    CHECK_THROWS_AS(inner_product(a, b), DimensionMismatch);
}

TEST_CASE("normalize scales away a constant factor")
{
    const GridSpec grid = make_grid(10);
    const StateVector d0 = basis_state(grid, 0);
    const StateVector scaled(grid, 2.0 * d0.amplitudes);
    const StateVector result = normalize(scaled);
    CHECK((result.amplitudes - d0.amplitudes).norm() < 1e-15);
    CHECK(is_normalized(result, 1e-12));
}

TEST_CASE("normalize rejects the zero state")
{
    CHECK_THROWS_AS(normalize(zero_state(make_grid(10))), NormalizationError);
}

TEST_CASE("normalized theta Gaussian matches the direct-sum oracle")
{
    const GridSpec grid = make_grid(10);
    Vector g(grid.d);
    for (int n = -grid.q; n <= grid.q; ++n) {
        g(grid.offset(n)) = testutil::theta_sum_oracle(0.2, grid.d, n);
    }
    const StateVector gamma = normalize(StateVector(grid, g));
    CHECK(is_normalized(gamma, 1e-12));
    // peak probability, frozen from the oracle
    CHECK(std::abs(std::norm(gamma(0)) - 0.13763866473614) < 1e-9);

    const StateVector from_impl = gaussian_state(ThetaGaussianSpec{0.2, grid});
    CHECK((from_impl.amplitudes - gamma.amplitudes).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("probabilities of basis and trend states")
{
    const GridSpec grid = make_grid(10);
    const auto p_basis = probabilities(basis_state(grid, -2));
    for (int n = -grid.q; n <= grid.q; ++n) {
        CHECK(p_basis[static_cast<std::size_t>(grid.offset(n))] == (n == -2 ? 1.0 : 0.0));
    }

    const auto p_trend = probabilities(trend_basis_state(grid, 4));
    for (double p : p_trend) {
        CHECK(std::abs(p - 1.0 / grid.d) < 1e-15);
    }
}

TEST_CASE("probabilities are non-negative and sum to one for random states")
{
    std::mt19937_64 rng{23U};
    for (int q : {1, 10, 50}) {
        const GridSpec grid = make_grid(q);
        for (int rep = 0; rep < 20; ++rep) {
            const auto p = probabilities(testutil::random_state(grid, rng));
            double sum = 0.0;
            for (double v : p) {
                CHECK(v >= 0.0);
                sum += v;
            }
            CHECK(std::abs(sum - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("probabilities rejects an un-normalized state")
{
    const GridSpec grid = make_grid(3);
    const StateVector two(grid, 2.0 * basis_state(grid, 0).amplitudes);
    CHECK_THROWS_AS(probabilities(two), InvalidArgument);
}
