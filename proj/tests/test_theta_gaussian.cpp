#include "qsm/theta_gaussian.hpp"

#include "qsm/fourier.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace qsm;

TEST_CASE("g_alpha matches the fixed-truncation oracle and frozen values")
{
    const GridSpec grid = make_grid(10);
    const ThetaGaussianSpec spec{0.2, grid};

    // frozen from the direct series: 1 + 2*exp(-0.2*pi*21) + ...
    CHECK(std::abs(g_alpha(spec, 0) - 1.0000037209112) < 1e-9);
    CHECK(std::abs(g_alpha(spec, 0) - 1.0000037) < 1e-6);

    for (int n = -grid.q; n <= grid.q; ++n) {
        CHECK(std::abs(g_alpha(spec, n) - testutil::theta_sum_oracle(0.2, grid.d, n)) < 1e-14);
    }
}

TEST_CASE("g_alpha is even in n, exactly as computed")
{
    const GridSpec grid = make_grid(10);
    for (double alpha : {0.2, 0.5, 1.0, 2.0, 5.0}) {
        const ThetaGaussianSpec spec{alpha, grid};
        for (int n = 1; n <= grid.q; ++n) {
            CHECK(g_alpha(spec, n) == g_alpha(spec, -n));
        }
    }
}

TEST_CASE("g_alpha is strictly positive wherever representable")
{
    const GridSpec grid = make_grid(10);
    for (double alpha : {0.05, 0.2, 1.0, 5.0}) {
        const ThetaGaussianSpec spec{alpha, grid};
        for (int n = -grid.q; n <= grid.q; ++n) {
            CHECK(g_alpha(spec, n) > 0.0);
        }
    }
}

TEST_CASE("large alpha concentrates g on the origin")
{
    const GridSpec grid = make_grid(10);
    // at alpha = 50 the single m = 0 term dominates everything
    const ThetaGaussianSpec spec50{50.0, grid};
    CHECK(std::abs(g_alpha(spec50, 0) - 1.0) < 1e-10);
    const double off_peak = std::exp(-50.0 * std::numbers::pi / 21.0);
    for (int n = 1; n <= grid.q; ++n) {
        CHECK(g_alpha(spec50, n) <= off_peak);
        CHECK(g_alpha(spec50, n) < g_alpha(spec50, n - 1) + 1e-300);
    }
    // pushing further drives every off-origin value below 1e-10
    const ThetaGaussianSpec spec200{200.0, grid};
    CHECK(std::abs(g_alpha(spec200, 0) - 1.0) < 1e-10);
    for (int n = 1; n <= grid.q; ++n) {
        CHECK(g_alpha(spec200, n) < 1e-10);
    }
}

TEST_CASE("truncation is sound: two more terms change nothing beyond the tolerance")
{
    const GridSpec grid = make_grid(10);
    // coarse tolerances, where the omitted tail dwarfs double rounding
    for (double tol : {1e-8, 1e-12}) {
        for (double alpha : {0.05, 0.2, 1.0}) {
            const ThetaGaussianSpec spec{alpha, grid, tol};
            for (int n : {-10, -3, 0, 7, 10}) {
                const double wide = testutil::theta_sum_oracle(alpha, grid.d, n, 24);
                CHECK(std::abs(g_alpha(spec, n) - wide) <= tol);
            }
        }
    }
    // at the default tolerance the sum agrees with the wide oracle to a few ulps
    for (double alpha : {0.05, 0.2, 1.0}) {
        const ThetaGaussianSpec spec{alpha, grid};
        for (int n : {-10, -3, 0, 7, 10}) {
            const double wide = testutil::theta_sum_oracle(alpha, grid.d, n, 24);
            CHECK(std::abs(g_alpha(spec, n) - wide) <= 1e-15);
        }
    }
}

TEST_CASE("g_alpha rejects invalid arguments")
{
    const GridSpec grid = make_grid(10);
    CHECK_THROWS_AS(g_alpha(ThetaGaussianSpec{0.0, grid}, 0), InvalidArgument);
    CHECK_THROWS_AS(g_alpha(ThetaGaussianSpec{-1.0, grid}, 0), InvalidArgument);
    CHECK_THROWS_AS(g_alpha(ThetaGaussianSpec{1.0, grid}, 11), InvalidArgument);
    CHECK_THROWS_AS(g_alpha(ThetaGaussianSpec{1.0, grid, 0.0}, 0), InvalidArgument);
}

TEST_CASE("gaussian_state is normalized, positive, even and unimodal")
{
    const GridSpec grid = make_grid(10);
    for (double alpha : {0.2, 1.0, 2.0}) {
        const StateVector gamma = gaussian_state(ThetaGaussianSpec{alpha, grid});
        double sum = 0.0;
        for (int n = -grid.q; n <= grid.q; ++n) {
            CHECK(gamma(n).imag() == 0.0);
            CHECK(gamma(n).real() > 0.0);
            CHECK(gamma(n) == gamma(-n));
            sum += std::norm(gamma(n));
        }
        CHECK(std::abs(sum - 1.0) < 1e-12);
        for (int n = 0; n < grid.q; ++n) {
            CHECK(gamma(n).real() >= gamma(n + 1).real());
        }
    }
}

TEST_CASE("gamma peak heights: frozen value and width ordering")
{
    const GridSpec grid = make_grid(10);
    const StateVector g02 = gaussian_state(ThetaGaussianSpec{0.2, grid});
    const StateVector g1 = gaussian_state(ThetaGaussianSpec{1.0, grid});
    const StateVector g2 = gaussian_state(ThetaGaussianSpec{2.0, grid});

    CHECK(std::abs(std::norm(g02(0)) - 0.13763866473614) < 1e-9);
    CHECK(std::abs(std::norm(g02(0)) - 0.1380) < 5e-4);

    // narrower in return space as alpha grows
    CHECK(g2(0).real() > g1(0).real());
    CHECK(g1(0).real() > g02(0).real());
}

TEST_CASE("Fourier width duality across the alpha grid")
{
    const GridSpec grid = make_grid(10);
    const double alphas[] = {0.2, 0.5, 1.0, 2.0, 5.0};
    double prev_direct = -1.0;
    double prev_trans = -1.0;
    bool first = true;
    for (double alpha : alphas) {
        const StateVector gamma = gaussian_state(ThetaGaussianSpec{alpha, grid});
        auto variance = [&](const StateVector& s) {
            double var = 0.0;
            for (int n = -grid.q; n <= grid.q; ++n) {
                var += grid.value(n) * grid.value(n) * std::norm(s(n));
            }
            return var;
        };
        const double direct = variance(gamma);
        const double transformed = variance(dft_forward(gamma));
        if (!first) {
            CHECK(direct < prev_direct);      // return-space width shrinks
            CHECK(transformed > prev_trans);  // trend-space width grows
        }
        prev_direct = direct;
        prev_trans = transformed;
        first = false;
    }
}

TEST_CASE("Fourier closure of the Gaussian family holds on all tested grids")
{
    for (int q : {5, 10, 25}) {
        const GridSpec grid = make_grid(q);
        for (double alpha : {0.2, 0.5, 1.0, 2.0, 5.0}) {
            CHECK(check_ruzzi(alpha, grid) <= 1e-10);
        }
    }
}

TEST_CASE("alpha = 1 Gaussian is a fixed point of the transform")
{
    const GridSpec grid = make_grid(10);
    const ThetaGaussianSpec spec{1.0, grid};
    Vector g(grid.d);
    for (int n = -grid.q; n <= grid.q; ++n) {
        g(grid.offset(n)) = g_alpha(spec, n);
    }
    const StateVector state(grid, g);
    CHECK((dft_forward(state).amplitudes - state.amplitudes).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("alpha = 5 transform reproduces the alpha = 0.2 table")
{
    const GridSpec grid = make_grid(10);
    Vector g5(grid.d);
    for (int n = -grid.q; n <= grid.q; ++n) {
        g5(grid.offset(n)) = g_alpha(ThetaGaussianSpec{5.0, grid}, n);
    }
    const StateVector transformed = dft_forward(StateVector(grid, g5));
    const double scale = 1.0 / std::sqrt(5.0);
    for (int k = -grid.q; k <= grid.q; ++k) {
        const double expected = scale * testutil::theta_sum_oracle(0.2, grid.d, k);
        CHECK(std::abs(transformed(k) - expected) < 1e-10);
    }
}
