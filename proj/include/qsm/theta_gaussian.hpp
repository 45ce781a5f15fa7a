#pragma once

#include "qsm/state.hpp"

namespace qsm {

/// Parameters of the equilibrium finite Gaussian g_alpha.
struct ThetaGaussianSpec {
    double alpha = 1.0;              ///< width parameter, must be > 0
    GridSpec grid;
    double truncation_tol = 1e-16;   ///< series tail bound, must be > 0
};

/// Theta lattice sum g_alpha(n/100) = sum_m exp(-alpha*pi*(m*d + n)^2 / d),
/// summed symmetrically outward from m = 0 until the next pair of terms
/// drops below truncation_tol. Strictly positive and even in n.
double g_alpha(const ThetaGaussianSpec& spec, int n);

/// Normalized equilibrium state gamma_alpha = g_alpha / ||g_alpha||:
/// strictly positive, even, unimodal.
StateVector gaussian_state(const ThetaGaussianSpec& spec);

/// Self-consistency probe of the Fourier closure F[g_alpha] = g_{1/alpha}/sqrt(alpha).
/// Returns max_k |F[g_alpha](k/100) - g_{1/alpha}(k/100)/sqrt(alpha)|.
double check_ruzzi(double alpha, const GridSpec& grid);

} // namespace qsm
