#pragma once

#include "qsm/operators.hpp"

#include <functional>
#include <vector>

namespace qsm {

enum class IntegrationMethod {
    unitary_midpoint, ///< exponential midpoint stepping, exactly norm-preserving
    rk4,              ///< classical Runge-Kutta, norm drift monitored
};

/// Parameters of a time evolution run under H(t) = T^2/(2 mu) + V(R, t).
struct EvolutionParams {
    double mu = 1.0;      ///< inertia of the traders' effort to move prices
    double beta = 0.0;    ///< information-coupling strength
    double omega = 1.0;   ///< information angular frequency (1/s)
    double dt = 1.0;      ///< integrator step (s)
    IntegrationMethod method = IntegrationMethod::unitary_midpoint;
};

/// Diagonal potential V(r, t) acting multiplicatively on the return lattice.
class PotentialSpec {
public:
    enum class Kind { none, cosine_information, custom_diagonal };

    /// V = 0 (free evolution).
    static PotentialSpec none();
    /// V(r, t) = beta * r * cos(omega * t), the periodic market-information term.
    static PotentialSpec cosine_information(double beta, double omega);
    /// Arbitrary real diagonal potential v(r, t).
    static PotentialSpec custom_diagonal(std::function<double(double, double)> v);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] double beta() const { return beta_; }
    [[nodiscard]] double omega() const { return omega_; }
    /// v(r, t); zero for Kind::none.
    [[nodiscard]] double value(double r, double t) const;
    /// True when v does not depend on t, so per-step propagators may be reused.
    [[nodiscard]] bool time_independent() const { return kind_ == Kind::none; }

private:
    PotentialSpec() = default;
    Kind kind_ = Kind::none;
    double beta_ = 0.0;
    double omega_ = 0.0;
    std::function<double(double, double)> v_;
};

/// Sampled states of one evolution run. Stored states are renormalized; the
/// raw integrator norm drift is reported separately so no error is hidden.
struct Trajectory {
    std::vector<double> sample_times;     ///< strictly increasing, starts at 0
    std::vector<StateVector> states;      ///< renormalized, one per sample time
    std::vector<double> raw_norm_drift;   ///< running max |norm - 1| up to each sample
    double norm_drift = 0.0;              ///< max |norm - 1| over the whole run
};

/// H(t) = T^2/(2 mu) + diag(v(n/100, t)).
HermitianOperator hamiltonian_at(const GridSpec& grid, const EvolutionParams& params,
                                 const PotentialSpec& pot, double t);

/// Propagator matrix exp(-i t H) computed by eigendecomposition.
Matrix propagator_matrix(const HermitianOperator& h, double t);

/// exp(-i t H) psi0 = sum_i exp(-i t lambda_i) v_i <v_i, psi0> for a
/// time-independent Hamiltonian. psi0 must be normalized; the norm is
/// preserved to machine precision.
StateVector propagate_static(const HermitianOperator& h, const StateVector& psi0, double t);

/// Integrates i dPhi/dt = H(t) Phi from the normalized psi0, recording the
/// state at each requested time. Sample times must be non-negative, strictly
/// increasing and integer multiples of dt (no interpolation); the initial
/// state is always recorded, so 0 is prepended when absent. rk4 runs abort
/// with NumericError once the raw norm drift exceeds 1e-4.
Trajectory integrate_tdse(const GridSpec& grid, const EvolutionParams& params,
                          const PotentialSpec& pot, const StateVector& psi0,
                          std::vector<double> sample_times);

/// Lattice index with the largest probability plus every index whose
/// probability lies within tie_tol of that maximum.
struct MostProbableReturn {
    int argmax = 0;
    std::vector<int> tied; ///< ascending, always contains argmax
};

MostProbableReturn most_probable_return(const StateVector& psi, double tie_tol = 1e-6);

} // namespace qsm
