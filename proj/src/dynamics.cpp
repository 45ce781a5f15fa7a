#include "qsm/dynamics.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>
#include <utility>

namespace qsm {

namespace {

constexpr double kRk4DriftLimit = 1e-4;
constexpr double kSampleGridTol = 1e-9; // relative tolerance for t being a multiple of dt

void validate_params(const EvolutionParams& params)
{
    if (!(params.mu > 0.0)) {
        throw InvalidArgument("mu must be positive, got " + std::to_string(params.mu));
    }
    if (!(params.omega > 0.0)) {
        throw InvalidArgument("omega must be positive, got " + std::to_string(params.omega));
    }
    if (!(params.dt > 0.0)) {
        throw InvalidArgument("dt must be positive, got " + std::to_string(params.dt));
    }
}

Eigen::VectorXd potential_diagonal(const GridSpec& grid, const PotentialSpec& pot, double t)
{
    Eigen::VectorXd v(grid.d);
    for (int n = -grid.q; n <= grid.q; ++n) {
        v(grid.offset(n)) = pot.value(grid.value(n), t);
    }
    return v;
}

// exp(-i dt H) phi via the spectral decomposition of H.
Vector exp_apply(const Matrix& h, double dt, const Vector& phi)
{
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw NumericError("eigendecomposition failed during time stepping");
    }
    const Vector coeffs = solver.eigenvectors().adjoint() * phi;
    const Vector phases =
        (Complex(0.0, -dt) * solver.eigenvalues().array().cast<Complex>()).exp().matrix();
    return solver.eigenvectors() * phases.cwiseProduct(coeffs);
}

} // namespace

PotentialSpec PotentialSpec::none()
{
    return PotentialSpec{};
}

PotentialSpec PotentialSpec::cosine_information(double beta, double omega)
{
    PotentialSpec pot;
    pot.kind_ = Kind::cosine_information;
    pot.beta_ = beta;
    pot.omega_ = omega;
    return pot;
}

PotentialSpec PotentialSpec::custom_diagonal(std::function<double(double, double)> v)
{
    if (!v) {
        throw InvalidArgument("custom diagonal potential requires a callable");
    }
    PotentialSpec pot;
    pot.kind_ = Kind::custom_diagonal;
    pot.v_ = std::move(v);
    return pot;
}

double PotentialSpec::value(double r, double t) const
{
    switch (kind_) {
    case Kind::none:
        return 0.0;
    case Kind::cosine_information:
        return beta_ * r * std::cos(omega_ * t);
    case Kind::custom_diagonal:
        return v_(r, t);
    }
    return 0.0;
}

HermitianOperator hamiltonian_at(const GridSpec& grid, const EvolutionParams& params,
                                 const PotentialSpec& pot, double t)
{
    validate_params(params);
    const Matrix trend = trend_operator(grid).entries();
    Matrix h = (trend * trend) / (2.0 * params.mu);
    h.diagonal() += potential_diagonal(grid, pot, t).cast<Complex>();
    return HermitianOperator(grid, std::move(h));
}

Matrix propagator_matrix(const HermitianOperator& h, double t)
{
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.entries());
    if (solver.info() != Eigen::Success) {
        throw NumericError("eigendecomposition failed for the propagator");
    }
    const Vector phases =
        (Complex(0.0, -t) * solver.eigenvalues().array().cast<Complex>()).exp().matrix();
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

StateVector propagate_static(const HermitianOperator& h, const StateVector& psi0, double t)
{
    if (psi0.grid != h.grid()) {
        throw DimensionMismatch("operator and state live on different grids");
    }
    if (!is_normalized(psi0)) {
        throw InvalidArgument("propagate_static requires a normalized initial state");
    }
    return StateVector(psi0.grid, exp_apply(h.entries(), t, psi0.amplitudes));
}

Trajectory integrate_tdse(const GridSpec& grid, const EvolutionParams& params,
                          const PotentialSpec& pot, const StateVector& psi0,
                          std::vector<double> sample_times)
{
    validate_params(params);
    if (psi0.grid != grid) {
        throw DimensionMismatch("initial state does not live on the requested grid");
    }
    if (!is_normalized(psi0)) {
        throw InvalidArgument("integrate_tdse requires a normalized initial state");
    }
    if (sample_times.empty()) {
        throw InvalidArgument("at least one sample time is required");
    }
    if (sample_times.front() != 0.0) {
        sample_times.insert(sample_times.begin(), 0.0); // the opening state is always recorded
    }
    const double dt = params.dt;
    std::vector<long long> sample_steps;
    sample_steps.reserve(sample_times.size());
    for (std::size_t j = 0; j < sample_times.size(); ++j) {
        const double t = sample_times[j];
        if (t < 0.0) {
            throw InvalidArgument("sample times must be non-negative");
        }
        if (j > 0 && t <= sample_times[j - 1]) {
            throw InvalidArgument("sample times must be strictly increasing");
        }
        const long long steps = std::llround(t / dt);
        if (std::abs(t - static_cast<double>(steps) * dt) > kSampleGridTol * std::max(1.0, t)) {
            throw InvalidArgument("sample time " + std::to_string(t) +
                                  " is not an integer multiple of dt=" + std::to_string(dt));
        }
        sample_steps.push_back(steps);
    }

    // The kinetic part is fixed; only the diagonal potential changes per step.
    const Matrix trend = trend_operator(grid).entries();
    const Matrix kinetic = (trend * trend) / (2.0 * params.mu);

    Trajectory traj;
    traj.sample_times = sample_times;
    traj.states.reserve(sample_times.size());
    traj.raw_norm_drift.reserve(sample_times.size());

    Vector phi = psi0.amplitudes;
    double drift = 0.0;
    std::size_t next = 0;
    auto record = [&](long long step) {
        while (next < sample_steps.size() && sample_steps[next] == step) {
            traj.states.push_back(normalize(StateVector(grid, phi)));
            traj.raw_norm_drift.push_back(drift);
            ++next;
        }
    };
    record(0);

    const bool reuse_step = params.method == IntegrationMethod::unitary_midpoint &&
                            pot.time_independent();
    Matrix fixed_step;
    if (reuse_step) {
        fixed_step = propagator_matrix(HermitianOperator(grid, kinetic), dt);
    }

    const long long total_steps = sample_steps.back();
    for (long long step = 0; step < total_steps; ++step) {
        const double t = static_cast<double>(step) * dt;
        if (params.method == IntegrationMethod::unitary_midpoint) {
            if (reuse_step) {
                phi = fixed_step * phi;
            } else {
                Matrix h = kinetic;
                h.diagonal() += potential_diagonal(grid, pot, t + 0.5 * dt).cast<Complex>();
                phi = exp_apply(h, dt, phi);
            }
        } else {
            const Eigen::VectorXcd v0 = potential_diagonal(grid, pot, t).cast<Complex>();
            const Eigen::VectorXcd vm = potential_diagonal(grid, pot, t + 0.5 * dt).cast<Complex>();
            const Eigen::VectorXcd v1 = potential_diagonal(grid, pot, t + dt).cast<Complex>();
            const Complex minus_i(0.0, -1.0);
            auto rhs = [&](const Vector& y, const Eigen::VectorXcd& v) -> Vector {
                return minus_i * (kinetic * y + v.cwiseProduct(y));
            };
            const Vector k1 = rhs(phi, v0);
            const Vector k2 = rhs(phi + 0.5 * dt * k1, vm);
            const Vector k3 = rhs(phi + 0.5 * dt * k2, vm);
            const Vector k4 = rhs(phi + dt * k3, v1);
            phi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        drift = std::max(drift, std::abs(phi.norm() - 1.0));
        if (params.method == IntegrationMethod::rk4 && drift > kRk4DriftLimit) {
            throw NumericError("rk4 norm drift " + std::to_string(drift) + " exceeds " +
                               std::to_string(kRk4DriftLimit) + " at t=" +
                               std::to_string(t + dt) + "; reduce dt");
        }
        record(step + 1);
    }
    traj.norm_drift = drift;
    return traj;
}

MostProbableReturn most_probable_return(const StateVector& psi, double tie_tol)
{
    if (!is_normalized(psi)) {
        throw InvalidArgument("most_probable_return requires a normalized state");
    }
    if (tie_tol < 0.0) {
        throw InvalidArgument("tie tolerance must be non-negative");
    }
    const GridSpec& grid = psi.grid;
    MostProbableReturn result;
    double best = -1.0;
    for (int n = -grid.q; n <= grid.q; ++n) {
        const double p = std::norm(psi(n));
        if (p > best) {
            best = p;
            result.argmax = n;
        }
    }
    for (int n = -grid.q; n <= grid.q; ++n) {
        if (std::norm(psi(n)) >= best - tie_tol) {
            result.tied.push_back(n);
        }
    }
    return result;
}

} // namespace qsm
