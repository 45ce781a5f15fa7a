#include "qsm/csv.hpp"

#include "qsm/theta_gaussian.hpp"

#include <cstdio>
#include <fstream>
#include <string>

namespace qsm::io {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary); // '\n' line endings on every platform
    if (!out) {
        throw Error("cannot open " + path.string() + " for writing");
    }
    return out;
}

std::string join_tied(const std::vector<int>& tied)
{
    std::string s;
    for (std::size_t i = 0; i < tied.size(); ++i) {
        if (i > 0) {
            s += ';';
        }
        s += std::to_string(tied[i]);
    }
    return s;
}

} // namespace

std::string format_number(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_state_csv(const std::filesystem::path& path, const StateVector& psi)
{
    auto out = open_for_write(path);
    out << "n,re,im\n";
    for (int n = -psi.grid.q; n <= psi.grid.q; ++n) {
        const Complex a = psi(n);
        out << n << ',' << format_number(a.real()) << ',' << format_number(a.imag()) << '\n';
    }
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj)
{
    auto out = open_for_write(path);
    out << "t,n,return,prob\n";
    for (std::size_t j = 0; j < traj.sample_times.size(); ++j) {
        const StateVector& state = traj.states[j];
        const GridSpec& grid = state.grid;
        for (int n = -grid.q; n <= grid.q; ++n) {
            out << format_number(traj.sample_times[j]) << ',' << n << ','
                << format_number(grid.value(n)) << ',' << format_number(std::norm(state(n)))
                << '\n';
        }
    }
}

void write_summary_csv(const std::filesystem::path& path, const Trajectory& traj,
                       std::optional<double> price_base)
{
    auto out = open_for_write(path);
    out << (price_base ? "t,argmax_n,tied_n,expected_return,expected_price,norm_drift\n"
                       : "t,argmax_n,tied_n,expected_return,norm_drift\n");
    for (std::size_t j = 0; j < traj.sample_times.size(); ++j) {
        const StateVector& state = traj.states[j];
        const auto rate = rate_of_return_operator(state.grid);
        const auto mode = most_probable_return(state);
        const double mean_return = expectation(rate, state);
        out << format_number(traj.sample_times[j]) << ',' << mode.argmax << ','
            << join_tied(mode.tied) << ',' << format_number(mean_return);
        if (price_base) {
            out << ',' << format_number(*price_base * (1.0 + mean_return));
        }
        out << ',' << format_number(traj.raw_norm_drift[j]) << '\n';
    }
}

void write_gaussian_csv(const std::filesystem::path& path, const GridSpec& grid, double alpha)
{
    const ThetaGaussianSpec spec{alpha, grid};
    const StateVector gamma = gaussian_state(spec);
    auto out = open_for_write(path);
    out << "n,g,gamma,gamma_sq\n";
    for (int n = -grid.q; n <= grid.q; ++n) {
        const double gamma_n = gamma(n).real();
        out << n << ',' << format_number(g_alpha(spec, n)) << ',' << format_number(gamma_n) << ','
            << format_number(gamma_n * gamma_n) << '\n';
    }
}

void write_operator_csv(const std::filesystem::path& path, const HermitianOperator& op,
                        bool with_eigenvalues)
{
    auto out = open_for_write(path);
    const GridSpec& grid = op.grid();
    out << "n,m,re,im\n";
    for (int n = -grid.q; n <= grid.q; ++n) {
        for (int m = -grid.q; m <= grid.q; ++m) {
            const Complex e = op.entry(n, m);
            out << n << ',' << m << ',' << format_number(e.real()) << ','
                << format_number(e.imag()) << '\n';
        }
    }
    if (with_eigenvalues) {
        out << "# eigenvalues:";
        const EigenSystem sys = eigendecompose(op);
        for (std::size_t i = 0; i < sys.eigenvalues.size(); ++i) {
            out << (i == 0 ? ' ' : ',') << format_number(sys.eigenvalues[i]);
        }
        out << '\n';
    }
}

} // namespace qsm::io
