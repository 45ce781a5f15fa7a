#include "qsm/csv.hpp"
#include "qsm/simulate.hpp"
#include "qsm/svg.hpp"
#include "qsm/theta_gaussian.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNumericFailure = 3;

struct SimulateFlags {
    std::string config_path;
    int q = 0;
    double alpha = 0, mu = 0, beta = 0, omega = 0, dt = 0, price_base = 0;
    std::vector<double> times;
    std::string method;
    std::string output_dir;
    bool emit_svg = false;
};

int run_simulate(const CLI::App& cmd, const SimulateFlags& flags)
{
    qsm::RunConfig config;
    if (cmd.count("--config") > 0) {
        config = qsm::load_run_config(flags.config_path);
    }
    // flags win over the config file
    if (cmd.count("--q") > 0) {
        config.q = flags.q;
    }
    if (cmd.count("--alpha") > 0) {
        config.alpha = flags.alpha;
    }
    if (cmd.count("--mu") > 0) {
        config.mu = flags.mu;
    }
    if (cmd.count("--beta") > 0) {
        config.beta = flags.beta;
    }
    if (cmd.count("--omega") > 0) {
        config.omega = flags.omega;
    }
    if (cmd.count("--dt") > 0) {
        config.dt = flags.dt;
    }
    if (cmd.count("--times") > 0) {
        config.times = flags.times;
    }
    if (cmd.count("--method") > 0) {
        config.method = qsm::parse_method(flags.method);
    }
    if (cmd.count("--price-base") > 0) {
        config.price_base = flags.price_base;
    }
    if (cmd.count("--output-dir") > 0) {
        config.output_dir = flags.output_dir;
    }
    if (cmd.count("--svg") > 0) {
        config.emit_svg = flags.emit_svg;
    }

    const auto outputs = qsm::run_simulation(config);
    std::cout << "wrote " << outputs.trajectory_csv.string() << '\n'
              << "wrote " << outputs.summary_csv.string() << '\n'
              << "wrote " << outputs.run_json.string() << '\n';
    for (const auto& f : outputs.svg_files) {
        std::cout << "wrote " << f.string() << '\n';
    }
    std::cout << "raw norm drift " << qsm::io::format_number(outputs.trajectory.norm_drift)
              << '\n';
    return kExitOk;
}

int run_gaussian(int q, double alpha, const std::string& output, bool emit_svg)
{
    const qsm::GridSpec grid = qsm::make_grid(q);
    const std::filesystem::path path(output);
    qsm::io::write_gaussian_csv(path, grid, alpha);
    std::cout << "wrote " << path.string() << '\n';
    if (emit_svg) {
        const auto gamma = qsm::gaussian_state(qsm::ThetaGaussianSpec{alpha, grid});
        std::vector<double> values(static_cast<std::size_t>(grid.d));
        for (int n = -grid.q; n <= grid.q; ++n) {
            values[static_cast<std::size_t>(grid.offset(n))] = gamma(n).real();
        }
        auto svg_path = path;
        svg_path.replace_extension(".svg");
        qsm::svg::write_bar_chart(svg_path, grid, values,
                                  "gamma, alpha = " + qsm::io::format_number(alpha), "amplitude");
        std::cout << "wrote " << svg_path.string() << '\n';
    }
    return kExitOk;
}

int run_spectrum(const CLI::App& cmd, const std::string& name, int q, double price_base,
                 double mu, double beta, double omega, double t, const std::string& output)
{
    const qsm::GridSpec grid = qsm::make_grid(q);
    std::optional<qsm::HermitianOperator> op;
    bool with_eigenvalues = true;
    if (name == "R") {
        op = qsm::rate_of_return_operator(grid);
    } else if (name == "T") {
        op = qsm::trend_operator(grid);
    } else if (name == "price") {
        if (cmd.count("--price-base") == 0) {
            throw qsm::InvalidArgument("operator 'price' requires --price-base");
        }
        op = qsm::price_operator(grid, price_base);
    } else if (name == "H-at-t") {
        for (const char* required : {"--mu", "--beta", "--omega", "--t"}) {
            if (cmd.count(required) == 0) {
                throw qsm::InvalidArgument(std::string("operator 'H-at-t' requires ") + required);
            }
        }
        const qsm::EvolutionParams params{mu, beta, omega, 1.0,
                                          qsm::IntegrationMethod::unitary_midpoint};
        op = qsm::hamiltonian_at(grid, params,
                                 qsm::PotentialSpec::cosine_information(beta, omega), t);
        with_eigenvalues = false;
    } else {
        throw qsm::InvalidArgument("unknown operator '" + name +
                                   "' (use R, T, price or H-at-t)");
    }
    const std::filesystem::path path(output);
    qsm::io::write_operator_csv(path, *op, with_eigenvalues);
    std::cout << "wrote " << path.string() << '\n';
    if (with_eigenvalues) {
        const auto sys = qsm::eigendecompose(*op);
        std::cout << "eigenvalues:";
        for (double v : sys.eigenvalues) {
            std::cout << ' ' << qsm::io::format_number(v);
        }
        std::cout << '\n';
    }
    return kExitOk;
}

int run_check_ruzzi(int q, double alpha, double tol)
{
    const double deviation = qsm::check_ruzzi(alpha, qsm::make_grid(q));
    std::cout << "max deviation " << qsm::io::format_number(deviation) << " (tolerance "
              << qsm::io::format_number(tol) << ")\n";
    if (deviation > tol) {
        std::cerr << "Fourier closure deviates beyond tolerance\n";
        return kExitNumericFailure;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite-dimensional quantum model of a price-limited stock market"};
    app.require_subcommand(1);

    SimulateFlags sim;
    auto* simulate = app.add_subcommand(
        "simulate", "Evolve the opening-state Gaussian and write CSV/SVG outputs");
    simulate->add_option("--config", sim.config_path, "JSON file with RunConfig fields")
        ->check(CLI::ExistingFile);
    simulate->add_option("--q", sim.q, "price-limit percent (default 10)");
    simulate->add_option("--alpha", sim.alpha, "opening Gaussian width (default 0.2)");
    simulate->add_option("--mu", sim.mu, "inertia parameter (default 1)");
    simulate->add_option("--beta", sim.beta, "information coupling (default 0.1)");
    simulate->add_option("--omega", sim.omega, "information frequency (default 1e-4)");
    simulate->add_option("--dt", sim.dt, "integrator step in seconds (default 1)");
    simulate->add_option("--times", sim.times, "sample times in seconds")->delimiter(',');
    simulate->add_option("--method", sim.method, "unitary-midpoint or rk4");
    simulate->add_option("--price-base", sim.price_base, "previous close, enables price column");
    simulate->add_option("--output-dir", sim.output_dir, "directory for outputs (default .)");
    simulate->add_flag("--svg", sim.emit_svg, "emit one SVG bar chart per sample time");

    int g_q = 10;
    double g_alpha_value = 0.2;
    std::string g_output = "gaussian.csv";
    bool g_svg = false;
    auto* gaussian =
        app.add_subcommand("gaussian", "Tabulate the equilibrium finite Gaussian g and gamma");
    gaussian->add_option("--q", g_q, "price-limit percent");
    gaussian->add_option("--alpha", g_alpha_value, "Gaussian width");
    gaussian->add_option("-o,--output", g_output, "CSV output path");
    gaussian->add_flag("--svg", g_svg, "also emit a bar chart of gamma");

    std::string s_name;
    int s_q = 10;
    double s_price = 0, s_mu = 1, s_beta = 0.1, s_omega = 1e-4, s_t = 0;
    std::string s_output = "spectrum.csv";
    auto* spectrum = app.add_subcommand("spectrum", "Dump an operator matrix as CSV");
    spectrum->add_option("operator", s_name, "R, T, price or H-at-t")->required();
    spectrum->add_option("--q", s_q, "price-limit percent");
    spectrum->add_option("--price-base", s_price, "previous close (price operator)");
    spectrum->add_option("--mu", s_mu, "inertia parameter (H-at-t)");
    spectrum->add_option("--beta", s_beta, "information coupling (H-at-t)");
    spectrum->add_option("--omega", s_omega, "information frequency (H-at-t)");
    spectrum->add_option("--t", s_t, "time in seconds (H-at-t)");
    spectrum->add_option("-o,--output", s_output, "CSV output path");

    int r_q = 10;
    double r_alpha = 0.2;
    double r_tol = 1e-10;
    auto* ruzzi = app.add_subcommand("check-ruzzi",
                                     "Probe the Fourier closure of the finite Gaussian family");
    ruzzi->add_option("--q", r_q, "price-limit percent");
    ruzzi->add_option("--alpha", r_alpha, "Gaussian width");
    ruzzi->add_option("--tol", r_tol, "failure threshold for the max deviation");

    try {
        app.parse(argc, argv);
        if (simulate->parsed()) {
            return run_simulate(*simulate, sim);
        }
        if (gaussian->parsed()) {
            return run_gaussian(g_q, g_alpha_value, g_output, g_svg);
        }
        if (spectrum->parsed()) {
            return run_spectrum(*spectrum, s_name, s_q, s_price, s_mu, s_beta, s_omega, s_t,
                                s_output);
        }
        if (ruzzi->parsed()) {
            return run_check_ruzzi(r_q, r_alpha, r_tol);
        }
        return kExitInvalidInput;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message
        return kExitInvalidInput;
    } catch (const qsm::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kExitNumericFailure;
    } catch (const qsm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 1;
    }
}
