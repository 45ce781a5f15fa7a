#include "qsm/simulate.hpp"

#include "qsm/csv.hpp"
#include "qsm/svg.hpp"
#include "qsm/theta_gaussian.hpp"

namespace qsm {

SimulationOutputs run_simulation(const RunConfig& config)
{
    validate(config);

    const GridSpec grid = make_grid(config.q);
    const StateVector opening = gaussian_state(ThetaGaussianSpec{config.alpha, grid});
    const EvolutionParams params{config.mu, config.beta, config.omega, config.dt, config.method};
    // beta = 0 collapses the information term to zero for all t.
    const PotentialSpec pot = config.beta == 0.0
                                  ? PotentialSpec::none()
                                  : PotentialSpec::cosine_information(config.beta, config.omega);

    const std::filesystem::path dir(config.output_dir);
    std::filesystem::create_directories(dir);

    SimulationOutputs outputs;
    outputs.trajectory = integrate_tdse(grid, params, pot, opening, config.times);

    outputs.trajectory_csv = dir / "trajectory.csv";
    outputs.summary_csv = dir / "summary.csv";
    outputs.run_json = dir / "run.json";
    io::write_trajectory_csv(outputs.trajectory_csv, outputs.trajectory);
    io::write_summary_csv(outputs.summary_csv, outputs.trajectory, config.price_base);
    write_run_config(outputs.run_json, config);

    if (config.emit_svg) {
        for (std::size_t j = 0; j < outputs.trajectory.sample_times.size(); ++j) {
            const double t = outputs.trajectory.sample_times[j];
            const auto path = dir / ("dist_t" + io::format_number(t) + ".svg");
            svg::write_bar_chart(path, grid, probabilities(outputs.trajectory.states[j]),
                                 "t = " + io::format_number(t) + " s", "probability");
            outputs.svg_files.push_back(path);
        }
    }
    return outputs;
}

} // namespace qsm
