#include "qsm/run_config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <string>

namespace qsm {

std::string method_name(IntegrationMethod method)
{
    return method == IntegrationMethod::unitary_midpoint ? "unitary-midpoint" : "rk4";
}

IntegrationMethod parse_method(const std::string& name)
{
    if (name == "unitary-midpoint") {
        return IntegrationMethod::unitary_midpoint;
    }
    if (name == "rk4") {
        return IntegrationMethod::rk4;
    }
    throw InvalidArgument("unknown method '" + name + "' (use unitary-midpoint or rk4)");
}

void validate(const RunConfig& config)
{
    if (config.q < 1) {
        throw InvalidArgument("q must be >= 1, got " + std::to_string(config.q));
    }
    if (!(config.alpha > 0.0)) {
        throw InvalidArgument("alpha must be positive, got " + std::to_string(config.alpha));
    }
    if (!(config.mu > 0.0)) {
        throw InvalidArgument("mu must be positive, got " + std::to_string(config.mu));
    }
    if (!(config.omega > 0.0)) {
        throw InvalidArgument("omega must be positive, got " + std::to_string(config.omega));
    }
    if (!(config.dt > 0.0)) {
        throw InvalidArgument("dt must be positive, got " + std::to_string(config.dt));
    }
    if (config.times.empty()) {
        throw InvalidArgument("at least one sample time is required");
    }
    for (std::size_t j = 0; j < config.times.size(); ++j) {
        const double t = config.times[j];
        if (t < 0.0) {
            throw InvalidArgument("sample times must be non-negative, got " + std::to_string(t));
        }
        if (j > 0 && t <= config.times[j - 1]) {
            throw InvalidArgument("sample times must be strictly increasing");
        }
        const double steps = std::round(t / config.dt);
        if (std::abs(t - steps * config.dt) > 1e-9 * std::max(1.0, t)) {
            throw InvalidArgument("sample time " + std::to_string(t) +
                                  " is not an integer multiple of dt=" + std::to_string(config.dt));
        }
    }
    if (config.price_base && !(*config.price_base > 0.0)) {
        throw InvalidArgument("price base must be positive, got " +
                              std::to_string(*config.price_base));
    }
    if (config.output_dir.empty()) {
        throw InvalidArgument("output directory must not be empty");
    }
}

RunConfig load_run_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot read config file " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument("config file " + path.string() + " is not valid JSON: " + e.what());
    }
    if (!j.is_object()) {
        throw InvalidArgument("config file must contain a flat JSON object");
    }
    static const std::set<std::string> known = {"q",      "alpha",  "mu",         "beta",
                                                "omega",  "dt",     "times",      "method",
                                                "price_base", "output_dir", "emit_svg"};
    for (const auto& item : j.items()) {
        if (!known.contains(item.key())) {
            throw InvalidArgument("unknown config key '" + item.key() + "'");
        }
    }
    RunConfig config;
    try {
        if (j.contains("q")) {
            config.q = j.at("q").get<int>();
        }
        if (j.contains("alpha")) {
            config.alpha = j.at("alpha").get<double>();
        }
        if (j.contains("mu")) {
            config.mu = j.at("mu").get<double>();
        }
        if (j.contains("beta")) {
            config.beta = j.at("beta").get<double>();
        }
        if (j.contains("omega")) {
            config.omega = j.at("omega").get<double>();
        }
        if (j.contains("dt")) {
            config.dt = j.at("dt").get<double>();
        }
        if (j.contains("times")) {
            config.times = j.at("times").get<std::vector<double>>();
        }
        if (j.contains("method")) {
            config.method = parse_method(j.at("method").get<std::string>());
        }
        if (j.contains("price_base") && !j.at("price_base").is_null()) {
            config.price_base = j.at("price_base").get<double>();
        }
        if (j.contains("output_dir")) {
            config.output_dir = j.at("output_dir").get<std::string>();
        }
        if (j.contains("emit_svg")) {
            config.emit_svg = j.at("emit_svg").get<bool>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument("config file has a badly typed field: " + std::string(e.what()));
    }
    return config;
}

void write_run_config(const std::filesystem::path& path, const RunConfig& config)
{
    nlohmann::ordered_json j;
    j["q"] = config.q;
    j["alpha"] = config.alpha;
    j["mu"] = config.mu;
    j["beta"] = config.beta;
    j["omega"] = config.omega;
    j["dt"] = config.dt;
    j["times"] = config.times;
    j["method"] = method_name(config.method);
    if (config.price_base) {
        j["price_base"] = *config.price_base;
    } else {
        j["price_base"] = nullptr;
    }
    j["output_dir"] = config.output_dir;
    j["emit_svg"] = config.emit_svg;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path.string() + " for writing");
    }
    out << j.dump(2) << '\n';
}

} // namespace qsm
