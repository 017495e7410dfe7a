#include "sfq/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sfq {

namespace {

using nlohmann::json;

template <typename T>
void read(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

SweepConfig sweep_config_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (!j.is_object()) throw std::runtime_error("config root must be a JSON object");

    static const char* known[] = {
        "frequencies_ghz", "fg_ghz",        "delta_theta_rad", "alpha_ghz",
        "dim",             "theta_target_rad", "mode",         "alphabet",
        "length_min",      "length_max",    "max_rep",         "max_duration_ns",
        "seeds_per_point", "base_seed",     "workers",         "max_iterations",
        "crossover_prob",  "mutation_prob", "angle_tol_rad",   "infid_tol",
        "compare_threshold_rad", "population_size"};
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw std::runtime_error("unknown config key: " + key);
    }

    SweepConfig c;
    c.frequencies_ghz = default_frequency_grid();
    read(j, "frequencies_ghz", c.frequencies_ghz);
    read(j, "fg_ghz", c.fg_ghz);
    read(j, "delta_theta_rad", c.delta_theta);
    read(j, "alpha_ghz", c.alpha_ghz);
    read(j, "dim", c.dim);
    read(j, "theta_target_rad", c.theta_target);
    if (j.contains("mode")) c.mode = search_mode_from_string(j.at("mode").get<std::string>());
    if (j.contains("alphabet")) {
        c.alphabet = alphabet_from_string(j.at("alphabet").get<std::string>());
    }
    read(j, "length_min", c.length_min);
    read(j, "length_max", c.length_max);
    read(j, "max_rep", c.max_rep);
    read(j, "max_duration_ns", c.max_duration_ns);
    read(j, "seeds_per_point", c.seeds_per_point);
    read(j, "base_seed", c.base_seed);
    read(j, "workers", c.workers);
    read(j, "max_iterations", c.max_iterations);
    read(j, "crossover_prob", c.crossover_prob);
    read(j, "mutation_prob", c.mutation_prob);
    read(j, "angle_tol_rad", c.angle_tol);
    read(j, "infid_tol", c.infid_tol);
    read(j, "compare_threshold_rad", c.compare_threshold);
    read(j, "population_size", c.population_size);
    return c;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return sweep_config_from_json(buffer.str());
}

std::string sweep_config_to_json(const SweepConfig& c) {
    json j;
    j["frequencies_ghz"] = c.frequencies_ghz;
    j["fg_ghz"] = c.fg_ghz;
    j["delta_theta_rad"] = c.delta_theta;
    j["alpha_ghz"] = c.alpha_ghz;
    j["dim"] = c.dim;
    j["theta_target_rad"] = c.theta_target;
    j["mode"] = to_string(c.mode);
    j["alphabet"] = to_string(c.alphabet);
    j["length_min"] = c.length_min;
    j["length_max"] = c.length_max;
    j["max_rep"] = c.max_rep;
    j["max_duration_ns"] = c.max_duration_ns;
    j["seeds_per_point"] = c.seeds_per_point;
    j["base_seed"] = c.base_seed;
    j["workers"] = c.workers;
    j["max_iterations"] = c.max_iterations;
    j["crossover_prob"] = c.crossover_prob;
    j["mutation_prob"] = c.mutation_prob;
    j["angle_tol_rad"] = c.angle_tol;
    j["infid_tol"] = c.infid_tol;
    j["compare_threshold_rad"] = c.compare_threshold;
    j["population_size"] = c.population_size;
    return j.dump(2) + "\n";
}

}  // namespace sfq
