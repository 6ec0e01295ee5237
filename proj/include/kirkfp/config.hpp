#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "kirkfp/scheme.hpp"
#include "kirkfp/stability.hpp"

namespace kirkfp {

/// A parsed experiment document (JSON). See configs/ for one example per
/// action; README documents the schema.
struct ExperimentConfig {
    std::string action; // run | sigma | stability | check-operator | compare
    std::string operator_id;
    std::optional<SchemeConfig> scheme;
    std::vector<SchemeConfig> schemes; ///< compare
    std::vector<std::string> scheme_labels;
    Vec x0;
    double tol = 1e-8;
    int max_iter = 1000;
    int n_steps = 1000;
    StopMode stop_mode = StopMode::TrueError;
    bool stop_mode_set = false;
    std::optional<double> a_override; ///< sigma action may supply a directly
    PerturbationModel perturbation;
    double tol_eps = 1e-6;
    double tol_y = 1e-6;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string condition; ///< check-operator: restrict to one condition
    int n_samples = 10000;
    double sample_radius = 10.0;
};

ExperimentConfig load_experiment_config(const std::string& path);
ExperimentConfig parse_experiment_config(const nlohmann::json& doc);

/// Builds a SchemeConfig from a JSON document. Two forms:
///  - named: {"name": "mann", "alpha": 0.5} (picard, krasnoselskij, mann,
///    ishikawa, noor, sp, thianwan, kirk, kirk_mann, kirk_ishikawa,
///    kirk_noor, kirk_sp)
///  - explicit: {"family": "kirk-multistep", "k": 2, "powers": [1, 0],
///    "alpha": {"constant": [0.5, 0.5]}, "betas": [{"constant": [1.0]}]}
SchemeConfig scheme_from_json(const nlohmann::json& doc);

/// Inverse of scheme_from_json for explicit-form documents.
nlohmann::json scheme_to_json(const SchemeConfig& cfg);

PerturbationModel perturbation_from_json(const nlohmann::json& doc);

} // namespace kirkfp
