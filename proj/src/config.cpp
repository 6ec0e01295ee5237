#include "kirkfp/config.hpp"

#include <fstream>

#include "kirkfp/corpus.hpp"

namespace kirkfp {

using nlohmann::json;

namespace {

WeightRow row_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("weight row must be a JSON array of numbers");
    std::vector<double> w;
    for (const auto& v : j) w.push_back(v.get<double>());
    return WeightRow(std::move(w));
}

// Accepts a bare number θ (constant two-point row), a bare array (constant
// row), or an object {"constant": [...]}, {"tabulated": [[...], ...]},
// {"generated": {"rule": "harmonic" | "geometric", ...}}.
WeightSchedule schedule_from_json(const json& j) {
    if (j.is_number()) return WeightSchedule::constant(WeightRow::two_point(j.get<double>()));
    if (j.is_array()) return WeightSchedule::constant(row_from_json(j));
    if (!j.is_object()) throw ValidationError("weight schedule must be a number, array, or object");

    if (j.contains("constant")) return WeightSchedule::constant(row_from_json(j.at("constant")));
    if (j.contains("tabulated")) {
        std::vector<WeightRow> rows;
        for (const auto& r : j.at("tabulated")) rows.push_back(row_from_json(r));
        return WeightSchedule::tabulated(std::move(rows));
    }
    if (j.contains("generated")) {
        const auto& g = j.at("generated");
        std::string rule = g.at("rule").get<std::string>();
        if (rule == "harmonic") return WeightSchedule::harmonic();
        if (rule == "geometric")
            return WeightSchedule::geometric(g.at("theta0").get<double>(),
                                             g.at("ratio").get<double>());
        throw ValidationError("unknown generated schedule rule: " + rule);
    }
    throw ValidationError("weight schedule object needs constant | tabulated | generated");
}

json schedule_to_json(const WeightSchedule& s) {
    switch (s.mode()) {
    case WeightSchedule::Mode::Constant: return json{{"constant", s.rows().front().w}};
    case WeightSchedule::Mode::Tabulated: {
        json rows = json::array();
        for (const auto& r : s.rows()) rows.push_back(r.w);
        return json{{"tabulated", rows}};
    }
    case WeightSchedule::Mode::Generated:
        if (s.rule() == WeightSchedule::Rule::Harmonic)
            return json{{"generated", {{"rule", "harmonic"}}}};
        return json{{"generated",
                     {{"rule", "geometric"}, {"theta0", s.param(0)}, {"ratio", s.param(1)}}}};
    }
    throw ValidationError("corrupt weight schedule");
}

SchemeConfig named_scheme_from_json(const json& j) {
    const std::string name = j.at("name").get<std::string>();
    auto sched = [&](const char* key) { return schedule_from_json(j.at(key)); };
    auto power = [&](const char* key, int fallback) {
        return j.contains(key) ? j.at(key).get<int>() : fallback;
    };

    if (name == "picard") return picard();
    if (name == "krasnoselskij")
        return krasnoselskij(j.at("lambda").get<double>(),
                             j.value("enforce_anchor_nonzero", true));
    if (name == "mann") return mann(sched("alpha"));
    if (name == "ishikawa") return ishikawa(sched("alpha"), sched("beta"));
    if (name == "noor") return noor(sched("alpha"), sched("beta1"), sched("beta2"));
    if (name == "sp") return sp(sched("alpha"), sched("beta1"), sched("beta2"));
    if (name == "thianwan") return thianwan(sched("alpha"), sched("beta"));
    if (name == "kirk") return kirk(row_from_json(j.at("alpha")));
    if (name == "kirk_mann") {
        WeightSchedule alpha = sched("alpha");
        int s1 = power("s1", static_cast<int>(alpha.row_length()) - 1);
        return kirk_mann(std::move(alpha), s1);
    }
    if (name == "kirk_ishikawa") {
        WeightSchedule alpha = sched("alpha"), beta1 = sched("beta1");
        int s1 = power("s1", static_cast<int>(alpha.row_length()) - 1);
        int s2 = power("s2", static_cast<int>(beta1.row_length()) - 1);
        return kirk_ishikawa(std::move(alpha), std::move(beta1), s1, s2);
    }
    if (name == "kirk_noor" || name == "kirk_sp") {
        WeightSchedule alpha = sched("alpha"), beta1 = sched("beta1"), beta2 = sched("beta2");
        int s1 = power("s1", static_cast<int>(alpha.row_length()) - 1);
        int s2 = power("s2", static_cast<int>(beta1.row_length()) - 1);
        int s3 = power("s3", static_cast<int>(beta2.row_length()) - 1);
        if (name == "kirk_noor")
            return kirk_noor(std::move(alpha), std::move(beta1), std::move(beta2), s1, s2, s3);
        return kirk_sp(std::move(alpha), std::move(beta1), std::move(beta2), s1, s2, s3);
    }
    throw ValidationError("unknown scheme name: " + name);
}

} // namespace

SchemeConfig scheme_from_json(const json& doc) {
    if (!doc.is_object()) throw ValidationError("scheme document must be a JSON object");
    if (doc.contains("name")) return named_scheme_from_json(doc);

    SchemeConfig cfg;
    cfg.family = family_from_string(doc.at("family").get<std::string>());
    cfg.k = doc.at("k").get<int>();
    cfg.powers = doc.at("powers").get<std::vector<int>>();
    cfg.alpha = schedule_from_json(doc.at("alpha"));
    for (const auto& b : doc.at("betas")) cfg.betas.push_back(schedule_from_json(b));
    cfg.enforce_anchor_nonzero = doc.value("enforce_anchor_nonzero", true);
    cfg.validate();
    return cfg;
}

json scheme_to_json(const SchemeConfig& cfg) {
    json betas = json::array();
    for (const auto& b : cfg.betas) betas.push_back(schedule_to_json(b));
    return json{{"family", to_string(cfg.family)},
                {"k", cfg.k},
                {"powers", cfg.powers},
                {"alpha", schedule_to_json(cfg.alpha)},
                {"betas", betas},
                {"enforce_anchor_nonzero", cfg.enforce_anchor_nonzero}};
}

PerturbationModel perturbation_from_json(const json& doc) {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "none") return PerturbationModel::none();
    if (kind == "decaying")
        return PerturbationModel::decaying(doc.at("c").get<double>(), doc.at("r").get<double>());
    if (kind == "persistent") return PerturbationModel::persistent(doc.at("c").get<double>());
    if (kind == "random_decaying")
        return PerturbationModel::random_decaying(doc.at("c").get<double>(),
                                                  doc.at("r").get<double>(),
                                                  doc.value("seed", std::uint64_t{0}));
    throw ValidationError("unknown perturbation kind: " + kind +
                          " (none | decaying | persistent | random_decaying)");
}

ExperimentConfig parse_experiment_config(const json& doc) {
    ExperimentConfig cfg;
    cfg.action = doc.value("action", "");
    cfg.operator_id = doc.value("operator", "");
    if (doc.contains("scheme")) cfg.scheme = scheme_from_json(doc.at("scheme"));
    if (doc.contains("schemes")) {
        for (const auto& s : doc.at("schemes")) {
            cfg.schemes.push_back(scheme_from_json(s));
            cfg.scheme_labels.push_back(s.contains("label") ? s.at("label").get<std::string>()
                                        : s.contains("name") ? s.at("name").get<std::string>()
                                                             : to_string(cfg.schemes.back().family));
        }
    }
    if (doc.contains("x0")) cfg.x0 = doc.at("x0").get<Vec>();
    cfg.tol = doc.value("tol", 1e-8);
    cfg.max_iter = doc.value("max_iter", 1000);
    cfg.n_steps = doc.value("n_steps", 1000);
    if (doc.contains("stop")) {
        const std::string mode = doc.at("stop").get<std::string>();
        if (mode == "successive")
            cfg.stop_mode = StopMode::SuccessiveDiff;
        else if (mode == "true_error")
            cfg.stop_mode = StopMode::TrueError;
        else
            throw ValidationError("stop mode must be successive | true_error");
        cfg.stop_mode_set = true;
    }
    if (doc.contains("a")) cfg.a_override = doc.at("a").get<double>();
    if (doc.contains("perturbation")) cfg.perturbation = perturbation_from_json(doc.at("perturbation"));
    cfg.tol_eps = doc.value("tol_eps", 1e-6);
    cfg.tol_y = doc.value("tol_y", 1e-6);
    cfg.seed = doc.value("seed", std::uint64_t{0});
    cfg.out_path = doc.value("out", "");
    cfg.condition = doc.value("condition", "");
    cfg.n_samples = doc.value("n_samples", 10000);
    cfg.sample_radius = doc.value("radius", 10.0);
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("config is not valid JSON (" + path + "): " + e.what());
    }
    try {
        return parse_experiment_config(doc);
    } catch (const json::exception& e) {
        throw ValidationError("config field error (" + path + "): " + e.what());
    }
}

} // namespace kirkfp
