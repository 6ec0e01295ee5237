// kirkfp command-line front end: run fixed-point iteration experiments from
// JSON config documents and emit CSV traces, contraction-factor breakdowns,
// and stability verdict reports.
//
// Exit codes: 0 success/consistent, 1 validation, 2 diverged, 3 max_iter,
//             4 stability violation, 5 vacuous hypothesis.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "kirkfp/analysis.hpp"
#include "kirkfp/config.hpp"
#include "kirkfp/corpus.hpp"
#include "kirkfp/csv.hpp"
#include "kirkfp/scheme.hpp"
#include "kirkfp/stability.hpp"

namespace {

using namespace kirkfp;

struct CommonFlags {
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> steps;
    std::optional<double> tol;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool config_required = true) {
    auto* opt = cmd->add_option("--config", f.config_path, "experiment config (JSON)");
    if (config_required) opt->required();
    cmd->add_option("--out", f.out_path, "output CSV path");
    cmd->add_option("--seed", f.seed, "override the config seed");
    cmd->add_option("--steps", f.steps, "override max_iter / n_steps");
    cmd->add_option("--tol", f.tol, "override the tolerance");
}

ExperimentConfig load_with_overrides(const CommonFlags& f) {
    ExperimentConfig cfg =
        f.config_path.empty() ? ExperimentConfig{} : load_experiment_config(f.config_path);
    if (!f.out_path.empty()) cfg.out_path = f.out_path;
    if (f.seed) {
        cfg.seed = *f.seed;
        cfg.perturbation.seed = *f.seed;
    }
    if (f.steps) {
        cfg.max_iter = *f.steps;
        cfg.n_steps = *f.steps;
    }
    if (f.tol) cfg.tol = *f.tol;
    return cfg;
}

void print_warnings(const SchemeConfig& scheme) {
    for (const auto& w : scheme.warnings) std::cout << "warning: " << w << "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("output path is not writable: " + path);
    out << content;
}

int cmd_run(const ExperimentConfig& cfg) {
    const Operator& T = corpus_get(cfg.operator_id);
    if (!cfg.scheme) throw ValidationError("run requires a scheme document");
    if (cfg.x0.empty()) throw ValidationError("run requires x0");
    print_warnings(*cfg.scheme);

    StopMode mode = cfg.stop_mode_set
                        ? cfg.stop_mode
                        : (T.has_fixed_point() ? StopMode::TrueError : StopMode::SuccessiveDiff);
    IterationTrace trace = run(T, *cfg.scheme, cfg.x0, cfg.tol, cfg.max_iter, mode);

    if (!cfg.out_path.empty()) {
        std::ostringstream os;
        write_trace_csv(os, trace, T.dimension());
        write_file(cfg.out_path, os.str());
    }

    double sig = sigma_sup(*cfg.scheme, T.contract_a(), trace.iterations);
    std::cout << "operator: " << T.id() << " (dim " << T.dimension() << ", class "
              << to_string(T.declared()) << ", a=" << format_double(T.contract_a()) << ")\n";
    std::cout << "scheme:   " << to_string(cfg.scheme->family) << " k=" << cfg.scheme->k << "\n";
    std::cout << "stop:     " << to_string(trace.stop_reason) << " after " << trace.iterations
              << " iterations (" << to_string(mode) << " mode, tol " << format_double(cfg.tol)
              << ")\n";
    if (!trace.errors.empty())
        std::cout << "final_err: " << format_double(trace.errors.back()) << "\n";
    try {
        RateEstimate rate = estimate_rate(trace);
        std::cout << "rate:     fitted " << format_double(rate.fitted_rate)
                  << " (r2=" << format_double(rate.r_squared) << "), sigma " << format_double(sig)
                  << "\n";
    } catch (const ValidationError&) {
        std::cout << "rate:     n/a, sigma " << format_double(sig) << "\n";
    }

    switch (trace.stop_reason) {
    case StopReason::ToleranceMet: return 0;
    case StopReason::Diverged: return 2;
    case StopReason::MaxIter: return 3;
    }
    return 1;
}

int cmd_sigma(const ExperimentConfig& cfg) {
    if (!cfg.scheme) throw ValidationError("sigma requires a scheme document");
    print_warnings(*cfg.scheme);
    double a;
    if (cfg.a_override)
        a = *cfg.a_override;
    else if (!cfg.operator_id.empty())
        a = corpus_get(cfg.operator_id).contract_a();
    else
        throw ValidationError("sigma requires either an operator id or an explicit a");

    SigmaBreakdown b = contraction_factor(*cfg.scheme, a, 0);
    std::cout << "a:          " << format_double(a) << "\n";
    std::cout << "inner_sums:";
    for (double s : b.inner_sums) std::cout << ' ' << format_double(s);
    std::cout << "\nterms:     ";
    for (double t : b.terms) std::cout << ' ' << format_double(t);
    std::cout << "\nsigma:      " << format_double(b.sigma) << "\n";
    bool ok = verify_contraction_bound(*cfg.scheme, a, cfg.n_steps);
    std::cout << "sigma_lt_1: " << (ok ? "true" : "false (degenerate scheme: no contraction)")
              << "\n";

    if (!cfg.out_path.empty()) {
        std::vector<double> sig;
        sig.reserve(static_cast<std::size_t>(cfg.n_steps) + 1);
        for (int n = 0; n <= cfg.n_steps; ++n)
            sig.push_back(contraction_factor(*cfg.scheme, a, n).sigma);

        // With an operator and a start point, put the observed per-step error
        // ratios next to sigma for direct comparison.
        std::vector<double> observed;
        if (!cfg.operator_id.empty() && !cfg.x0.empty()) {
            const Operator& T = corpus_get(cfg.operator_id);
            if (T.has_fixed_point()) {
                IterationTrace trace =
                    run(T, *cfg.scheme, cfg.x0, cfg.tol, cfg.n_steps, StopMode::TrueError);
                for (std::size_t n = 0; n + 1 < trace.errors.size(); ++n)
                    observed.push_back(trace.errors[n] > 0.0
                                           ? trace.errors[n + 1] / trace.errors[n]
                                           : std::numeric_limits<double>::quiet_NaN());
            }
        }
        std::ostringstream os;
        write_sigma_csv(os, sig, observed);
        write_file(cfg.out_path, os.str());
    }
    return 0;
}

int cmd_stability(const ExperimentConfig& cfg) {
    const Operator& T = corpus_get(cfg.operator_id);
    if (!cfg.scheme) throw ValidationError("stability requires a scheme document");
    if (cfg.x0.empty()) throw ValidationError("stability requires x0 (the y0 of the experiment)");
    if (!T.has_fixed_point())
        throw ValidationError("stability verdicts need an operator with known fixed point");
    print_warnings(*cfg.scheme);

    StabilityReport rep = stability_verdict(T, *cfg.scheme, cfg.x0, cfg.perturbation, cfg.n_steps,
                                            cfg.tol_eps, cfg.tol_y);

    if (!cfg.out_path.empty()) {
        std::ostringstream os;
        write_stability_csv(os, rep);
        write_file(cfg.out_path, os.str());
    }

    std::cout << "verdict:   " << to_string(rep.verdict)
              << (rep.conditional ? " (conditional: base run did not converge)" : "") << "\n";
    std::cout << "eps_tail:  " << format_double(rep.eps_tail) << "\n";
    std::cout << "y_tail:    " << format_double(rep.y_tail) << "\n";
    std::cout << "sigma:     " << format_double(rep.sigma_sup) << "\n";
    std::cout << "converse:  " << (rep.converse_violation ? "VIOLATION" : "ok") << "\n";
    if (rep.diverged) std::cout << "note:      perturbed run diverged (truncated)\n";

    switch (rep.verdict) {
    case StabilityVerdict::StableConsistent: return 0;
    case StabilityVerdict::Violation: return 4;
    case StabilityVerdict::HypothesisFailed: return 5;
    }
    return 1;
}

int cmd_check_operator(const ExperimentConfig& cfg, bool list) {
    if (list) {
        std::cout << corpus_table_csv();
        return 0;
    }
    if (cfg.operator_id.empty())
        throw ValidationError("check-operator needs --list, --operator <id>, or a config "
                              "naming an operator");
    const Operator& T = corpus_get(cfg.operator_id);

    std::vector<Condition> conditions;
    if (!cfg.condition.empty()) {
        conditions.push_back(condition_from_string(cfg.condition));
    } else {
        switch (T.declared()) {
        case Condition::Banach:
            conditions = {Condition::Banach, Condition::Ciric, Condition::CiricGen,
                          Condition::Osilike, Condition::ImoruOlatinwo};
            break;
        case Condition::Ciric: conditions = {Condition::Ciric, Condition::CiricGen}; break;
        case Condition::CiricGen: conditions = {Condition::CiricGen}; break;
        case Condition::Osilike:
            conditions = {Condition::Osilike, Condition::ImoruOlatinwo};
            break;
        case Condition::ImoruOlatinwo: conditions = {Condition::ImoruOlatinwo}; break;
        default: std::cout << T.id() << ": class none, nothing to check\n"; return 0;
        }
    }

    bool all_ok = true;
    for (Condition c : conditions) {
        PairSampler sampler(T.dimension(), cfg.sample_radius, cfg.seed);
        ConditionReport rep = check_condition(T, c, sampler, cfg.n_samples);
        std::cout << T.id() << " " << to_string(c) << ": "
                  << (rep.satisfied() ? "satisfied" : "VIOLATED") << " (" << rep.samples_tested
                  << " checks, " << rep.violations.size() << " violations)\n";
        all_ok = all_ok && rep.satisfied();
    }
    return all_ok ? 0 : 1;
}

int cmd_compare(const ExperimentConfig& cfg) {
    const Operator& T = corpus_get(cfg.operator_id);
    if (cfg.schemes.size() < 2) throw ValidationError("compare requires at least two schemes");
    if (cfg.x0.empty()) throw ValidationError("compare requires x0");
    // Fail fast: every scheme and the dimension must validate before any run.
    for (const auto& s : cfg.schemes) s.validate();
    if (static_cast<int>(cfg.x0.size()) != T.dimension())
        throw ValidationError("compare: x0 dimension does not match operator");

    StopMode mode = cfg.stop_mode_set
                        ? cfg.stop_mode
                        : (T.has_fixed_point() ? StopMode::TrueError : StopMode::SuccessiveDiff);

    std::ostringstream csv;
    csv << "scheme,iterations,stop,fitted_rate,sigma\n";
    std::printf("%-24s %12s %-14s %12s %10s\n", "scheme", "iterations", "stop", "rate", "sigma");
    for (std::size_t i = 0; i < cfg.schemes.size(); ++i) {
        const auto& scheme = cfg.schemes[i];
        const std::string& label = cfg.scheme_labels[i];
        IterationTrace trace = run(T, scheme, cfg.x0, cfg.tol, cfg.max_iter, mode);
        double sig = sigma_sup(scheme, T.contract_a(), trace.iterations);
        std::string rate = "n/a";
        try {
            rate = format_double(estimate_rate(trace).fitted_rate);
        } catch (const ValidationError&) {
        }
        std::printf("%-24s %12d %-14s %12s %10s\n", label.c_str(), trace.iterations,
                    to_string(trace.stop_reason), rate.c_str(), format_double(sig).c_str());
        csv << label << ',' << trace.iterations << ',' << to_string(trace.stop_reason) << ','
            << rate << ',' << format_double(sig) << '\n';
    }
    if (!cfg.out_path.empty()) write_file(cfg.out_path, csv.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kirk-type fixed-point iteration laboratory"};
    app.require_subcommand(1);

    CommonFlags run_f, sigma_f, stab_f, check_f, cmp_f;
    bool list_corpus = false;
    std::string check_operator_id;

    add_common(app.add_subcommand("run", "iterate a scheme and export the trace"), run_f);
    add_common(app.add_subcommand("sigma", "contraction-factor breakdown for a scheme"), sigma_f);
    add_common(app.add_subcommand("stability", "perturbed-run stability verdict"), stab_f);
    auto* check = app.add_subcommand("check-operator", "verify an operator's contractive class");
    add_common(check, check_f, /*config_required=*/false);
    check->add_flag("--list", list_corpus, "print the corpus table and exit");
    check->add_option("--operator", check_operator_id, "operator id (alternative to --config)");
    add_common(app.add_subcommand("compare", "run several schemes side by side"), cmp_f);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("run")) return cmd_run(load_with_overrides(run_f));
        if (app.got_subcommand("sigma")) return cmd_sigma(load_with_overrides(sigma_f));
        if (app.got_subcommand("stability")) return cmd_stability(load_with_overrides(stab_f));
        if (app.got_subcommand("check-operator")) {
            ExperimentConfig cfg = load_with_overrides(check_f);
            if (!check_operator_id.empty()) cfg.operator_id = check_operator_id;
            return cmd_check_operator(cfg, list_corpus);
        }
        if (app.got_subcommand("compare")) return cmd_compare(load_with_overrides(cmp_f));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
