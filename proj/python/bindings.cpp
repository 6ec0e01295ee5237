// Python bindings for the main operations. Scheme and perturbation documents
// arrive as JSON strings; the kirkfp python package wraps these with
// dict-friendly helpers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "kirkfp/analysis.hpp"
#include "kirkfp/config.hpp"
#include "kirkfp/corpus.hpp"
#include "kirkfp/stability.hpp"

namespace py = pybind11;
using namespace kirkfp;
using nlohmann::json;

namespace {

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("document is not valid JSON: ") + e.what());
    }
}

SchemeConfig scheme_from_text(const std::string& text) {
    try {
        return scheme_from_json(parse_document(text));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("scheme document field error: ") + e.what());
    }
}

StopMode mode_from_text(const std::string& mode, const Operator& T) {
    if (mode == "auto") return T.has_fixed_point() ? StopMode::TrueError : StopMode::SuccessiveDiff;
    if (mode == "true_error") return StopMode::TrueError;
    if (mode == "successive") return StopMode::SuccessiveDiff;
    throw ValidationError("stop mode must be auto | true_error | successive");
}

py::dict trace_to_dict(const IterationTrace& trace) {
    py::dict d;
    d["points"] = trace.points;
    d["errors"] = trace.errors;
    d["iterations"] = trace.iterations;
    d["stop_reason"] = std::string(to_string(trace.stop_reason));
    return d;
}

} // namespace

PYBIND11_MODULE(_kirkfp, m) {
    m.doc() = "Kirk-type fixed-point iteration laboratory (C++ core)";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ValidationError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const NumericError& e) {
            PyErr_SetString(PyExc_ArithmeticError, e.what());
        }
    });

    m.def("corpus_ids", &corpus_ids, "ids of the built-in operator corpus");
    m.def("corpus_table_csv", &corpus_table_csv);
    m.def(
        "operator_info",
        [](const std::string& id) {
            const Operator& T = corpus_get(id);
            py::dict d;
            d["id"] = T.id();
            d["dimension"] = T.dimension();
            d["class"] = std::string(to_string(T.declared()));
            d["a"] = T.contract_a();
            d["L"] = T.contract_L();
            d["phi"] = T.phi().to_string();
            d["norm"] = std::string(to_string(T.norm_kind()));
            if (T.has_fixed_point()) d["fixed_point"] = T.fixed_point();
            return d;
        },
        py::arg("operator_id"));

    m.def(
        "apply_power",
        [](const std::string& id, const Vec& x, long i) {
            return corpus_get(id).apply_power(x, i);
        },
        py::arg("operator_id"), py::arg("x"), py::arg("i"));

    m.def(
        "iterate_distance_bound",
        [](const std::string& id, const Vec& x, const Vec& y, int i) {
            return iterate_distance_bound(corpus_get(id), x, y, i);
        },
        py::arg("operator_id"), py::arg("x"), py::arg("y"), py::arg("i"));

    m.def(
        "check_condition",
        [](const std::string& id, const std::string& condition, int n_samples, std::uint64_t seed,
           double radius, double tol) {
            const Operator& T = corpus_get(id);
            PairSampler sampler(T.dimension(), radius, seed);
            ConditionReport rep =
                check_condition(T, condition_from_string(condition), sampler, n_samples, tol);
            py::dict d;
            d["condition"] = std::string(to_string(rep.condition));
            d["samples_tested"] = rep.samples_tested;
            d["satisfied"] = rep.satisfied();
            d["violations"] = rep.violations.size();
            return d;
        },
        py::arg("operator_id"), py::arg("condition"), py::arg("n_samples") = 10000,
        py::arg("seed") = 0, py::arg("radius") = 10.0, py::arg("tol") = 1e-10);

    m.def(
        "run",
        [](const std::string& id, const std::string& scheme, const Vec& x0, double tol,
           int max_iter, const std::string& mode) {
            const Operator& T = corpus_get(id);
            return trace_to_dict(run(T, scheme_from_text(scheme), x0, tol, max_iter,
                                     mode_from_text(mode, T)));
        },
        py::arg("operator_id"), py::arg("scheme"), py::arg("x0"), py::arg("tol") = 1e-8,
        py::arg("max_iter") = 1000, py::arg("mode") = "auto");

    m.def(
        "sigma",
        [](const std::string& scheme, double a, int n) {
            SigmaBreakdown b = contraction_factor(scheme_from_text(scheme), a, n);
            py::dict d;
            d["sigma"] = b.sigma;
            d["terms"] = b.terms;
            d["inner_sums"] = b.inner_sums;
            return d;
        },
        py::arg("scheme"), py::arg("a"), py::arg("n") = 0);

    m.def(
        "verify_sigma_bound",
        [](const std::string& scheme, double a, int n_steps) {
            return verify_contraction_bound(scheme_from_text(scheme), a, n_steps);
        },
        py::arg("scheme"), py::arg("a"), py::arg("n_steps") = 0);

    m.def(
        "stability",
        [](const std::string& id, const std::string& scheme, const Vec& y0,
           const std::string& perturbation, int n_steps, double tol_eps, double tol_y) {
            const Operator& T = corpus_get(id);
            PerturbationModel model;
            try {
                model = perturbation_from_json(parse_document(perturbation));
            } catch (const json::exception& e) {
                throw ValidationError(std::string("perturbation document field error: ") + e.what());
            }
            StabilityReport rep =
                stability_verdict(T, scheme_from_text(scheme), y0, model, n_steps, tol_eps, tol_y);
            py::dict d;
            d["verdict"] = std::string(to_string(rep.verdict));
            d["eps_tail"] = rep.eps_tail;
            d["y_tail"] = rep.y_tail;
            d["sigma"] = rep.sigma_sup;
            d["converse_violation"] = rep.converse_violation;
            d["conditional"] = rep.conditional;
            d["diverged"] = rep.diverged;
            d["eps"] = rep.eps;
            d["y_errors"] = rep.y_errors;
            return d;
        },
        py::arg("operator_id"), py::arg("scheme"), py::arg("y0"), py::arg("perturbation"),
        py::arg("n_steps") = 1000, py::arg("tol_eps") = 1e-6, py::arg("tol_y") = 1e-6);

    m.def(
        "dominating_sequence",
        [](double sigma, double u0, const std::vector<double>& eps) {
            return dominating_sequence(sigma, u0, eps, static_cast<int>(eps.size()));
        },
        py::arg("sigma"), py::arg("u0"), py::arg("eps"));

    m.def(
        "estimate_rate",
        [](const std::vector<double>& errors, int begin, int end) {
            RateEstimate est = estimate_rate(errors, begin, end);
            py::dict d;
            d["fitted_rate"] = est.fitted_rate;
            d["window"] = py::make_tuple(est.window_begin, est.window_end);
            d["r_squared"] = est.r_squared;
            return d;
        },
        py::arg("errors"), py::arg("begin") = -1, py::arg("end") = -1);
}
