// Python bindings for the walk runners and statistics layer.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "qwalk/measure.hpp"
#include "qwalk/pair.hpp"
#include "qwalk/single.hpp"

namespace py = pybind11;
using namespace qwalk;

namespace {

WalkConfig build_config(const std::string& walk, int steps, const std::string& initial,
                        const std::string& sign, bool normalize_each_step,
                        const std::optional<std::pair<Amp, Amp>>& ancilla) {
    WalkConfig config;
    config.kind = parse_walk_kind(walk);
    config.steps = steps;
    config.sign = parse_sign(sign);
    config.initial = parse_initial(initial);
    config.normalize_each_step = normalize_each_step;
    if (ancilla) config.ancilla_amplitudes = {ancilla->first, ancilla->second};
    config.validate();
    return config;
}

py::dict distribution_dict(const Distribution& d) {
    std::vector<int> positions;
    positions.reserve(d.lattice.size());
    for (int i = 0; i < d.lattice.size(); ++i) positions.push_back(d.lattice.site_at(i));
    py::dict out;
    out["positions"] = positions;
    out["probabilities"] = d.p;
    return out;
}

py::dict run_single_py(const std::string& walk, int steps, const std::string& initial,
                       const std::string& sign, bool normalize_each_step,
                       const std::optional<std::pair<Amp, Amp>>& ancilla) {
    const WalkConfig config = build_config(walk, steps, initial, sign, normalize_each_step, ancilla);
    if (config.kind == WalkKind::Classical) {
        py::dict out = distribution_dict(run_classical(config));
        out["prior_norms"] = std::vector<double>{};
        return out;
    }
    const SingleRun run = run_single(config);
    py::dict out = distribution_dict(run.distribution());
    out["prior_norms"] = run.prior_norms;
    return out;
}

py::dict run_pair_py(const std::string& walk, int steps, const std::string& initial,
                     const std::string& sign, bool normalize_each_step) {
    const WalkConfig config =
        build_config(walk, steps, initial, sign, normalize_each_step, std::nullopt);
    const PairRun run = run_pair(config);
    const JointDistribution j = joint_distribution(run.state);
    const Coincidence c = coincidence_probability(j);

    std::vector<std::tuple<int, int, double>> joint;
    const int n = j.lattice.size();
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
            const double p = j.p[static_cast<size_t>(i1) * n + i2];
            if (p != 0.0) joint.emplace_back(j.lattice.site_at(i1), j.lattice.site_at(i2), p);
        }

    py::dict out = distribution_dict(marginal(j, 1));
    out["marginal2"] = marginal(j, 2).p;
    out["joint"] = joint;
    out["p_same"] = c.p_same;
    out["p_diff"] = c.p_diff;
    out["prior_norms"] = run.prior_norms;
    return out;
}

std::vector<std::tuple<int, double, double>> coincidence_scan_py(int steps,
                                                                 const std::string& initial,
                                                                 const std::string& sign,
                                                                 const std::string& walk) {
    const WalkConfig config = build_config(walk, steps, initial, sign, true, std::nullopt);
    std::vector<std::tuple<int, double, double>> rows;
    for (const auto& [n, c] : coincidence_scan(config)) rows.emplace_back(n, c.p_same, c.p_diff);
    return rows;
}

py::dict variance_scan_py(const std::string& walk, int steps, int min_steps,
                          const std::string& initial, const std::string& sign) {
    WalkConfig config;
    const WalkKind kind = parse_walk_kind(walk);
    if (kind == WalkKind::Classical) {
        config.kind = kind;
        config.steps = steps;
    } else {
        config = build_config(walk, steps, initial, sign, true, std::nullopt);
    }
    const auto rows = variance_scan(config, min_steps);
    std::vector<int> ns;
    std::vector<double> vs;
    for (const auto& [n, v] : rows) {
        ns.push_back(n);
        vs.push_back(v);
    }
    py::dict out;
    out["steps"] = ns;
    out["variances"] = vs;
    out["slope"] = fit_log_log_slope(rows);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Discrete-time quantum walk simulator core";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ConfigError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    m.def("run_single", &run_single_py, py::arg("walk") = "hadamard", py::arg("steps") = 0,
          py::arg("initial") = "plus-i", py::arg("sign") = "plus",
          py::arg("normalize_each_step") = true, py::arg("ancilla") = std::nullopt,
          "Run a single-particle walk (hadamard, coinless, extended or classical) and "
          "return its position distribution and per-step norm diagnostics.");

    m.def("run_pair", &run_pair_py, py::arg("walk") = "pair", py::arg("steps") = 0,
          py::arg("initial") = "psi-i", py::arg("sign") = "plus",
          py::arg("normalize_each_step") = true,
          "Run a two-particle walk (pair or bec) and return marginals, the nonzero joint "
          "entries, coincidence probabilities and per-step diagnostics.");

    m.def("coincidence_scan", &coincidence_scan_py, py::arg("steps"), py::arg("initial") = "psi-i",
          py::arg("sign") = "plus", py::arg("walk") = "pair",
          "Coincidence probabilities (steps, p_same, p_diff) for every step 1..steps.");

    m.def("variance_scan", &variance_scan_py, py::arg("walk"), py::arg("steps"),
          py::arg("min_steps") = 1, py::arg("initial") = "plus-i", py::arg("sign") = "plus",
          "Per-step position variance and the fitted log-log slope.");

    m.def("runs_required", &runs_required, py::arg("n_points"),
          "Experiment repetitions needed to collect n position samples from pair measurements.");
}
