// Command-line runner emitting walk distributions and summary statistics as
// CSV or JSON. Exit codes: 0 success, 2 configuration error, 3 runtime error.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalk/measure.hpp"
#include "qwalk/pair.hpp"
#include "qwalk/single.hpp"

using json = nlohmann::ordered_json;
using namespace qwalk;

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Options {
    int steps = 0;
    int min_steps = 1;
    std::string walk = "hadamard";
    std::string sign = "plus";
    std::string initial;
    std::string normalize = "true";
    std::string format = "csv";
    std::string out;
    std::uint64_t seed = 0;
    long long samples = 0;  // 0 = exact distribution, no sampling
};

WalkConfig build_config(const Options& opt, WalkKind kind) {
    WalkConfig config;
    config.kind = kind;
    config.steps = opt.steps;
    config.sign = parse_sign(opt.sign);
    config.initial = parse_initial(opt.initial);
    config.normalize_each_step = opt.normalize == "true";
    config.validate();
    return config;
}

// Sink selected by --out; standard output when no path is given.
class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw Error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

json meta_base(const std::string& subcommand, const Options& opt,
               const std::vector<double>& prior_norms) {
    json meta;
    meta["subcommand"] = subcommand;
    meta["steps"] = opt.steps;
    meta["sign"] = opt.sign;
    meta["initial"] = opt.initial;
    meta["normalize_each_step"] = opt.normalize == "true";
    meta["prior_norms"] = prior_norms;
    return meta;
}

void add_sampling_meta(json& meta, const Options& opt) {
    meta["samples"] = opt.samples;
    meta["seed"] = opt.seed;
}

Distribution empirical_distribution(const Distribution& exact, long long samples,
                                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Distribution emp(exact.lattice);
    const double w = 1.0 / static_cast<double>(samples);
    for (long long k = 0; k < samples; ++k) emp.at(sample_site(exact, rng)) += w;
    return emp;
}

void emit_distribution(const std::string& subcommand, const Options& opt,
                       const Distribution& exact, const std::vector<double>& prior_norms) {
    Distribution d = exact;
    if (opt.samples > 0) d = empirical_distribution(exact, opt.samples, opt.seed);

    Output output(opt.out);
    std::ostream& os = output.stream();
    if (opt.format == "csv") {
        os << "position,probability\n";
        for (int i = 0; i < d.lattice.size(); ++i)
            os << d.lattice.site_at(i) << ',' << num(d.p[i]) << '\n';
        return;
    }
    json root;
    root["meta"] = meta_base(subcommand, opt, prior_norms);
    if (subcommand == "single") root["meta"]["walk"] = opt.walk;
    if (opt.samples > 0) add_sampling_meta(root["meta"], opt);
    json data = json::array();
    for (int i = 0; i < d.lattice.size(); ++i)
        data.push_back({{"position", d.lattice.site_at(i)}, {"probability", d.p[i]}});
    root["data"] = std::move(data);
    os << root.dump(2) << '\n';
}

void emit_joint(const std::string& subcommand, const Options& opt, const JointDistribution& exact,
                const std::vector<double>& prior_norms) {
    const int n = exact.lattice.size();
    JointDistribution d = exact;
    long long position_points = 0;
    double p_same_empirical = 0.0;
    if (opt.samples > 0) {
        std::mt19937_64 rng(opt.seed);
        JointDistribution emp(exact.lattice);
        const double w = 1.0 / static_cast<double>(opt.samples);
        long long same = 0;
        for (long long k = 0; k < opt.samples; ++k) {
            const auto [x1, x2] = sample_joint_sites(exact, rng);
            emp.at(x1, x2) += w;
            // One registered position when the particles coincide, two otherwise.
            position_points += (x1 == x2) ? 1 : 2;
            if (x1 == x2) ++same;
        }
        p_same_empirical = static_cast<double>(same) / static_cast<double>(opt.samples);
        d = std::move(emp);
    }

    Output output(opt.out);
    std::ostream& os = output.stream();
    if (opt.format == "csv") {
        os << "x1,x2,probability\n";
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2) {
                const double p = d.p[static_cast<size_t>(i1) * n + i2];
                if (p == 0.0) continue;
                os << d.lattice.site_at(i1) << ',' << d.lattice.site_at(i2) << ',' << num(p) << '\n';
            }
        if (opt.samples > 0) os << "# position_points=" << position_points << '\n';
        return;
    }
    json root;
    root["meta"] = meta_base(subcommand, opt, prior_norms);
    if (opt.samples > 0) {
        add_sampling_meta(root["meta"], opt);
        root["meta"]["position_points"] = position_points;
        root["meta"]["p_same_empirical"] = p_same_empirical;
    }
    json data = json::array();
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
            const double p = d.p[static_cast<size_t>(i1) * n + i2];
            if (p == 0.0) continue;
            data.push_back({{"x1", d.lattice.site_at(i1)},
                            {"x2", d.lattice.site_at(i2)},
                            {"probability", p}});
        }
    root["data"] = std::move(data);
    os << root.dump(2) << '\n';
}

void run_single_command(Options opt) {
    const WalkConfig config = build_config(opt, parse_walk_kind(opt.walk));
    const SingleRun run = run_single(config);
    emit_distribution("single", opt, run.distribution(), run.prior_norms);
}

void run_classical_command(Options opt) {
    WalkConfig config;
    config.kind = WalkKind::Classical;
    config.steps = opt.steps;
    opt.initial = "delta";
    const Distribution d = run_classical(config);
    emit_distribution("classical", opt, d, {});
}

void run_pair_command(const std::string& subcommand, const Options& opt, WalkKind kind) {
    const WalkConfig config = build_config(opt, kind);
    const PairRun run = run_pair(config);
    emit_joint(subcommand, opt, joint_distribution(run.state), run.prior_norms);
}

void run_coincidence_command(const Options& opt) {
    const WalkConfig config = build_config(opt, WalkKind::Pair);
    const auto rows = coincidence_scan(config);

    Output output(opt.out);
    std::ostream& os = output.stream();
    if (opt.format == "csv") {
        os << "steps,p_same,p_diff\n";
        for (const auto& [n, c] : rows)
            os << n << ',' << num(c.p_same) << ',' << num(c.p_diff) << '\n';
        return;
    }
    json root;
    root["meta"] = meta_base("coincidence", opt, {});
    json data = json::array();
    for (const auto& [n, c] : rows)
        data.push_back({{"steps", n}, {"p_same", c.p_same}, {"p_diff", c.p_diff}});
    root["data"] = std::move(data);
    os << root.dump(2) << '\n';
}

void run_variance_scan_command(const Options& opt) {
    const WalkKind kind = parse_walk_kind(opt.walk);
    WalkConfig config;
    if (kind == WalkKind::Classical) {
        config.kind = kind;
        config.steps = opt.steps;
    } else {
        config = build_config(opt, kind);
    }
    const auto rows = variance_scan(config, opt.min_steps);
    const double slope = fit_log_log_slope(rows);

    Output output(opt.out);
    std::ostream& os = output.stream();
    if (opt.format == "csv") {
        os << "steps,variance\n";
        for (const auto& [n, v] : rows) os << n << ',' << num(v) << '\n';
        os << "# fitted_log_log_slope=" << num(slope) << '\n';
        return;
    }
    json root;
    root["meta"] = meta_base("variance-scan", opt, {});
    root["meta"]["walk"] = opt.walk;
    root["meta"]["min_steps"] = opt.min_steps;
    root["meta"]["fitted_log_log_slope"] = slope;
    json data = json::array();
    for (const auto& [n, v] : rows) data.push_back({{"steps", n}, {"variance", v}});
    root["data"] = std::move(data);
    os << root.dump(2) << '\n';
}

void add_common_flags(CLI::App* sub, Options& opt, bool with_sampling) {
    sub->add_option("--steps", opt.steps, "number of walk steps")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", opt.out, "output path (default: standard output)");
    if (with_sampling) {
        sub->add_option("--samples", opt.samples,
                        "draw this many measurement outcomes instead of emitting the exact distribution")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", opt.seed, "seed for sampling mode")->capture_default_str();
    }
}

void add_walk_flags(CLI::App* sub, Options& opt) {
    sub->add_option("--sign", opt.sign, "sign variant of the shift operator")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
    sub->add_option("--initial", opt.initial, "initial state");
    sub->add_option("--normalize-each-step", opt.normalize, "renormalize after every step")
        ->check(CLI::IsMember({"true", "false"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete-time quantum walk simulator"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* single = app.add_subcommand("single", "single-particle walk position distribution");
    add_common_flags(single, opt, true);
    add_walk_flags(single, opt);
    single->add_option("--walk", opt.walk, "step operator: hadamard, coinless or extended")
        ->check(CLI::IsMember({"hadamard", "coinless", "extended"}))
        ->capture_default_str();

    CLI::App* pair = app.add_subcommand("pair", "entangled pair walk joint distribution");
    add_common_flags(pair, opt, true);
    add_walk_flags(pair, opt);

    CLI::App* bec = app.add_subcommand("bec", "co-location-constrained condensate walk");
    add_common_flags(bec, opt, true);
    add_walk_flags(bec, opt);

    CLI::App* classical = app.add_subcommand("classical", "classical random-walk baseline");
    add_common_flags(classical, opt, true);

    CLI::App* coincidence =
        app.add_subcommand("coincidence", "coincidence probabilities for steps 1..N");
    add_common_flags(coincidence, opt, false);
    add_walk_flags(coincidence, opt);

    CLI::App* variance = app.add_subcommand("variance-scan", "per-step variance and fitted exponent");
    add_common_flags(variance, opt, false);
    add_walk_flags(variance, opt);
    variance->add_option("--walk", opt.walk, "step operator: hadamard, coinless, extended or classical")
        ->check(CLI::IsMember({"hadamard", "coinless", "extended", "classical"}))
        ->capture_default_str();
    variance->add_option("--min-steps", opt.min_steps, "first step count to report")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (opt.initial.empty())
        opt.initial = (pair->parsed() || bec->parsed() || coincidence->parsed()) ? "psi-i" : "plus-i";

    try {
        if (single->parsed())
            run_single_command(opt);
        else if (pair->parsed())
            run_pair_command("pair", opt, WalkKind::Pair);
        else if (bec->parsed())
            run_pair_command("bec", opt, WalkKind::Bec);
        else if (classical->parsed())
            run_classical_command(opt);
        else if (coincidence->parsed())
            run_coincidence_command(opt);
        else if (variance->parsed())
            run_variance_scan_command(opt);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
