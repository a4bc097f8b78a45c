// kappa-verify: command-line front end for the deformed momentum-space
// algebra library. Subcommands:
//
//   verify        run verification suites, print a report (text or JSON)
//   map           apply the deformation map (or its inverse) to one point
//   add           deformed composition of two momenta
//   casimir       deformed mass-squared of a point, plus shell recovery
//   limits        print gap-halving tables for the classical limits
//   list-metrics  show the built-in metric presets
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 usage, configuration or domain error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "kappa/casimir.hpp"
#include "kappa/coproduct.hpp"
#include "kappa/errors.hpp"
#include "kappa/metric.hpp"
#include "kappa/suites.hpp"
#include "kappa/tolerance.hpp"
#include "kappa/vector_field.hpp"

namespace {

using namespace kappa;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Options shared by the point-wise subcommands.
struct CommonOpts {
    std::string metric = "minkowski4";
    double kappa = 1.0;
    std::string family = "kappa";
};

CFamily parse_family(const std::string& text) {
    if (text == "kappa") return CFamily::kappa_scale();
    const auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string kind = text.substr(0, colon);
        const std::string arg = text.substr(colon + 1);
        try {
            size_t used = 0;
            const double v = std::stod(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
            if (kind == "constant") return CFamily::constant(v);
            if (kind == "affine") return CFamily::affine(v);
        } catch (const std::exception&) {
            throw ConfigError("cannot parse family parameter '" + arg + "'");
        }
    }
    throw ConfigError("c-family must be 'kappa', 'constant:<c>' or 'affine:<lambda>'");
}

Metric build_metric(const std::string& name) { return metric_preset(name); }

Momentum parse_point(const std::vector<double>& comps, int dim) {
    if (static_cast<int>(comps.size()) != dim)
        throw ConfigError("point needs " + std::to_string(dim) + " components, got " +
                          std::to_string(comps.size()));
    return Momentum(std::vector<double>(comps.begin(), comps.end()));
}

void print_point(const std::string& label, const Momentum& p) {
    std::cout << label;
    for (int mu = 0; mu < p.dim(); ++mu) std::cout << (mu ? " " : "") << fmt(p[mu]);
    std::cout << "\n";
}

int run_verify(const std::string& config_path, const SuiteConfig& overrides,
               const std::vector<std::string>& set_flags, bool json_output) {
    SuiteConfig cfg = config_path.empty() ? SuiteConfig{} : config_from_file(config_path);

    // Flags override the file. set_flags records which flags the user
    // actually passed, so file values survive otherwise.
    for (const std::string& flag : set_flags) {
        if (flag == "metric") cfg.metric = overrides.metric;
        else if (flag == "kappa") cfg.kappa = overrides.kappa;
        else if (flag == "c-family") cfg.c_family = overrides.c_family;
        else if (flag == "tolerance") cfg.tolerance = overrides.tolerance;
        else if (flag == "samples") cfg.samples = overrides.samples;
        else if (flag == "seed") cfg.seed = overrides.seed;
        else if (flag == "box") cfg.momentum_box = overrides.momentum_box;
        else if (flag == "suites") cfg.suites = overrides.suites;
        else if (flag == "inject-fault") cfg.fault = overrides.fault;
    }
    cfg.validate();

    const VerificationReport report = run_suites(cfg);
    std::cout << (json_output ? report_to_json(report) : report_to_text(report));
    return report.pass ? kExitPass : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification tool for deformed momentum-space symmetry algebras"};
    app.require_subcommand(1);

    // ---------------------------------------------------------- verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string config_path;
    std::string metric_flag = "minkowski4", family_flag = "kappa", fault_flag = "none";
    std::vector<std::string> suites_flag;
    double kappa_flag = 1.0, tolerance_flag = 1e-9, box_flag = 1.0;
    int samples_flag = 500;
    uint64_t seed_flag = 42;
    bool json_output = false;
    verify->add_option("--config", config_path, "JSON config file");
    verify->add_option("--metric", metric_flag, "metric preset name");
    verify->add_option("--kappa", kappa_flag, "deformation scale (positive)");
    verify->add_option("--c-family", family_flag, "kappa | constant:<c> | affine:<lambda>");
    verify->add_option("--tolerance", tolerance_flag, "residual tolerance for the 1e-9-class checks");
    verify->add_option("--samples", samples_flag, "sample points per suite");
    verify->add_option("--seed", seed_flag, "RNG seed");
    verify->add_option("--box", box_flag, "momentum box half-width");
    verify->add_option("--suites", suites_flag, "subset of suites to run")->delimiter(',');
    verify->add_option("--inject-fault", fault_flag, "none | perturb-kappa | drop-hessian");
    verify->add_flag("--json", json_output, "emit the canonical JSON report");

    // ------------------------------------------------------------- map
    auto* map_cmd = app.add_subcommand("map", "apply the deformation map to one point");
    CommonOpts map_opts;
    std::vector<double> map_point;
    bool map_inverse = false;
    double map_m2 = 0.0;
    map_cmd->add_option("--metric", map_opts.metric, "metric preset name");
    map_cmd->add_option("--kappa", map_opts.kappa, "deformation scale");
    map_cmd->add_option("--c-family", map_opts.family, "kappa | constant:<c> | affine:<lambda>");
    map_cmd->add_option("--point", map_point, "momentum components")->required()->expected(-2);
    map_cmd->add_flag("--inverse", map_inverse, "apply the inverse map (needs --m2)");
    map_cmd->add_option("--m2", map_m2, "classical mass-squared of the shell (inverse only)");

    // ------------------------------------------------------------- add
    auto* add_cmd = app.add_subcommand("add", "deformed composition of two momenta");
    double add_kappa = 1.0;
    int add_dim = 4;
    std::vector<double> add_p, add_q;
    bool add_both = false;
    add_cmd->add_option("--kappa", add_kappa, "deformation scale");
    add_cmd->add_option("--dim", add_dim, "dimension of momentum space");
    add_cmd->add_option("--p", add_p, "first momentum")->required()->expected(-2);
    add_cmd->add_option("--q", add_q, "second momentum")->required()->expected(-2);
    add_cmd->add_flag("--both-orders", add_both, "also print q (+) p and the asymmetry gap");

    // --------------------------------------------------------- casimir
    auto* cas_cmd = app.add_subcommand("casimir", "deformed mass-squared and shell recovery");
    CommonOpts cas_opts;
    std::vector<double> cas_point;
    cas_cmd->add_option("--metric", cas_opts.metric, "metric preset name");
    cas_cmd->add_option("--kappa", cas_opts.kappa, "deformation scale");
    cas_cmd->add_option("--c-family", cas_opts.family, "kappa | constant:<c> | affine:<lambda>");
    cas_cmd->add_option("--point", cas_point, "deformed momentum components")->required()->expected(-2);

    // ---------------------------------------------------------- limits
    auto* lim_cmd = app.add_subcommand("limits", "gap-halving tables for the classical limits");
    std::string lim_metric = "minkowski4";
    std::vector<double> lim_point;
    lim_cmd->add_option("--metric", lim_metric, "metric preset name");
    lim_cmd->add_option("--point", lim_point, "probe momentum (default: 0.4, 0.3, 0, ...)")->expected(-2);

    // ---------------------------------------------------- list-metrics
    auto* list_cmd = app.add_subcommand("list-metrics", "show the built-in metric presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*verify) {
            SuiteConfig overrides;
            std::vector<std::string> set_flags;
            for (const char* name : {"metric", "kappa", "c-family", "tolerance", "samples", "seed", "box",
                                     "suites", "inject-fault"})
                if (verify->count(std::string("--") + name)) set_flags.push_back(name);
            overrides.metric.preset = metric_flag;
            overrides.kappa = kappa_flag;
            overrides.c_family = parse_family(family_flag);
            overrides.tolerance = tolerance_flag;
            overrides.samples = samples_flag;
            overrides.seed = seed_flag;
            overrides.momentum_box = box_flag;
            for (const std::string& s : suites_flag) {
                const auto parsed = suite_from_name(s);
                if (!parsed) throw ConfigError("unknown suite '" + s + "'");
                overrides.suites.push_back(*parsed);
            }
            const auto fault = fault_from_name(fault_flag);
            if (!fault) throw ConfigError("unknown fault '" + fault_flag + "'");
            overrides.fault = *fault;
            return run_verify(config_path, overrides, set_flags, json_output);
        }

        if (*map_cmd) {
            const Metric g = build_metric(map_opts.metric);
            DeformationParams params{map_opts.kappa, parse_family(map_opts.family)};
            const Momentum p = parse_point(map_point, g.dim());
            if (map_inverse) {
                if (!map_cmd->count("--m2"))
                    throw ConfigError("--inverse needs --m2 (the shell is not encoded in the point)");
                print_point("", inverse(p, params, g, map_m2));
            } else {
                print_point("", forward(p, params, g));
            }
            return kExitPass;
        }

        if (*add_cmd) {
            if (add_dim < 2) throw ConfigError("dimension must be at least 2");
            const Momentum p = parse_point(add_p, add_dim);
            const Momentum q = parse_point(add_q, add_dim);
            print_point("", deformed_add(p, q, add_kappa));
            if (add_both) {
                print_point("", deformed_add(q, p, add_kappa));
                std::cout << "asymmetry " << fmt(cocommutativity_gap(p, q, add_kappa)) << "\n";
            }
            return kExitPass;
        }

        if (*cas_cmd) {
            const Metric g = build_metric(cas_opts.metric);
            DeformationParams params{cas_opts.kappa, parse_family(cas_opts.family)};
            const Momentum t = parse_point(cas_point, g.dim());
            const double mt2 = deformed_mass_squared(t, g, cas_opts.kappa);
            std::cout << "deformed_m2 " << fmt(mt2) << "\n";
            try {
                const RecoveredMass rec = recover_m2(t, params, g);
                std::cout << "recovered_m2 " << fmt(rec.m2) << (rec.degenerate ? " (degenerate shell)" : "")
                          << "\n";
            } catch (const NoSolutionError& e) {
                std::cout << "recovered_m2 none (" << e.what() << ")\n";
            }
            return kExitPass;
        }

        if (*lim_cmd) {
            const Metric g = build_metric(lim_metric);
            Momentum p = Momentum::zero(g.dim());
            if (!lim_point.empty()) {
                p = parse_point(lim_point, g.dim());
            } else {
                p[0] = 0.4;
                p[1] = 0.3;
            }
            std::cout << "probe " << p.str() << " on " << lim_metric
                      << "; each gap should roughly halve as kappa doubles\n";
            std::printf("%10s %16s %16s %16s\n", "kappa", "map", "action", "casimir");
            for (const double kap : {10.0, 20.0, 40.0, 80.0, 160.0}) {
                DeformationParams params{kap, CFamily::kappa_scale()};
                const Momentum image = forward(p, params, g);
                const double map_gap = max_scaled_gap(image.components(), p.components());
                double action_gap = 0.0;
                for (const Generator& gen : lorentz_basis(g.dim())) {
                    if (gen.kind != Generator::Kind::boost) continue;
                    action_gap = std::max(action_gap, max_scaled_gap(deformed_field(gen, g, kap)(p),
                                                                     classical_field(gen, g)(p)));
                }
                const double cas_gap = scaled_gap(deformed_mass_squared(p, g, kap), mass_squared(g, p));
                std::printf("%10g %16.9e %16.9e %16.9e\n", kap, map_gap, action_gap, cas_gap);
            }
            return kExitPass;
        }

        if (*list_cmd) {
            for (const std::string& name : metric_preset_names()) {
                const Metric g = metric_preset(name);
                std::cout << name << "  (n = " << g.dim() << ", g00 = " << fmt(g.g00()) << ")  " << g.str()
                          << "\n";
            }
            return kExitPass;
        }
    } catch (const MapDomainError& e) {
        std::cerr << "error: " << e.condition() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
