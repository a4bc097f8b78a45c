#include "kappa/config.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "kappa/errors.hpp"

namespace kappa {

namespace {

using nlohmann::json;

const std::vector<std::pair<Suite, const char*>> kSuiteNames = {
    {Suite::closure, "closure"},     {Suite::ode, "ode"},
    {Suite::intertwine, "intertwine"}, {Suite::roundtrip, "roundtrip"},
    {Suite::casimir, "casimir"},     {Suite::coproduct, "coproduct"},
    {Suite::limit, "limit"},         {Suite::weyl, "weyl"},
};

double require_positive(const json& j, const std::string& key) {
    if (!j.is_number()) throw ConfigError("config field '" + key + "' must be a number");
    const double v = j.get<double>();
    if (!(v > 0.0)) throw ConfigError("config field '" + key + "' must be positive");
    return v;
}

CFamily family_from_json(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "kappa") return CFamily::kappa_scale();
        throw ConfigError("config field 'c_family': unknown name '" + s + "'");
    }
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw ConfigError("config field 'c_family' must be \"kappa\" or an object with a 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "kappa") return CFamily::kappa_scale();
    if (kind == "constant") {
        if (!j.contains("c") || !j.at("c").is_number())
            throw ConfigError("c_family 'constant' needs a numeric field 'c'");
        return CFamily::constant(j.at("c").get<double>());
    }
    if (kind == "affine") {
        if (!j.contains("lambda") || !j.at("lambda").is_number())
            throw ConfigError("c_family 'affine' needs a numeric field 'lambda'");
        return CFamily::affine(j.at("lambda").get<double>());
    }
    throw ConfigError("c_family kind must be 'kappa', 'constant' or 'affine'");
}

MetricSpec metric_from_json(const json& j) {
    MetricSpec spec;
    if (j.is_string()) {
        spec.preset = j.get<std::string>();
        return spec;
    }
    if (!j.is_object() || !j.contains("rows"))
        throw ConfigError("config field 'metric' must be a preset name or an object with 'rows'");
    const json& rows = j.at("rows");
    if (!rows.is_array() || rows.empty()) throw ConfigError("metric 'rows' must be a non-empty array of arrays");
    spec.preset.clear();
    for (const json& row : rows) {
        if (!row.is_array()) throw ConfigError("metric 'rows' must be a non-empty array of arrays");
        std::vector<double> out;
        for (const json& x : row) {
            if (!x.is_number()) throw ConfigError("metric entries must be numbers");
            out.push_back(x.get<double>());
        }
        spec.rows.push_back(std::move(out));
    }
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer() || j.at("n").get<int>() != static_cast<int>(spec.rows.size()))
            throw ConfigError("metric 'n' must match the number of rows");
    }
    return spec;
}

}  // namespace

std::string suite_name(Suite s) {
    for (const auto& [suite, name] : kSuiteNames)
        if (suite == s) return name;
    return "?";
}

std::optional<Suite> suite_from_name(const std::string& name) {
    for (const auto& [suite, n] : kSuiteNames)
        if (name == n) return suite;
    return std::nullopt;
}

std::vector<Suite> all_suites() {
    std::vector<Suite> out;
    for (const auto& [suite, name] : kSuiteNames) out.push_back(suite);
    return out;
}

std::string fault_name(FaultInjection f) {
    switch (f) {
        case FaultInjection::none: return "none";
        case FaultInjection::perturb_kappa: return "perturb-kappa";
        case FaultInjection::drop_hessian: return "drop-hessian";
    }
    return "?";
}

std::optional<FaultInjection> fault_from_name(const std::string& name) {
    if (name == "none") return FaultInjection::none;
    if (name == "perturb-kappa") return FaultInjection::perturb_kappa;
    if (name == "drop-hessian") return FaultInjection::drop_hessian;
    return std::nullopt;
}

Metric MetricSpec::build() const {
    if (!rows.empty()) return Metric::from_rows(rows);
    return metric_preset(preset);
}

std::string MetricSpec::describe() const {
    if (!rows.empty()) return "custom " + std::to_string(rows.size()) + "d metric";
    return preset;
}

void SuiteConfig::validate() const {
    Metric g = [&] {
        try {
            return metric.build();
        } catch (const ConfigError&) {
            throw;
        } catch (const Error& e) {
            throw ConfigError(std::string("invalid metric: ") + e.what());
        }
    }();
    if (!(kappa > 0.0)) throw ConfigError("kappa must be positive");
    if (!(tolerance > 0.0)) throw ConfigError("tolerance must be positive");
    if (samples < 1) throw ConfigError("samples must be at least 1");
    if (!(momentum_box > 0.0)) throw ConfigError("momentum_box must be positive");
    if (c_family.kind == CFamily::Kind::constant && !(c_family.value > 0.0))
        throw ConfigError("constant c_family requires a positive constant");

    const bool null_time = g.g00() == 0.0;
    for (const Suite s : suites) {
        if (s == Suite::weyl && !null_time)
            throw ConfigError("the weyl suite requires a metric with g00 = 0");
        if (s == Suite::weyl && !c_family.is_constant())
            throw ConfigError("the weyl suite requires a constant c_family");
    }
}

std::vector<Suite> SuiteConfig::effective_suites() const {
    if (!suites.empty()) return suites;
    std::vector<Suite> out;
    const bool null_time = [&] {
        try {
            return metric.build().g00() == 0.0;
        } catch (const Error&) {
            return false;
        }
    }();
    for (const Suite s : all_suites()) {
        if (s == Suite::weyl && !null_time) continue;
        out.push_back(s);
    }
    return out;
}

SuiteConfig config_from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");

    static const std::set<std::string> known = {"metric",  "kappa", "c_family",     "tolerance", "samples",
                                                "seed",    "suites", "momentum_box", "fault"};
    for (const auto& [key, value] : doc.items())
        if (!known.count(key)) throw ConfigError("unknown config field '" + key + "'");

    SuiteConfig cfg;
    if (doc.contains("metric")) cfg.metric = metric_from_json(doc.at("metric"));
    if (doc.contains("kappa")) cfg.kappa = require_positive(doc.at("kappa"), "kappa");
    if (doc.contains("c_family")) cfg.c_family = family_from_json(doc.at("c_family"));
    if (doc.contains("tolerance")) cfg.tolerance = require_positive(doc.at("tolerance"), "tolerance");
    if (doc.contains("samples")) {
        if (!doc.at("samples").is_number_integer() || doc.at("samples").get<long>() < 1)
            throw ConfigError("config field 'samples' must be a positive integer");
        cfg.samples = doc.at("samples").get<int>();
    }
    if (doc.contains("seed")) {
        if (!doc.at("seed").is_number_unsigned() && !doc.at("seed").is_number_integer())
            throw ConfigError("config field 'seed' must be a nonnegative integer");
        if (doc.at("seed").is_number_integer() && doc.at("seed").get<long long>() < 0)
            throw ConfigError("config field 'seed' must be a nonnegative integer");
        cfg.seed = doc.at("seed").get<uint64_t>();
    }
    if (doc.contains("momentum_box")) cfg.momentum_box = require_positive(doc.at("momentum_box"), "momentum_box");
    if (doc.contains("suites")) {
        if (!doc.at("suites").is_array()) throw ConfigError("config field 'suites' must be an array of names");
        for (const json& s : doc.at("suites")) {
            if (!s.is_string()) throw ConfigError("config field 'suites' must be an array of names");
            const auto parsed = suite_from_name(s.get<std::string>());
            if (!parsed) throw ConfigError("unknown suite '" + s.get<std::string>() + "'");
            if (std::find(cfg.suites.begin(), cfg.suites.end(), *parsed) == cfg.suites.end())
                cfg.suites.push_back(*parsed);
        }
        if (cfg.suites.empty()) throw ConfigError("config field 'suites' must not be an empty list");
    }
    if (doc.contains("fault")) {
        if (!doc.at("fault").is_string()) throw ConfigError("config field 'fault' must be a string");
        const auto parsed = fault_from_name(doc.at("fault").get<std::string>());
        if (!parsed) throw ConfigError("unknown fault '" + doc.at("fault").get<std::string>() + "'");
        cfg.fault = *parsed;
    }
    cfg.validate();
    return cfg;
}

SuiteConfig config_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_json_text(buf.str());
}

}  // namespace kappa
