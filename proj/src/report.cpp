#include "kappa/report.hpp"

#include <cstdio>
#include <sstream>

namespace kappa {

namespace {

// Minimal JSON writer. nlohmann::json is fine for parsing configs, but its
// serializer picks the shortest round-trip representation of each double;
// the report format instead promises a fixed %.17g rendering, so the few
// emit helpers below are spelled out by hand.
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string num(long v) { return std::to_string(v); }
std::string num(uint64_t v) { return std::to_string(v); }

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += "\"";
    return out;
}

std::string point_array(const Momentum& p) {
    std::string out = "[";
    for (int mu = 0; mu < p.dim(); ++mu) {
        if (mu) out += ",";
        out += num(p[mu]);
    }
    out += "]";
    return out;
}

std::string family_json(const CFamily& f) {
    switch (f.kind) {
        case CFamily::Kind::kappa: return "{\"kind\":\"kappa\"}";
        case CFamily::Kind::constant: return "{\"kind\":\"constant\",\"c\":" + num(f.value) + "}";
        case CFamily::Kind::affine: return "{\"kind\":\"affine\",\"lambda\":" + num(f.value) + "}";
    }
    return "{}";
}

std::string metric_json(const MetricSpec& spec) {
    if (spec.rows.empty()) return quoted(spec.preset);
    std::string out = "{\"n\":" + std::to_string(spec.rows.size()) + ",\"rows\":[";
    for (size_t r = 0; r < spec.rows.size(); ++r) {
        if (r) out += ",";
        out += "[";
        for (size_t c = 0; c < spec.rows[r].size(); ++c) {
            if (c) out += ",";
            out += num(spec.rows[r][c]);
        }
        out += "]";
    }
    out += "]}";
    return out;
}

std::string config_json(const SuiteConfig& cfg) {
    std::string out = "{";
    out += "\"metric\":" + metric_json(cfg.metric);
    out += ",\"kappa\":" + num(cfg.kappa);
    out += ",\"c_family\":" + family_json(cfg.c_family);
    out += ",\"tolerance\":" + num(cfg.tolerance);
    out += ",\"samples\":" + num(static_cast<long>(cfg.samples));
    out += ",\"seed\":" + num(cfg.seed);
    out += ",\"momentum_box\":" + num(cfg.momentum_box);
    out += ",\"suites\":[";
    const auto suites = cfg.effective_suites();
    for (size_t i = 0; i < suites.size(); ++i) {
        if (i) out += ",";
        out += quoted(suite_name(suites[i]));
    }
    out += "],\"fault\":" + quoted(fault_name(cfg.fault));
    out += "}";
    return out;
}

std::string check_json(const CheckResult& c) {
    std::string out = "{";
    out += "\"name\":" + quoted(c.name);
    out += ",\"kind\":" + quoted(check_kind_name(c.kind));
    out += ",\"value\":" + num(c.value);
    out += ",\"threshold\":" + num(c.threshold);
    out += ",\"pass\":" + std::string(c.pass ? "true" : "false");
    out += ",\"skipped\":" + num(c.skipped);
    if (!c.worst_point.empty()) out += ",\"worst_point\":" + point_array(c.worst_point);
    if (!c.detail.empty()) out += ",\"detail\":" + quoted(c.detail);
    out += "}";
    return out;
}

std::string suite_json(const SuiteResult& s) {
    std::string out = "{";
    out += "\"name\":" + quoted(s.name);
    out += ",\"samples\":" + num(s.samples_attempted);
    out += ",\"accepted\":" + num(s.samples_accepted);
    out += ",\"max_residual\":" + num(s.max_residual);
    out += ",\"worst_point\":" + (s.worst_point.empty() ? std::string("[]") : point_array(s.worst_point));
    out += ",\"pass\":" + std::string(s.pass ? "true" : "false");
    out += ",\"checks\":[";
    for (size_t i = 0; i < s.checks.size(); ++i) {
        if (i) out += ",";
        out += check_json(s.checks[i]);
    }
    out += "]}";
    return out;
}

}  // namespace

std::string check_kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::residual_max: return "residual_max";
        case CheckKind::control_floor: return "control_floor";
        case CheckKind::fraction_floor: return "fraction_floor";
        case CheckKind::ratio_band: return "ratio_band";
    }
    return "?";
}

std::string report_to_json(const VerificationReport& report) {
    std::string out = "{";
    out += "\"schema_version\":1";
    out += ",\"config\":" + config_json(report.config);
    out += ",\"suites\":[";
    for (size_t i = 0; i < report.suites.size(); ++i) {
        if (i) out += ",";
        out += suite_json(report.suites[i]);
    }
    out += "],\"pass\":" + std::string(report.pass ? "true" : "false");
    out += "}\n";
    return out;
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream out;
    const SuiteConfig& cfg = report.config;
    out << "metric " << cfg.metric.describe() << ", kappa " << num(cfg.kappa) << ", C family "
        << cfg.c_family.name() << ", tolerance " << num(cfg.tolerance) << ", samples " << cfg.samples
        << ", seed " << cfg.seed << ", box " << num(cfg.momentum_box);
    if (cfg.fault != FaultInjection::none) out << ", fault " << fault_name(cfg.fault);
    out << "\n\n";

    for (const SuiteResult& s : report.suites) {
        out << (s.pass ? "PASS" : "FAIL") << "  " << s.name << "  (accepted " << s.samples_accepted << "/"
            << s.samples_attempted << " samples, max residual " << num(s.max_residual) << ", "
            << num(s.wall_ms) << " ms)\n";
        for (const CheckResult& c : s.checks) {
            out << "      " << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  value " << num(c.value);
            switch (c.kind) {
                case CheckKind::residual_max: out << " <= " << num(c.threshold); break;
                case CheckKind::control_floor: out << " >= " << num(c.threshold); break;
                case CheckKind::fraction_floor: out << " >= " << num(c.threshold); break;
                case CheckKind::ratio_band: out << " <= " << num(c.threshold); break;
            }
            if (c.skipped > 0) out << "  (skipped " << c.skipped << ")";
            if (!c.detail.empty()) out << "  [" << c.detail << "]";
            if (!c.worst_point.empty()) out << "  at " << c.worst_point.str();
            out << "\n";
        }
    }
    out << "\n" << (report.pass ? "PASS" : "FAIL") << "  overall (" << num(report.wall_ms) << " ms)\n";
    return out.str();
}

}  // namespace kappa
