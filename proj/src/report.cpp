#include "rkato/report.hpp"

#include <sstream>

#include <json.hpp>

namespace rkato {

const std::string& library_version() {
    static const std::string v = "0.1.0";
    return v;
}

void Report::finalize() {
    summary = ReportSummary{};
    for (const auto& c : checks) (c.pass ? summary.passed : summary.failed)++;
    summary.undefined_points = undefined_points;
}

namespace {

nlohmann::json check_json(const CheckRecord& c) {
    nlohmann::json j{
        {"config", c.config},
        {"expected", nullptr},
        {"expected_violation", c.expected_violation},
        {"name", c.name},
        {"note", c.note},
        {"numeric", c.numeric},
        {"pass", c.pass},
        {"residual", c.residual},
        {"tolerance", c.tolerance},
    };
    if (c.expected) j["expected"] = *c.expected;
    return j;
}

// RFC-style quoting for fields containing separators.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string num_str(double v) { return nlohmann::json(v).dump(); }

}  // namespace

std::string Report::to_json() const {
    nlohmann::json j{
        {"checks", nlohmann::json::array()},
        {"command", command},
        {"config", config},
        {"summary",
         {{"failed", summary.failed},
          {"passed", summary.passed},
          {"undefined_points", summary.undefined_points}}},
        {"version", version},
    };
    for (const auto& c : checks) j["checks"].push_back(check_json(c));
    return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
    std::ostringstream os;
    os << "name,config,numeric,expected,residual,tolerance,pass,expected_violation,note\n";
    for (const auto& c : checks) {
        os << csv_field(c.name) << ',' << csv_field(c.config) << ',' << num_str(c.numeric) << ','
           << (c.expected ? num_str(*c.expected) : "") << ',' << num_str(c.residual) << ','
           << num_str(c.tolerance) << ',' << (c.pass ? "true" : "false") << ','
           << (c.expected_violation ? "true" : "false") << ',' << csv_field(c.note) << '\n';
    }
    return os.str();
}

std::string Report::to_markdown(double wall_seconds) const {
    std::ostringstream os;
    os << "# " << command << " report\n\n";
    os << "version " << version << "\n\n";
    if (!config.empty()) {
        os << "| option | value |\n|---|---|\n";
        for (const auto& [k, v] : config) os << "| " << k << " | " << v << " |\n";
        os << '\n';
    }
    os << "| check | config | numeric | expected | residual | tol | pass |\n";
    os << "|---|---|---|---|---|---|---|\n";
    for (const auto& c : checks) {
        os << "| " << c.name << " | " << c.config << " | " << num_str(c.numeric) << " | "
           << (c.expected ? num_str(*c.expected) : "-") << " | " << num_str(c.residual) << " | "
           << num_str(c.tolerance) << " | " << (c.pass ? "yes" : "**NO**")
           << (c.expected_violation ? " (expected violation)" : "") << " |\n";
    }
    os << "\n" << summary.passed << " passed, " << summary.failed << " failed, "
       << summary.undefined_points << " undefined sample points; wall time "
       << num_str(wall_seconds) << " s\n";
    return os.str();
}

}  // namespace rkato
