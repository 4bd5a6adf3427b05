#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rkato {

// One verdict line of a suite run. `numeric` is the measured value, `expected`
// the reference when the check compares against one, `residual` whatever
// deviation the check bounds by `tolerance`.
struct CheckRecord {
    std::string name;
    std::string config;
    double numeric = 0.0;
    std::optional<double> expected;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool expected_violation = false;  // control entries: pass means "violated as expected"
    std::string note;
};

struct ReportSummary {
    int passed = 0;
    int failed = 0;
    long undefined_points = 0;
};

// Deterministic run record. JSON output is byte-stable for fixed options and
// seed: keys are sorted and no timing data is embedded (wall time appears only
// in the Markdown rendering).
struct Report {
    std::string version;
    std::string command;
    std::map<std::string, std::string> config;
    std::vector<CheckRecord> checks;
    long undefined_points = 0;
    ReportSummary summary;

    void add(CheckRecord c) { checks.push_back(std::move(c)); }
    void finalize();

    std::string to_json() const;
    std::string to_csv() const;
    std::string to_markdown(double wall_seconds) const;
};

const std::string& library_version();

}  // namespace rkato
