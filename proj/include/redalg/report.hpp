#pragma once

#include <map>
#include <string>
#include <vector>

namespace redalg {

/// One named pass/fail check with a human-readable detail (usually the
/// computed value, rendered exactly).
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// A titled list of checks plus free-form metadata notes.  Shared by the
/// verification routines and the command-line output.
struct Report {
    std::string title;
    std::vector<CheckResult> checks;
    std::map<std::string, std::string> meta;

    bool ok() const;
    void add(std::string name, bool passed, std::string detail = "");
};

/// JSON rendering (stable key order).
std::string to_json_string(const Report& r, int indent = 2);

/// Plain-text rendering, one line per check.
std::string render_text(const Report& r);

}  // namespace redalg
