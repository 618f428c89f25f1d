#include "redalg/report.hpp"

#include <json.hpp>

namespace redalg {

bool Report::ok() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

void Report::add(std::string name, bool passed, std::string detail) {
    checks.push_back({std::move(name), passed, std::move(detail)});
}

std::string to_json_string(const Report& r, int indent) {
    nlohmann::ordered_json j;
    j["title"] = r.title;
    j["ok"] = r.ok();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["passed"] = c.passed;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        j["checks"].push_back(std::move(jc));
    }
    if (!r.meta.empty()) {
        nlohmann::ordered_json jm;
        for (const auto& [k, v] : r.meta) jm[k] = v;
        j["meta"] = std::move(jm);
    }
    return j.dump(indent);
}

std::string render_text(const Report& r) {
    std::string out;
    if (!r.title.empty()) out += r.title + "\n";
    for (const auto& c : r.checks) {
        out += c.passed ? "PASS" : "FAIL";
        out += "  " + c.name;
        if (!c.detail.empty()) out += "  [" + c.detail + "]";
        out += "\n";
    }
    for (const auto& [k, v] : r.meta) out += "note  " + k + ": " + v + "\n";
    return out;
}

}  // namespace redalg
