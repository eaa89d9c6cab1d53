#pragma once

// Report assembly: human-readable tables and a machine-readable JSON
// rendering that is a strict superset of the human content. Reports are
// byte-stable for identical inputs and seed.

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "catideal/exact_linalg.hpp"

namespace catideal {

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  // name -> digest
    struct Section {
        std::string title;
        std::vector<std::string> lines;
    };
    std::vector<Section> sections;
    std::string status = "ok";  // ok | finding | violation
    int exit_code = 0;

    Section& section(const std::string& title) {
        sections.push_back(Section{title, {}});
        return sections.back();
    }
};

inline std::string fnv1a_digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

inline std::string render_human(const Report& r) {
    std::ostringstream os;
    os << "== catideal " << r.command << " ==\n";
    for (const auto& [name, digest] : r.inputs) os << "input " << name << " digest " << digest << "\n";
    for (const auto& s : r.sections) {
        os << "\n-- " << s.title << " --\n";
        for (const auto& l : s.lines) os << l << "\n";
    }
    os << "\nstatus: " << r.status << "\n";
    return os.str();
}

inline std::string render_machine(const Report& r) {
    nlohmann::json j;
    j["command"] = r.command;
    j["inputs"] = nlohmann::json::array();
    for (const auto& [name, digest] : r.inputs)
        j["inputs"].push_back({{"name", name}, {"digest", digest}});
    j["sections"] = nlohmann::json::array();
    for (const auto& s : r.sections) j["sections"].push_back({{"title", s.title}, {"lines", s.lines}});
    j["status"] = r.status;
    j["exit"] = r.exit_code;
    return j.dump(2) + "\n";
}

// shared formatting helpers

inline std::string format_coords(const ElementVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

inline std::string format_factors(const InvariantFactors& f) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << "]";
    return os.str();
}

}  // namespace catideal
