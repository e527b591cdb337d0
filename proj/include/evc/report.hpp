#ifndef EVC_REPORT_HPP
#define EVC_REPORT_HPP

#include <string>

#include "evc/engine.hpp"
#include "json.hpp"

namespace evc {

inline constexpr const char* kEngineVersion = "1.0.0";

// CLI-facing result: the engine output plus parse timing and a version tag.
// The JSON field set is schema-stable: fields are only ever added within a
// major version, never removed or renamed.
struct EvcReport {
    EvcResult result;
    double parse_seconds = 0.0;
    std::string engine_version = kEngineVersion;
};

inline nlohmann::json to_json(const EvcReport& report) {
    nlohmann::json j;
    j["engine_version"] = report.engine_version;
    j["evc"] = report.result.evc;
    if (report.result.query_vertex) {
        j["query_vertex"] = *report.result.query_vertex;
        j["evc_v"] = *report.result.evc_v;
        j["type"] = report.result.vtype == VertexType::Type1 ? 1 : 2;
    }
    j["blocks"] = nlohmann::json::array();
    for (const auto& row : report.result.blocks) {
        j["blocks"].push_back({{"kind", to_string(row.kind)},
                               {"size", row.size},
                               {"cut_count", row.cut_count},
                               {"chi", row.chi},
                               {"branch", row.branch}});
    }
    j["timings"] = {{"parse_s", report.parse_seconds},
                    {"decompose_s", report.result.decompose_seconds},
                    {"solve_s", report.result.solve_seconds}};
    return j;
}

inline std::string render_text(const EvcReport& report) {
    std::string out = "evc = " + std::to_string(report.result.evc) + "\n";
    if (report.result.query_vertex) {
        out += "query_vertex = " + std::to_string(*report.result.query_vertex) + "\n";
        out += "evc_v = " + std::to_string(*report.result.evc_v) + "\n";
        out += "type = " +
               std::string(report.result.vtype == VertexType::Type1 ? "1" : "2") + "\n";
    }
    out += "blocks:\n";
    for (const auto& row : report.result.blocks) {
        out += "  kind=" + std::string(to_string(row.kind)) +
               " size=" + std::to_string(row.size) +
               " cut_count=" + std::to_string(row.cut_count) +
               " chi=" + std::to_string(row.chi) + " branch=" + row.branch + "\n";
    }
    out += "timings: parse_s=" + std::to_string(report.parse_seconds) +
           " decompose_s=" + std::to_string(report.result.decompose_seconds) +
           " solve_s=" + std::to_string(report.result.solve_seconds) + "\n";
    out += "engine_version = " + report.engine_version + "\n";
    return out;
}

} // namespace evc

#endif // EVC_REPORT_HPP
