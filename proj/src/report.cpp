#include "treelattice/report.hpp"

#include <cstdio>
#include <sstream>

namespace treelattice {

std::string format_g12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string table_csv(const CountTable& t) {
    std::ostringstream out;
    out << "n,count,normalized\n";
    for (const CountRow& r : t.rows) out << r.n << ',' << r.count << ',' << format_g12(r.normalized) << '\n';
    return out.str();
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CountTable& t) {
    Json rows = Json::array();
    for (const CountRow& r : t.rows) rows.push_back({{"n", r.n}, {"count", r.count}, {"normalized", r.normalized}});
    return {{"mu", t.mu},         {"nu", t.nu},     {"num_vertices", t.num_vertices},
            {"q", t.q},           {"basepoint", t.base_description},
            {"budget", t.budget}, {"table", std::move(rows)}};
}

Json to_json(const AsymptoticReport& r) {
    Json j{{"mu", r.mu},
           {"nu", r.nu},
           {"num_vertices", r.num_vertices},
           {"q", r.q},
           {"a", r.a},
           {"theorem_constant", r.theorem_constant},
           {"residue_A", r.residue},
           {"bracket", {{"lower", r.bracket_lower}, {"upper", r.bracket_upper}}},
           {"tau", r.tau}};
    if (!r.points.empty()) {
        Json points = Json::array();
        for (const auto& p : r.points)
            points.push_back({{"n", p.n}, {"theorem_ratio", p.theorem_ratio}, {"scaled", p.scaled},
                              {"in_bracket", p.in_bracket}});
        Json ratios = Json::array();
        for (const auto& s : r.ratios)
            ratios.push_back({{"n", s.n}, {"ratio", s.ratio}, {"relative_to_q", s.relative_to_q}});
        j["points"] = std::move(points);
        j["ratios"] = std::move(ratios);
        j["final_theorem_ratio"] = r.final_theorem_ratio;
        j["final_deviation"] = r.final_deviation;
    }
    return j;
}

Json to_json(const ValidationReport& r) {
    Json j{{"num_vertices", r.num_vertices}, {"num_edges", r.num_edges}, {"is_regular", r.is_regular},
           {"degree", r.degree},             {"is_simple", r.is_simple}, {"is_connected", r.is_connected},
           {"is_bipartite", r.is_bipartite}};
    if (r.bipartition) j["bipartition"] = *r.bipartition;
    if (r.odd_cycle) j["odd_cycle"] = *r.odd_cycle;
    j["acceptable"] = r.acceptable();
    if (!r.acceptable()) j["reason"] = r.failure_reason();
    return j;
}

Json to_json(const RegularGraph& g, const ClassDescriptor& k) {
    return {{"mu", k.mu},
            {"nu", k.nu},
            {"walk", vertices_of_walk(g, Walk{k.start(g), k.cyclic_walk})},
            {"primitive_walk", vertices_of_walk(g, Walk{k.start(g), k.primitive_walk})},
            {"arcs", k.cyclic_walk}};
}

Json versioned(const std::string& kind, Json payload) {
    Json j{{"schema_version", schema_version}, {"kind", kind}};
    for (auto& [key, value] : payload.items()) j[key] = value;
    return j;
}

}  // namespace treelattice
