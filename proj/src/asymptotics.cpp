#include "treelattice/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace treelattice {

AsymptoticReport constants(int mu, int nu, int num_vertices, int q) {
    if (mu <= 0 || nu <= 0 || num_vertices <= 0 || q < 2) throw std::invalid_argument("invalid class constants");
    using LD = long double;
    const LD lq = q;
    const LD theorem = static_cast<LD>(mu) / (static_cast<LD>(nu) * num_vertices);
    const LD a = theorem / std::pow(lq, static_cast<LD>(mu) / 2);

    AsymptoticReport r;
    r.mu = mu;
    r.nu = nu;
    r.num_vertices = num_vertices;
    r.q = q;
    r.a = static_cast<double>(a);
    r.theorem_constant = static_cast<double>(theorem);
    r.residue = static_cast<double>(a * (lq - 1) / (lq * std::log(lq)));
    r.bracket_lower = static_cast<double>(a / lq);
    r.bracket_upper = static_cast<double>(a);
    r.tau = static_cast<double>(2 * std::numbers::pi_v<LD> / std::log(lq));
    return r;
}

AsymptoticReport constants(const ClassDescriptor& k, const RegularGraph& g) {
    return constants(k.mu, k.nu, g.num_vertices(), g.q());
}

AsymptoticReport convergence_report(const CountTable& table, AsymptoticReport r) {
    r.points.clear();
    r.ratios.clear();
    const long double lq = r.q;
    for (const CountRow& row : table.rows) {
        if (row.n < r.mu || (row.n - r.mu) % 2 != 0 || row.count == 0) continue;
        AsymptoticPoint p;
        p.n = row.n;
        const long double c = static_cast<long double>(row.count);
        p.theorem_ratio = static_cast<double>(c * std::pow(lq, -static_cast<long double>(row.n - r.mu) / 2) /
                                              r.theorem_constant);
        p.scaled = static_cast<double>(c * std::pow(lq, -static_cast<long double>(row.n) / 2));
        p.in_bracket = p.scaled >= r.bracket_lower && p.scaled <= r.bracket_upper;
        r.points.push_back(p);
    }
    if (r.points.size() < 3) throw std::invalid_argument("table too short");

    const std::size_t first = r.points.size() >= 4 ? r.points.size() - 3 : 1;
    for (std::size_t i = first; i < r.points.size(); ++i) {
        RatioStep s;
        s.n = r.points[i].n;
        s.ratio = static_cast<double>(table.count(s.n)) / static_cast<double>(table.count(s.n - 2));
        s.relative_to_q = s.ratio / r.q - 1.0;
        r.ratios.push_back(s);
    }
    r.final_theorem_ratio = r.points.back().theorem_ratio;
    r.final_deviation = r.final_theorem_ratio - 1.0;
    return r;
}

std::pair<double, double> bipartite_bounds(const ClassDescriptor& k, const RegularGraph& g) {
    if (!g.is_bipartite()) throw std::invalid_argument("bipartite_bounds requires a bipartite graph");
    const AsymptoticReport r = constants(k, g);
    const long double q = g.q();
    const long double upper = 2 * q / (q + 1) * static_cast<long double>(r.a);
    return {static_cast<double>(upper / (q * q)), static_cast<double>(upper)};
}

}  // namespace treelattice
