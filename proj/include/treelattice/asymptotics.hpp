#ifndef TREELATTICE_ASYMPTOTICS_HPP
#define TREELATTICE_ASYMPTOTICS_HPP

#include <utility>
#include <vector>

#include "treelattice/counter.hpp"
#include "treelattice/graph.hpp"
#include "treelattice/words.hpp"

namespace treelattice {

struct AsymptoticPoint {
    int n = 0;
    double theorem_ratio = 0.0;  // count q^(-(n-mu)/2) / (mu / (nu |G|))
    double scaled = 0.0;         // count q^(-n/2)
    bool in_bracket = false;     // scaled within [bracket_lower, bracket_upper]
};

struct RatioStep {
    int n = 0;  // ratio count(n) / count(n-2)
    double ratio = 0.0;
    double relative_to_q = 0.0;  // ratio / q - 1
};

struct AsymptoticReport {
    int mu = 0;
    int nu = 0;
    int num_vertices = 0;
    int q = 0;

    double a = 0.0;                 // mu / (nu |G| q^(mu/2))
    double theorem_constant = 0.0;  // mu / (nu |G|)
    double residue = 0.0;           // a (q-1) / (q ln q)
    double bracket_lower = 0.0;     // a / q
    double bracket_upper = 0.0;     // a
    double tau = 0.0;               // 2 pi / ln q

    // Filled by convergence_report.
    std::vector<AsymptoticPoint> points;  // n with n - mu even and n >= mu
    std::vector<RatioStep> ratios;        // last three parity steps
    double final_theorem_ratio = 0.0;
    double final_deviation = 0.0;  // final_theorem_ratio - 1
};

/// Constants computed in long double from the exact integers.
AsymptoticReport constants(const ClassDescriptor& k, const RegularGraph& g);
AsymptoticReport constants(int mu, int nu, int num_vertices, int q);

/// Adds per-n diagnostics from an exact count table. Throws
/// std::invalid_argument ("table too short") unless the table holds at least
/// three parity steps n >= mu with nonzero count.
AsymptoticReport convergence_report(const CountTable& table, AsymptoticReport report);

/// Bracket for lim inf / lim sup of q^(-n/2) N_K(x, n) on a bipartite
/// quotient: (2q/(q+1)) a / q^2 and (2q/(q+1)) a. Throws std::invalid_argument
/// on a non-bipartite graph.
std::pair<double, double> bipartite_bounds(const ClassDescriptor& k, const RegularGraph& g);

}  // namespace treelattice

#endif  // TREELATTICE_ASYMPTOTICS_HPP
