#ifndef TREELATTICE_COUNTER_HPP
#define TREELATTICE_COUNTER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "treelattice/cover.hpp"
#include "treelattice/graph.hpp"
#include "treelattice/walk_kernel.hpp"
#include "treelattice/words.hpp"

namespace treelattice {

inline constexpr std::uint64_t default_budget = 10'000'000;

struct CountRow {
    int n = 0;
    std::uint64_t count = 0;  // cumulative: displacement <= n
    double normalized = 0.0;
};

/// Cumulative lattice-point counts for n = 0..n_max.
///
/// For class counts `normalized` is count * q^(-(n - mu)/2). Orbit tables
/// carry mu = nu = 0 and `normalized` = count * |G| / |B_n|.
struct CountTable {
    int mu = 0;
    int nu = 0;
    int q = 0;
    int num_vertices = 0;
    std::string base_description;
    std::uint64_t budget = 0;
    std::vector<CountRow> rows;

    int n_max() const { return rows.empty() ? -1 : rows.back().n; }
    std::uint64_t count(int n) const { return rows.at(static_cast<std::size_t>(n)).count; }
};

struct CountOptions {
    std::uint64_t budget = default_budget;  // tree vertices enumerated
    Execution exec = Execution::parallel;
};

/// Builds a table from exact per-distance counts (index = distance).
CountTable table_from_exact(const ClassDescriptor& k, const RegularGraph& g, std::span<const std::uint64_t> exact,
                            std::string base_description, std::uint64_t budget);

std::string describe_basepoint(const RegularGraph& g, const SpanningTree& st, const TreePath& x);

/// Throws BudgetExceeded when the ball of radius n_max is larger than budget.
void check_budget(const RegularGraph& g, int n_max, std::uint64_t budget);

/// Largest radius whose ball fits the budget.
int max_radius_within(const RegularGraph& g, std::uint64_t budget);

/// N_K(x, n) for n = 0..n_max by enumerating the orbit points of x inside
/// the ball of radius n_max. An orbit point y = T.x is attributed to the
/// class of the closed walk obtained by projecting the geodesic from x to y.
CountTable count_class(const RegularGraph& g, const SpanningTree& st, const ClassDescriptor& k, const TreePath& x,
                       int n_max, const CountOptions& opts = {});

/// #{gamma : d(x, gamma.y) <= n} with y any lift of `target`, n = 0..n_max.
CountTable count_orbit(const RegularGraph& g, const SpanningTree& st, const TreePath& x, Vertex target, int n_max,
                       const CountOptions& opts = {});

/// Per-distance tallies of several classes over one enumeration, plus the
/// non-identity orbit points that fall in none of them and the fiber total
/// (which includes the identity at distance 0).
struct ClassCensus {
    std::vector<std::vector<std::uint64_t>> per_class;
    std::vector<std::uint64_t> other;
    std::vector<std::uint64_t> fiber;
};
ClassCensus census_classes(const RegularGraph& g, std::span<const ClassDescriptor> classes, Vertex v, int n_max,
                           const CountOptions& opts = {});

/// Same table as count_class, computed without enumerating the ball: every
/// element of K at displacement mu + 2j factors uniquely as a length-j
/// non-backtracking approach path followed by a rotation of the class walk,
/// and approach paths are counted by dynamic programming over arcs.
/// Polynomial in n_max; throws std::overflow_error past 64-bit counts.
CountTable count_class_axis(const RegularGraph& g, const SpanningTree& st, const ClassDescriptor& k,
                            const TreePath& x, int n_max);

struct OracleResult {
    CountTable table;
    /// Counts at conjugator_depth, depth-1 and depth-2 agree.
    bool stable = false;
    std::uint64_t words_enumerated = 0;
    /// Distinct conjugates over all enumerated conjugators (0 unless requested).
    std::uint64_t distinct_conjugates = 0;
};

struct OracleOptions {
    bool count_distinct = false;
    std::uint64_t budget = 50'000'000;  // conjugators enumerated
    Execution exec = Execution::parallel;
};

/// Counts the distinct conjugates u w u^-1 (w a representative of K, u any
/// reduced word of length <= conjugator_depth) with displacement <= n.
/// Sound for every depth; complete once `stable`.
OracleResult oracle_count(const RegularGraph& g, const SpanningTree& st, const ClassDescriptor& k,
                          const TreePath& x, int n_max, int conjugator_depth, const OracleOptions& opts = {});

}  // namespace treelattice

#endif  // TREELATTICE_COUNTER_HPP
