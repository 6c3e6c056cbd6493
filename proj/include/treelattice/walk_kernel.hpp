#ifndef TREELATTICE_WALK_KERNEL_HPP
#define TREELATTICE_WALK_KERNEL_HPP

// Depth-first enumeration of non-backtracking walks from a vertex of the
// quotient graph. Such walks are in bijection with the vertices of the ball
// around a lift of that vertex in the universal cover, so every ball-based
// count in the library is a reduction over this enumeration.

#include <cstdint>
#include <utility>
#include <vector>

#include <omp.h>

#include "treelattice/graph.hpp"

namespace treelattice {

enum class Execution { serial, parallel };

/// Vertices of a ball of the given radius in the (q+1)-regular tree,
/// saturating at UINT64_MAX.
std::uint64_t ball_size(int q, int radius);
/// (q+1) q^(n-1) for n >= 1, 1 for n = 0; saturating.
std::uint64_t sphere_size(int q, int n);

namespace detail {

/// Calls visit(walk) on `walk` and on every non-backtracking extension of it
/// up to total length depth_max, in depth-first lexicographic order. `walk`
/// is restored on return.
template <class Visit>
void walk_tree(const RegularGraph& g, Vertex start, std::vector<ArcId>& walk, int depth_max,
               Visit&& visit) {
    const std::size_t root = walk.size();
    visit(std::as_const(walk));
    if (static_cast<int>(root) >= depth_max) return;

    const int deg = g.degree();
    std::vector<int> next_choice;
    next_choice.reserve(static_cast<std::size_t>(depth_max) - root + 1);
    next_choice.push_back(0);
    while (!next_choice.empty()) {
        int& c = next_choice.back();
        if (c == deg) {
            next_choice.pop_back();
            if (walk.size() > root) walk.pop_back();
            continue;
        }
        const Vertex at = walk.empty() ? start : g.terminus(walk.back());
        const ArcId a = g.out_arcs(at)[c++];
        if (!walk.empty() && a == g.reverse(walk.back())) continue;
        walk.push_back(a);
        visit(std::as_const(walk));
        if (static_cast<int>(walk.size()) < depth_max)
            next_choice.push_back(0);
        else
            walk.pop_back();
    }
}

/// Folds visit(acc, walk) over every non-backtracking walk of length
/// <= depth_max from `start`.
///
/// The parallel path splits the tree at a fixed prefix depth, runs one task
/// per prefix with its own accumulator, and merges task results in prefix
/// order, so it returns exactly what the serial path returns whenever
/// `merge` is associative.
template <class Acc, class Visit, class Merge>
Acc fold_walks(const RegularGraph& g, Vertex start, int depth_max, Execution exec, const Acc& zero,
               Visit visit, Merge merge) {
    std::vector<ArcId> walk;
    Acc total = zero;
    if (exec == Execution::serial || depth_max <= 1) {
        walk_tree(g, start, walk, depth_max, [&](const std::vector<ArcId>& w) { visit(total, w); });
        return total;
    }

    const std::uint64_t want = 32ull * static_cast<std::uint64_t>(omp_get_max_threads());
    int split = 1;
    while (split < depth_max && sphere_size(g.q(), split) < want) ++split;

    // Nodes above the split are handled here; nodes at the split seed tasks.
    std::vector<std::vector<ArcId>> prefixes;
    walk_tree(g, start, walk, split, [&](const std::vector<ArcId>& w) {
        if (static_cast<int>(w.size()) == split)
            prefixes.push_back(w);
        else
            visit(total, w);
    });

    const auto n = static_cast<std::int64_t>(prefixes.size());
    std::vector<Acc> partial(prefixes.size(), zero);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
        std::vector<ArcId> local = prefixes[static_cast<std::size_t>(i)];
        local.reserve(static_cast<std::size_t>(depth_max));
        Acc& acc = partial[static_cast<std::size_t>(i)];
        walk_tree(g, start, local, depth_max, [&](const std::vector<ArcId>& w) { visit(acc, w); });
    }
    for (const Acc& p : partial) merge(total, p);
    return total;
}

}  // namespace detail
}  // namespace treelattice

#endif  // TREELATTICE_WALK_KERNEL_HPP
