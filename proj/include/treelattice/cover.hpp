#ifndef TREELATTICE_COVER_HPP
#define TREELATTICE_COVER_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "treelattice/graph.hpp"
#include "treelattice/walk_kernel.hpp"
#include "treelattice/words.hpp"

namespace treelattice {

/// Vertex of the universal cover: the non-backtracking arc path reaching it
/// from the root lift of the base vertex.
struct TreePath {
    std::vector<ArcId> arcs;

    int depth() const { return static_cast<int>(arcs.size()); }
    auto operator<=>(const TreePath&) const = default;
};

/// Image of the tree vertex in the quotient graph.
Vertex projection(const RegularGraph& g, const SpanningTree& st, const TreePath& p);

/// Lift of a walk that starts at the base vertex (backtracks removed).
/// Throws std::invalid_argument if the walk does not start at the base.
TreePath lift_walk(const RegularGraph& g, const SpanningTree& st, const Walk& walk);

/// Tree vertex reached by following `steps` from `from` (reduced).
TreePath follow(const RegularGraph& g, const TreePath& from, std::span<const ArcId> steps);

int tree_distance(const TreePath& p, const TreePath& r);

/// Geodesic arc path from p to r.
std::vector<ArcId> geodesic(const RegularGraph& g, const TreePath& p, const TreePath& r);

/// Deck transformation of w applied to p. Letters act by left concatenation
/// of the lifted closed walk, so apply_deck(u*w, p) = apply_deck(u, apply_deck(w, p)).
TreePath apply_deck(const RegularGraph& g, const SpanningTree& st, const Word& w, const TreePath& p);

/// d(p, w.p). Zero for the identity.
int displacement(const RegularGraph& g, const SpanningTree& st, const Word& w, const TreePath& p);

/// Distance from p to the axis of w, (displacement - mu) / 2. Throws
/// std::invalid_argument for the identity and std::logic_error if the
/// parity identity fails.
int axis_delta(const RegularGraph& g, const SpanningTree& st, const Word& w, const TreePath& p);

/// Every vertex of the ball around `center` exactly once, ordered by
/// distance (lexicographic by geodesic within a sphere). Memory is
/// O(radius); each sphere is produced by its own depth-first pass.
class BallIterator {
public:
    /// `start` is the projection of `center`.
    BallIterator(const RegularGraph& g, TreePath center, Vertex start, int radius);

    struct Item {
        TreePath vertex;
        int distance;
    };
    std::optional<Item> next();

private:
    bool advance();
    bool fill_from(std::size_t level);

    const RegularGraph* g_;
    TreePath center_;
    Vertex start_;
    int radius_;
    int current_ = 0;
    bool started_ = false;
    std::vector<int> choice_;
    std::vector<ArcId> steps_;
};

BallIterator ball(const RegularGraph& g, const SpanningTree& st, const TreePath& center, int radius);

/// Enumerated sphere sizes |S_0| .. |S_radius| around any vertex projecting
/// to `v`.
std::vector<std::uint64_t> sphere_sizes(const RegularGraph& g, Vertex v, int radius,
                                        Execution exec = Execution::parallel);

}  // namespace treelattice

#endif  // TREELATTICE_COVER_HPP
