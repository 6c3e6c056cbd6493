#ifndef TREELATTICE_WORDS_HPP
#define TREELATTICE_WORDS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "treelattice/graph.hpp"

namespace treelattice {

/// Signed 1-based generator index; -g is the inverse of g.
using Letter = int;

/// Freely reduced word in the fundamental group of the quotient graph.
struct Word {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }
    auto operator<=>(const Word&) const = default;
};

/// Free reduction. Throws std::invalid_argument on a letter that is 0 or
/// exceeds `rank` in absolute value (rank <= 0 skips the range check).
Word reduce(std::span<const Letter> letters, int rank = 0);
Word inverse(const Word& w);
Word multiply(const Word& a, const Word& b);
Word power(const Word& w, int k);

struct CyclicReduction {
    Word core;        // cyclically reduced
    Word conjugator;  // w = conjugator * core * conjugator^-1
};
CyclicReduction cyclic_reduce(const Word& w);

std::string to_string(const Word& w);
/// "+1 -2 +3" (signs optional on positive letters).
Word parse_word(const std::string& text, int rank);

// ---------------------------------------------------------------------------
// Rotation utilities on cyclic sequences.

/// Index of the lexicographically least rotation (first one on ties).
template <class T>
std::size_t minimal_rotation_index(std::span<const T> s) {
    const std::size_t n = s.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            const T& a = s[(r + i) % n];
            const T& b = s[(best + i) % n];
            if (a < b) {
                best = r;
                break;
            }
            if (b < a) break;
        }
    }
    return best;
}

template <class T>
std::vector<T> rotate_to(std::span<const T> s, std::size_t start) {
    std::vector<T> out(s.begin() + static_cast<std::ptrdiff_t>(start), s.end());
    out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(start));
    return out;
}

template <class T>
std::vector<T> canonical_rotation(std::span<const T> s) {
    return rotate_to(s, minimal_rotation_index(s));
}

template <class T>
bool is_rotation_of(std::span<const T> a, std::span<const T> b) {
    if (a.size() != b.size()) return false;
    const std::size_t n = a.size();
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t i = 0;
        while (i < n && a[i] == b[(r + i) % n]) ++i;
        if (i == n) return true;
    }
    return n == 0;
}

template <class T>
struct PrimitiveRoot {
    std::vector<T> root;
    int nu = 1;
};

/// Shortest block whose repetition gives `s`; nu is the repetition count.
template <class T>
PrimitiveRoot<T> primitive_root(std::span<const T> s) {
    if (s.empty()) throw std::invalid_argument("primitive_root of an empty sequence");
    const std::size_t n = s.size();
    for (std::size_t p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i) periodic = s[i] == s[i - p];
        if (periodic)
            return {std::vector<T>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(p)),
                    static_cast<int>(n / p)};
    }
    return {std::vector<T>(s.begin(), s.end()), 1};  // unreachable
}

// ---------------------------------------------------------------------------
// Walks in the quotient graph.

struct Walk {
    Vertex origin = 0;
    std::vector<ArcId> arcs;

    bool empty() const { return arcs.empty(); }
    std::size_t size() const { return arcs.size(); }
    Vertex end(const RegularGraph& g) const { return arcs.empty() ? origin : g.terminus(arcs.back()); }
    bool is_closed(const RegularGraph& g) const { return end(g) == origin; }
    bool operator==(const Walk&) const = default;
};

/// Throws std::invalid_argument unless consecutive arcs are head-to-tail.
void check_walk(const RegularGraph& g, const Walk& w);

/// Walk through the given vertex sequence; throws std::invalid_argument if a
/// consecutive pair is not an edge.
Walk walk_from_vertices(const RegularGraph& g, std::span<const Vertex> vertices);
std::vector<Vertex> vertices_of_walk(const RegularGraph& g, const Walk& w);

/// Removes backtracks (a followed by reverse(a)) until none remain.
Walk reduce_walk(const RegularGraph& g, const Walk& w);

bool is_non_backtracking(const RegularGraph& g, std::span<const ArcId> arcs);

// ---------------------------------------------------------------------------
// Spanning tree and the walk <-> word correspondence.

/// Breadth-first spanning tree rooted at the base vertex. Each non-tree edge
/// yields one generator, oriented from its lower to its higher endpoint;
/// generators are numbered 1.. in arc order.
class SpanningTree {
public:
    static SpanningTree bfs(const RegularGraph& g, Vertex base = 0);

    Vertex base() const { return base_; }
    int rank() const { return static_cast<int>(generators_.size()); }
    /// Tree arc entering v from its parent; -1 at the base.
    ArcId parent_arc(Vertex v) const { return parent_[v]; }
    std::span<const ArcId> generator_arcs() const { return generators_; }
    /// 0 for tree arcs, +g for generator g, -g for its reverse.
    Letter letter_of_arc(ArcId a) const { return letter_[a]; }
    ArcId arc_of_letter(Letter l) const;

    std::vector<ArcId> path_from_base(const RegularGraph& g, Vertex v) const;
    std::vector<ArcId> path_to_base(const RegularGraph& g, Vertex v) const;

private:
    Vertex base_ = 0;
    std::vector<ArcId> parent_;
    std::vector<ArcId> generators_;
    std::vector<ArcId> reversed_;
    std::vector<Letter> letter_;
};

/// Word of a walk closed at the base vertex. Throws std::invalid_argument
/// otherwise.
Word word_of_walk(const RegularGraph& g, const SpanningTree& st, const Walk& walk);

/// Closed walk at the base realising w; not backtrack-free in general.
Walk walk_of_word(const RegularGraph& g, const SpanningTree& st, const Word& w);

// ---------------------------------------------------------------------------
// Conjugacy classes.

/// Canonical form of a conjugacy class: the cyclically reduced closed walk,
/// rotated to its lexicographically least arc sequence.
struct ClassDescriptor {
    std::vector<ArcId> cyclic_walk;
    int mu = 0;  // displacement length = cyclic_walk.size()
    int nu = 0;  // multiplicity
    std::vector<ArcId> primitive_walk;

    int primitive_length() const { return mu / nu; }
    Vertex start(const RegularGraph& g) const { return g.origin(cyclic_walk.front()); }

    bool operator==(const ClassDescriptor& o) const { return cyclic_walk == o.cyclic_walk; }
    std::strong_ordering operator<=>(const ClassDescriptor& o) const {
        if (auto c = mu <=> o.mu; c != 0) return c;
        return cyclic_walk <=> o.cyclic_walk;
    }
};

/// Class of a closed walk (any origin). Throws std::invalid_argument if the
/// walk is not closed or is null-homotopic.
ClassDescriptor class_of_closed_walk(const RegularGraph& g, const Walk& walk);

/// Throws std::invalid_argument for the identity word.
ClassDescriptor class_of_word(const RegularGraph& g, const SpanningTree& st, const Word& w);

/// Conjugacy (K and K^-1 are distinct). Throws on identity input.
bool same_class(const RegularGraph& g, const SpanningTree& st, const Word& a, const Word& b);

/// A word in the class: tree path to the start vertex, the canonical walk,
/// and back.
Word representative_word(const RegularGraph& g, const SpanningTree& st, const ClassDescriptor& k);

/// Every class with mu <= mu_max exactly once, sorted by (mu, walk).
std::vector<ClassDescriptor> enumerate_classes(const RegularGraph& g, int mu_max);

}  // namespace treelattice

#endif  // TREELATTICE_WORDS_HPP
