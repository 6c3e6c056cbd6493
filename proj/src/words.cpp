#include "treelattice/words.hpp"

#include <cstdlib>
#include <queue>
#include <sstream>

namespace treelattice {

Word reduce(std::span<const Letter> letters, int rank) {
    Word out;
    out.letters.reserve(letters.size());
    for (Letter l : letters) {
        if (l == 0 || (rank > 0 && std::abs(l) > rank))
            throw std::invalid_argument("unknown generator index " + std::to_string(l));
        if (!out.letters.empty() && out.letters.back() == -l)
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    return out;
}

Word inverse(const Word& w) {
    Word out;
    out.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
    return out;
}

Word multiply(const Word& a, const Word& b) {
    std::vector<Letter> all(a.letters);
    all.insert(all.end(), b.letters.begin(), b.letters.end());
    return reduce(all);
}

Word power(const Word& w, int k) {
    Word base = k < 0 ? inverse(w) : w;
    Word out;
    for (int i = 0; i < std::abs(k); ++i) out = multiply(out, base);
    return out;
}

CyclicReduction cyclic_reduce(const Word& w) {
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w.letters[lo] == -w.letters[hi - 1]) {
        ++lo;
        --hi;
    }
    CyclicReduction r;
    r.core.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(lo),
                          w.letters.begin() + static_cast<std::ptrdiff_t>(hi));
    r.conjugator.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(lo));
    return r;
}

std::string to_string(const Word& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out << ' ';
        out << (w.letters[i] > 0 ? "+" : "") << w.letters[i];
    }
    return out.str();
}

Word parse_word(const std::string& text, int rank) {
    std::istringstream in(text);
    std::vector<Letter> letters;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed letter '" + tok + "'");
        }
        if (used != tok.size()) throw std::invalid_argument("malformed letter '" + tok + "'");
        letters.push_back(value);
    }
    return reduce(letters, rank);
}

// ---------------------------------------------------------------------------

void check_walk(const RegularGraph& g, const Walk& w) {
    Vertex at = w.origin;
    for (ArcId a : w.arcs) {
        if (a < 0 || a >= g.num_arcs() || g.origin(a) != at)
            throw std::invalid_argument("walk arcs are not head-to-tail");
        at = g.terminus(a);
    }
}

Walk walk_from_vertices(const RegularGraph& g, std::span<const Vertex> vertices) {
    if (vertices.empty()) throw std::invalid_argument("empty vertex sequence");
    Walk w{vertices.front(), {}};
    if (w.origin < 0 || w.origin >= g.num_vertices())
        throw std::invalid_argument("vertex " + std::to_string(w.origin) + " out of range");
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        auto a = g.find_arc(vertices[i - 1], vertices[i]);
        if (!a)
            throw std::invalid_argument("no edge " + std::to_string(vertices[i - 1]) + " " +
                                        std::to_string(vertices[i]));
        w.arcs.push_back(*a);
    }
    return w;
}

std::vector<Vertex> vertices_of_walk(const RegularGraph& g, const Walk& w) {
    std::vector<Vertex> out{w.origin};
    for (ArcId a : w.arcs) out.push_back(g.terminus(a));
    return out;
}

Walk reduce_walk(const RegularGraph& g, const Walk& w) {
    Walk out{w.origin, {}};
    out.arcs.reserve(w.size());
    for (ArcId a : w.arcs) {
        if (!out.arcs.empty() && out.arcs.back() == g.reverse(a))
            out.arcs.pop_back();
        else
            out.arcs.push_back(a);
    }
    return out;
}

bool is_non_backtracking(const RegularGraph& g, std::span<const ArcId> arcs) {
    for (std::size_t i = 1; i < arcs.size(); ++i)
        if (arcs[i] == g.reverse(arcs[i - 1])) return false;
    return true;
}

// ---------------------------------------------------------------------------

SpanningTree SpanningTree::bfs(const RegularGraph& g, Vertex base) {
    if (base < 0 || base >= g.num_vertices())
        throw std::invalid_argument("base vertex " + std::to_string(base) + " out of range");
    SpanningTree st;
    st.base_ = base;
    st.parent_.assign(g.num_vertices(), -1);
    std::vector<bool> seen(g.num_vertices(), false);
    std::queue<Vertex> todo;
    seen[base] = true;
    todo.push(base);
    while (!todo.empty()) {
        Vertex u = todo.front();
        todo.pop();
        for (ArcId a : g.out_arcs(u)) {
            Vertex v = g.terminus(a);
            if (seen[v]) continue;
            seen[v] = true;
            st.parent_[v] = a;
            todo.push(v);
        }
    }

    st.letter_.assign(g.num_arcs(), 0);
    std::vector<bool> tree_arc(g.num_arcs(), false);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (ArcId a = st.parent_[v]; a >= 0) {
            tree_arc[a] = true;
            tree_arc[g.reverse(a)] = true;
        }
    }
    for (ArcId a = 0; a < g.num_arcs(); ++a) {
        if (tree_arc[a] || g.origin(a) > g.terminus(a)) continue;
        st.generators_.push_back(a);
        st.reversed_.push_back(g.reverse(a));
        Letter l = static_cast<Letter>(st.generators_.size());
        st.letter_[a] = l;
        st.letter_[g.reverse(a)] = -l;
    }
    return st;
}

ArcId SpanningTree::arc_of_letter(Letter l) const {
    if (l == 0 || std::abs(l) > rank()) throw std::invalid_argument("unknown generator index " + std::to_string(l));
    return l > 0 ? generators_[l - 1] : reversed_[-l - 1];
}

std::vector<ArcId> SpanningTree::path_from_base(const RegularGraph& g, Vertex v) const {
    std::vector<ArcId> path;
    while (parent_[v] >= 0) {
        path.push_back(parent_[v]);
        v = g.origin(parent_[v]);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<ArcId> SpanningTree::path_to_base(const RegularGraph& g, Vertex v) const {
    std::vector<ArcId> path;
    while (parent_[v] >= 0) {
        ArcId up = g.reverse(parent_[v]);
        path.push_back(up);
        v = g.terminus(up);
    }
    return path;
}

Word word_of_walk(const RegularGraph& g, const SpanningTree& st, const Walk& walk) {
    check_walk(g, walk);
    if (walk.origin != st.base() || !walk.is_closed(g))
        throw std::invalid_argument("walk is not closed at the base vertex");
    std::vector<Letter> letters;
    for (ArcId a : walk.arcs)
        if (Letter l = st.letter_of_arc(a); l != 0) letters.push_back(l);
    return reduce(letters);
}

Walk walk_of_word(const RegularGraph& g, const SpanningTree& st, const Word& w) {
    Walk out{st.base(), {}};
    for (Letter l : w.letters) {
        ArcId a = st.arc_of_letter(l);
        auto down = st.path_from_base(g, g.origin(a));
        out.arcs.insert(out.arcs.end(), down.begin(), down.end());
        out.arcs.push_back(a);
        auto up = st.path_to_base(g, g.terminus(a));
        out.arcs.insert(out.arcs.end(), up.begin(), up.end());
    }
    return out;
}

// ---------------------------------------------------------------------------

ClassDescriptor class_of_closed_walk(const RegularGraph& g, const Walk& walk) {
    check_walk(g, walk);
    if (!walk.is_closed(g)) throw std::invalid_argument("walk is not closed");
    Walk reduced = reduce_walk(g, walk);
    const auto& arcs = reduced.arcs;
    std::size_t lo = 0, hi = arcs.size();
    while (hi - lo >= 2 && arcs[hi - 1] == g.reverse(arcs[lo])) {
        ++lo;
        --hi;
    }
    if (hi == lo) throw std::invalid_argument("closed walk is null-homotopic");

    std::span<const ArcId> core(arcs.data() + lo, hi - lo);
    ClassDescriptor k;
    k.cyclic_walk = canonical_rotation(core);
    k.mu = static_cast<int>(k.cyclic_walk.size());
    auto root = primitive_root(std::span<const ArcId>(k.cyclic_walk));
    k.primitive_walk = std::move(root.root);
    k.nu = root.nu;
    return k;
}

ClassDescriptor class_of_word(const RegularGraph& g, const SpanningTree& st, const Word& w) {
    if (w.empty()) throw std::invalid_argument("the identity has no translation class");
    return class_of_closed_walk(g, walk_of_word(g, st, w));
}

bool same_class(const RegularGraph& g, const SpanningTree& st, const Word& a, const Word& b) {
    return class_of_word(g, st, a) == class_of_word(g, st, b);
}

Word representative_word(const RegularGraph& g, const SpanningTree& st, const ClassDescriptor& k) {
    Vertex start = k.start(g);
    auto up = st.path_to_base(g, start);
    Walk w{st.base(), st.path_from_base(g, start)};
    w.arcs.insert(w.arcs.end(), k.cyclic_walk.begin(), k.cyclic_walk.end());
    w.arcs.insert(w.arcs.end(), up.begin(), up.end());
    return word_of_walk(g, st, w);
}

namespace {

// Depth-first search over non-backtracking walks whose first arc is the
// smallest arc used; closed cyclically-reduced walks that equal their own
// least rotation are emitted.
void extend_classes(const RegularGraph& g, int mu_max, std::vector<ArcId>& walk,
                    std::vector<ClassDescriptor>& out) {
    const ArcId first = walk.front();
    const ArcId last = walk.back();
    if (g.terminus(last) == g.origin(first) && last != g.reverse(first)) {
        std::span<const ArcId> s(walk);
        if (minimal_rotation_index(s) == 0) {
            ClassDescriptor k;
            k.cyclic_walk = walk;
            k.mu = static_cast<int>(walk.size());
            auto root = primitive_root(s);
            k.primitive_walk = std::move(root.root);
            k.nu = root.nu;
            out.push_back(std::move(k));
        }
    }
    if (static_cast<int>(walk.size()) == mu_max) return;
    for (ArcId a : g.out_arcs(g.terminus(last))) {
        if (a < first || a == g.reverse(last)) continue;
        walk.push_back(a);
        extend_classes(g, mu_max, walk, out);
        walk.pop_back();
    }
}

}  // namespace

std::vector<ClassDescriptor> enumerate_classes(const RegularGraph& g, int mu_max) {
    std::vector<ClassDescriptor> out;
    if (mu_max <= 0) return out;
    std::vector<ArcId> walk;
    for (ArcId a = 0; a < g.num_arcs(); ++a) {
        walk.assign(1, a);
        extend_classes(g, mu_max, walk, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace treelattice
