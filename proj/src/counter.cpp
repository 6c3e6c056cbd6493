#include "treelattice/counter.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "treelattice/error.hpp"

namespace treelattice {

namespace {

using Exact = std::vector<std::uint64_t>;

void add_into(Exact& into, const Exact& from) {
    for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("count exceeds 64 bits");
    return r;
}

// Number of leading/trailing arc pairs a closed non-backtracking walk sheds
// under cyclic reduction.
std::size_t strip_depth(const RegularGraph& g, const std::vector<ArcId>& w) {
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[hi - 1] == g.reverse(w[lo])) {
        ++lo;
        --hi;
    }
    return lo;
}

// Rotation test against one class walk, using the positions of each arc in
// the walk to limit the candidate offsets.
class ClassMatcher {
public:
    ClassMatcher(const RegularGraph& g, const ClassDescriptor& k)
        : walk_(k.cyclic_walk), period_(static_cast<std::size_t>(k.primitive_length())), starts_(g.num_arcs()) {
        for (std::size_t r = 0; r < period_; ++r) starts_[walk_[r]].push_back(r);
    }

    bool matches(const ArcId* core, std::size_t len) const {
        if (len != walk_.size()) return false;
        for (std::size_t r : starts_[core[0]]) {
            std::size_t i = 1;
            while (i < len && core[i] == walk_[(r + i) % len]) ++i;
            if (i == len) return true;
        }
        return false;
    }

private:
    std::vector<ArcId> walk_;
    std::size_t period_;
    std::vector<std::vector<std::size_t>> starts_;
};

std::vector<std::uint64_t> cumulative(std::span<const std::uint64_t> exact) {
    std::vector<std::uint64_t> out(exact.size());
    std::uint64_t run = 0;
    for (std::size_t i = 0; i < exact.size(); ++i) out[i] = run = checked_add(run, exact[i]);
    return out;
}

}  // namespace

void check_budget(const RegularGraph& g, int n_max, std::uint64_t budget) {
    const std::uint64_t need = ball_size(g.q(), n_max);
    if (need > budget) throw BudgetExceeded(need, budget);
}

int max_radius_within(const RegularGraph& g, std::uint64_t budget) {
    int r = 0;
    while (ball_size(g.q(), r + 1) <= budget) ++r;
    return r;
}

std::string describe_basepoint(const RegularGraph& g, const SpanningTree& st, const TreePath& x) {
    std::ostringstream out;
    out << "base " << st.base();
    if (!x.arcs.empty()) {
        out << " offset";
        for (Vertex v : vertices_of_walk(g, Walk{st.base(), x.arcs})) out << ' ' << v;
    }
    return out.str();
}

CountTable table_from_exact(const ClassDescriptor& k, const RegularGraph& g, std::span<const std::uint64_t> exact,
                            std::string base_description, std::uint64_t budget) {
    CountTable t;
    t.mu = k.mu;
    t.nu = k.nu;
    t.q = g.q();
    t.num_vertices = g.num_vertices();
    t.base_description = std::move(base_description);
    t.budget = budget;
    auto cum = cumulative(exact);
    for (std::size_t n = 0; n < cum.size(); ++n) {
        const double scale = std::pow(static_cast<double>(t.q), -(static_cast<double>(n) - k.mu) / 2.0);
        t.rows.push_back({static_cast<int>(n), cum[n], static_cast<double>(cum[n]) * scale});
    }
    return t;
}

CountTable count_class(const RegularGraph& g, const SpanningTree& st, const ClassDescriptor& k, const TreePath& x,
                       int n_max, const CountOptions& opts) {
    if (n_max < 0) throw std::invalid_argument("negative n_max");
    const std::string where = describe_basepoint(g, st, x);
    Exact exact(static_cast<std::size_t>(n_max) + 1, 0);
    if (n_max < k.mu) return table_from_exact(k, g, exact, where, opts.budget);
    check_budget(g, n_max, opts.budget);

    const Vertex v = projection(g, st, x);
    const ClassMatcher matcher(g, k);
    const auto mu = static_cast<std::size_t>(k.mu);
    exact = detail::fold_walks(
        g, v, n_max, opts.exec, exact,
        [&](Exact& acc, const std::vector<ArcId>& w) {
            const std::size_t len = w.size();
            if (len < mu || g.terminus(w.back()) != v || (len - mu) % 2 != 0) return;
            const std::size_t s = strip_depth(g, w);
            if (len - 2 * s == mu && matcher.matches(w.data() + s, mu)) ++acc[len];
        },
        add_into);
    return table_from_exact(k, g, exact, where, opts.budget);
}

CountTable count_orbit(const RegularGraph& g, const SpanningTree& st, const TreePath& x, Vertex target, int n_max,
                       const CountOptions& opts) {
    if (n_max < 0) throw std::invalid_argument("negative n_max");
    if (target < 0 || target >= g.num_vertices()) throw std::invalid_argument("target vertex out of range");
    check_budget(g, n_max, opts.budget);
    const Vertex v = projection(g, st, x);
    Exact exact = detail::fold_walks(
        g, v, n_max, opts.exec, Exact(static_cast<std::size_t>(n_max) + 1, 0),
        [&](Exact& acc, const std::vector<ArcId>& w) {
            const Vertex at = w.empty() ? v : g.terminus(w.back());
            if (at == target) ++acc[w.size()];
        },
        add_into);

    CountTable t;
    t.q = g.q();
    t.num_vertices = g.num_vertices();
    t.base_description = describe_basepoint(g, st, x) + " target " + std::to_string(target);
    t.budget = opts.budget;
    auto cum = cumulative(exact);
    for (int n = 0; n <= n_max; ++n) {
        const double limit = static_cast<double>(ball_size(g.q(), n)) / g.num_vertices();
        t.rows.push_back({n, cum[static_cast<std::size_t>(n)], static_cast<double>(cum[static_cast<std::size_t>(n)]) / limit});
    }
    return t;
}

ClassCensus census_classes(const RegularGraph& g, std::span<const ClassDescriptor> classes, Vertex v, int n_max,
                           const CountOptions& opts) {
    check_budget(g, n_max, opts.budget);
    std::map<std::vector<ArcId>, std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i].cyclic_walk, i);

    const std::size_t width = static_cast<std::size_t>(n_max) + 1;
    const std::size_t nc = classes.size();
    // Rows 0..nc-1 per class, row nc "other", row nc+1 fiber total.
    using Flat = std::vector<std::uint64_t>;
    Flat flat = detail::fold_walks(
        g, v, n_max, opts.exec, Flat((nc + 2) * width, 0),
        [&](Flat& acc, const std::vector<ArcId>& w) {
            const Vertex at = w.empty() ? v : g.terminus(w.back());
            if (at != v) return;
            const std::size_t len = w.size();
            ++acc[(nc + 1) * width + len];
            if (len == 0) return;
            const std::size_t s = strip_depth(g, w);
            std::span<const ArcId> core(w.data() + s, len - 2 * s);
            auto it = index.find(canonical_rotation(core));
            ++acc[(it == index.end() ? nc : it->second) * width + len];
        },
        add_into);

    ClassCensus c;
    for (std::size_t i = 0; i < nc; ++i)
        c.per_class.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(i * width),
                                 flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * width));
    c.other.assign(flat.begin() + static_cast<std::ptrdiff_t>(nc * width),
                   flat.begin() + static_cast<std::ptrdiff_t>((nc + 1) * width));
    c.fiber.assign(flat.begin() + static_cast<std::ptrdiff_t>((nc + 1) * width), flat.end());
    return c;
}

CountTable count_class_axis(const RegularGraph& g, const SpanningTree& st, const ClassDescriptor& k,
                            const TreePath& x, int n_max) {
    if (n_max < 0) throw std::invalid_argument("negative n_max");
    const Vertex v = projection(g, st, x);
    Exact exact(static_cast<std::size_t>(n_max) + 1, 0);
    const int period = k.primitive_length();
    const std::size_t mu = k.cyclic_walk.size();

    // ends[j][e]: non-backtracking walks of length j from v whose last arc is e.
    std::vector<std::uint64_t> ends(static_cast<std::size_t>(g.num_arcs()), 0), next(ends.size());
    for (ArcId e : g.out_arcs(v)) ends[e] = 1;

    for (int j = 0; k.mu + 2 * j <= n_max; ++j) {
        std::uint64_t total = 0;
        for (int r = 0; r < period; ++r) {
            const ArcId first = k.cyclic_walk[static_cast<std::size_t>(r)];
            const ArcId last = k.cyclic_walk[(static_cast<std::size_t>(r) + mu - 1) % mu];
            const Vertex w = g.origin(first);
            if (j == 0) {
                total += w == v ? 1 : 0;
                continue;
            }
            for (ArcId e : g.out_arcs(w)) {
                const ArcId into = g.reverse(e);  // arc ending at w
                if (into == g.reverse(first) || into == last) continue;
                total = checked_add(total, ends[into]);
            }
        }
        exact[static_cast<std::size_t>(k.mu + 2 * j)] = total;

        // `ends` holds length-1 walks until j = 1 has used it.
        if (j == 0) continue;
        std::fill(next.begin(), next.end(), 0);
        for (ArcId e = 0; e < g.num_arcs(); ++e) {
            if (ends[e] == 0) continue;
            for (ArcId f : g.out_arcs(g.terminus(e)))
                if (f != g.reverse(e)) next[f] = checked_add(next[f], ends[e]);
        }
        ends.swap(next);
    }
    return table_from_exact(k, g, exact, describe_basepoint(g, st, x), 0);
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t reduced_word_count(int rank, int depth) {
    std::uint64_t total = 1, layer = 2 * static_cast<std::uint64_t>(rank);
    for (int l = 1; l <= depth; ++l) {
        total = checked_add(total, layer);
        if (l < depth) {
            if (layer > UINT64_MAX / (2 * static_cast<std::uint64_t>(rank))) return UINT64_MAX;
            layer *= 2 * static_cast<std::uint64_t>(rank) - 1;
        }
    }
    return total;
}

struct OracleState {
    std::map<Word, int> tallied;  // conjugate -> shortest conjugator length
    std::set<Word> all;
    std::uint64_t words = 0;
};

}  // namespace

OracleResult oracle_count(const RegularGraph& g, const SpanningTree& st, const ClassDescriptor& k,
                          const TreePath& x, int n_max, int conjugator_depth, const OracleOptions& opts) {
    if (conjugator_depth < 0) throw std::invalid_argument("negative conjugator depth");
    const int rank = st.rank();
    const std::uint64_t need = reduced_word_count(rank, conjugator_depth);
    if (need > opts.budget) throw BudgetExceeded(need, opts.budget);

    const Word rep = representative_word(g, st, k);

    auto visit = [&](OracleState& state, const std::vector<Letter>& u) {
        ++state.words;
        Word uw;
        uw.letters = u;
        Word conj = multiply(multiply(uw, rep), inverse(uw));
        const int len = static_cast<int>(u.size());
        if (opts.count_distinct) state.all.insert(conj);
        auto it = state.tallied.find(conj);
        if (it != state.tallied.end()) {
            it->second = std::min(it->second, len);
            return;
        }
        if (displacement(g, st, conj, x) <= n_max) state.tallied.emplace(std::move(conj), len);
    };

    // Depth-first over reduced words, with one task per first letter.
    auto extend = [&](auto&& self, OracleState& state, std::vector<Letter>& u) -> void {
        visit(state, u);
        if (static_cast<int>(u.size()) == conjugator_depth) return;
        for (Letter l = -rank; l <= rank; ++l) {
            if (l == 0 || (!u.empty() && u.back() == -l)) continue;
            u.push_back(l);
            self(self, state, u);
            u.pop_back();
        }
    };

    std::vector<Letter> firsts;
    for (Letter l = -rank; l <= rank; ++l)
        if (l != 0) firsts.push_back(l);

    OracleState root;
    visit(root, {});
    std::vector<OracleState> parts(conjugator_depth > 0 ? firsts.size() : 0);
    const auto n_parts = static_cast<std::int64_t>(parts.size());
#pragma omp parallel for schedule(dynamic, 1) if (opts.exec == Execution::parallel)
    for (std::int64_t i = 0; i < n_parts; ++i) {
        std::vector<Letter> u{firsts[static_cast<std::size_t>(i)]};
        extend(extend, parts[static_cast<std::size_t>(i)], u);
    }
    for (auto& p : parts) {
        root.words += p.words;
        for (auto& [w, len] : p.tallied) {
            auto [it, fresh] = root.tallied.emplace(w, len);
            if (!fresh) it->second = std::min(it->second, len);
        }
        root.all.merge(p.all);
    }

    auto exact_at_depth = [&](int depth) {
        Exact exact(static_cast<std::size_t>(n_max) + 1, 0);
        for (const auto& [w, len] : root.tallied)
            if (len <= depth) ++exact[static_cast<std::size_t>(displacement(g, st, w, x))];
        return exact;
    };

    OracleResult result;
    const Exact final_exact = exact_at_depth(conjugator_depth);
    result.table = table_from_exact(k, g, final_exact, describe_basepoint(g, st, x), opts.budget);
    result.stable = conjugator_depth >= 2 && exact_at_depth(conjugator_depth - 1) == final_exact &&
                    exact_at_depth(conjugator_depth - 2) == final_exact;
    result.words_enumerated = root.words;
    result.distinct_conjugates = opts.count_distinct ? root.all.size() : 0;
    return result;
}

}  // namespace treelattice
