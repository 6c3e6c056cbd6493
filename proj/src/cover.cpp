#include "treelattice/cover.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace treelattice {

std::uint64_t sphere_size(int q, int n) {
    if (n == 0) return 1;
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t s = static_cast<std::uint64_t>(q) + 1;
    for (int i = 1; i < n; ++i) {
        if (s > cap / static_cast<std::uint64_t>(q)) return cap;
        s *= static_cast<std::uint64_t>(q);
    }
    return s;
}

std::uint64_t ball_size(int q, int radius) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    for (int n = 0; n <= radius; ++n) {
        std::uint64_t s = sphere_size(q, n);
        if (s == cap || total > cap - s) return cap;
        total += s;
    }
    return total;
}

Vertex projection(const RegularGraph& g, const SpanningTree& st, const TreePath& p) {
    return p.arcs.empty() ? st.base() : g.terminus(p.arcs.back());
}

TreePath lift_walk(const RegularGraph& g, const SpanningTree& st, const Walk& walk) {
    if (walk.origin != st.base()) throw std::invalid_argument("walk does not start at the base vertex");
    check_walk(g, walk);
    return TreePath{reduce_walk(g, walk).arcs};
}

TreePath follow(const RegularGraph& g, const TreePath& from, std::span<const ArcId> steps) {
    TreePath out = from;
    for (ArcId a : steps) {
        if (!out.arcs.empty() && out.arcs.back() == g.reverse(a))
            out.arcs.pop_back();
        else
            out.arcs.push_back(a);
    }
    return out;
}

namespace {

std::size_t common_prefix(const TreePath& p, const TreePath& r) {
    auto [ip, ir] = std::mismatch(p.arcs.begin(), p.arcs.end(), r.arcs.begin(), r.arcs.end());
    return static_cast<std::size_t>(ip - p.arcs.begin());
}

}  // namespace

int tree_distance(const TreePath& p, const TreePath& r) {
    const std::size_t k = common_prefix(p, r);
    return static_cast<int>(p.arcs.size() + r.arcs.size() - 2 * k);
}

std::vector<ArcId> geodesic(const RegularGraph& g, const TreePath& p, const TreePath& r) {
    const std::size_t k = common_prefix(p, r);
    std::vector<ArcId> out;
    for (std::size_t i = p.arcs.size(); i > k; --i) out.push_back(g.reverse(p.arcs[i - 1]));
    out.insert(out.end(), r.arcs.begin() + static_cast<std::ptrdiff_t>(k), r.arcs.end());
    return out;
}

TreePath apply_deck(const RegularGraph& g, const SpanningTree& st, const Word& w, const TreePath& p) {
    TreePath image = lift_walk(g, st, walk_of_word(g, st, w));
    return follow(g, image, p.arcs);
}

int displacement(const RegularGraph& g, const SpanningTree& st, const Word& w, const TreePath& p) {
    return tree_distance(p, apply_deck(g, st, w, p));
}

int axis_delta(const RegularGraph& g, const SpanningTree& st, const Word& w, const TreePath& p) {
    const int mu = class_of_word(g, st, w).mu;
    const int d = displacement(g, st, w, p);
    if (d < mu || (d - mu) % 2 != 0)
        throw std::logic_error("displacement " + std::to_string(d) + " incompatible with mu " +
                               std::to_string(mu));
    return (d - mu) / 2;
}

// ---------------------------------------------------------------------------

BallIterator::BallIterator(const RegularGraph& g, TreePath center, Vertex start, int radius)
    : g_(&g), center_(std::move(center)), start_(start), radius_(radius) {
    if (radius < 0) throw std::invalid_argument("negative radius");
}

BallIterator ball(const RegularGraph& g, const SpanningTree& st, const TreePath& center, int radius) {
    return BallIterator(g, center, projection(g, st, center), radius);
}

bool BallIterator::fill_from(std::size_t level) {
    for (std::size_t i = level; i < steps_.size(); ++i) {
        const Vertex at = i == 0 ? start_ : g_->terminus(steps_[i - 1]);
        const auto out = g_->out_arcs(at);
        int c = 0;
        while (i > 0 && out[c] == g_->reverse(steps_[i - 1])) ++c;
        choice_[i] = c;
        steps_[i] = out[c];
    }
    return true;
}

bool BallIterator::advance() {
    for (std::size_t i = steps_.size(); i-- > 0;) {
        const Vertex at = i == 0 ? start_ : g_->terminus(steps_[i - 1]);
        const auto out = g_->out_arcs(at);
        int c = choice_[i] + 1;
        if (i > 0 && c < g_->degree() && out[c] == g_->reverse(steps_[i - 1])) ++c;
        if (c < g_->degree()) {
            choice_[i] = c;
            steps_[i] = out[c];
            return fill_from(i + 1);
        }
    }
    return false;
}

std::optional<BallIterator::Item> BallIterator::next() {
    if (!started_) {
        started_ = true;
        return Item{center_, 0};
    }
    if (!advance()) {
        if (++current_ > radius_) {
            current_ = radius_;
            return std::nullopt;
        }
        steps_.assign(static_cast<std::size_t>(current_), -1);
        choice_.assign(static_cast<std::size_t>(current_), 0);
        fill_from(0);
    }
    return Item{follow(*g_, center_, steps_), current_};
}

std::vector<std::uint64_t> sphere_sizes(const RegularGraph& g, Vertex v, int radius, Execution exec) {
    using Sizes = std::vector<std::uint64_t>;
    const Sizes zero(static_cast<std::size_t>(radius) + 1, 0);
    return detail::fold_walks(
        g, v, radius, exec, zero, [](Sizes& acc, const std::vector<ArcId>& w) { ++acc[w.size()]; },
        [](Sizes& into, const Sizes& from) {
            for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
        });
}

}  // namespace treelattice
