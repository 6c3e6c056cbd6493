#include "treelattice/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace treelattice::oracle {

std::vector<Letter> naive_reduce(std::vector<Letter> letters) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
            if (letters[i] == -letters[i + 1]) {
                letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i),
                              letters.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                changed = true;
                break;
            }
        }
    }
    return letters;
}

namespace {

void all_walks(const RegularGraph& g, std::vector<ArcId>& walk, int length, std::set<std::vector<ArcId>>& out) {
    if (static_cast<int>(walk.size()) == length) {
        if (g.terminus(walk.back()) != g.origin(walk.front())) return;
        for (std::size_t i = 0; i < walk.size(); ++i)
            if (walk[(i + 1) % walk.size()] == g.reverse(walk[i])) return;
        std::vector<ArcId> best = walk;
        std::vector<ArcId> rot = walk;
        for (std::size_t i = 1; i < walk.size(); ++i) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            best = std::min(best, rot);
        }
        out.insert(best);
        return;
    }
    for (ArcId a = 0; a < g.num_arcs(); ++a) {
        if (!walk.empty() && g.origin(a) != g.terminus(walk.back())) continue;
        walk.push_back(a);
        all_walks(g, walk, length, out);
        walk.pop_back();
    }
}

}  // namespace

std::set<std::vector<ArcId>> brute_force_classes(const RegularGraph& g, int mu_max) {
    std::set<std::vector<ArcId>> out;
    std::vector<ArcId> walk;
    for (int length = 1; length <= mu_max; ++length) all_walks(g, walk, length, out);
    return out;
}

std::vector<std::uint64_t> explicit_sphere_sizes(const RegularGraph& g, Vertex v, int radius) {
    std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(g.num_vertices()));
    for (const auto& [a, b] : g.edges()) {
        adjacency[static_cast<std::size_t>(a)].push_back(b);
        adjacency[static_cast<std::size_t>(b)].push_back(a);
    }
    // Tree node = (quotient vertex, quotient vertex of the parent). In a
    // simple graph the parent's vertex identifies the one forbidden step.
    struct Node {
        Vertex at;
        Vertex from;
    };
    std::vector<std::uint64_t> sizes{1};
    std::vector<Node> level{{v, -1}};
    for (int r = 1; r <= radius; ++r) {
        std::vector<Node> next;
        for (const Node& n : level)
            for (Vertex w : adjacency[static_cast<std::size_t>(n.at)])
                if (w != n.from) next.push_back({w, n.at});
        sizes.push_back(next.size());
        level = std::move(next);
    }
    return sizes;
}

AxisProbe probe_axis(const RegularGraph& g, const SpanningTree& st, const Word& w, const TreePath& x) {
    const int d0 = tree_distance(x, apply_deck(g, st, w, x));
    const int radius = (d0 + 1) / 2;
    AxisProbe best{std::numeric_limits<int>::max(), 0};

    std::vector<ArcId> steps;
    auto visit = [&](auto&& self, Vertex at) -> void {
        const TreePath y = follow(g, x, steps);
        const int d = tree_distance(y, apply_deck(g, st, w, y));
        const int depth = static_cast<int>(steps.size());
        if (d < best.mu || (d == best.mu && depth < best.delta)) best = {d, depth};
        if (depth == radius) return;
        for (ArcId a : g.out_arcs(at)) {
            if (!steps.empty() && a == g.reverse(steps.back())) continue;
            steps.push_back(a);
            self(self, g.terminus(a));
            steps.pop_back();
        }
    };
    visit(visit, projection(g, st, x));
    return best;
}

std::vector<double> radial_recursion(double lambda, int q, double phi0, int n_max) {
    std::vector<double> phi(static_cast<std::size_t>(n_max) + 1);
    phi[0] = phi0;
    // Level 0 has two neighbours on the loop and q-1 off it; level n >= 1
    // has one parent and q children.
    if (n_max >= 1) phi[1] = ((q + 1) * lambda * phi0 - 2 * phi0) / (q - 1);
    for (int n = 1; n < n_max; ++n) {
        const auto i = static_cast<std::size_t>(n);
        phi[i + 1] = ((q + 1) * lambda * phi[i] - phi[i - 1]) / q;
    }
    return phi;
}

std::complex<double> fourier_series(double lambda, int q, double phi0, int mu, int nu, std::complex<double> s,
                                    int terms) {
    const std::vector<double> phi = radial_recursion(lambda, q, phi0, terms);
    const double lq = std::log(static_cast<double>(q));
    const double loop = static_cast<double>(mu) / nu;
    std::complex<double> sum = loop * phi[0];
    for (int n = 1; n <= terms; ++n) {
        const double level = loop * (q - 1) * std::pow(static_cast<double>(q), n - 1);
        sum += level * std::exp(-2.0 * s * lq * static_cast<double>(n)) * phi[static_cast<std::size_t>(n)];
    }
    return sum * std::exp(-s * lq * static_cast<double>(mu));
}

}  // namespace treelattice::oracle
