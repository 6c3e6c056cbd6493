#include <doctest.h>

#include <map>
#include <queue>
#include <random>
#include <set>

#include "treelattice/cover.hpp"
#include "treelattice/fixtures.hpp"
#include "treelattice/oracle.hpp"

using namespace treelattice;

namespace {

// All tree vertices within `radius` of the root, built breadth first.
std::vector<TreePath> explicit_ball(const RegularGraph& g, const SpanningTree& st, int radius) {
    std::vector<TreePath> out{TreePath{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        const TreePath p = out[i];
        if (p.depth() == radius) continue;
        const Vertex at = p.arcs.empty() ? st.base() : g.terminus(p.arcs.back());
        for (ArcId a : g.out_arcs(at)) {
            if (!p.arcs.empty() && a == g.reverse(p.arcs.back())) continue;
            TreePath c = p;
            c.arcs.push_back(a);
            out.push_back(std::move(c));
        }
    }
    return out;
}

// BFS distances inside the explicit ball, edges = parent links.
std::vector<int> bfs_distances(const std::vector<TreePath>& nodes, std::size_t from) {
    std::map<TreePath, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);
    std::vector<std::vector<std::size_t>> adj(nodes.size());
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        TreePath parent = nodes[i];
        parent.arcs.pop_back();
        const std::size_t j = index.at(parent);
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<int> dist(nodes.size(), -1);
    std::queue<std::size_t> queue;
    dist[from] = 0;
    queue.push(from);
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop();
        for (std::size_t v : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push(v);
            }
    }
    return dist;
}

Word triangle_word(const RegularGraph& g, const SpanningTree& st) {
    const std::vector<Vertex> v{0, 1, 2, 0};
    return word_of_walk(g, st, walk_from_vertices(g, v));
}

}  // namespace

TEST_CASE("tree distance") {
    const RegularGraph g = fixtures::k4();
    const SpanningTree st = SpanningTree::bfs(g);
    const TreePath root;
    const TreePath p{{*g.find_arc(0, 1), *g.find_arc(1, 2), *g.find_arc(2, 3)}};
    CHECK(tree_distance(p, p) == 0);
    CHECK(tree_distance(root, p) == 3);
    CHECK(tree_distance(p, root) == 3);
    CHECK(geodesic(g, root, p) == p.arcs);
    CHECK(geodesic(g, p, root).size() == 3);
    CHECK(projection(g, st, p) == 3);
}

TEST_CASE("tree distance equals BFS on an explicit ball") {
    for (const RegularGraph& g : {fixtures::k4(), fixtures::k5()}) {
        const SpanningTree st = SpanningTree::bfs(g);
        const auto nodes = explicit_ball(g, st, 4);
        std::mt19937 rng(17);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t from = rng() % nodes.size();
            const auto dist = bfs_distances(nodes, from);
            for (std::size_t j = 0; j < nodes.size(); j += 7) {
                CHECK(tree_distance(nodes[from], nodes[j]) == dist[j]);
                CHECK(static_cast<int>(geodesic(g, nodes[from], nodes[j]).size()) == dist[j]);
                CHECK(follow(g, nodes[from], geodesic(g, nodes[from], nodes[j])) == nodes[j]);
            }
        }
    }
}

TEST_CASE("deck action") {
    const RegularGraph g = fixtures::k4();
    const SpanningTree st = SpanningTree::bfs(g);
    const Word t = triangle_word(g, st);
    const TreePath root;

    CHECK(apply_deck(g, st, Word{}, root) == root);
    const TreePath image = apply_deck(g, st, t, root);
    CHECK(image.depth() == 3);
    CHECK(image == lift_walk(g, st, reduce_walk(g, walk_of_word(g, st, t))));
    CHECK(projection(g, st, image) == st.base());

    SUBCASE("free action on a radius-6 ball") {
        for (const TreePath& p : explicit_ball(g, st, 6))
            for (const Word& w : {t, inverse(t), power(t, 2), Word{{1, 2}}, Word{{-3}}})
                CHECK(apply_deck(g, st, w, p) != p);
    }
    SUBCASE("action law and isometry") {
        std::mt19937 rng(23);
        const auto nodes = explicit_ball(g, st, 4);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Letter> a, b;
            for (int i = 0; i < 4; ++i) a.push_back((1 + static_cast<int>(rng() % 3)) * (rng() % 2 ? 1 : -1));
            for (int i = 0; i < 3; ++i) b.push_back((1 + static_cast<int>(rng() % 3)) * (rng() % 2 ? 1 : -1));
            const Word u = reduce(a), w = reduce(b);
            const TreePath& p = nodes[rng() % nodes.size()];
            const TreePath& r = nodes[rng() % nodes.size()];
            CHECK(apply_deck(g, st, multiply(u, w), p) == apply_deck(g, st, u, apply_deck(g, st, w, p)));
            CHECK(tree_distance(apply_deck(g, st, w, p), apply_deck(g, st, w, r)) == tree_distance(p, r));
            CHECK(projection(g, st, apply_deck(g, st, w, p)) == projection(g, st, p));
        }
    }
}

TEST_CASE("displacement and axis distance") {
    const RegularGraph g = fixtures::k4();
    const SpanningTree st = SpanningTree::bfs(g);
    const Word t = triangle_word(g, st);
    const TreePath root;
    const TreePath off{{*g.find_arc(0, 3)}};

    CHECK(displacement(g, st, t, root) == 3);
    CHECK(displacement(g, st, t, off) == 5);
    CHECK(displacement(g, st, power(t, 2), root) == 6);
    CHECK(axis_delta(g, st, t, root) == 0);
    CHECK(axis_delta(g, st, t, off) == 1);
    CHECK(axis_delta(g, st, power(t, 2), root) == 0);
    CHECK(displacement(g, st, Word{}, off) == 0);
    CHECK_THROWS_AS(axis_delta(g, st, Word{}, root), std::invalid_argument);

    SUBCASE("delta is shared by powers over a radius-5 ball") {
        for (const TreePath& p : explicit_ball(g, st, 5)) {
            const int d = axis_delta(g, st, t, p);
            CHECK(axis_delta(g, st, power(t, 2), p) == d);
            CHECK(axis_delta(g, st, power(t, 3), p) == d);
        }
    }
}

TEST_CASE("displacement parity and axis probe") {
    for (const RegularGraph& g : {fixtures::k4(), fixtures::petersen()}) {
        const SpanningTree st = SpanningTree::bfs(g);
        std::mt19937 rng(29);
        const auto nodes = explicit_ball(g, st, 3);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<Letter> letters;
            for (int i = 0; i < 3; ++i)
                letters.push_back((1 + static_cast<int>(rng() % st.rank())) * (rng() % 2 ? 1 : -1));
            const Word w = reduce(letters);
            if (w.empty()) continue;
            const TreePath& p = nodes[rng() % nodes.size()];
            const int mu = class_of_word(g, st, w).mu;
            const int d = displacement(g, st, w, p);
            CHECK(d % 2 == mu % 2);
            const oracle::AxisProbe probe = oracle::probe_axis(g, st, w, p);
            CHECK(probe.mu == mu);
            CHECK(probe.delta == axis_delta(g, st, w, p));
        }
    }
}

TEST_CASE("ball iterator") {
    const RegularGraph g = fixtures::k4();
    const SpanningTree st = SpanningTree::bfs(g);

    SUBCASE("radius 0") {
        BallIterator it = ball(g, st, TreePath{}, 0);
        auto first = it.next();
        REQUIRE(first);
        CHECK(first->vertex == TreePath{});
        CHECK(first->distance == 0);
        CHECK_FALSE(it.next());
    }
    SUBCASE("every vertex once, distance ordered") {
        const TreePath center{{*g.find_arc(0, 2), *g.find_arc(2, 3)}};
        BallIterator it = ball(g, st, center, 4);
        std::set<TreePath> seen;
        std::vector<int> spheres(5, 0);
        int last = 0;
        while (auto item = it.next()) {
            CHECK(item->distance >= last);
            last = item->distance;
            CHECK(tree_distance(center, item->vertex) == item->distance);
            CHECK(seen.insert(item->vertex).second);
            ++spheres[static_cast<std::size_t>(item->distance)];
        }
        CHECK(spheres == std::vector<int>{1, 3, 6, 12, 24});
        CHECK(seen.size() == 46);
        CHECK(ball_size(2, 4) == 46);
    }
}

TEST_CASE("sphere sizes") {
    for (const RegularGraph& g : {fixtures::k4(), fixtures::k5()}) {
        const auto serial = sphere_sizes(g, 1, 10, Execution::serial);
        const auto parallel = sphere_sizes(g, 1, 10, Execution::parallel);
        CHECK(serial == parallel);
        CHECK(serial == oracle::explicit_sphere_sizes(g, 1, 10));
        CHECK(serial[0] == 1);
        for (int n = 1; n <= 10; ++n) CHECK(serial[static_cast<std::size_t>(n)] == sphere_size(g.q(), n));
    }
    CHECK(sphere_size(2, 4) == 24);
    CHECK(sphere_size(3, 1) == 4);
}

TEST_CASE("minimum displacement over a ball is the class length") {
    const RegularGraph g = fixtures::petersen();
    const SpanningTree st = SpanningTree::bfs(g);
    for (const ClassDescriptor& k : enumerate_classes(g, 6)) {
        const Word w = representative_word(g, st, k);
        int best = 1 << 30;
        for (const TreePath& p : explicit_ball(g, st, 4)) best = std::min(best, displacement(g, st, w, p));
        CHECK(best == k.mu);
    }
}
