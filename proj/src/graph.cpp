#include "treelattice/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "treelattice/error.hpp"

namespace treelattice {

namespace {

std::vector<std::vector<Vertex>> adjacency(const EdgeList& el) {
    std::vector<std::vector<Vertex>> adj(el.num_vertices);
    for (auto [u, v] : el.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

std::vector<int> bfs_distances(const std::vector<std::vector<Vertex>>& adj, Vertex s,
                               std::vector<Vertex>* parent) {
    std::vector<int> dist(adj.size(), -1);
    if (parent) parent->assign(adj.size(), -1);
    std::queue<Vertex> todo;
    dist[s] = 0;
    todo.push(s);
    while (!todo.empty()) {
        Vertex u = todo.front();
        todo.pop();
        for (Vertex v : adj[u]) {
            if (dist[v] >= 0) continue;
            dist[v] = dist[u] + 1;
            if (parent) (*parent)[v] = u;
            todo.push(v);
        }
    }
    return dist;
}

// Shortest odd cycle, found by a BFS from every vertex: an edge joining two
// vertices on the same BFS level closes an odd walk of length 2*level+1, and
// the minimum such walk is a simple cycle.
std::optional<std::vector<Vertex>> shortest_odd_cycle(
    const std::vector<std::vector<Vertex>>& adj) {
    std::optional<std::vector<Vertex>> best;
    for (Vertex s = 0; s < static_cast<Vertex>(adj.size()); ++s) {
        std::vector<Vertex> parent;
        auto dist = bfs_distances(adj, s, &parent);
        for (Vertex u = 0; u < static_cast<Vertex>(adj.size()); ++u) {
            for (Vertex v : adj[u]) {
                if (u >= v || dist[u] < 0 || dist[u] != dist[v]) continue;
                std::size_t len = 2 * static_cast<std::size_t>(dist[u]) + 1;
                if (best && best->size() <= len) continue;
                std::vector<Vertex> left, right;
                for (Vertex w = u; w != -1; w = parent[w]) left.push_back(w);
                for (Vertex w = v; w != s; w = parent[w]) right.push_back(w);
                std::reverse(left.begin(), left.end());  // s ... u
                left.insert(left.end(), right.begin(), right.end());
                best = std::move(left);
            }
        }
    }
    return best;
}

}  // namespace

std::string ValidationReport::failure_reason() const {
    if (num_vertices == 0 || num_edges == 0) return "empty graph";
    if (!is_simple) return "graph is not simple";
    if (!is_regular) return "graph is not regular";
    if (!is_connected) return "graph is not connected";
    if (degree < 3) return "degree " + std::to_string(degree) + " < 3";
    return {};
}

ValidationReport validate(const EdgeList& el) {
    ValidationReport r;
    r.num_vertices = el.num_vertices;
    r.num_edges = static_cast<int>(el.edges.size());

    std::set<std::pair<Vertex, Vertex>> seen;
    r.is_simple = true;
    for (auto [u, v] : el.edges) {
        if (u == v || u < 0 || v < 0 || u >= el.num_vertices || v >= el.num_vertices ||
            !seen.emplace(std::min(u, v), std::max(u, v)).second)
            r.is_simple = false;
    }
    if (!r.is_simple || el.num_vertices == 0) {
        r.is_connected = el.num_vertices == 1;
        r.is_bipartite = false;
        r.odd_cycle = std::vector<Vertex>{};
        return r;
    }

    auto adj = adjacency(el);
    int min_deg = static_cast<int>(adj[0].size()), max_deg = min_deg;
    for (const auto& row : adj) {
        min_deg = std::min(min_deg, static_cast<int>(row.size()));
        max_deg = std::max(max_deg, static_cast<int>(row.size()));
    }
    r.is_regular = min_deg == max_deg && !el.edges.empty();
    r.degree = max_deg;

    auto dist = bfs_distances(adj, 0, nullptr);
    r.is_connected = std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });

    if (auto cycle = shortest_odd_cycle(adj)) {
        r.is_bipartite = false;
        r.odd_cycle = std::move(cycle);
    } else {
        // Two-colour every component by BFS parity.
        std::vector<int> side(adj.size(), -1);
        for (Vertex s = 0; s < el.num_vertices; ++s) {
            if (side[s] >= 0) continue;
            auto d = bfs_distances(adj, s, nullptr);
            for (Vertex v = 0; v < el.num_vertices; ++v)
                if (d[v] >= 0) side[v] = d[v] % 2;
        }
        r.is_bipartite = true;
        r.bipartition = std::move(side);
    }
    return r;
}

ValidationReport validate(const RegularGraph& g) {
    EdgeList el{g.num_vertices(), g.edges()};
    return validate(el);
}

RegularGraph RegularGraph::build(const EdgeList& el) {
    auto report = validate(el);
    if (!report.acceptable()) throw ValidationError(report.failure_reason());

    RegularGraph g;
    g.num_vertices_ = el.num_vertices;
    g.degree_ = report.degree;
    g.bipartite_ = report.is_bipartite;

    for (auto [u, v] : el.edges) {
        g.arcs_.push_back({u, v, -1});
        g.arcs_.push_back({v, u, -1});
    }
    std::sort(g.arcs_.begin(), g.arcs_.end(), [](const Arc& a, const Arc& b) {
        return std::pair(a.origin, a.terminus) < std::pair(b.origin, b.terminus);
    });
    g.out_.resize(g.arcs_.size());
    for (ArcId a = 0; a < g.num_arcs(); ++a) g.out_[a] = a;
    for (ArcId a = 0; a < g.num_arcs(); ++a) g.arcs_[a].reverse = *g.find_arc(g.arcs_[a].terminus, g.arcs_[a].origin);
    return g;
}

std::optional<ArcId> RegularGraph::find_arc(Vertex from, Vertex to) const {
    if (from < 0 || from >= num_vertices_) return std::nullopt;
    auto row = out_arcs(from);
    auto it = std::lower_bound(row.begin(), row.end(), to,
                               [this](ArcId a, Vertex t) { return arcs_[a].terminus < t; });
    if (it == row.end() || arcs_[*it].terminus != to) return std::nullopt;
    return *it;
}

std::vector<std::pair<Vertex, Vertex>> RegularGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const Arc& a : arcs_)
        if (a.origin < a.terminus) out.emplace_back(a.origin, a.terminus);
    return out;
}

bool RegularGraph::operator==(const RegularGraph& other) const {
    return num_vertices_ == other.num_vertices_ && degree_ == other.degree_ &&
           edges() == other.edges();
}

EdgeList parse_edge_list(std::string_view text) {
    EdgeList el;
    std::set<std::pair<Vertex, Vertex>> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') continue;

        long long vals[2];
        int count = 0;
        std::size_t i = first;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i >= line.size()) break;
            if (count == 2) throw ParseError(line_no, "expected two vertex indices");
            const char* b = line.data() + i;
            const char* e = line.data() + line.size();
            long long value = 0;
            auto [ptr, ec] = std::from_chars(b, e, value);
            if (ec != std::errc() || (ptr != e && *ptr != ' ' && *ptr != '\t'))
                throw ParseError(line_no, "malformed vertex index");
            vals[count++] = value;
            i += static_cast<std::size_t>(ptr - b);
        }
        if (count != 2) throw ParseError(line_no, "expected two vertex indices");
        if (vals[0] < 0 || vals[1] < 0 || vals[0] > 1'000'000'000 || vals[1] > 1'000'000'000)
            throw ParseError(line_no, "vertex index out of range");
        Vertex u = static_cast<Vertex>(vals[0]), v = static_cast<Vertex>(vals[1]);
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
            throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        el.edges.emplace_back(u, v);
        el.num_vertices = std::max(el.num_vertices, std::max(u, v) + 1);
    }
    return el;
}

RegularGraph parse_graph(std::string_view text) { return RegularGraph::build(parse_edge_list(text)); }

RegularGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string serialize_graph(const RegularGraph& g) {
    std::ostringstream out;
    out << "# " << g.num_vertices() << " vertices, degree " << g.degree() << "\n";
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace treelattice
