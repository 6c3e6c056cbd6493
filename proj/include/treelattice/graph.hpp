#ifndef TREELATTICE_GRAPH_HPP
#define TREELATTICE_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace treelattice {

using Vertex = int;
using ArcId = int;

/// Directed copy of an undirected edge. Every edge contributes two arcs
/// that are each other's `reverse`.
struct Arc {
    Vertex origin;
    Vertex terminus;
    ArcId reverse;
};

/// Raw edge list as read from a file, before any hypothesis is checked.
struct EdgeList {
    int num_vertices = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
};

struct ValidationReport {
    int num_vertices = 0;
    int num_edges = 0;
    bool is_regular = false;
    int degree = 0;  // common degree when regular, else the maximum degree
    bool is_simple = false;
    bool is_connected = false;
    bool is_bipartite = false;
    // Exactly one of the two is populated. The bipartition lists the side of
    // every vertex (0 or 1); the odd cycle is a shortest one, as a vertex
    // sequence without repeating the first vertex.
    std::optional<std::vector<int>> bipartition;
    std::optional<std::vector<Vertex>> odd_cycle;

    /// Hypotheses every downstream computation assumes.
    bool acceptable() const { return is_regular && is_simple && is_connected && degree >= 3; }
    std::string failure_reason() const;
};

/// Finite simple connected (q+1)-regular graph with q >= 2.
///
/// Arcs are numbered in (origin, terminus) order, so the out-arcs of a vertex
/// form a contiguous block sorted by terminus. Instances are immutable.
class RegularGraph {
public:
    /// Throws ValidationError when the edge list is not an acceptable graph.
    static RegularGraph build(const EdgeList& edges);

    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return static_cast<int>(arcs_.size()) / 2; }
    int num_arcs() const { return static_cast<int>(arcs_.size()); }
    int degree() const { return degree_; }
    int q() const { return degree_ - 1; }
    bool is_bipartite() const { return bipartite_; }

    std::span<const Arc> arcs() const { return arcs_; }
    const Arc& arc(ArcId a) const { return arcs_[a]; }
    Vertex origin(ArcId a) const { return arcs_[a].origin; }
    Vertex terminus(ArcId a) const { return arcs_[a].terminus; }
    ArcId reverse(ArcId a) const { return arcs_[a].reverse; }

    std::span<const ArcId> out_arcs(Vertex v) const {
        return {out_.data() + v * degree_, static_cast<std::size_t>(degree_)};
    }
    std::optional<ArcId> find_arc(Vertex from, Vertex to) const;

    /// Undirected edges as (u, v) with u < v, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool operator==(const RegularGraph& other) const;

private:
    RegularGraph() = default;

    int num_vertices_ = 0;
    int degree_ = 0;
    bool bipartite_ = false;
    std::vector<Arc> arcs_;
    std::vector<ArcId> out_;  // num_vertices * degree, row per vertex
};

/// Reads the edge-list format: '#' comment lines, blank lines, and "u v"
/// lines with nonnegative integers u != v. The vertex set is 0..max.
/// Throws ParseError (malformed line, self-loop, duplicate edge, negative
/// index) with the offending line number.
EdgeList parse_edge_list(std::string_view text);

/// parse_edge_list followed by RegularGraph::build.
RegularGraph parse_graph(std::string_view text);

RegularGraph load_graph(const std::string& path);

/// Canonical text form; parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const RegularGraph& g);

ValidationReport validate(const EdgeList& edges);
ValidationReport validate(const RegularGraph& g);

}  // namespace treelattice

#endif  // TREELATTICE_GRAPH_HPP
