// Multigraph substrate shared by every arborkit module.
//
// Graphs are finite undirected multigraphs: loops and parallel edges are
// allowed, vertices are dense 0-based indices and edge ids are the dense
// positions 0..m-1 in the edge list.

#ifndef ARBORKIT_GRAPH_HPP
#define ARBORKIT_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace arborkit {

using Vertex = int;
using EdgeId = int;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what);
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Raised when an exhaustive routine is asked to run above its desk-scale gate.
class SizeLimitError : public Error {
public:
    SizeLimitError(std::string_view operation, std::size_t size, std::size_t limit);
};

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    bool is_loop() const noexcept { return u == v; }
    bool touches(Vertex x) const noexcept { return u == x || v == x; }
    Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    Graph(int vertex_count, std::vector<Edge> edges);
    Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    EdgeId add_edge(Vertex u, Vertex v);

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

    /// Edge ids incident with each vertex; a loop appears once in its vertex's list.
    std::vector<std::vector<EdgeId>> incidence() const;
    /// Degrees with loops counted twice.
    std::vector<int> degrees() const;
    bool has_loop() const noexcept;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
};

/// A set of edge ids over a host graph with `host_size` edges.
class EdgeSubset {
public:
    EdgeSubset() = default;
    explicit EdgeSubset(std::size_t host_size);
    EdgeSubset(std::size_t host_size, std::initializer_list<EdgeId> ids);
    EdgeSubset(std::size_t host_size, const std::vector<EdgeId>& ids);

    static EdgeSubset full(std::size_t host_size);
    /// Bit i of `mask` selects edge i; requires host_size <= 64.
    static EdgeSubset from_mask(std::size_t host_size, std::uint64_t mask);

    std::size_t host_size() const noexcept { return bits_.size(); }
    std::size_t size() const noexcept { return bits_.count(); }
    bool empty() const noexcept { return bits_.none(); }
    bool contains(EdgeId e) const;
    void insert(EdgeId e);
    void erase(EdgeId e);

    std::vector<EdgeId> ids() const;
    std::uint64_t to_mask() const;

    EdgeSubset complement() const;
    EdgeSubset& operator|=(const EdgeSubset& other);
    EdgeSubset& operator&=(const EdgeSubset& other);
    EdgeSubset& operator-=(const EdgeSubset& other);
    friend EdgeSubset operator|(EdgeSubset a, const EdgeSubset& b) { return a |= b; }
    friend EdgeSubset operator&(EdgeSubset a, const EdgeSubset& b) { return a &= b; }
    friend EdgeSubset operator-(EdgeSubset a, const EdgeSubset& b) { return a -= b; }
    bool is_subset_of(const EdgeSubset& other) const;
    bool intersects(const EdgeSubset& other) const;

    friend bool operator==(const EdgeSubset& a, const EdgeSubset& b) { return a.bits_ == b.bits_; }
    friend bool operator<(const EdgeSubset& a, const EdgeSubset& b);

private:
    void check(EdgeId e) const;
    void check_host(const EdgeSubset& other) const;

    boost::dynamic_bitset<std::uint64_t> bits_;
};

struct GraphStats {
    int vertex_count = 0;     // n(X)
    int component_count = 0;  // c(X)
    int min_degree = 0;       // over vertices incident with X; 0 when X is empty
    bool is_matching = true;
    bool is_forest = true;
};

/// Edge-induced subgraph: vertices incident with X relabelled densely, edges of X
/// in increasing id order.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original_vertex;  // new vertex -> host vertex
    std::vector<EdgeId> original_edge;    // new edge id -> host edge id
    GraphStats stats;
};

void validate(const Graph& g, const EdgeSubset& x);

InducedSubgraph edge_induced_subgraph(const Graph& g, const EdgeSubset& x);
GraphStats subset_stats(const Graph& g, const EdgeSubset& x);

/// Subgraph induced by a vertex set (all edges with both endpoints in the set).
InducedSubgraph vertex_induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

/// One vertex per edge; one edge per unordered pair of distinct edges that share
/// an endpoint. Loops of `g` add no self-adjacency.
Graph line_graph(const Graph& g);

/// Number of components of the subgraph (V(g), X), counting isolated vertices.
int spanning_component_count(const Graph& g, const EdgeSubset& x);

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);
Graph read_graph_file(const std::string& path);

// Disjoint-set forest with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(int n);
    int find(int x);
    bool unite(int a, int b);
    int set_count() const noexcept { return sets_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    int sets_;
};

/// Exhaustive routines default to `fallback`; the ARBORKIT_MAX_EDGES environment
/// variable overrides every such gate.
std::size_t desk_scale_limit(std::size_t fallback);

}  // namespace arborkit

#endif  // ARBORKIT_GRAPH_HPP
