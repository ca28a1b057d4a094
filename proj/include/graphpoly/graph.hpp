#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace graphpoly {

// Undirected edge; endpoints are stored with u <= v. Loops have u == v.
struct Edge {
    int u;
    int v;
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
    bool is_loop() const { return u == v; }
};

// Undirected multigraph on vertices 0..n-1. Parallel edges and loops are
// allowed; edges keep a stable index order (the order they were added).
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n);
    static Multigraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }

    int add_vertex();                 // returns the new vertex id
    void add_edge(int u, int v);      // multigraph insert, loops allowed

    bool adjacent(int u, int v) const;        // some edge joins u and v
    int multiplicity(int u, int v) const;     // number of such edges
    int degree(int v) const;                  // loops count twice
    int loop_count(int v) const;
    bool is_simple() const;                   // no loops, no parallel edges

    bool edge_is_loop(int e) const { return edges_[static_cast<size_t>(e)].is_loop(); }
    bool edge_is_bridge(int e) const;
    // An edge that is neither a loop nor a bridge.
    bool edge_is_ordinary(int e) const { return !edge_is_loop(e) && !edge_is_bridge(e); }

    Multigraph delete_edge(int e) const;
    // Removes edge e and merges its endpoints. The merged vertex takes the
    // smaller of the two indices; remaining ids are compacted downwards.
    // Parallel copies of e become loops. Contracting a loop just deletes it.
    Multigraph contract_edge(int e) const;
    // Merges v into u (any remaining u-v edges become loops); same relabelling
    // convention as contract_edge. u and v may be adjacent.
    Multigraph identify(int u, int v) const;
    Multigraph with_edge(int u, int v) const; // copy with one extra edge

    Multigraph disjoint_union(const Multigraph& other) const;
    Multigraph induced_subgraph(const std::vector<int>& vertices) const;
    Multigraph without_vertices(const std::vector<int>& vertices) const;
    Multigraph strip_isolated() const;

    std::vector<int> component_ids() const;   // n entries, labels 0..k-1
    int component_count() const;
    bool connected() const;                   // true for the empty graph

    bool operator==(const Multigraph& rhs) const; // identical labelled presentation

    // Neighbour vertex list (each neighbour once, loops excluded).
    std::vector<int> neighbours(int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Statistics of an edge subset X: |X|, the number of vertices covered by X,
// the number of components of the subgraph (covered vertices, X), the number
// of components of (V, X), the rank nu - kappa, and the dual rank
// |X| + rank(E \ X) - rank(E).
struct EdgeSubsetStats {
    int size;
    int covered_vertices;
    int covered_components;
    int components;
    int rank;
    int dual_rank;
    bool operator==(const EdgeSubsetStats&) const = default;
};

EdgeSubsetStats subset_stats(const Multigraph& g, std::uint64_t edge_mask);
EdgeSubsetStats subset_stats(const Multigraph& g, const std::vector<int>& edge_indices);

int graph_rank(const Multigraph& g); // rank of the full edge set

// Canonical relabelling: the lexicographically least edge-list encoding over
// all vertex orders compatible with iterated degree refinement. Equal strings
// exactly characterise isomorphic multigraphs. Throws LimitError
// ("canonicalisation limit exceeded") when vertex_count > limit.
std::string canonical_form(const Multigraph& g, int limit = 10);
bool isomorphic(const Multigraph& a, const Multigraph& b, int limit = 10);

// Biconnected components as subgraphs (vertices relabelled compactly, in
// increasing original order). Loops form single-edge blocks; bridges form
// two-vertex blocks; isolated vertices contribute nothing.
std::vector<Multigraph> blocks(const Multigraph& g);

// Named constructions.
Multigraph null_graph(int n);
Multigraph complete_graph(int n);
Multigraph path_graph(int n);   // n vertices, n-1 edges
Multigraph cycle_graph(int n);  // n >= 1; C_1 is a loop, C_2 a digon
Multigraph complete_bipartite(int a, int b);
Multigraph star_graph(int leaves); // complete_bipartite(1, leaves)

// The classical pair of six-vertex, ten-edge multigraphs that share a Tutte
// polynomial without being isomorphic (each has one doubled edge).
Multigraph gray_graph_a();
Multigraph gray_graph_b();

// Vertices are the edges of g; two meet iff they share an endpoint. Throws
// DomainError("line graph restricted to simple graphs") otherwise.
Multigraph line_graph(const Multigraph& g);

} // namespace graphpoly
