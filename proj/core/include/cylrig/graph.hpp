#pragma once

#include "cylrig/rng.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cylrig {

using Edge = std::pair<int, int>; // normalized: first < second

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Finite simple graph on vertices 0..n-1. Edge list kept sorted, unique,
// loop-free; validate() enforces the invariants after external input.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    Graph() = default;
    Graph(int n_, std::vector<Edge> edges_);

    int m() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<std::vector<int>> adjacency() const;
    void validate() const;

    friend bool operator==(const Graph&, const Graph&) = default;
};

// Loop-free multigraph: sorted edge list, parallel copies allowed.
struct MultiGraph {
    int n = 0;
    std::vector<Edge> edges;

    MultiGraph() = default;
    MultiGraph(int n_, std::vector<Edge> edges_);
    explicit MultiGraph(const Graph& g) : n(g.n), edges(g.edges) {}

    int m() const { return static_cast<int>(edges.size()); }
    int multiplicity(int u, int v) const;
    void validate() const;
};

Graph complete_graph(int n);
bool is_complete(const Graph& g);

bool is_connected(const Graph& g);
// n >= 3, connected, and no cut vertex.
bool is_2connected(const Graph& g);
// |E| - |V| + (number of connected components).
int cycle_space_dim(const Graph& g);

std::vector<int> connected_component_ids(const Graph& g); // vertex -> component

struct ContractionResult {
    Graph simple;                // parallel pairs collapsed to single edges
    MultiGraph multi;            // parallel pairs kept
    bool parallel_arose = false;
    std::vector<int> vertex_map; // old vertex -> new vertex (endpoints merge)
};

// Contract edge e = (u,v): the merged vertex keeps the smaller index, the
// larger one is removed and the remaining vertices re-indexed densely.
// Loops created by further parallels between u and v are dropped.
ContractionResult contract_edge(const Graph& g, Edge e, bool keep_simple = true);

struct VertexDeletionResult {
    Graph graph;
    std::vector<int> vertex_map; // old vertex -> new vertex, -1 if deleted
};

VertexDeletionResult delete_vertices(const Graph& g, std::vector<int> victims);

Graph delete_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                       std::vector<int>* vertex_map = nullptr);

// Separations in the sense used for circuit decompositions.
//
// 2-vertex: induced subgraphs F1, F2 with F1 u F2 = G, |V1 n V2| = 2 and
// both side differences nonempty; trivial iff some side is a K4.
// 3-edge: vertex-disjoint induced F1, F2 with F1 u F2 = G - S, |S| = 3;
// trivial iff S is not three pairwise non-adjacent edges.
struct Separation {
    enum class Kind { TwoVertex, ThreeEdge };
    Kind kind = Kind::TwoVertex;
    std::vector<int> side1, side2;   // sorted vertex sets V1, V2
    std::vector<int> shared_vertices; // TwoVertex: the pair {x, y}
    std::vector<Edge> shared_edges;   // ThreeEdge: the set S
    bool trivial = false;
};

// Enumerates every separation of the requested kind in deterministic
// (lexicographic) order. Desk-scale diagnostic: throws beyond edge_cap edges.
std::vector<Separation> find_separations(const Graph& g, Separation::Kind kind,
                                         int edge_cap = 64);

// Seeded Erdos-Renyi-style graph with exactly m edges (uniform edge subset).
Graph random_graph(int n, int m, Rng& rng);

// Canonical labeling by exhaustive permutation search; practical for n <= 8.
std::vector<Edge> canonical_form(const Graph& g,
                                 std::vector<int>* perm = nullptr);
bool is_isomorphic(const Graph& a, const Graph& b);

// As above; on success *iso maps each vertex of `a` to its image in `b`.
bool is_isomorphic(const Graph& a, const Graph& b, std::vector<int>* iso);

} // namespace cylrig
