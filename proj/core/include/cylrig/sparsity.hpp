#pragma once

#include "cylrig/graph.hpp"

#include <optional>
#include <vector>

namespace cylrig {

// (2,2)-sparsity pebble game.
//
// An edge set F is independent in the multigraph count matroid when every
// nonempty subset F' satisfies |F'| <= 2|V(F')| - 2; the simple variant
// additionally makes any parallel pair dependent (strict count on two
// vertices). The game starts with two pebbles per vertex; an edge u-v is
// accepted when three pebbles can be gathered on {u, v} by reversing
// directed paths, and acceptance consumes one pebble from the tail.
// Accepted edges form a maximum independent subset of the edges offered,
// so the number accepted is the matroid rank. Insertions happen in
// lexicographic edge order, making the accepted set deterministic.
class PebbleGame {
public:
    PebbleGame(int n, bool simple_restriction);

    // Offers an edge; returns true (accepted / independent together with the
    // previously accepted set) or false (rejected / dependent).
    bool offer(int u, int v);

    int pebbles(int v) const { return pebbles_[v]; }
    int total_pebbles() const;
    const std::vector<Edge>& accepted() const { return accepted_; }

private:
    bool gather(int target, int u, int v);

    int n_;
    bool simple_restriction_;
    std::vector<int> pebbles_;
    std::vector<std::vector<int>> out_; // directed accepted edges
    std::vector<Edge> accepted_;
};

// Rank of the edge set in the simple (2,2)-sparsity matroid.
int rank22(const Graph& g);
// Rank in the multigraph count matroid, or in its simple restriction.
int rank22(const MultiGraph& g, bool simple_restriction = false);
// As above but also reports the accepted (independent) edge set.
int rank22_with_basis(const MultiGraph& g, bool simple_restriction,
                      std::vector<Edge>& basis);

struct CircuitWitness {
    std::vector<Edge> edges;
    std::vector<int> vertex_support;
};

// True iff E(G) is a circuit of the simple matroid: dependent, every
// single-edge deletion independent, |E| = 2|V| - 1 and no isolated vertex.
bool is_circuit(const Graph& g, CircuitWitness* witness = nullptr);

// Rigid on the cylinder, combinatorially: complete with at most 3 vertices,
// or rank22 = 2n - 2.
bool is_rigid_comb(const Graph& g);

// Every single-edge deletion stays rigid.
bool is_redundantly_rigid(const Graph& g);

// e lies in some circuit iff deleting it does not drop the rank.
bool edge_in_circuit(const Graph& g, Edge e);
// v lies in some circuit iff one of its edges does.
bool vertex_in_circuit(const Graph& g, int v);

// The circuit witnessing edge_in_circuit(g, e): the fundamental circuit of e
// with respect to a maximum independent subset of E - e.
std::vector<Edge> fundamental_circuit(const Graph& g, Edge e);

// Matroid connectivity of the simple (2,2) matroid on E(G), decided through
// the characterization "2-connected and redundantly rigid". The
// definitional check (every edge pair in a common circuit) lives in the test
// suite as a brute-force oracle.
bool is_matroid_connected(const Graph& g);

// All circuits of the simple matroid, as sorted edge lists in lexicographic
// order. Bitmask enumeration; throws above edge_cap edges.
std::vector<std::vector<Edge>> all_circuits(const Graph& g, int edge_cap = 24);

// Ear decomposition C1, ..., Ct of a matroid-connected edge set: each ear is
// a circuit, Ci meets D(i-1) = C1 u ... u C(i-1), adds at least one new edge,
// and has inclusion-minimal new-edge set (greedy: minimum |Ci - D(i-1)|).
struct EarDecomposition {
    std::vector<std::vector<Edge>> ears;
};

EarDecomposition ear_decomposition(const Graph& g, int edge_cap = 24);

} // namespace cylrig
