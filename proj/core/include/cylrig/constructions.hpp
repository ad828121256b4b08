#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cylrig/graph.hpp"
#include "cylrig/rng.hpp"

namespace cylrig {

// Inductive operations on M*_{2,2}-circuits: extensions, splits and joins,
// their inverse reductions, a deterministic reduction search, and replayable
// construction traces down to the small base circuits.

// Named small graphs with fixed vertex labels:
//   "K5-e"  K5 minus one edge (5 vertices, 9 edges; the non-edge is {2,4})
//   "H1"    6 vertices, 11 edges
//   "H2"    7 vertices, 13 edges
//   "K4"    complete graph on 4 vertices (not a circuit; rank-22 test data)
// K5-e, H1 and H2 are exactly the three base circuits of the reduction.
Graph base_graph(const std::string& name);

// ---------------------------------------------------------------------------
// Forward operations
// ---------------------------------------------------------------------------

// Add a new vertex n joined to the two distinct vertices u and w.
Graph zero_extension(const Graph& g, int u, int w);

// Delete edge xy, add a new vertex n joined to x, y and z (z outside {x,y}).
// Preserves is_circuit.
Graph one_extension(const Graph& g, Edge xy, int z);

// Delete edge v1v2, add fresh vertices u1 = n, u2 = n+1 and the five edges
// u1u2, u1v1, u1v2, u2v1, u2v2.  Preserves is_circuit (it is a 1-join with
// H1, see join1).
Graph k4minus_extension(const Graph& g, Edge v1v2);

struct SplitResult {
    Graph graph;
    bool circuit = false; // is_circuit verdict for graph
};

// Generalised vertex split at v: partition N(v) into N1 and N2 = N(v) - N1,
// replace v by v1 (reusing index v, joined to N1) and v2 (index n, joined to
// N2), then add the edges v1v2 and v1x.  Requires x != v and x not in N1 so
// that v1x is a fresh edge; x in N2 is allowed and gives the classical
// vertex-splitting operation.  The result need not be a circuit, so the
// verdict is reported instead of enforced (construction by rejection
// sampling needs the failures).
SplitResult generalized_vertex_split(const Graph& g, int v, std::vector<int> n1,
                                     int x);

struct JoinResult {
    Graph graph;
    std::vector<int> map1; // g1 vertex -> result vertex (-1 if deleted)
    std::vector<int> map2; // g2 vertex -> result vertex (-1 if deleted)
};

// 1-join: g1 supplies an edge a1b1; g2 supplies a K4 on quad2 = {a2,b2,c2,d2}
// whose c2 and d2 have degree 3 in g2.  Merge a2 into a1 and b2 into b1,
// delete c2, d2 and the edges a1b1, a2b2.  |V| = n1+n2-4, |E| = m1+m2-7.
JoinResult join1(const Graph& g1, Edge a1b1, const Graph& g2,
                 const std::array<int, 4>& quad2);

// 2-join: both sides supply a K4 on quad_i = {ai,bi,ci,di} with ci, di of
// degree 3.  Merge a2 into a1 and b2 into b1, delete c1, d1, c2, d2; the two
// copies of the edge ab collapse to one.  |V| = n1+n2-6, |E| = m1+m2-11.
JoinResult join2(const Graph& g1, const std::array<int, 4>& quad1,
                 const Graph& g2, const std::array<int, 4>& quad2);

// 3-join: vi has degree 3 in gi with neighbours nbri (an explicit ordering of
// N(vi)); delete v1 and v2 and add the three pairing edges
// nbr1[k]-nbr2[k].  |V| = n1+n2-2, |E| = m1+m2-3.
JoinResult join3(const Graph& g1, int v1, const std::array<int, 3>& nbr1,
                 const Graph& g2, int v2, const std::array<int, 3>& nbr2);

// ---------------------------------------------------------------------------
// Construction steps and traces
// ---------------------------------------------------------------------------

enum class StepKind {
    ZeroExt,
    OneExt,
    K4MinusExt,
    GenVertexSplit,
    Join1,
    Join2,
    Join3,
};

// Step parameters refer to the pre-step graph; created vertices take the next
// free indices (see the forward operations above for the exact conventions).
struct ZeroExtStep {
    int u = -1, w = -1;
};
struct OneExtStep {
    int x = -1, y = -1, z = -1;
};
struct K4MinusExtStep {
    int v1 = -1, v2 = -1;
};
struct GenVertexSplitStep {
    int v = -1;
    std::vector<int> n1; // sorted
    int x = -1;
};
struct Join1Step {
    int a1 = -1, b1 = -1;
    Graph other;                // the second operand g2
    std::array<int, 4> quad2{}; // a2, b2, c2, d2 in `other`
};
struct Join2Step {
    std::array<int, 4> quad1{};
    Graph other;
    std::array<int, 4> quad2{};
};
struct Join3Step {
    int v1 = -1;
    std::array<int, 3> nbr1{};
    Graph other;
    int v2 = -1;
    std::array<int, 3> nbr2{};
};

using Step = std::variant<ZeroExtStep, OneExtStep, K4MinusExtStep,
                          GenVertexSplitStep, Join1Step, Join2Step, Join3Step>;

StepKind step_kind(const Step& s);
std::string_view step_kind_name(StepKind k);
std::optional<StepKind> step_kind_from_name(std::string_view name);

// Apply one forward step; deterministic labelling as documented above.
Graph apply_step(const Graph& g, const Step& s);

struct ConstructionTrace {
    std::string base;        // base_graph name
    std::vector<Step> steps; // parameters in replay-graph labels
    // Maps each vertex of replay(*this) to the corresponding vertex of the
    // graph the trace was derived from (identity for forward constructions).
    std::vector<int> vertex_map;
};

// Rebuild the graph a trace describes; optionally collect every intermediate
// graph (base first, final result last).
Graph replay(const ConstructionTrace& t,
             std::vector<Graph>* intermediates = nullptr);

// ---------------------------------------------------------------------------
// Inverse operations and reduction search
// ---------------------------------------------------------------------------

struct OneReductionCandidate {
    Graph graph;                 // g - v + added, compactly relabelled
    Edge added;                  // the new edge, in new labels
    std::vector<int> vertex_map; // old -> new; vertex_map[v] = -1
    bool circuit = false;
};

// All 1-reduction candidates at a degree-3 vertex v, one per non-edge between
// neighbours of v, in lexicographic pair order.  v is admissible iff some
// candidate has circuit == true.
std::vector<OneReductionCandidate> one_reduction(const Graph& g, int v);

struct EdgeReductionResult {
    bool parallel = false; // contraction of f would create a parallel pair
    Graph graph;           // meaningful only when !parallel (pairs collapsed)
    std::vector<int> vertex_map; // old -> new; f's endpoints merge
    bool circuit = false;        // is_circuit(graph); false when parallel
};

// Delete e, then contract the adjacent edge f (e and f share exactly one
// endpoint).  Inverse of generalized_vertex_split.
EdgeReductionResult edge_reduction(const Graph& g, Edge e, Edge f);

struct Reduction {
    // Rebuilds the input from `reduced`; parameters in `reduced` labels.
    Step forward;
    Graph reduced;
    std::vector<int> down_map; // input vertex -> reduced vertex (-1 if gone)
    // For each vertex the forward step creates, in creation order, the input
    // vertex it stands for.  For GenVertexSplit the two entries are the input
    // vertices realising v1 and v2.
    std::vector<int> created;
};

// Thrown when find_reduction finds no circuit-preserving reduction; carries
// the graph so callers can surface it (reaching this contradicts the
// reduction theorem and indicates a library bug).
class ReductionStuck : public std::logic_error {
public:
    explicit ReductionStuck(Graph g);
    Graph graph;
};

// Deterministic reduction search on a circuit that is not (isomorphic to)
// K5-e or H1.  Tries, in order: (a) K4^- reductions over vertex pairs
// (adjacent degree-3 vertices u1, u2 with two common neighbours v1, v2 and
// v1v2 a non-edge: delete u1, u2, add v1v2); (b) admissible 1-reductions over
// vertices; (c) admissible edge-reductions over ordered edge pairs (e, f).
// Returns the first candidate whose result is again a circuit; throws
// ReductionStuck if none exists (surfaced loudly).
Reduction find_reduction(const Graph& g);

// Iterate find_reduction until the graph matches K5-e or H1 up to
// isomorphism, then return the forward trace: replay(trace) rebuilds a graph
// isomorphic to g and trace.vertex_map carries the isomorphism onto g.
ConstructionTrace reduce_to_base(const Graph& g);

struct RandomCircuit {
    Graph graph;
    ConstructionTrace trace; // identity vertex_map
};

// Seeded construction of an n-vertex circuit (n >= 5): start from K5-e or H1
// and grow by random k4minus_extension / generalized_vertex_split steps,
// rejecting splits whose verdict is false.
RandomCircuit random_circuit(int n, Rng& rng);

} // namespace cylrig
