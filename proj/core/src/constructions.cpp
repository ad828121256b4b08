#include "cylrig/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "cylrig/sparsity.hpp"

namespace cylrig {

namespace {

void check_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.n)
        throw std::invalid_argument(std::string(what) + ": vertex " +
                                    std::to_string(v) + " out of range");
}

void check_edge_present(const Graph& g, Edge e, const char* what) {
    check_vertex(g, e.first, what);
    check_vertex(g, e.second, what);
    if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument(std::string(what) + ": edge (" +
                                    std::to_string(e.first) + "," +
                                    std::to_string(e.second) + ") absent");
}

// The designated K4 of a join operand: all six edges among quad = {a,b,c,d}
// present and c, d of degree exactly 3 (no edges leaving the K4).
void check_join_k4(const Graph& g, const std::array<int, 4>& quad,
                   const char* what) {
    for (int v : quad) check_vertex(g, v, what);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (quad[i] == quad[j])
                throw std::invalid_argument(std::string(what) +
                                            ": repeated attachment vertex");
            if (!g.has_edge(quad[i], quad[j]))
                throw std::invalid_argument(std::string(what) +
                                            ": attachment is not a K4");
        }
    if (g.degree(quad[2]) != 3 || g.degree(quad[3]) != 3)
        throw std::invalid_argument(std::string(what) +
                                    ": c/d attachment vertices must have degree 3");
}

} // namespace

Graph base_graph(const std::string& name) {
    if (name == "K5-e")
        return Graph(5, {{0, 1},
                         {0, 2},
                         {0, 3},
                         {0, 4},
                         {1, 2},
                         {1, 3},
                         {1, 4},
                         {2, 3},
                         {3, 4}});
    if (name == "H1")
        return Graph(6, {{0, 1},
                         {0, 2},
                         {0, 3},
                         {0, 4},
                         {0, 5},
                         {1, 2},
                         {1, 3},
                         {2, 3},
                         {3, 4},
                         {3, 5},
                         {4, 5}});
    if (name == "H2")
        return Graph(7, {{0, 1},
                         {0, 2},
                         {0, 3},
                         {0, 6},
                         {1, 2},
                         {1, 3},
                         {2, 3},
                         {3, 4},
                         {3, 5},
                         {3, 6},
                         {4, 5},
                         {4, 6},
                         {5, 6}});
    if (name == "K4") return complete_graph(4);
    throw std::invalid_argument("base_graph: unknown name \"" + name + "\"");
}

// ---------------------------------------------------------------------------
// Forward operations
// ---------------------------------------------------------------------------

Graph zero_extension(const Graph& g, int u, int w) {
    check_vertex(g, u, "zero_extension");
    check_vertex(g, w, "zero_extension");
    if (u == w)
        throw std::invalid_argument("zero_extension: attachment vertices equal");
    auto edges = g.edges;
    edges.push_back(make_edge(u, g.n));
    edges.push_back(make_edge(w, g.n));
    return Graph(g.n + 1, std::move(edges));
}

Graph one_extension(const Graph& g, Edge xy, int z) {
    xy = make_edge(xy.first, xy.second);
    check_edge_present(g, xy, "one_extension");
    check_vertex(g, z, "one_extension");
    if (z == xy.first || z == xy.second)
        throw std::invalid_argument(
            "one_extension: z must differ from the edge endpoints");
    std::vector<Edge> edges;
    edges.reserve(g.edges.size() + 2);
    for (Edge e : g.edges)
        if (e != xy) edges.push_back(e);
    edges.push_back(make_edge(xy.first, g.n));
    edges.push_back(make_edge(xy.second, g.n));
    edges.push_back(make_edge(z, g.n));
    return Graph(g.n + 1, std::move(edges));
}

Graph k4minus_extension(const Graph& g, Edge v1v2) {
    v1v2 = make_edge(v1v2.first, v1v2.second);
    check_edge_present(g, v1v2, "k4minus_extension");
    const int u1 = g.n, u2 = g.n + 1;
    std::vector<Edge> edges;
    edges.reserve(g.edges.size() + 4);
    for (Edge e : g.edges)
        if (e != v1v2) edges.push_back(e);
    edges.push_back(make_edge(v1v2.first, u1));
    edges.push_back(make_edge(v1v2.second, u1));
    edges.push_back(make_edge(v1v2.first, u2));
    edges.push_back(make_edge(v1v2.second, u2));
    edges.push_back(make_edge(u1, u2));
    return Graph(g.n + 2, std::move(edges));
}

SplitResult generalized_vertex_split(const Graph& g, int v, std::vector<int> n1,
                                     int x) {
    check_vertex(g, v, "generalized_vertex_split");
    check_vertex(g, x, "generalized_vertex_split");
    if (x == v)
        throw std::invalid_argument("generalized_vertex_split: x equals v");
    std::sort(n1.begin(), n1.end());
    if (std::adjacent_find(n1.begin(), n1.end()) != n1.end())
        throw std::invalid_argument("generalized_vertex_split: N1 has repeats");
    const auto nbrs = g.neighbors(v);
    for (int u : n1)
        if (!std::binary_search(nbrs.begin(), nbrs.end(), u))
            throw std::invalid_argument(
                "generalized_vertex_split: N1 must consist of neighbours of v");
    if (std::binary_search(n1.begin(), n1.end(), x))
        throw std::invalid_argument(
            "generalized_vertex_split: x in N1 would duplicate the edge v1x");

    const int v2 = g.n;
    std::vector<Edge> edges;
    edges.reserve(g.edges.size() + 2);
    for (Edge e : g.edges)
        if (e.first != v && e.second != v) edges.push_back(e);
    for (int u : n1) edges.push_back(make_edge(v, u)); // v1 keeps index v
    edges.push_back(make_edge(v, x));
    edges.push_back(make_edge(v, v2));
    for (int w : nbrs)
        if (!std::binary_search(n1.begin(), n1.end(), w))
            edges.push_back(make_edge(v2, w)); // N2 moves to v2
    SplitResult out{Graph(g.n + 1, std::move(edges)), false};
    out.circuit = is_circuit(out.graph);
    return out;
}

JoinResult join1(const Graph& g1, Edge a1b1, const Graph& g2,
                 const std::array<int, 4>& quad2) {
    a1b1 = make_edge(a1b1.first, a1b1.second);
    check_edge_present(g1, a1b1, "join1");
    check_join_k4(g2, quad2, "join1");
    const auto [a2, b2, c2, d2] = quad2;

    JoinResult out;
    out.map1.resize(g1.n);
    for (int v = 0; v < g1.n; ++v) out.map1[v] = v;
    out.map2.assign(g2.n, -1);
    out.map2[a2] = a1b1.first;
    out.map2[b2] = a1b1.second;
    int next = g1.n;
    for (int v = 0; v < g2.n; ++v)
        if (v != a2 && v != b2 && v != c2 && v != d2) out.map2[v] = next++;

    std::vector<Edge> edges;
    edges.reserve(g1.edges.size() + g2.edges.size());
    for (Edge e : g1.edges)
        if (e != a1b1) edges.push_back(e);
    const Edge a2b2 = make_edge(a2, b2);
    for (Edge e : g2.edges) {
        if (e == a2b2) continue;
        if (e.first == c2 || e.second == c2 || e.first == d2 || e.second == d2)
            continue;
        edges.push_back(make_edge(out.map2[e.first], out.map2[e.second]));
    }
    out.graph = Graph(next, std::move(edges));
    return out;
}

JoinResult join2(const Graph& g1, const std::array<int, 4>& quad1,
                 const Graph& g2, const std::array<int, 4>& quad2) {
    check_join_k4(g1, quad1, "join2");
    check_join_k4(g2, quad2, "join2");
    const auto [a1, b1, c1, d1] = quad1;
    const auto [a2, b2, c2, d2] = quad2;

    JoinResult out;
    out.map1.assign(g1.n, -1);
    int next = 0;
    for (int v = 0; v < g1.n; ++v)
        if (v != c1 && v != d1) out.map1[v] = next++;
    out.map2.assign(g2.n, -1);
    out.map2[a2] = out.map1[a1];
    out.map2[b2] = out.map1[b1];
    for (int v = 0; v < g2.n; ++v)
        if (v != a2 && v != b2 && v != c2 && v != d2) out.map2[v] = next++;

    std::vector<Edge> edges;
    edges.reserve(g1.edges.size() + g2.edges.size());
    for (Edge e : g1.edges) {
        if (e.first == c1 || e.second == c1 || e.first == d1 || e.second == d1)
            continue;
        edges.push_back(make_edge(out.map1[e.first], out.map1[e.second]));
    }
    const Edge a2b2 = make_edge(a2, b2); // its copy a1b1 is already present
    for (Edge e : g2.edges) {
        if (e == a2b2) continue;
        if (e.first == c2 || e.second == c2 || e.first == d2 || e.second == d2)
            continue;
        edges.push_back(make_edge(out.map2[e.first], out.map2[e.second]));
    }
    out.graph = Graph(next, std::move(edges));
    return out;
}

JoinResult join3(const Graph& g1, int v1, const std::array<int, 3>& nbr1,
                 const Graph& g2, int v2, const std::array<int, 3>& nbr2) {
    check_vertex(g1, v1, "join3");
    check_vertex(g2, v2, "join3");
    if (g1.degree(v1) != 3 || g2.degree(v2) != 3)
        throw std::invalid_argument("join3: designated vertices must have degree 3");
    auto check_nbrs = [](const Graph& g, int v, const std::array<int, 3>& nbr) {
        std::vector<int> got(nbr.begin(), nbr.end());
        std::sort(got.begin(), got.end());
        if (got != g.neighbors(v))
            throw std::invalid_argument(
                "join3: neighbour list does not match N(v)");
    };
    check_nbrs(g1, v1, nbr1);
    check_nbrs(g2, v2, nbr2);

    JoinResult out;
    out.map1.assign(g1.n, -1);
    int next = 0;
    for (int v = 0; v < g1.n; ++v)
        if (v != v1) out.map1[v] = next++;
    out.map2.assign(g2.n, -1);
    for (int v = 0; v < g2.n; ++v)
        if (v != v2) out.map2[v] = next++;

    std::vector<Edge> edges;
    edges.reserve(g1.edges.size() + g2.edges.size());
    for (Edge e : g1.edges)
        if (e.first != v1 && e.second != v1)
            edges.push_back(make_edge(out.map1[e.first], out.map1[e.second]));
    for (Edge e : g2.edges)
        if (e.first != v2 && e.second != v2)
            edges.push_back(make_edge(out.map2[e.first], out.map2[e.second]));
    for (int k = 0; k < 3; ++k)
        edges.push_back(make_edge(out.map1[nbr1[k]], out.map2[nbr2[k]]));
    out.graph = Graph(next, std::move(edges));
    return out;
}

// ---------------------------------------------------------------------------
// Steps and replay
// ---------------------------------------------------------------------------

StepKind step_kind(const Step& s) {
    static_assert(std::is_same_v<std::variant_alternative_t<0, Step>, ZeroExtStep>);
    static_assert(std::is_same_v<std::variant_alternative_t<3, Step>, GenVertexSplitStep>);
    static_assert(std::is_same_v<std::variant_alternative_t<6, Step>, Join3Step>);
    return static_cast<StepKind>(s.index());
}

std::string_view step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::ZeroExt: return "ZeroExt";
        case StepKind::OneExt: return "OneExt";
        case StepKind::K4MinusExt: return "K4MinusExt";
        case StepKind::GenVertexSplit: return "GenVertexSplit";
        case StepKind::Join1: return "Join1";
        case StepKind::Join2: return "Join2";
        case StepKind::Join3: return "Join3";
    }
    throw std::logic_error("step_kind_name: bad kind");
}

std::optional<StepKind> step_kind_from_name(std::string_view name) {
    for (int k = 0; k <= static_cast<int>(StepKind::Join3); ++k)
        if (step_kind_name(static_cast<StepKind>(k)) == name)
            return static_cast<StepKind>(k);
    return std::nullopt;
}

Graph apply_step(const Graph& g, const Step& s) {
    return std::visit(
        [&](const auto& st) -> Graph {
            using T = std::decay_t<decltype(st)>;
            if constexpr (std::is_same_v<T, ZeroExtStep>)
                return zero_extension(g, st.u, st.w);
            else if constexpr (std::is_same_v<T, OneExtStep>)
                return one_extension(g, make_edge(st.x, st.y), st.z);
            else if constexpr (std::is_same_v<T, K4MinusExtStep>)
                return k4minus_extension(g, make_edge(st.v1, st.v2));
            else if constexpr (std::is_same_v<T, GenVertexSplitStep>)
                return generalized_vertex_split(g, st.v, st.n1, st.x).graph;
            else if constexpr (std::is_same_v<T, Join1Step>)
                return join1(g, make_edge(st.a1, st.b1), st.other, st.quad2)
                    .graph;
            else if constexpr (std::is_same_v<T, Join2Step>)
                return join2(g, st.quad1, st.other, st.quad2).graph;
            else
                return join3(g, st.v1, st.nbr1, st.other, st.v2, st.nbr2).graph;
        },
        s);
}

Graph replay(const ConstructionTrace& t, std::vector<Graph>* intermediates) {
    Graph h = base_graph(t.base);
    if (intermediates) {
        intermediates->clear();
        intermediates->push_back(h);
    }
    for (const Step& s : t.steps) {
        h = apply_step(h, s);
        if (intermediates) intermediates->push_back(h);
    }
    return h;
}

// ---------------------------------------------------------------------------
// Inverse operations
// ---------------------------------------------------------------------------

std::vector<OneReductionCandidate> one_reduction(const Graph& g, int v) {
    check_vertex(g, v, "one_reduction");
    if (g.degree(v) != 3)
        throw std::invalid_argument("one_reduction: vertex degree is not 3");
    const auto nbrs = g.neighbors(v); // sorted
    std::vector<OneReductionCandidate> out;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (g.has_edge(nbrs[i], nbrs[j])) continue;
            auto del = delete_vertices(g, {v});
            OneReductionCandidate cand;
            cand.added =
                make_edge(del.vertex_map[nbrs[i]], del.vertex_map[nbrs[j]]);
            cand.graph = add_edge(del.graph, cand.added);
            cand.vertex_map = std::move(del.vertex_map);
            cand.circuit = is_circuit(cand.graph);
            out.push_back(std::move(cand));
        }
    return out;
}

EdgeReductionResult edge_reduction(const Graph& g, Edge e, Edge f) {
    e = make_edge(e.first, e.second);
    f = make_edge(f.first, f.second);
    check_edge_present(g, e, "edge_reduction");
    check_edge_present(g, f, "edge_reduction");
    if (e == f) throw std::invalid_argument("edge_reduction: e equals f");
    int shared = 0;
    for (int a : {e.first, e.second})
        for (int b : {f.first, f.second})
            if (a == b) ++shared;
    if (shared != 1)
        throw std::invalid_argument(
            "edge_reduction: edges must share exactly one endpoint");

    auto contracted = contract_edge(delete_edge(g, e), f);
    EdgeReductionResult out;
    out.parallel = contracted.parallel_arose;
    out.graph = std::move(contracted.simple);
    out.vertex_map = std::move(contracted.vertex_map);
    out.circuit = !out.parallel && is_circuit(out.graph);
    return out;
}

namespace {

bool is_base_circuit(const Graph& g) {
    return is_isomorphic(g, base_graph("K5-e")) ||
           is_isomorphic(g, base_graph("H1"));
}

} // namespace

Reduction find_reduction(const Graph& g) {
    if (!is_circuit(g))
        throw std::invalid_argument("find_reduction: input is not a circuit");
    if (is_base_circuit(g))
        throw std::invalid_argument(
            "find_reduction: input is already a base circuit");

    // (a) K4^- reductions: adjacent degree-3 vertices u1, u2 whose other
    // neighbours coincide in a pair {v1, v2} with v1v2 not an edge.
    for (int u1 = 0; u1 < g.n; ++u1) {
        if (g.degree(u1) != 3) continue;
        for (int u2 = u1 + 1; u2 < g.n; ++u2) {
            if (g.degree(u2) != 3 || !g.has_edge(u1, u2)) continue;
            std::vector<int> commons;
            for (int w : g.neighbors(u1))
                if (w != u2 && g.has_edge(u2, w)) commons.push_back(w);
            if (commons.size() != 2) continue;
            const int v1 = commons[0], v2 = commons[1];
            if (g.has_edge(v1, v2)) continue; // re-adding would be parallel
            auto del = delete_vertices(g, {u1, u2});
            Graph reduced = add_edge(
                del.graph, make_edge(del.vertex_map[v1], del.vertex_map[v2]));
            if (!is_circuit(reduced)) continue;
            Reduction r;
            r.forward =
                K4MinusExtStep{del.vertex_map[v1], del.vertex_map[v2]};
            r.reduced = std::move(reduced);
            r.down_map = std::move(del.vertex_map);
            r.created = {u1, u2};
            return r;
        }
    }

    // (b) admissible 1-reductions.
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) != 3) continue;
        const auto nbrs = g.neighbors(v);
        for (auto& cand : one_reduction(g, v)) {
            if (!cand.circuit) continue;
            int z = -1; // the neighbour not covered by the added edge
            for (int w : nbrs) {
                const int mapped = cand.vertex_map[w];
                if (mapped != cand.added.first && mapped != cand.added.second)
                    z = mapped;
            }
            Reduction r;
            r.forward = OneExtStep{cand.added.first, cand.added.second, z};
            r.reduced = std::move(cand.graph);
            r.down_map = std::move(cand.vertex_map);
            r.created = {v};
            return r;
        }
    }

    // (c) admissible edge-reductions over ordered pairs (delete e, contract f).
    for (Edge e : g.edges)
        for (Edge f : g.edges) {
            if (e == f) continue;
            int c = -1, shared = 0;
            for (int a : {e.first, e.second})
                for (int b : {f.first, f.second})
                    if (a == b) {
                        c = a;
                        ++shared;
                    }
            if (shared != 1) continue;
            auto red = edge_reduction(g, e, f);
            if (red.parallel || !red.circuit) continue;
            const int x0 = e.first == c ? e.second : e.first;
            const int w = f.first == c ? f.second : f.first;
            GenVertexSplitStep step;
            step.v = red.vertex_map[c];
            step.x = red.vertex_map[x0];
            for (int y : g.neighbors(c))
                if (y != x0 && y != w) step.n1.push_back(red.vertex_map[y]);
            std::sort(step.n1.begin(), step.n1.end());
            Reduction r;
            r.forward = std::move(step);
            r.reduced = std::move(red.graph);
            r.down_map = std::move(red.vertex_map);
            r.created = {c, w};
            return r;
        }

    throw ReductionStuck(g);
}

ReductionStuck::ReductionStuck(Graph g)
    : std::logic_error("find_reduction: circuit admits no reduction — this "
                       "contradicts the reduction theorem and indicates a "
                       "library bug"),
      graph(std::move(g)) {}

namespace {

int map_through(const std::vector<int>& m, int v) {
    if (v < 0 || v >= static_cast<int>(m.size()) || m[v] < 0)
        throw std::logic_error("construction trace: broken vertex map");
    return m[v];
}

// Rewrite a reduction's forward step from reduced-graph labels into
// replay-graph labels via to_h (reduced vertex -> replay vertex).
Step translate_step(const Step& s, const std::vector<int>& to_h) {
    if (const auto* one = std::get_if<OneExtStep>(&s))
        return OneExtStep{map_through(to_h, one->x), map_through(to_h, one->y),
                          map_through(to_h, one->z)};
    if (const auto* k4 = std::get_if<K4MinusExtStep>(&s)) {
        const int a = map_through(to_h, k4->v1), b = map_through(to_h, k4->v2);
        return K4MinusExtStep{std::min(a, b), std::max(a, b)};
    }
    if (const auto* sp = std::get_if<GenVertexSplitStep>(&s)) {
        GenVertexSplitStep out;
        out.v = map_through(to_h, sp->v);
        out.x = map_through(to_h, sp->x);
        for (int u : sp->n1) out.n1.push_back(map_through(to_h, u));
        std::sort(out.n1.begin(), out.n1.end());
        return out;
    }
    throw std::logic_error("translate_step: unsupported step kind");
}

} // namespace

ConstructionTrace reduce_to_base(const Graph& g) {
    if (!is_circuit(g))
        throw std::invalid_argument("reduce_to_base: input is not a circuit");

    // Downward phase: record reductions until a base circuit appears.
    std::vector<Reduction> recs;
    Graph cur = g;
    std::string base;
    std::vector<int> mu; // replay vertex -> current-level vertex
    for (;;) {
        bool matched = false;
        for (const char* name : {"K5-e", "H1"}) {
            Graph b = base_graph(name);
            if (is_isomorphic(b, cur, &mu)) {
                base = name;
                matched = true;
                break;
            }
        }
        if (matched) break;
        recs.push_back(find_reduction(cur));
        cur = recs.back().reduced;
    }

    // Upward phase: replay the recorded steps from the base, rewriting each
    // into replay labels and composing the vertex maps level by level.
    ConstructionTrace trace;
    trace.base = base;
    Graph h = base_graph(base);
    for (auto it = recs.rbegin(); it != recs.rend(); ++it) {
        const Reduction& rec = *it;
        std::vector<int> inv_mu(h.n, -1); // reduced vertex -> replay vertex
        for (int i = 0; i < h.n; ++i) inv_mu[mu[i]] = i;
        const Step sh = translate_step(rec.forward, inv_mu);
        const int nh = h.n;
        h = apply_step(h, sh);
        trace.steps.push_back(sh);

        std::vector<int> up(rec.reduced.n, -1); // reduced vertex -> input vertex
        for (int v = 0; v < static_cast<int>(rec.down_map.size()); ++v)
            if (rec.down_map[v] >= 0 && up[rec.down_map[v]] < 0)
                up[rec.down_map[v]] = v;

        std::vector<int> mu2(h.n, -1);
        switch (step_kind(sh)) {
            case StepKind::OneExt:
                for (int i = 0; i < nh; ++i) mu2[i] = map_through(up, mu[i]);
                mu2[nh] = rec.created[0];
                break;
            case StepKind::K4MinusExt:
                for (int i = 0; i < nh; ++i) mu2[i] = map_through(up, mu[i]);
                mu2[nh] = rec.created[0];
                mu2[nh + 1] = rec.created[1];
                break;
            case StepKind::GenVertexSplit: {
                const int hv = std::get<GenVertexSplitStep>(sh).v;
                for (int i = 0; i < nh; ++i)
                    if (i != hv) mu2[i] = map_through(up, mu[i]);
                mu2[hv] = rec.created[0]; // v1's slot: the e-side endpoint
                mu2[nh] = rec.created[1]; // v2: the contracted-away endpoint
                break;
            }
            default:
                throw std::logic_error("reduce_to_base: unexpected step kind");
        }
        mu = std::move(mu2);
    }

    // The composed map must be an exact isomorphism onto the input.
    if (h.n != g.n || h.m() != g.m())
        throw std::logic_error("reduce_to_base: replay size mismatch");
    for (Edge e : h.edges)
        if (!g.has_edge(map_through(mu, e.first), map_through(mu, e.second)))
            throw std::logic_error("reduce_to_base: replay is not isomorphic");

    trace.vertex_map = std::move(mu);
    return trace;
}

RandomCircuit random_circuit(int n, Rng& rng) {
    if (n < 5) throw std::invalid_argument("random_circuit: n must be >= 5");

    ConstructionTrace trace;
    trace.base = (n == 5 || (n >= 7 && rng.next_bool())) ? "K5-e" : "H1";
    Graph h = base_graph(trace.base);

    while (h.n < n) {
        const bool grow_by_two = h.n + 2 <= n && rng.next_bool();
        if (grow_by_two) {
            const Edge e = h.edges[rng.next_below(h.m())];
            h = k4minus_extension(h, e);
            trace.steps.push_back(K4MinusExtStep{e.first, e.second});
            continue;
        }
        bool split_done = false;
        for (int attempt = 0; attempt < 64 && !split_done; ++attempt) {
            const int v = static_cast<int>(rng.next_below(h.n));
            const auto nbrs = h.neighbors(v);
            const auto d = nbrs.size();
            // nonempty proper subset of N(v), so neither side degenerates
            const std::uint64_t mask = 1 + rng.next_below((1ull << d) - 2);
            std::vector<int> n1;
            for (std::size_t i = 0; i < d; ++i)
                if (mask >> i & 1) n1.push_back(nbrs[i]);
            std::vector<int> pool;
            for (int u = 0; u < h.n; ++u)
                if (u != v &&
                    !std::binary_search(n1.begin(), n1.end(), u))
                    pool.push_back(u);
            const int x = pool[rng.next_below(pool.size())];
            auto split = generalized_vertex_split(h, v, n1, x);
            if (!split.circuit) continue;
            h = std::move(split.graph);
            GenVertexSplitStep step;
            step.v = v;
            step.n1 = std::move(n1);
            step.x = x;
            trace.steps.push_back(std::move(step));
            split_done = true;
        }
        if (!split_done) {
            // Guaranteed fallback: |N1| = 1 makes the split a 1-extension,
            // which always preserves the circuit property.
            const int v = static_cast<int>(rng.next_below(h.n));
            const int a = h.neighbors(v).front();
            std::vector<int> pool;
            for (int u = 0; u < h.n; ++u)
                if (u != v && u != a) pool.push_back(u);
            const int x = pool[rng.next_below(pool.size())];
            auto split = generalized_vertex_split(h, v, {a}, x);
            if (!split.circuit)
                throw std::logic_error(
                    "random_circuit: degree-3 split failed to preserve the "
                    "circuit property");
            h = std::move(split.graph);
            trace.steps.push_back(GenVertexSplitStep{v, {a}, x});
        }
    }

    if (!is_circuit(h))
        throw std::logic_error("random_circuit: result is not a circuit");
    trace.vertex_map.resize(h.n);
    for (int i = 0; i < h.n; ++i) trace.vertex_map[i] = i;
    return RandomCircuit{std::move(h), std::move(trace)};
}

} // namespace cylrig
