#include "cylrig/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cylrig {

namespace {

void normalize_edges(std::vector<Edge>& edges) {
    for (auto& e : edges) e = make_edge(e.first, e.second);
    std::sort(edges.begin(), edges.end());
}

void check_edge_range(int n, const std::vector<Edge>& edges) {
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge not allowed");
    }
}

} // namespace

Graph::Graph(int n_, std::vector<Edge> edges_) : n(n_), edges(std::move(edges_)) {
    normalize_edges(edges);
    validate();
}

void Graph::validate() const {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    check_edge_range(n, edges);
    if (!std::is_sorted(edges.begin(), edges.end()))
        throw std::invalid_argument("edge list not sorted");
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge in simple graph");
}

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(edges.begin(), edges.end(), make_edge(u, v));
}

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    return out;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

MultiGraph::MultiGraph(int n_, std::vector<Edge> edges_)
    : n(n_), edges(std::move(edges_)) {
    normalize_edges(edges);
    validate();
}

void MultiGraph::validate() const {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    check_edge_range(n, edges);
    if (!std::is_sorted(edges.begin(), edges.end()))
        throw std::invalid_argument("edge list not sorted");
}

int MultiGraph::multiplicity(int u, int v) const {
    Edge e = make_edge(u, v);
    auto [lo, hi] = std::equal_range(edges.begin(), edges.end(), e);
    return static_cast<int>(hi - lo);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

bool is_complete(const Graph& g) {
    return g.m() == g.n * (g.n - 1) / 2;
}

std::vector<int> connected_component_ids(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    auto adj = g.adjacency();
    int id = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        stack.push_back(s);
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        ++id;
    }
    return comp;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    auto comp = connected_component_ids(g);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool is_2connected(const Graph& g) {
    if (g.n < 3 || !is_connected(g)) return false;
    // Deletion check: small inputs, directness beats lowpoint bookkeeping.
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> keep;
        for (int u = 0; u < g.n; ++u)
            if (u != v) keep.push_back(u);
        if (!is_connected(induced_subgraph(g, keep))) return false;
    }
    return true;
}

int cycle_space_dim(const Graph& g) {
    auto comp = connected_component_ids(g);
    int c = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    return g.m() - g.n + c;
}

ContractionResult contract_edge(const Graph& g, Edge e, bool keep_simple) {
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("contract_edge: edge not present");
    const int keep = e.first, gone = e.second;
    ContractionResult res;
    res.vertex_map.assign(g.n, -1);
    int next = 0;
    for (int v = 0; v < g.n; ++v) {
        if (v == gone) continue;
        res.vertex_map[v] = next++;
    }
    res.vertex_map[gone] = res.vertex_map[keep];
    std::vector<Edge> mapped;
    for (const auto& [u, v] : g.edges) {
        int a = res.vertex_map[u], b = res.vertex_map[v];
        if (a == b) continue; // the contracted edge (and any parallel of it)
        mapped.push_back(make_edge(a, b));
    }
    std::sort(mapped.begin(), mapped.end());
    res.multi = MultiGraph(g.n - 1, mapped);
    std::vector<Edge> dedup = mapped;
    dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
    res.parallel_arose = dedup.size() != mapped.size();
    res.simple = Graph(g.n - 1, std::move(dedup));
    (void)keep_simple; // both views are materialized; the flag names intent
    return res;
}

VertexDeletionResult delete_vertices(const Graph& g, std::vector<int> victims) {
    std::sort(victims.begin(), victims.end());
    victims.erase(std::unique(victims.begin(), victims.end()), victims.end());
    for (int v : victims)
        if (v < 0 || v >= g.n)
            throw std::invalid_argument("delete_vertices: vertex out of range");
    VertexDeletionResult res;
    res.vertex_map.assign(g.n, -1);
    int next = 0;
    size_t vi = 0;
    for (int v = 0; v < g.n; ++v) {
        if (vi < victims.size() && victims[vi] == v) {
            ++vi;
            continue;
        }
        res.vertex_map[v] = next++;
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges) {
        int a = res.vertex_map[u], b = res.vertex_map[v];
        if (a < 0 || b < 0) continue;
        edges.push_back(make_edge(a, b));
    }
    res.graph = Graph(next, std::move(edges));
    return res;
}

Graph delete_edge(const Graph& g, Edge e) {
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("delete_edge: edge not present");
    std::vector<Edge> edges;
    for (const auto& f : g.edges)
        if (f != e) edges.push_back(f);
    return Graph(g.n, std::move(edges));
}

Graph add_edge(const Graph& g, Edge e) {
    e = make_edge(e.first, e.second);
    if (g.has_edge(e.first, e.second))
        throw std::invalid_argument("add_edge: edge already present");
    auto edges = g.edges;
    edges.push_back(e);
    return Graph(g.n, std::move(edges));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                       std::vector<int>* vertex_map) {
    std::vector<int> map(g.n, -1);
    int next = 0;
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted) {
        if (v < 0 || v >= g.n)
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        map[v] = next++;
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges)
        if (map[u] >= 0 && map[v] >= 0)
            edges.push_back(make_edge(map[u], map[v]));
    if (vertex_map) *vertex_map = map;
    return Graph(next, std::move(edges));
}

namespace {

bool induces_k4(const Graph& g, const std::vector<int>& verts) {
    if (verts.size() != 4) return false;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            if (!g.has_edge(verts[i], verts[j])) return false;
    return true;
}

std::vector<Separation> two_vertex_separations(const Graph& g) {
    std::vector<Separation> out;
    for (int x = 0; x < g.n; ++x) {
        for (int y = x + 1; y < g.n; ++y) {
            std::vector<int> rest;
            for (int v = 0; v < g.n; ++v)
                if (v != x && v != y) rest.push_back(v);
            std::vector<int> restmap;
            Graph h = induced_subgraph(g, rest, &restmap);
            auto comp = connected_component_ids(h);
            int ncomp = h.n == 0 ? 0
                                 : *std::max_element(comp.begin(), comp.end()) + 1;
            if (ncomp < 2) continue;
            // Components grouped into two nonempty sides; the component of
            // the smallest remaining vertex is pinned to side 1 so each
            // separation appears exactly once.
            std::vector<std::vector<int>> groups(ncomp);
            for (int v : rest) groups[comp[restmap[v]]].push_back(v);
            for (unsigned mask = 0; mask < (1u << (ncomp - 1)); ++mask) {
                // bit k governs component k+1; component 0 is always side 1
                std::vector<int> v1{x, y}, v2{x, y};
                for (int k = 0; k < ncomp; ++k) {
                    bool side1 = (k == 0) || ((mask >> (k - 1)) & 1u) == 0;
                    auto& side = side1 ? v1 : v2;
                    side.insert(side.end(), groups[k].begin(), groups[k].end());
                }
                if (v2.size() == 2) continue; // all components on side 1
                std::sort(v1.begin(), v1.end());
                std::sort(v2.begin(), v2.end());
                Separation s;
                s.kind = Separation::Kind::TwoVertex;
                s.shared_vertices = {x, y};
                s.side1 = v1;
                s.side2 = v2;
                s.trivial = induces_k4(g, v1) || induces_k4(g, v2);
                out.push_back(std::move(s));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Separation& a, const Separation& b) {
        if (a.shared_vertices != b.shared_vertices)
            return a.shared_vertices < b.shared_vertices;
        return a.side1 < b.side1;
    });
    return out;
}

bool edges_independent(const std::vector<Edge>& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            const auto& [a, b] = s[i];
            const auto& [c, d] = s[j];
            if (a == c || a == d || b == c || b == d) return false;
        }
    return true;
}

std::vector<Separation> three_edge_separations(const Graph& g) {
    std::vector<Separation> out;
    const int m = g.m();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                std::vector<Edge> s{g.edges[i], g.edges[j], g.edges[k]};
                std::vector<Edge> remaining;
                for (int t = 0; t < m; ++t)
                    if (t != i && t != j && t != k)
                        remaining.push_back(g.edges[t]);
                Graph h(g.n, remaining);
                auto comp = connected_component_ids(h);
                int ncomp = g.n == 0
                                ? 0
                                : *std::max_element(comp.begin(), comp.end()) + 1;
                if (ncomp < 2) continue;
                std::vector<std::vector<int>> groups(ncomp);
                for (int v = 0; v < g.n; ++v) groups[comp[v]].push_back(v);
                for (unsigned mask = 0; mask < (1u << (ncomp - 1)); ++mask) {
                    std::vector<int> v1, v2;
                    std::vector<char> side1_of(ncomp, 0);
                    for (int c = 0; c < ncomp; ++c) {
                        bool s1 = (c == 0) || ((mask >> (c - 1)) & 1u) == 0;
                        side1_of[c] = s1;
                        auto& side = s1 ? v1 : v2;
                        side.insert(side.end(), groups[c].begin(), groups[c].end());
                    }
                    if (v1.empty() || v2.empty()) continue;
                    // Every removed edge must cross between the two sides.
                    bool all_cross = true;
                    for (const auto& [a, b] : s) {
                        if (side1_of[comp[a]] == side1_of[comp[b]]) {
                            all_cross = false;
                            break;
                        }
                    }
                    if (!all_cross) continue;
                    std::sort(v1.begin(), v1.end());
                    std::sort(v2.begin(), v2.end());
                    Separation sep;
                    sep.kind = Separation::Kind::ThreeEdge;
                    sep.shared_edges = s;
                    sep.side1 = v1;
                    sep.side2 = v2;
                    sep.trivial = !edges_independent(s);
                    out.push_back(std::move(sep));
                }
            }
    std::sort(out.begin(), out.end(), [](const Separation& a, const Separation& b) {
        if (a.shared_edges != b.shared_edges)
            return a.shared_edges < b.shared_edges;
        return a.side1 < b.side1;
    });
    return out;
}

} // namespace

std::vector<Separation> find_separations(const Graph& g, Separation::Kind kind,
                                         int edge_cap) {
    if (g.m() > edge_cap)
        throw std::invalid_argument("find_separations: graph exceeds edge cap " +
                                    std::to_string(edge_cap));
    return kind == Separation::Kind::TwoVertex ? two_vertex_separations(g)
                                               : three_edge_separations(g);
}

Graph random_graph(int n, int m, Rng& rng) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    if (m < 0 || m > static_cast<int>(all.size()))
        throw std::invalid_argument("random_graph: bad edge count");
    // Partial Fisher-Yates: first m entries become the sample.
    for (int i = 0; i < m; ++i) {
        size_t j = i + rng.next_below(all.size() - i);
        std::swap(all[i], all[j]);
    }
    all.resize(m);
    return Graph(n, std::move(all));
}

std::vector<Edge> canonical_form(const Graph& g, std::vector<int>* perm_out) {
    if (g.n > 9)
        throw std::invalid_argument("canonical_form: exhaustive search capped at 9 vertices");
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Edge> best;
    std::vector<int> best_perm = perm;
    bool first = true;
    std::vector<Edge> cur;
    cur.reserve(g.edges.size());
    do {
        cur.clear();
        for (const auto& [u, v] : g.edges)
            cur.push_back(make_edge(perm[u], perm[v]));
        std::sort(cur.begin(), cur.end());
        if (first || cur < best) {
            best = cur;
            best_perm = perm;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (perm_out) *perm_out = best_perm;
    return best;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.m() != b.m()) return false;
    return canonical_form(a) == canonical_form(b);
}

bool is_isomorphic(const Graph& a, const Graph& b, std::vector<int>* iso) {
    if (a.n != b.n || a.m() != b.m()) return false;
    std::vector<int> pa, pb;
    if (canonical_form(a, &pa) != canonical_form(b, &pb)) return false;
    if (iso) {
        // pa[u] = canonical label of u in a; compose a -> canonical -> b.
        std::vector<int> pb_inv(b.n);
        for (int v = 0; v < b.n; ++v) pb_inv[pb[v]] = v;
        iso->assign(a.n, -1);
        for (int u = 0; u < a.n; ++u) (*iso)[u] = pb_inv[pa[u]];
    }
    return true;
}

} // namespace cylrig
