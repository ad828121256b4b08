#include "cylrig/sparsity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace cylrig {

PebbleGame::PebbleGame(int n, bool simple_restriction)
    : n_(n), simple_restriction_(simple_restriction), pebbles_(n, 2), out_(n) {}

int PebbleGame::total_pebbles() const {
    int t = 0;
    for (int p : pebbles_) t += p;
    return t;
}

// DFS from src along directed edges for a vertex outside {u, v} holding a
// pebble; on success the path is reversed and the pebble moves to src.
bool PebbleGame::gather(int src, int u, int v) {
    std::vector<int> parent(n_, -2);
    parent[src] = -1;
    std::vector<int> stack{src};
    while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        for (int x : out_[w]) {
            if (parent[x] != -2) continue;
            parent[x] = w;
            if (x != u && x != v && pebbles_[x] > 0) {
                // reverse the path src -> ... -> x
                int cur = x;
                while (parent[cur] >= 0) {
                    int pred = parent[cur];
                    auto& po = out_[pred];
                    po.erase(std::find(po.begin(), po.end(), cur));
                    out_[cur].push_back(pred);
                    cur = pred;
                }
                --pebbles_[x];
                ++pebbles_[src];
                return true;
            }
            stack.push_back(x);
        }
    }
    return false;
}

bool PebbleGame::offer(int u, int v) {
    if (u == v) throw std::invalid_argument("pebble game: loop edge");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("pebble game: vertex out of range");
    if (simple_restriction_) {
        Edge e = make_edge(u, v);
        if (std::find(accepted_.begin(), accepted_.end(), e) != accepted_.end())
            return false; // parallel copy of an accepted edge
    }
    while (pebbles_[u] + pebbles_[v] < 3) {
        if (!gather(u, u, v) && !gather(v, u, v)) return false;
    }
    int tail = pebbles_[u] > 0 ? u : v;
    int head = tail == u ? v : u;
    --pebbles_[tail];
    out_[tail].push_back(head);
    accepted_.push_back(make_edge(u, v));
    return true;
}

int rank22(const Graph& g) { return rank22(MultiGraph(g), true); }

int rank22(const MultiGraph& g, bool simple_restriction) {
    std::vector<Edge> basis;
    return rank22_with_basis(g, simple_restriction, basis);
}

int rank22_with_basis(const MultiGraph& g, bool simple_restriction,
                      std::vector<Edge>& basis) {
    PebbleGame game(g.n, simple_restriction);
    for (const auto& [u, v] : g.edges) game.offer(u, v);
    basis = game.accepted();
    return static_cast<int>(basis.size());
}

namespace {

int rank_of_edges(int n, const std::vector<Edge>& edges) {
    PebbleGame game(n, true);
    int r = 0;
    for (const auto& [u, v] : edges) r += game.offer(u, v) ? 1 : 0;
    return r;
}

} // namespace

bool is_circuit(const Graph& g, CircuitWitness* witness) {
    const int m = g.m();
    if (m != 2 * g.n - 1) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 0) return false;
    if (rank22(g) != m - 1) return false; // dependent, corank exactly 1
    for (int i = 0; i < m; ++i) {
        std::vector<Edge> rest;
        rest.reserve(m - 1);
        for (int j = 0; j < m; ++j)
            if (j != i) rest.push_back(g.edges[j]);
        if (rank_of_edges(g.n, rest) != m - 1) return false;
    }
    if (witness) {
        witness->edges = g.edges;
        witness->vertex_support.clear();
        for (int v = 0; v < g.n; ++v) witness->vertex_support.push_back(v);
    }
    return true;
}

bool is_rigid_comb(const Graph& g) {
    if (g.n <= 3) return is_complete(g);
    return rank22(g) == 2 * g.n - 2;
}

bool is_redundantly_rigid(const Graph& g) {
    for (const auto& e : g.edges)
        if (!is_rigid_comb(delete_edge(g, e))) return false;
    return true;
}

bool edge_in_circuit(const Graph& g, Edge e) {
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
        throw std::invalid_argument("edge_in_circuit: edge not present");
    std::vector<Edge> rest;
    for (const auto& f : g.edges)
        if (f != e) rest.push_back(f);
    return rank_of_edges(g.n, rest) == rank22(g);
}

bool vertex_in_circuit(const Graph& g, int v) {
    if (v < 0 || v >= g.n)
        throw std::invalid_argument("vertex_in_circuit: vertex out of range");
    for (const auto& e : g.edges)
        if ((e.first == v || e.second == v) && edge_in_circuit(g, e)) return true;
    return false;
}

std::vector<Edge> fundamental_circuit(const Graph& g, Edge e) {
    e = make_edge(e.first, e.second);
    if (!edge_in_circuit(g, e))
        throw std::invalid_argument("fundamental_circuit: edge lies in no circuit");
    std::vector<Edge> rest;
    for (const auto& f : g.edges)
        if (f != e) rest.push_back(f);
    PebbleGame game(g.n, true);
    std::vector<Edge> base;
    for (const auto& [u, v] : rest)
        if (game.offer(u, v)) base.push_back(make_edge(u, v));
    // e depends on base; C(e, base) = {e} + {f in base : base - f + e indep}
    std::vector<Edge> circuit{e};
    for (const auto& f : base) {
        std::vector<Edge> trial;
        for (const auto& x : base)
            if (x != f) trial.push_back(x);
        trial.push_back(e);
        if (rank_of_edges(g.n, trial) == static_cast<int>(base.size()))
            circuit.push_back(f);
    }
    std::sort(circuit.begin(), circuit.end());
    return circuit;
}

bool is_matroid_connected(const Graph& g) {
    return is_2connected(g) && is_redundantly_rigid(g);
}

std::vector<std::vector<Edge>> all_circuits(const Graph& g, int edge_cap) {
    const int m = g.m();
    if (m > edge_cap)
        throw std::invalid_argument("all_circuits: graph exceeds edge cap " +
                                    std::to_string(edge_cap));
    if (g.n > 64)
        throw std::invalid_argument("all_circuits: more than 64 vertices");
    // Per-edge vertex masks for fast support computation.
    std::vector<std::uint64_t> vmask(m);
    for (int i = 0; i < m; ++i)
        vmask[i] = (1ull << g.edges[i].first) | (1ull << g.edges[i].second);
    std::vector<std::vector<Edge>> found;
    for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
        int count = std::popcount(mask);
        if ((count & 1) == 0 || count < 3) continue; // |C| = 2|V(C)| - 1 is odd
        std::uint64_t support = 0;
        for (std::uint64_t rest = mask; rest;) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            support |= vmask[i];
        }
        if (count != 2 * std::popcount(support) - 1) continue;
        std::vector<Edge> cand;
        for (std::uint64_t rest = mask; rest;) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            cand.push_back(g.edges[i]);
        }
        // min degree 2 in any circuit: a lone edge at a vertex would make a
        // strictly smaller violating subset, contradicting minimality
        bool deg_ok = true;
        for (std::uint64_t sup = support; sup;) {
            int v = std::countr_zero(sup);
            sup &= sup - 1;
            int deg = 0;
            for (const auto& [a, b] : cand) deg += (a == v) + (b == v);
            if (deg < 2) {
                deg_ok = false;
                break;
            }
        }
        if (!deg_ok) continue;
        if (rank_of_edges(g.n, cand) != count - 1) continue;
        bool minimal = true;
        for (int skip = 0; skip < count && minimal; ++skip) {
            std::vector<Edge> rest;
            for (int j = 0; j < count; ++j)
                if (j != skip) rest.push_back(cand[j]);
            minimal = rank_of_edges(g.n, rest) == count - 1;
        }
        if (minimal) found.push_back(std::move(cand));
    }
    std::sort(found.begin(), found.end());
    return found;
}

EarDecomposition ear_decomposition(const Graph& g, int edge_cap) {
    if (!is_matroid_connected(g))
        throw std::invalid_argument("ear_decomposition: matroid not connected");
    auto circuits = all_circuits(g, edge_cap);
    if (circuits.empty())
        throw std::logic_error("ear_decomposition: no circuits found");
    auto size_lex_less = [](const std::vector<Edge>& a,
                            const std::vector<Edge>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    };
    EarDecomposition dec;
    std::vector<Edge> covered;
    auto absorb = [&](const std::vector<Edge>& c) {
        for (const auto& e : c)
            if (!std::binary_search(covered.begin(), covered.end(), e))
                covered.insert(
                    std::upper_bound(covered.begin(), covered.end(), e), e);
    };
    const std::vector<Edge>* first =
        &*std::min_element(circuits.begin(), circuits.end(), size_lex_less);
    dec.ears.push_back(*first);
    absorb(*first);
    while (covered.size() < g.edges.size()) {
        const std::vector<Edge>* best = nullptr;
        std::vector<Edge> best_new;
        for (const auto& c : circuits) {
            std::vector<Edge> fresh, overlap;
            for (const auto& e : c) {
                if (std::binary_search(covered.begin(), covered.end(), e))
                    overlap.push_back(e);
                else
                    fresh.push_back(e);
            }
            if (overlap.empty() || fresh.empty()) continue;
            if (!best || fresh.size() < best_new.size() ||
                (fresh.size() == best_new.size() && c < *best)) {
                best = &c;
                best_new = fresh;
            }
        }
        if (!best)
            throw std::logic_error(
                "ear_decomposition: uncovered edges but no admissible ear");
        dec.ears.push_back(*best);
        absorb(*best);
    }
    return dec;
}

} // namespace cylrig
