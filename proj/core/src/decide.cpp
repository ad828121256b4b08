#include "cylrig/decide.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "cylrig/json_io.hpp"
#include "cylrig/matrix.hpp"
#include "cylrig/sparsity.hpp"
#include "cylrig/stress.hpp"

namespace cylrig {

namespace {

using nlohmann::json;

json edge_json(const Edge& e) { return json::array({e.first, e.second}); }

json edges_json(const std::vector<Edge>& es) {
    json out = json::array();
    for (const Edge& e : es) out.push_back(edge_json(e));
    return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// Definitional independence in the simple (2,2) matroid: every vertex subset
// W with |W| >= 2 spans at most 2|W| - 2 of the edges (the |W| = 2 cap of the
// simple matroid is automatic for distinct edges of a simple graph).
bool independent_by_counts(int n, const std::vector<Edge>& f) {
    for (std::uint32_t w = 1; w < (std::uint32_t{1} << n); ++w) {
        const int size = std::popcount(w);
        if (size < 2) continue;
        int inside = 0;
        for (const auto& [u, v] : f)
            if ((w >> u & 1) != 0 && (w >> v & 1) != 0) ++inside;
        if (inside > 2 * size - 2) return false;
    }
    return true;
}

// Certificate re-verification: `basis` really is a maximum independent subset
// of E(g) of the claimed size.  Definitional subset counts up to 12 vertices;
// beyond that a pebble run with the basis offered first (a different
// insertion order than the engine's canonical lexicographic scan).
void verify_rank_witness(const Graph& g, const std::vector<Edge>& basis,
                         int rank) {
    if (static_cast<int>(basis.size()) != rank)
        throw std::logic_error("rank witness: basis size differs from rank");
    for (const Edge& e : basis)
        if (!g.has_edge(e.first, e.second))
            throw std::logic_error("rank witness: basis edge not in the graph");
    std::vector<Edge> sorted = basis;
    std::sort(sorted.begin(), sorted.end());
    auto in_basis = [&](const Edge& e) {
        return std::binary_search(sorted.begin(), sorted.end(), e);
    };
    if (g.n <= 12) {
        if (!independent_by_counts(g.n, basis))
            throw std::logic_error("rank witness: basis violates a subset count");
        for (const Edge& e : g.edges) {
            if (in_basis(e)) continue;
            std::vector<Edge> extended = basis;
            extended.push_back(e);
            if (independent_by_counts(g.n, extended))
                throw std::logic_error("rank witness: basis is not maximal");
        }
    } else {
        PebbleGame game(g.n, true);
        for (const Edge& e : basis)
            if (!game.offer(e.first, e.second))
                throw std::logic_error("rank witness: basis edge rejected");
        for (const Edge& e : g.edges)
            if (!in_basis(e) && game.offer(e.first, e.second))
                throw std::logic_error("rank witness: basis is not maximal");
    }
}

// Definitional reachability, kept local so connectivity certificates are not
// re-verified by the same code that produced them.
bool reaches(const Graph& g, int from, int to, int skip) {
    if (from == to) return true;
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    seen[from] = 1;
    q.push(from);
    const auto adj = g.adjacency();
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int w : adj[u]) {
            if (w == skip || seen[w]) continue;
            if (w == to) return true;
            seen[w] = 1;
            q.push(w);
        }
    }
    return false;
}

// Witness for a failed 2-connectivity test: a vertex pair in different
// components, or a cut vertex.  g is known not 2-connected and not complete
// on <= 4 vertices.
json non_two_connected_witness(const Graph& g) {
    if (!is_connected(g)) {
        const std::vector<int> comp = connected_component_ids(g);
        int a = 0, b = -1;
        for (int v = 1; v < g.n; ++v)
            if (comp[v] != comp[a]) {
                b = v;
                break;
            }
        if (b < 0)
            throw std::logic_error("disconnected graph with one component");
        if (reaches(g, a, b, -1))
            throw std::logic_error("disconnected witness: vertices connected");
        return {{"kind", "disconnected"}, {"vertices", {a, b}}};
    }
    for (int v = 0; v < g.n; ++v) {
        const int start = v == 0 ? 1 : 0;
        bool cuts = false;
        for (int w = 0; w < g.n && !cuts; ++w)
            if (w != v && w != start) cuts = !reaches(g, start, w, v);
        if (cuts) return {{"kind", "cut-vertex"}, {"vertex", v}};
    }
    throw std::logic_error("not 2-connected but no cut vertex found");
}

// Re-verifies a claimed circuit through v: edges of g, support containing v,
// and the edge set itself a circuit -- definitionally (dependent, every
// single-edge deletion independent) when the support is small, by the engine
// otherwise.
void verify_circuit_with_vertex(const Graph& g, const std::vector<Edge>& circ,
                                int v) {
    if (circ.empty()) throw std::logic_error("circuit witness: empty");
    bool touches = false;
    for (const Edge& e : circ) {
        if (!g.has_edge(e.first, e.second))
            throw std::logic_error("circuit witness: edge not in the graph");
        touches = touches || e.first == v || e.second == v;
    }
    if (!touches)
        throw std::logic_error("circuit witness: vertex not in the support");
    std::vector<int> support;
    for (const Edge& e : circ) {
        support.push_back(e.first);
        support.push_back(e.second);
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::vector<int> label(g.n, -1);
    for (std::size_t i = 0; i < support.size(); ++i) label[support[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : circ)
        edges.push_back(make_edge(label[e.first], label[e.second]));
    const int k = static_cast<int>(support.size());
    const Graph sub(k, edges);
    if (k <= 12) {
        if (independent_by_counts(k, sub.edges))
            throw std::logic_error("circuit witness: edge set is independent");
        for (int drop = 0; drop < sub.m(); ++drop) {
            std::vector<Edge> rest = sub.edges;
            rest.erase(rest.begin() + drop);
            if (!independent_by_counts(k, rest))
                throw std::logic_error(
                    "circuit witness: proper subset already dependent");
        }
    } else if (!is_circuit(sub)) {
        throw std::logic_error("circuit witness: not a circuit");
    }
}

// Re-verifies a non-redundant edge by a pebble run with reversed insertion
// order (matroid rank is order-independent, so this guards against
// order-dependent engine bugs).
void verify_non_redundant_edge(const Graph& g, const Edge& e) {
    const Graph h = delete_edge(g, e);
    PebbleGame game(h.n, true);
    int rank = 0;
    for (auto it = h.edges.rbegin(); it != h.edges.rend(); ++it)
        rank += game.offer(it->first, it->second) ? 1 : 0;
    if (rank == 2 * g.n - 2)
        throw std::logic_error("non-redundant edge witness: deletion stays rigid");
}

} // namespace

Verdict rigid(const Graph& g) {
    Verdict out;
    out.theorem = "1.1";
    if (g.n <= 3 && is_complete(g)) {
        out.answer = true;
        out.certificate = {{"kind", "complete-small-graph"}, {"n", g.n}};
        return out;
    }
    std::vector<Edge> basis;
    const int rank = rank22_with_basis(MultiGraph(g), true, basis);
    verify_rank_witness(g, basis, rank);
    out.answer = rank == 2 * g.n - 2;
    out.certificate = {{"kind", "rank-witness"},
                       {"rank", rank},
                       {"required", 2 * g.n - 2},
                       {"basis", edges_json(basis)}};
    return out;
}

Verdict globally_rigid(const Graph& g) {
    Verdict out;
    out.theorem = "1.2";
    if (g.n <= 4 && is_complete(g)) {
        out.answer = true;
        out.certificate = {{"kind", "complete-small-graph"}, {"n", g.n}};
        return out;
    }
    if (!is_2connected(g)) {
        out.answer = false;
        out.certificate = non_two_connected_witness(g);
        return out;
    }
    const Verdict r = rigid(g);
    if (!r.answer) {
        out.answer = false;
        out.certificate = r.certificate; // rank below 2n-2, already re-verified
        return out;
    }
    for (const Edge& e : g.edges) {
        if (rank22(delete_edge(g, e)) != 2 * g.n - 2) {
            verify_non_redundant_edge(g, e);
            out.answer = false;
            out.certificate = {{"kind", "non-redundant-edge"},
                               {"edge", edge_json(e)}};
            return out;
        }
    }
    out.answer = true;
    out.certificate = r.certificate;
    return out;
}

Verdict vfree_rigid(const Graph& g, int v) {
    if (v < 0 || v >= g.n)
        throw std::invalid_argument("vfree_rigid: vertex out of range");
    Verdict out;
    out.theorem = "6.5";
    const Verdict r = rigid(g);
    if (!r.answer) {
        out.answer = false;
        out.certificate = r.certificate;
        return out;
    }
    std::vector<Edge> circ;
    for (int w : g.neighbors(v)) {
        const Edge e = make_edge(v, w);
        if (edge_in_circuit(g, e)) {
            circ = fundamental_circuit(g, e);
            break;
        }
    }
    if (circ.empty()) {
        out.answer = false;
        out.certificate = {{"kind", "none"},
                           {"vertex", v},
                           {"detail", "no incident edge lies in a circuit"}};
        return out;
    }
    verify_circuit_with_vertex(g, circ, v);
    out.answer = true;
    out.certificate = {{"kind", "circuit-containing-vertex"},
                       {"vertex", v},
                       {"circuit", edges_json(circ)}};
    return out;
}

VrVerdicts vr_deciders(const Graph& g) {
    const bool conn = is_connected(g);
    const int dim = cycle_space_dim(g);
    const bool two = is_2connected(g);
    VrVerdicts out;

    out.minimally_rigid.theorem = "7.1";
    out.minimally_rigid.answer = conn && dim == 1;
    out.minimally_rigid.certificate = {{"kind", "none"},
                                       {"connected", conn},
                                       {"cycle_space_dim", dim}};

    out.rigid.theorem = "7.1";
    out.rigid.answer = conn && g.m() >= g.n;
    out.rigid.certificate = {{"kind", "none"},
                             {"connected", conn},
                             {"edges", g.m()},
                             {"vertices", g.n},
                             {"derived_rule", true}};

    out.globally_rigid.theorem = "7.5";
    out.globally_rigid.answer = two && g.m() >= g.n + 1;
    if (!two && !(g.n <= 2)) {
        out.globally_rigid.certificate = non_two_connected_witness(g);
    } else {
        out.globally_rigid.certificate = {{"kind", "none"},
                                          {"two_connected", two},
                                          {"edges", g.m()},
                                          {"vertices", g.n}};
    }
    return out;
}

Verdict stress_certificate(const Graph& g, Rng& rng, int bits) {
    Verdict out;
    out.theorem = "8.2";
    out.answer = false;
    const int n = g.n;
    const int m = g.m();
    if (n < 3) {
        out.certificate = {{"kind", "none"},
                           {"detail", "graph too small for a stress matrix"}};
        return out;
    }
    const Framework<Rat> f = random_framework(g, rng, bits);
    const std::vector<std::vector<Rat>> coker =
        left_nullspace(rigidity_matrix(f));
    const int dim = static_cast<int>(coker.size());
    if (dim == 0) {
        out.certificate = {
            {"kind", "none"},
            {"detail", "trivial cokernel: no nonzero equilibrium stress"}};
        return out;
    }
    const int target = 3 * n - 6;

    // Splits a cokernel vector into (omega, lambda), normalises the leading
    // nonzero omega to 1, and keeps it when the stress matrix reaches the
    // maximum rank.  The certificate is rebuilt from its own serialised form
    // before being accepted.
    auto try_stress = [&](const std::vector<Rat>& c) {
        int lead = -1;
        for (int i = 0; i < m; ++i)
            if (sign(c[i]) != 0) {
                lead = i;
                break;
            }
        if (lead < 0) return false; // an all-zero omega forces lambda = 0
        Stress<Rat> s;
        s.omega.assign(c.begin(), c.begin() + m);
        s.lambda.assign(c.begin() + m, c.end());
        const Rat scale = Rat(1) / s.omega[lead];
        for (Rat& w : s.omega) w *= scale;
        for (Rat& l : s.lambda) l *= scale;
        if (!verify_stress(f, s))
            throw std::logic_error("cokernel vector fails the stress equations");
        const auto rep = stress_matrix_rank(f, s);
        if (rep.rank_total != target) return false;
        out.answer = true;
        out.certificate = {{"kind", "stress-with-rank"},
                           {"framework", framework_to_json(f)},
                           {"stress", stress_to_json(s)},
                           {"rank_stress_matrix", rep.rank_total},
                           {"max_rank", target},
                           {"rank_omega", rep.rank_omega},
                           {"rank_omega_lambda", rep.rank_omega_lambda},
                           {"cokernel_dimension", dim}};
        const Framework<Quad> f2 = framework_from_json(out.certificate["framework"]);
        const Stress<Quad> s2 = stress_from_json(out.certificate["stress"]);
        if (!verify_stress(f2, s2))
            throw std::logic_error("stress certificate fails re-verification");
        if (stress_matrix_rank(f2, s2).rank_total != target)
            throw std::logic_error("stress certificate rank fails re-verification");
        return true;
    };

    if (dim == 1) {
        if (!try_stress(coker[0]))
            out.certificate = {
                {"kind", "none"},
                {"detail", "unique stress has deficient stress-matrix rank"}};
        return out;
    }
    for (int tries = 0; tries < 16; ++tries) {
        std::vector<Rat> c(m + n, Rat(0));
        for (const auto& basis_vec : coker) {
            const long coeff = static_cast<long>(rng.next_signed(8));
            if (coeff == 0) continue;
            for (int i = 0; i < m + n; ++i) c[i] += Rat(coeff) * basis_vec[i];
        }
        if (try_stress(c)) return out;
    }
    out.certificate = {{"kind", "none"},
                       {"cokernel_dimension", dim},
                       {"detail", "no maximum-rank combination in 16 samples "
                                  "(one-sided test)"}};
    return out;
}

CrossValidationReport cross_validate(const Graph& g, Rng& rng, int bits) {
    CrossValidationReport rep;
    bool resampled = false;
    const int n = g.n;

    {
        TheoremAgreement t;
        t.theorem = "1.1";
        if (n <= 3 && is_complete(g)) {
            t.exempt = true;
            t.detail = "complete graph on at most 3 vertices; numeric "
                       "counterpart exempt";
        } else {
            const bool comb = rigid(g).answer;
            const int rank = stable_rank_rcyl(g, rng, bits, &resampled);
            const bool numeric = rank == 3 * n - 2;
            t.agree = comb == numeric;
            t.detail = "combinatorial " + bool_str(comb) + ", rank R_cyl " +
                       std::to_string(rank) + " of " + std::to_string(3 * n - 2);
        }
        rep.checks.push_back(t);
    }
    {
        TheoremAgreement t;
        t.theorem = "6.5";
        if (n == 0) {
            t.exempt = true;
            t.detail = "no vertices";
        } else {
            std::vector<int> bad;
            for (int v = 0; v < n; ++v) {
                const bool comb = vfree_rigid(g, v).answer;
                const int rank = stable_rank_vfree(g, v, rng, bits, &resampled);
                if (comb != (rank == 3 * n - 2)) bad.push_back(v);
            }
            t.agree = bad.empty();
            if (bad.empty()) {
                t.detail = "all " + std::to_string(n) + " vertices agree";
            } else {
                t.detail = "mismatch at vertex";
                for (int v : bad) t.detail += " " + std::to_string(v);
            }
        }
        rep.checks.push_back(t);
    }
    {
        TheoremAgreement t;
        t.theorem = "7.1";
        if (n == 0) {
            t.exempt = true;
            t.detail = "no vertices";
        } else {
            const bool comb = vr_deciders(g).rigid.answer;
            const int rank = stable_rank_vr(g, rng, bits, &resampled);
            const bool numeric = rank == 3 * n - 1;
            t.agree = comb == numeric;
            t.detail = "combinatorial " + bool_str(comb) + ", rank R_ver " +
                       std::to_string(rank) + " of " + std::to_string(3 * n - 1);
        }
        rep.checks.push_back(t);
    }
    {
        TheoremAgreement t;
        t.theorem = "4.4";
        if (n < 2) {
            t.exempt = true;
            t.detail = "needs at least two vertices";
        } else {
            const int u = static_cast<int>(rng.next_below(n));
            int v = static_cast<int>(rng.next_below(n - 1));
            if (v >= u) ++v;
            const Edge uv = make_edge(u, v);
            const Graph minus = g.has_edge(u, v) ? delete_edge(g, uv) : g;
            const Graph with_uv = g.has_edge(u, v) ? g : add_edge(g, uv);
            const Graph quotient = contract_edge(with_uv, uv, true).simple;
            const bool comb = rigid(minus).answer && rigid(quotient).answer;
            const int rank = coincident_rank(g, u, v, rng, bits, &resampled);
            const bool numeric = rank == 3 * n - 2;
            t.agree = comb == numeric;
            t.detail = "pair {" + std::to_string(u) + "," + std::to_string(v) +
                       "}: combinatorial " + bool_str(comb) +
                       ", coincident rank " + std::to_string(rank) + " of " +
                       std::to_string(3 * n - 2);
        }
        rep.checks.push_back(t);
    }

    rep.resampled = resampled;
    rep.all_agree = true;
    for (const TheoremAgreement& t : rep.checks)
        rep.all_agree = rep.all_agree && t.agree;
    return rep;
}

} // namespace cylrig
