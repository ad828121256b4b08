#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cylrig/constructions.hpp"
#include "cylrig/decide.hpp"
#include "cylrig/framework.hpp"
#include "cylrig/graph.hpp"
#include "cylrig/json_io.hpp"
#include "cylrig/rng.hpp"
#include "cylrig/sparsity.hpp"
#include "cylrig/stress.hpp"
#include "support.hpp"

using namespace cylrig;

namespace {

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, std::move(e));
}

// Two triangles sharing vertex 0: connected but vertex 0 is a cut vertex.
Graph bowtie() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

Graph star(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Graph(leaves + 1, std::move(e));
}

// K5-e with an extra vertex 5 of degree 2 joined to 0 and 1.
Graph k5e_with_pendant() { return zero_extension(base_graph("K5-e"), 0, 1); }

// Re-checks a claimed maximum independent set: edges of g, independent by
// the subset-count oracle, and of the claimed size.
void check_rank_witness(const Graph& g, const nlohmann::json& cert) {
    REQUIRE(cert.at("kind") == "rank-witness");
    const int rank = cert.at("rank").get<int>();
    CHECK(cert.at("required").get<int>() == 2 * g.n - 2);
    std::vector<Edge> basis;
    for (const auto& e : cert.at("basis"))
        basis.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
    CHECK(static_cast<int>(basis.size()) == rank);
    for (const Edge& e : basis) CHECK(g.has_edge(e.first, e.second));
    if (g.n <= 8 && g.m() <= 20) {
        const testsupport::OracleTables t =
            testsupport::oracle_tables(g.n, g.edges, true);
        std::uint32_t mask = 0;
        for (const Edge& e : basis) {
            const auto it =
                std::find(g.edges.begin(), g.edges.end(), e);
            REQUIRE(it != g.edges.end());
            mask |= 1u << (it - g.edges.begin());
        }
        CHECK(t.indep[mask]);
        // Maximality: the witness size is the oracle rank of the full set.
        CHECK(t.rank[(1u << g.m()) - 1] == rank);
    }
}

} // namespace

TEST_CASE("rigid: named graphs and certificates") {
    // Complete graphs on at most three vertices are rigid by the small-graph
    // clause, with no rank computation involved.
    for (int n : {0, 1, 2, 3}) {
        const Verdict v = rigid(complete_graph(n));
        CHECK(v.answer);
        CHECK(v.theorem == "1.1");
        CHECK(v.certificate.at("kind") == "complete-small-graph");
        CHECK(v.certificate.at("n").get<int>() == n);
    }

    // K5-e reaches rank 8 = 2*5 - 2 (the whole edge set minus one edge).
    const Verdict k5e = rigid(base_graph("K5-e"));
    CHECK(k5e.answer);
    CHECK(k5e.theorem == "1.1");
    check_rank_witness(base_graph("K5-e"), k5e.certificate);
    CHECK(k5e.certificate.at("rank").get<int>() == 8);

    // K4 is not covered by the small clause but has full rank 6.
    const Verdict k4 = rigid(complete_graph(4));
    CHECK(k4.answer);
    check_rank_witness(complete_graph(4), k4.certificate);

    // A star has too few edges: 4 < 8.
    const Verdict st = rigid(star(4));
    CHECK(!st.answer);
    check_rank_witness(star(4), st.certificate);
    CHECK(st.certificate.at("rank").get<int>() == 4);

    CHECK(!rigid(path(3)).answer);
    CHECK(rigid(base_graph("H1")).answer);
    CHECK(rigid(base_graph("H2")).answer);
}

TEST_CASE("globally_rigid: named graphs and certificates") {
    // Complete graphs on at most four vertices.
    for (int n : {3, 4}) {
        const Verdict v = globally_rigid(complete_graph(n));
        CHECK(v.answer);
        CHECK(v.theorem == "1.2");
        CHECK(v.certificate.at("kind") == "complete-small-graph");
    }

    // A circuit is 2-connected and every edge stays inside the circuit after
    // a deletion check, so K5-e is globally rigid.
    const Verdict k5e = globally_rigid(base_graph("K5-e"));
    CHECK(k5e.answer);
    check_rank_witness(base_graph("K5-e"), k5e.certificate);

    // The bowtie's shared vertex is a cut vertex; the certificate names a
    // vertex whose deletion really disconnects the rest.
    const Verdict bt = globally_rigid(bowtie());
    CHECK(!bt.answer);
    REQUIRE(bt.certificate.at("kind") == "cut-vertex");
    const int cut = bt.certificate.at("vertex").get<int>();
    const auto survivor = delete_vertices(bowtie(), {cut});
    CHECK(!is_connected(survivor.graph));

    // Two disjoint edges: the certificate names vertices in different
    // components.
    const Graph two_edges(4, {{0, 1}, {2, 3}});
    const Verdict disc = globally_rigid(two_edges);
    CHECK(!disc.answer);
    REQUIRE(disc.certificate.at("kind") == "disconnected");
    const auto comp = connected_component_ids(two_edges);
    const auto& pair = disc.certificate.at("vertices");
    CHECK(comp[pair.at(0).get<int>()] != comp[pair.at(1).get<int>()]);

    // Attaching a degree-2 vertex to K5-e keeps the graph rigid and
    // 2-connected but both new edges are non-redundant: deleting one leaves
    // the new vertex hanging on a single edge.
    const Verdict ext = globally_rigid(k5e_with_pendant());
    CHECK(!ext.answer);
    REQUIRE(ext.certificate.at("kind") == "non-redundant-edge");
    const auto& e = ext.certificate.at("edge");
    const Edge named = make_edge(e.at(0).get<int>(), e.at(1).get<int>());
    CHECK(named.second == 5);
    CHECK(rank22(delete_edge(k5e_with_pendant(), named)) < 2 * 6 - 2);

    // A non-rigid 2-connected graph fails through the rank certificate.
    const Verdict ring = globally_rigid(cycle(5));
    CHECK(!ring.answer);
    CHECK(ring.certificate.at("kind") == "rank-witness");
}

TEST_CASE("globally_rigid implies rigid on a seeded corpus") {
    Rng rng(606);
    int globally = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_below(5));
        const int maxm = n * (n - 1) / 2;
        const Graph g =
            random_graph(n, static_cast<int>(rng.next_below(maxm + 1)), rng);
        const Verdict glob = globally_rigid(g);
        if (glob.answer) {
            CHECK(rigid(g).answer);
            ++globally;
        }
    }
    CHECK(globally > 0); // the corpus must exercise the implication
}

TEST_CASE("vfree_rigid: certificates and the pendant counterexample") {
    // Any vertex of a circuit: rigid, and the circuit itself contains it.
    const Graph k5e = base_graph("K5-e");
    for (int v = 0; v < 5; ++v) {
        const Verdict out = vfree_rigid(k5e, v);
        CHECK(out.answer);
        CHECK(out.theorem == "6.5");
        REQUIRE(out.certificate.at("kind") == "circuit-containing-vertex");
        CHECK(out.certificate.at("vertex").get<int>() == v);
        // The claimed circuit must consist of edges of g, touch v, and be a
        // circuit: dependent with every proper subset independent, by the
        // subset-count oracle on its support.
        std::vector<Edge> circ;
        bool touches = false;
        for (const auto& ej : out.certificate.at("circuit")) {
            const Edge ce = make_edge(ej.at(0).get<int>(), ej.at(1).get<int>());
            CHECK(k5e.has_edge(ce.first, ce.second));
            touches = touches || ce.first == v || ce.second == v;
            circ.push_back(ce);
        }
        CHECK(touches);
        const testsupport::OracleTables t =
            testsupport::oracle_tables(5, circ, true);
        const std::uint32_t full = (1u << circ.size()) - 1;
        CHECK(!t.indep[full]);
        for (std::size_t e = 0; e < circ.size(); ++e)
            CHECK(t.indep[full ^ (1u << e)]);
    }

    // The zero-extended vertex is in no circuit even though the graph stays
    // rigid; a vertex of the circuit part still qualifies.
    const Graph ext = k5e_with_pendant();
    CHECK(rigid(ext).answer);
    const Verdict pendant = vfree_rigid(ext, 5);
    CHECK(!pendant.answer);
    CHECK(pendant.certificate.at("kind") == "none");
    CHECK(pendant.certificate.at("vertex").get<int>() == 5);
    CHECK(vfree_rigid(ext, 0).answer);

    // Non-rigid input fails with the forwarded rank certificate.
    const Verdict weak = vfree_rigid(path(4), 1);
    CHECK(!weak.answer);
    CHECK(weak.certificate.at("kind") == "rank-witness");

    CHECK_THROWS_AS((void)vfree_rigid(k5e, 5), std::invalid_argument);
    CHECK_THROWS_AS((void)vfree_rigid(k5e, -1), std::invalid_argument);
}

TEST_CASE("vfree_rigid equals rigid plus vertex-in-circuit on a corpus") {
    Rng rng(7171);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_below(4));
        const int maxm = n * (n - 1) / 2;
        const Graph g =
            random_graph(n, static_cast<int>(rng.next_below(maxm + 1)), rng);
        for (int v = 0; v < n; ++v)
            CHECK(vfree_rigid(g, v).answer ==
                  (rigid(g).answer && vertex_in_circuit(g, v)));
    }
}

TEST_CASE("vr_deciders: named graphs") {
    // K3: one cycle, connected -- minimally rigid; too few edges for global.
    const VrVerdicts k3 = vr_deciders(complete_graph(3));
    CHECK(k3.minimally_rigid.answer);
    CHECK(k3.minimally_rigid.theorem == "7.1");
    CHECK(k3.rigid.answer);
    CHECK(k3.rigid.theorem == "7.1");
    CHECK(k3.rigid.certificate.at("derived_rule").get<bool>());
    CHECK(!k3.globally_rigid.answer);
    CHECK(k3.globally_rigid.theorem == "7.5");

    // K4-e: 2-connected with 5 = n + 1 edges.
    const Graph k4e = delete_edge(complete_graph(4), {0, 1});
    const VrVerdicts v4 = vr_deciders(k4e);
    CHECK(v4.globally_rigid.answer);
    CHECK(v4.rigid.answer);
    CHECK(!v4.minimally_rigid.answer); // two independent cycles

    // C4: exactly one cycle.
    const VrVerdicts c4 = vr_deciders(cycle(4));
    CHECK(c4.minimally_rigid.answer);
    CHECK(c4.rigid.answer);
    CHECK(!c4.globally_rigid.answer);

    // Trees have no cycle at all.
    const VrVerdicts tree = vr_deciders(path(4));
    CHECK(!tree.minimally_rigid.answer);
    CHECK(!tree.rigid.answer);
    CHECK(!tree.globally_rigid.answer);

    // Disconnected graphs fail every variant even with enough edges.
    const Graph split(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    const VrVerdicts sp = vr_deciders(split);
    CHECK(!sp.minimally_rigid.answer);
    CHECK(!sp.rigid.answer);
    CHECK(!sp.globally_rigid.answer);

    // The bowtie's global certificate pins its cut vertex.
    const VrVerdicts bt = vr_deciders(bowtie());
    CHECK(bt.rigid.answer);
    CHECK(!bt.globally_rigid.answer);
    REQUIRE(bt.globally_rigid.certificate.at("kind") == "cut-vertex");
    const int cut = bt.globally_rigid.certificate.at("vertex").get<int>();
    CHECK(!is_connected(delete_vertices(bowtie(), {cut}).graph));
}

TEST_CASE("vr_deciders: formulas over all graphs with up to five vertices") {
    // The three verdicts are pure functions of connectivity, cycle-space
    // dimension and edge count; re-check the formulas and the implication
    // chain global => rigid <= minimal exhaustively.
    const auto all = testsupport::complete_edge_list(5);
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
        const Graph g(5, testsupport::edges_of_mask(all, mask));
        const VrVerdicts out = vr_deciders(g);
        const bool conn = is_connected(g);
        CHECK(out.minimally_rigid.answer == (conn && cycle_space_dim(g) == 1));
        CHECK(out.rigid.answer == (conn && g.m() >= g.n));
        CHECK(out.globally_rigid.answer ==
              (is_2connected(g) && g.m() >= g.n + 1));
        if (out.minimally_rigid.answer) CHECK(out.rigid.answer);
        if (out.globally_rigid.answer) CHECK(out.rigid.answer);
    }
}

TEST_CASE("stress_certificate: circuits yield maximum-rank certificates") {
    Rng rng(808);

    // K5-e: the unique stress reaches rank 9 = 3*5 - 6; the embedded
    // framework and stress re-verify from their serialised form.
    const Verdict v = stress_certificate(base_graph("K5-e"), rng);
    CHECK(v.answer);
    CHECK(v.theorem == "8.2");
    REQUIRE(v.certificate.at("kind") == "stress-with-rank");
    CHECK(v.certificate.at("rank_stress_matrix").get<int>() == 9);
    CHECK(v.certificate.at("max_rank").get<int>() == 9);
    CHECK(v.certificate.at("cokernel_dimension").get<int>() == 1);
    const Framework<Quad> f = framework_from_json(v.certificate.at("framework"));
    const Stress<Quad> s = stress_from_json(v.certificate.at("stress"));
    CHECK(verify_stress(f, s));
    CHECK(stress_matrix_rank(f, s).rank_total == 9);

    // Constructed circuits of several sizes all certify.
    for (int n : {6, 8, 10}) {
        Rng circuit_rng(900 + n);
        const Graph g = random_circuit(n, circuit_rng).graph;
        const Verdict c = stress_certificate(g, circuit_rng);
        CHECK(c.answer);
        CHECK(c.certificate.at("rank_stress_matrix").get<int>() == 3 * n - 6);
    }
}

TEST_CASE("stress_certificate: independent edge sets have no stress") {
    Rng rng(909);

    // Trees and K4 have full row rank, hence a trivial cokernel.
    const Verdict tree = stress_certificate(path(5), rng);
    CHECK(!tree.answer);
    CHECK(tree.certificate.at("kind") == "none");

    const Verdict k4 = stress_certificate(complete_graph(4), rng);
    CHECK(!k4.answer);
    CHECK(k4.certificate.at("kind") == "none");

    // Graphs with fewer than three vertices are rejected up front.
    const Verdict tiny = stress_certificate(complete_graph(2), rng);
    CHECK(!tiny.answer);
    CHECK(tiny.certificate.at("kind") == "none");
}

TEST_CASE("stress_certificate: multi-dimensional cokernel search") {
    // K5 has a 2-dimensional stress space at generic points; the seeded
    // random-combination search finds a maximum-rank member.
    Rng rng(111);
    const Verdict v = stress_certificate(complete_graph(5), rng);
    CHECK(v.answer);
    REQUIRE(v.certificate.at("kind") == "stress-with-rank");
    CHECK(v.certificate.at("cokernel_dimension").get<int>() == 2);
    CHECK(v.certificate.at("rank_stress_matrix").get<int>() == 9);
}

TEST_CASE("circuits are globally rigid and stress-certified, independently") {
    Rng rng(1212);
    for (int trial = 0; trial < 4; ++trial) {
        const int n = 5 + static_cast<int>(rng.next_below(4));
        const Graph g = random_circuit(n, rng).graph;
        CHECK(globally_rigid(g).answer);
        CHECK(stress_certificate(g, rng).answer);
    }
}

TEST_CASE("matroid connectivity equals 2-connected plus redundantly rigid, "
          "exhaustively") {
    // The implementation decides matroid connectivity through the
    // characterisation; the definition (every edge pair in a common circuit)
    // is recomputed here from one subset-count table per vertex count. The
    // comparison is scoped to graphs without isolated vertices: the edge-set
    // matroid cannot see an isolated vertex, but 2-connectivity fails on it
    // (pinned counterexample in the sparsity suite).
    for (int n = 2; n <= 6; ++n) {
        const auto all = testsupport::complete_edge_list(n);
        const int slots = static_cast<int>(all.size());
        const testsupport::OracleTables t =
            testsupport::oracle_tables(n, all, true);
        const std::vector<std::uint32_t> circuits =
            testsupport::oracle_circuits(t);

        std::vector<std::uint32_t> vinc(n, 0);
        for (int i = 0; i < slots; ++i) {
            vinc[all[i].first] |= 1u << i;
            vinc[all[i].second] |= 1u << i;
        }

        int checked = 0;
        int mismatches = 0;
        int definitionally_connected = 0;
        for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
            bool isolated = false;
            for (int v = 0; v < n && !isolated; ++v)
                isolated = (mask & vinc[v]) == 0;
            if (isolated) continue;

            // Per-edge union of the circuits inside this graph; the pair
            // {e, f} is covered exactly when f lands in e's union.
            std::array<std::uint32_t, 15> cov{};
            for (const std::uint32_t c : circuits)
                if ((c & mask) == c)
                    for (std::uint32_t rest = c; rest;) {
                        const int e = std::countr_zero(rest);
                        rest &= rest - 1;
                        cov[e] |= c;
                    }
            bool def = std::popcount(mask) >= 2;
            for (std::uint32_t rest = mask; def && rest;) {
                const int e = std::countr_zero(rest);
                rest &= rest - 1;
                def = ((cov[e] | (1u << e)) & mask) == mask;
            }

            const Graph g(n, testsupport::edges_of_mask(all, mask));
            if (is_matroid_connected(g) != def) ++mismatches;
            definitionally_connected += def ? 1 : 0;
            ++checked;
        }
        CAPTURE(n);
        CHECK(mismatches == 0);
        if (n == 6) {
            // Inclusion-exclusion over forced-isolated vertex sets:
            // sum_k (-1)^k C(6,k) 2^C(6-k,2).
            CHECK(checked == 27449);
            CHECK(definitionally_connected > 0);
        }
        if (n <= 4) CHECK(definitionally_connected == 0); // no circuit fits
    }
}

TEST_CASE("cross_validate: named graphs") {
    // K3 is exempt from the rank counterpart of the rigidity theorem.
    Rng rng(5150);
    const CrossValidationReport k3 = cross_validate(complete_graph(3), rng);
    CHECK(k3.all_agree);
    REQUIRE(k3.checks.size() == 4);
    CHECK(k3.checks[0].theorem == "1.1");
    CHECK(k3.checks[0].exempt);
    CHECK(k3.checks[0].agree);

    // K5-e: all four theorems check numerically, nothing exempt.
    const CrossValidationReport k5e = cross_validate(base_graph("K5-e"), rng);
    CHECK(k5e.all_agree);
    std::vector<std::string> names;
    for (const auto& c : k5e.checks) {
        names.push_back(c.theorem);
        CHECK(c.agree);
        CHECK(!c.exempt);
    }
    CHECK(names == std::vector<std::string>{"1.1", "6.5", "7.1", "4.4"});

    // The empty graph exempts everything that needs vertices.
    const CrossValidationReport none = cross_validate(Graph(0, {}), rng);
    CHECK(none.all_agree);
    for (const auto& c : none.checks) CHECK(c.exempt);

    // A path agrees through the negative direction of every theorem.
    const CrossValidationReport p = cross_validate(path(4), rng);
    CHECK(p.all_agree);
}

TEST_CASE("cross_validate: seeded corpus agrees everywhere") {
    Rng rng(31337);
    bool any_resampled = false;
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(5));
        const int maxm = n * (n - 1) / 2;
        const Graph g =
            random_graph(n, static_cast<int>(rng.next_below(maxm + 1)), rng);
        Rng fork = rng.fork(trial);
        const CrossValidationReport rep = cross_validate(g, fork);
        CHECK(rep.all_agree);
        any_resampled = any_resampled || rep.resampled;
    }
    CHECK(!any_resampled); // 32-bit coordinates never collided here
}

TEST_CASE("verdict JSON wire shape") {
    const nlohmann::json j = verdict_to_json(rigid(base_graph("K5-e")));
    REQUIRE(j.is_object());
    CHECK(j.size() == 3);
    CHECK(j.at("answer").is_boolean());
    CHECK(j.at("theorem") == "1.1");
    CHECK(j.at("certificate").is_object());
    CHECK(j.at("certificate").at("kind").is_string());
}
