#pragma once

// Brute-force oracles and helpers shared by the test binaries.  Everything
// here works straight from definitions (subset counting, exhaustive
// enumeration) and never calls the algorithms under test, so agreement with
// the library is meaningful evidence.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cylrig/graph.hpp"

namespace testsupport {

using cylrig::Edge;
using cylrig::Graph;
using cylrig::MultiGraph;

// Ground set for the subset oracle: an explicit edge list (parallel copies
// may appear twice) over vertices 0..n-1.  Masks address edges by position.
struct OracleTables {
    int n = 0;
    std::vector<Edge> ground;
    std::vector<char> indep; // per subset mask
    std::vector<int> rank;   // per subset mask
};

// Independence by definition: F is independent in the multigraph count
// matroid iff every W with |W| >= 2 satisfies |F n E(W)| <= 2|W| - 2; the
// simple restriction additionally forbids two copies of the same vertex
// pair.  Rank by the definitional recursion: rank(F) = |F| when F is
// independent, else max over single-element removals (no matroid axioms
// assumed).
inline OracleTables oracle_tables(int n, std::vector<Edge> ground,
                                  bool simple_matroid) {
    if (ground.size() > 22) throw std::invalid_argument("oracle: too many edges");
    OracleTables t;
    t.n = n;
    t.ground = std::move(ground);
    const int m = static_cast<int>(t.ground.size());
    const std::uint32_t subsets = 1u << m;

    std::vector<std::uint32_t> edges_inside; // per vertex set W
    std::vector<int> cap;
    for (std::uint32_t w = 0; w < (1u << n); ++w) {
        if (std::popcount(w) < 2) continue;
        std::uint32_t inside = 0;
        for (int e = 0; e < m; ++e) {
            const std::uint32_t ends = (1u << t.ground[e].first) |
                                       (1u << t.ground[e].second);
            if ((ends & w) == ends) inside |= 1u << e;
        }
        edges_inside.push_back(inside);
        cap.push_back(2 * std::popcount(w) - 2);
    }

    std::vector<std::uint32_t> parallel_pairs; // masks of same-pair copies
    if (simple_matroid) {
        for (int e = 0; e < m; ++e)
            for (int f = e + 1; f < m; ++f)
                if (t.ground[e] == t.ground[f])
                    parallel_pairs.push_back((1u << e) | (1u << f));
    }

    t.indep.assign(subsets, 1);
    for (std::uint32_t f = 0; f < subsets; ++f) {
        for (std::size_t i = 0; i < edges_inside.size() && t.indep[f]; ++i)
            if (std::popcount(f & edges_inside[i]) > cap[i]) t.indep[f] = 0;
        for (std::size_t i = 0; i < parallel_pairs.size() && t.indep[f]; ++i)
            if ((f & parallel_pairs[i]) == parallel_pairs[i]) t.indep[f] = 0;
    }

    t.rank.assign(subsets, 0);
    for (std::uint32_t f = 1; f < subsets; ++f) {
        if (t.indep[f]) {
            t.rank[f] = std::popcount(f);
        } else {
            int best = 0;
            for (std::uint32_t rest = f; rest;) {
                const std::uint32_t low = rest & (~rest + 1);
                best = std::max(best, t.rank[f ^ low]);
                rest ^= low;
            }
            t.rank[f] = best;
        }
    }
    return t;
}

inline int oracle_rank(const Graph& g) {
    const OracleTables t = oracle_tables(g.n, g.edges, true);
    return t.rank.empty() ? 0 : t.rank.back();
}

// All circuits (minimal dependent subsets) of the oracle's matroid, as
// subset masks of the ground set.
inline std::vector<std::uint32_t> oracle_circuits(const OracleTables& t) {
    std::vector<std::uint32_t> out;
    const std::uint32_t subsets = 1u << t.ground.size();
    for (std::uint32_t f = 1; f < subsets; ++f) {
        if (t.indep[f]) continue;
        bool minimal = true;
        for (std::uint32_t rest = f; rest && minimal;) {
            const std::uint32_t low = rest & (~rest + 1);
            minimal = t.indep[f ^ low];
            rest ^= low;
        }
        if (minimal) out.push_back(f);
    }
    return out;
}

// Matroid connectivity by definition: every pair of ground-set elements lies
// in a common circuit (vacuously true only when m <= 1 fails dependence...
// the callers only use this on graphs with at least 2 edges).
inline bool oracle_matroid_connected(const Graph& g) {
    const int m = g.m();
    if (m < 2) return false;
    const OracleTables t = oracle_tables(g.n, g.edges, true);
    const std::vector<std::uint32_t> circuits = oracle_circuits(t);
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
            const std::uint32_t pair = (1u << e) | (1u << f);
            bool covered = false;
            for (const std::uint32_t c : circuits)
                if ((c & pair) == pair) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
    return true;
}

// Every labelled simple graph on exactly n vertices, as edge lists (masks
// over the edges of K_n in lexicographic order).
inline std::vector<Edge> complete_edge_list(int n) {
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    return all;
}

inline std::vector<Edge> edges_of_mask(const std::vector<Edge>& all,
                                       std::uint32_t mask) {
    std::vector<Edge> out;
    for (std::size_t e = 0; e < all.size(); ++e)
        if (mask & (1u << e)) out.push_back(all[e]);
    return out;
}

// Runs a command, captures stdout, returns the process exit status (-1 when
// it did not exit normally).
struct RunResult {
    int status = -1;
    std::string out;
};

inline RunResult run_command(const std::string& command) {
    RunResult r;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed: " + command);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int raw = pclose(pipe);
    if (raw >= 0 && WIFEXITED(raw)) r.status = WEXITSTATUS(raw);
    return r;
}

} // namespace testsupport
