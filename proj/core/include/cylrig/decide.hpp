#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cylrig/framework.hpp"
#include "cylrig/graph.hpp"
#include "cylrig/rng.hpp"

namespace cylrig {

// A decider's result: the boolean answer, the characterisation used (the
// wire value of the "theorem" field), and a machine-checkable certificate
// object carrying a "kind" discriminator.  Every certificate is re-verified
// independently before the verdict is returned; a certificate that fails its
// own re-verification raises std::logic_error (an engine bug, never a
// property of the input).
struct Verdict {
    bool answer = false;
    std::string theorem;
    nlohmann::json certificate;
};

// Rigid on the cylinder ("1.1"): complete with at most 3 vertices, or
// pebble rank = 2n - 2.  Certificate: complete-small-graph or rank-witness
// (a maximum independent edge set, re-checked by subset counts or a fresh
// pebble run).
Verdict rigid(const Graph& g);

// Globally rigid on the cylinder ("1.2"): complete with at most 4 vertices,
// or 2-connected and redundantly rigid.  Negative certificates name a cut
// vertex / disconnected pair / non-redundant edge; positive non-complete
// verdicts carry the rigidity rank-witness.
Verdict globally_rigid(const Graph& g);

// v-free rigid ("6.5"): rigid and v contained in a circuit.  Positive
// certificate: an explicit circuit through v.  Throws std::invalid_argument
// on an out-of-range vertex.
Verdict vfree_rigid(const Graph& g, int v);

// The three vertically-restricted deciders, decided together since they
// share the connectivity scan.
struct VrVerdicts {
    Verdict minimally_rigid; // connected and exactly one cycle ("7.1")
    Verdict rigid;           // connected and |E| >= n ("7.1", derived rule)
    Verdict globally_rigid;  // 2-connected and |E| >= n + 1 ("7.5")
};

VrVerdicts vr_deciders(const Graph& g);

// One-sided global-rigidity certificate by stress sampling ("8.2"): samples
// a random exact framework and searches for an equilibrium stress whose
// stress matrix reaches the maximum rank 3n - 6.  When the cokernel of the
// rigidity matrix is 1-dimensional (circuits) the unique stress is tested;
// otherwise up to 16 seeded random combinations of a cokernel basis are
// tried.  answer = false only means "no certificate found" -- never a
// refutation.  A positive certificate embeds the framework, the stress and
// the rank report.
Verdict stress_certificate(const Graph& g, Rng& rng, int bits = kGenericBits);

// One row of a cross-validation report: a combinatorial verdict paired with
// its numeric counterpart at exact random realisations.
struct TheoremAgreement {
    std::string theorem;
    bool agree = true;  // exempt rows count as agreeing
    bool exempt = false;
    std::string detail;
};

struct CrossValidationReport {
    std::vector<TheoremAgreement> checks;
    bool all_agree = true;
    bool resampled = false; // some stabilised rank needed extra samples
};

// Pairs each combinatorial verdict with its numeric counterpart:
//   "1.1"  rigid  <->  rank R_cyl = 3n-2   (exempt: complete, n <= 3)
//   "6.5"  vfree  <->  rank R_v   = 3n-2   for every vertex v
//   "7.1"  vr     <->  rank R^ver = 3n-1
//   "4.4"  coincident rank = 3n-2  <->  G-uv and G/uv both rigid, for a
//          seeded random vertex pair (exempt: fewer than two vertices)
CrossValidationReport cross_validate(const Graph& g, Rng& rng,
                                     int bits = kGenericBits);

} // namespace cylrig
