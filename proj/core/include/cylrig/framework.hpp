#pragma once

#include <array>
#include <vector>

#include "cylrig/graph.hpp"
#include "cylrig/matrix.hpp"
#include "cylrig/rng.hpp"
#include "cylrig/scalar.hpp"

namespace cylrig {

// Default bit-size for random rational coordinates (see random_framework).
inline constexpr int kGenericBits = 32;

// A realisation of a graph on a family of concentric cylinders: vertex i is
// placed at points[i] = (x, y, z) with x^2 + y^2 = radii[i]^2 exactly.  The
// unit cylinder is the default (all radii 1).
template <typename T>
struct Framework {
    Graph graph;
    std::vector<std::array<T, 3>> points;
    std::vector<T> radii;

    // Throws std::invalid_argument if sizes disagree, a radius is not
    // positive, or some vertex violates x^2 + y^2 = r^2.
    void validate() const;
};

// The (|E|+|V|) x 3|V| cylinder rigidity matrix: one row per edge uv with
// p(u) - p(v) in u's column block and the negation in v's, then one surface
// row per vertex with (x_i, y_i, 0) in its own block.
template <typename T>
Mat<T> rigidity_matrix(const Framework<T>& f);

// rigidity_matrix with the surface row of vertex v removed: full rank 3n-2
// is v-free infinitesimal rigidity.
template <typename T>
Mat<T> vfree_matrix(const Framework<T>& f, int v);

// The vertically-restricted matrix: edge rows, then n-1 dilation rows
// (z_1 dz_i - z_i dz_1 = 0, giving -z_i in block 0 and z_1 in block i), then
// all n surface rows.  Requires z_1 != 0 (vertex 0); full rank 3n-1 is
// VR-infinitesimal rigidity.
template <typename T>
Mat<T> vr_matrix(const Framework<T>& f);

// Random exact realisation: x = r(1-t^2)/(1+t^2), y = 2rt/(1+t^2) for a
// random rational t (numerators/denominators up to `bits` bits) and a random
// rational z; z of vertex 0 is resampled until nonzero.  Optional per-vertex
// radii (default: unit cylinder).
Framework<Rat> random_framework(const Graph& g, Rng& rng, int bits = kGenericBits,
                                const std::vector<Rat>* radii = nullptr);

// Random realisation with p(v) forced equal to p(u) (same cylinder required:
// radii default to 1).  The row of an edge uv, if present, is zero and stays.
Framework<Rat> coincident_framework(const Graph& g, int u, int v, Rng& rng,
                                    int bits = kGenericBits);

// rank R_cyl at a uv-coincident random realisation, stabilised over samples.
int coincident_rank(const Graph& g, int u, int v, Rng& rng,
                    int bits = kGenericBits, bool* resampled = nullptr);

template <typename T>
struct Measurement {
    std::vector<T> lengths_sq; // squared edge lengths, edge order
    std::vector<T> z_ratios;   // z_i / z_1 for i = 2..n (requires z_1 != 0)
    std::vector<T> radii_sq;   // x_i^2 + y_i^2 per vertex
};

template <typename T>
Measurement<T> measurement(const Framework<T>& f);

// Exact generic rank of a per-sample matrix: specialising rational points can
// only lower the rank, so the maximum over independent samples is correct as
// soon as two samples agree.  Disagreement triggers resampling (up to a small
// cap) and sets *resampled.
template <typename Builder> // Mat<Rat> Builder(Rng&)
int stable_rank(Builder&& build, Rng& rng, bool* resampled = nullptr) {
    int best = rank_exact(build(rng));
    bool flagged = false;
    for (int tries = 0; tries < 5; ++tries) {
        const int next = rank_exact(build(rng));
        if (next == best) {
            if (resampled) *resampled = *resampled || flagged;
            return best;
        }
        flagged = true;
        best = std::max(best, next);
    }
    if (resampled) *resampled = true;
    return best;
}

// Stabilised generic ranks of the three matrices at random realisations.
int stable_rank_rcyl(const Graph& g, Rng& rng, int bits = kGenericBits,
                     bool* resampled = nullptr);
int stable_rank_vfree(const Graph& g, int v, Rng& rng, int bits = kGenericBits,
                      bool* resampled = nullptr);
int stable_rank_vr(const Graph& g, Rng& rng, int bits = kGenericBits,
                   bool* resampled = nullptr);

} // namespace cylrig
