#include "cylrig/framework.hpp"

#include <stdexcept>
#include <string>

namespace cylrig {

namespace {

template <typename T>
bool scalar_is_zero(const T& v) {
    return sign(v) == 0;
}

} // namespace

template <typename T>
void Framework<T>::validate() const {
    graph.validate();
    if (static_cast<int>(points.size()) != graph.n ||
        static_cast<int>(radii.size()) != graph.n)
        throw std::invalid_argument(
            "framework: points/radii sizes must match the vertex count");
    for (int i = 0; i < graph.n; ++i) {
        if (sign(radii[i]) <= 0)
            throw std::invalid_argument("framework: radius of vertex " +
                                        std::to_string(i) + " not positive");
        const T lhs = points[i][0] * points[i][0] + points[i][1] * points[i][1];
        if (!scalar_is_zero(T(lhs - radii[i] * radii[i])))
            throw std::invalid_argument(
                "framework: vertex " + std::to_string(i) +
                " violates x^2 + y^2 = r^2");
    }
}

template <typename T>
Mat<T> rigidity_matrix(const Framework<T>& f) {
    const Graph& g = f.graph;
    Mat<T> m(g.m() + g.n, 3 * g.n);
    for (int r = 0; r < g.m(); ++r) {
        const auto [i, j] = g.edges[r];
        for (int k = 0; k < 3; ++k) {
            m(r, 3 * i + k) = f.points[i][k] - f.points[j][k];
            m(r, 3 * j + k) = f.points[j][k] - f.points[i][k];
        }
    }
    for (int v = 0; v < g.n; ++v) {
        m(g.m() + v, 3 * v + 0) = f.points[v][0];
        m(g.m() + v, 3 * v + 1) = f.points[v][1];
    }
    return m;
}

template <typename T>
Mat<T> vfree_matrix(const Framework<T>& f, int v) {
    const Graph& g = f.graph;
    if (v < 0 || v >= g.n)
        throw std::invalid_argument("vfree_matrix: vertex out of range");
    Mat<T> full = rigidity_matrix(f);
    Mat<T> m(full.rows - 1, full.cols);
    int out = 0;
    for (int r = 0; r < full.rows; ++r) {
        if (r == g.m() + v) continue;
        for (int c = 0; c < full.cols; ++c) m(out, c) = full(r, c);
        ++out;
    }
    return m;
}

template <typename T>
Mat<T> vr_matrix(const Framework<T>& f) {
    const Graph& g = f.graph;
    if (g.n < 1 || scalar_is_zero(f.points[0][2]))
        throw std::invalid_argument("vr_matrix: z of vertex 0 must be nonzero");
    Mat<T> m(g.m() + 2 * g.n - 1, 3 * g.n);
    for (int r = 0; r < g.m(); ++r) {
        const auto [i, j] = g.edges[r];
        for (int k = 0; k < 3; ++k) {
            m(r, 3 * i + k) = f.points[i][k] - f.points[j][k];
            m(r, 3 * j + k) = f.points[j][k] - f.points[i][k];
        }
    }
    for (int i = 1; i < g.n; ++i) { // z_1 dz_i - z_i dz_1 = 0
        m(g.m() + i - 1, 3 * 0 + 2) = T(0) - f.points[i][2];
        m(g.m() + i - 1, 3 * i + 2) = f.points[0][2];
    }
    const int base = g.m() + g.n - 1;
    for (int v = 0; v < g.n; ++v) {
        m(base + v, 3 * v + 0) = f.points[v][0];
        m(base + v, 3 * v + 1) = f.points[v][1];
    }
    return m;
}

template struct Framework<Rat>;
template struct Framework<Quad>;
template Mat<Rat> rigidity_matrix(const Framework<Rat>&);
template Mat<Quad> rigidity_matrix(const Framework<Quad>&);
template Mat<Rat> vfree_matrix(const Framework<Rat>&, int);
template Mat<Quad> vfree_matrix(const Framework<Quad>&, int);
template Mat<Rat> vr_matrix(const Framework<Rat>&);
template Mat<Quad> vr_matrix(const Framework<Quad>&);

namespace {

Rat random_rational(Rng& rng, int bits) {
    if (bits < 1 || bits > 48)
        throw std::invalid_argument(
            "random coordinate bit-size must be in [1, 48]");
    const std::uint64_t mag = 1ULL << bits;
    const long num = static_cast<long>(rng.next_signed(mag));
    const long den = static_cast<long>(1 + rng.next_below(mag));
    return rat_make(num, den);
}

std::array<Rat, 3> random_cylinder_point(const Rat& r, Rng& rng, int bits,
                                         bool force_nonzero_z) {
    const Rat t = random_rational(rng, bits);
    const Rat t2 = t * t;
    const Rat denom = 1 + t2;
    std::array<Rat, 3> p;
    p[0] = r * (1 - t2) / denom;
    p[1] = r * 2 * t / denom;
    do {
        p[2] = random_rational(rng, bits);
    } while (force_nonzero_z && sign(p[2]) == 0);
    return p;
}

} // namespace

Framework<Rat> random_framework(const Graph& g, Rng& rng, int bits,
                                const std::vector<Rat>* radii) {
    if (radii && static_cast<int>(radii->size()) != g.n)
        throw std::invalid_argument("random_framework: radii size mismatch");
    Framework<Rat> f;
    f.graph = g;
    f.radii = radii ? *radii : std::vector<Rat>(g.n, Rat(1));
    f.points.reserve(g.n);
    for (int v = 0; v < g.n; ++v)
        f.points.push_back(random_cylinder_point(f.radii[v], rng, bits, v == 0));
    f.validate();
    return f;
}

Framework<Rat> coincident_framework(const Graph& g, int u, int v, Rng& rng,
                                    int bits) {
    if (u == v)
        throw std::invalid_argument("coincident_framework: u equals v");
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
        throw std::invalid_argument("coincident_framework: vertex out of range");
    Framework<Rat> f = random_framework(g, rng, bits);
    f.points[v] = f.points[u];
    if (v == 0 || u == 0) // keep the z_1 != 0 guarantee intact
        while (sign(f.points[0][2]) == 0) {
            f.points[u] = random_cylinder_point(f.radii[u], rng, bits, true);
            f.points[v] = f.points[u];
        }
    f.validate();
    return f;
}

int coincident_rank(const Graph& g, int u, int v, Rng& rng, int bits,
                    bool* resampled) {
    return stable_rank(
        [&](Rng& r) { return rigidity_matrix(coincident_framework(g, u, v, r, bits)); },
        rng, resampled);
}

template <typename T>
Measurement<T> measurement(const Framework<T>& f) {
    f.validate();
    Measurement<T> out;
    for (const auto [i, j] : f.graph.edges) {
        T acc(0);
        for (int k = 0; k < 3; ++k) {
            const T d = f.points[i][k] - f.points[j][k];
            acc = acc + d * d;
        }
        out.lengths_sq.push_back(acc);
    }
    if (f.graph.n > 0) {
        if (scalar_is_zero(f.points[0][2]))
            throw std::invalid_argument("measurement: z of vertex 0 is zero");
        for (int i = 1; i < f.graph.n; ++i)
            out.z_ratios.push_back(f.points[i][2] / f.points[0][2]);
    }
    for (int i = 0; i < f.graph.n; ++i)
        out.radii_sq.push_back(f.points[i][0] * f.points[i][0] +
                               f.points[i][1] * f.points[i][1]);
    return out;
}

template Measurement<Rat> measurement(const Framework<Rat>&);
template Measurement<Quad> measurement(const Framework<Quad>&);

int stable_rank_rcyl(const Graph& g, Rng& rng, int bits, bool* resampled) {
    return stable_rank(
        [&](Rng& r) { return rigidity_matrix(random_framework(g, r, bits)); },
        rng, resampled);
}

int stable_rank_vfree(const Graph& g, int v, Rng& rng, int bits,
                      bool* resampled) {
    return stable_rank(
        [&](Rng& r) { return vfree_matrix(random_framework(g, r, bits), v); },
        rng, resampled);
}

int stable_rank_vr(const Graph& g, Rng& rng, int bits, bool* resampled) {
    return stable_rank(
        [&](Rng& r) { return vr_matrix(random_framework(g, r, bits)); }, rng,
        resampled);
}

} // namespace cylrig
