#include "cylrig/stress.hpp"

namespace cylrig {

namespace {

template <typename T>
void check_sizes(const Framework<T>& f, const Stress<T>& s, const char* what) {
    if (static_cast<int>(s.omega.size()) != f.graph.m() ||
        static_cast<int>(s.lambda.size()) != f.graph.n)
        throw std::invalid_argument(std::string(what) +
                                    ": stress sizes do not match the graph");
}

} // namespace

template <typename T>
std::vector<std::array<T, 3>> stress_residual(const Framework<T>& f,
                                              const Stress<T>& s) {
    check_sizes(f, s, "stress_residual");
    std::vector<std::array<T, 3>> res(f.graph.n, {T(0), T(0), T(0)});
    for (int e = 0; e < f.graph.m(); ++e) {
        const auto [i, j] = f.graph.edges[e];
        for (int k = 0; k < 3; ++k) {
            const T d = f.points[i][k] - f.points[j][k];
            res[i][k] = res[i][k] + s.omega[e] * d;
            res[j][k] = res[j][k] - s.omega[e] * d;
        }
    }
    for (int i = 0; i < f.graph.n; ++i) {
        res[i][0] = res[i][0] + s.lambda[i] * f.points[i][0];
        res[i][1] = res[i][1] + s.lambda[i] * f.points[i][1];
    }
    return res;
}

template <typename T>
bool verify_stress(const Framework<T>& f, const Stress<T>& s) {
    for (const auto& r : stress_residual(f, s))
        for (int k = 0; k < 3; ++k)
            if (sign(r[k]) != 0) return false;
    return true;
}

template <typename T>
Stress<T> equilibrium_stress(const Framework<T>& f) {
    f.validate();
    const auto coker = left_nullspace(rigidity_matrix(f));
    if (coker.size() != 1)
        throw CokernelDimensionError(static_cast<int>(coker.size()));
    const auto& c = coker[0];
    const int m = f.graph.m();
    int lead = -1;
    for (int e = 0; e < m; ++e)
        if (sign(c[e]) != 0) {
            lead = e;
            break;
        }
    if (lead < 0)
        // c nonzero with all omega zero would force lambda_i p_i = 0 with
        // p_i on a positive-radius circle; impossible, so this is a bug.
        throw std::logic_error("equilibrium_stress: cokernel vector has no "
                               "nonzero edge entry");
    const T scale = T(1) / c[lead];
    Stress<T> s;
    s.omega.reserve(m);
    s.lambda.reserve(f.graph.n);
    for (int e = 0; e < m; ++e) s.omega.push_back(c[e] * scale);
    for (int v = 0; v < f.graph.n; ++v) s.lambda.push_back(c[m + v] * scale);
    if (!verify_stress(f, s))
        throw std::logic_error(
            "equilibrium_stress: computed stress fails verification");
    return s;
}

template <typename T>
Mat<T> StressMatrixReport<T>::omega_cyl() const {
    const int n = omega_mat.rows;
    Mat<T> full(3 * n, 3 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            full(i, j) = omega_lambda_mat(i, j);
            full(n + i, n + j) = omega_lambda_mat(i, j);
            full(2 * n + i, 2 * n + j) = omega_mat(i, j);
        }
    return full;
}

template <typename T>
StressMatrixReport<T> stress_matrix_rank(const Framework<T>& f,
                                         const Stress<T>& s) {
    check_sizes(f, s, "stress_matrix_rank");
    if (!verify_stress(f, s))
        throw std::invalid_argument(
            "stress_matrix_rank: stress does not verify on the framework");

    // Rank is invariant under positive scaling; clear denominators first so
    // the fraction-free elimination works on small integers.
    Stress<T> t = s;
    {
        std::vector<T*> row;
        row.reserve(t.omega.size() + t.lambda.size());
        for (T& v : t.omega) row.push_back(&v);
        for (T& v : t.lambda) row.push_back(&v);
        make_row_primitive(row);
    }

    const int n = f.graph.n;
    StressMatrixReport<T> rep;
    rep.omega_mat = Mat<T>(n, n);
    for (int e = 0; e < f.graph.m(); ++e) {
        const auto [i, j] = f.graph.edges[e];
        rep.omega_mat(i, j) = rep.omega_mat(i, j) - t.omega[e];
        rep.omega_mat(j, i) = rep.omega_mat(j, i) - t.omega[e];
        rep.omega_mat(i, i) = rep.omega_mat(i, i) + t.omega[e];
        rep.omega_mat(j, j) = rep.omega_mat(j, j) + t.omega[e];
    }
    rep.omega_lambda_mat = rep.omega_mat;
    for (int i = 0; i < n; ++i)
        rep.omega_lambda_mat(i, i) = rep.omega_lambda_mat(i, i) + t.lambda[i];

    rep.rank_omega = rank_exact(rep.omega_mat);
    rep.rank_omega_lambda = rank_exact(rep.omega_lambda_mat);
    rep.rank_total = 2 * rep.rank_omega_lambda + rep.rank_omega;
    rep.max_rank = rep.rank_total == 3 * n - 6;
    return rep;
}

template std::vector<std::array<Rat, 3>> stress_residual(const Framework<Rat>&,
                                                         const Stress<Rat>&);
template std::vector<std::array<Quad, 3>> stress_residual(
    const Framework<Quad>&, const Stress<Quad>&);
template bool verify_stress(const Framework<Rat>&, const Stress<Rat>&);
template bool verify_stress(const Framework<Quad>&, const Stress<Quad>&);
template Stress<Rat> equilibrium_stress(const Framework<Rat>&);
template Stress<Quad> equilibrium_stress(const Framework<Quad>&);
template struct StressMatrixReport<Rat>;
template struct StressMatrixReport<Quad>;
template StressMatrixReport<Rat> stress_matrix_rank(const Framework<Rat>&,
                                                    const Stress<Rat>&);
template StressMatrixReport<Quad> stress_matrix_rank(const Framework<Quad>&,
                                                     const Stress<Quad>&);

} // namespace cylrig
