#include "cylrig/matrix.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace cylrig {

namespace {

// lcm of denominators and gcd of numerators across a set of rationals.
void accumulate_scaling(const Rat& v, mpz_class& den_lcm, mpz_class& num_gcd) {
    if (sgn(v) == 0) return;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
}

} // namespace

void make_row_primitive(std::vector<Rat*>& row) {
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const Rat* v : row) accumulate_scaling(*v, den_lcm, num_gcd);
    if (sgn(num_gcd) == 0) return; // zero row
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(scale) < 0) scale = -scale;
    for (Rat* v : row) *v *= scale;
}

void make_row_primitive(std::vector<Quad*>& row) {
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const Quad* v : row) {
        accumulate_scaling(v->a, den_lcm, num_gcd);
        accumulate_scaling(v->b, den_lcm, num_gcd);
    }
    if (sgn(num_gcd) == 0) return;
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(scale) < 0) scale = -scale;
    for (Quad* v : row) *v = Quad(v->a * scale, v->b * scale, v->d);
}

int rank_f64(const Mat<double>& m, double tol) {
    if (m.rows == 0 || m.cols == 0) return 0;
    Eigen::MatrixXd em(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) em(i, j) = m(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(em);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    double cutoff = tol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return rank;
}

Mat<double> to_f64(const Mat<Quad>& m) {
    Mat<double> out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out(i, j) = quad_to_double(m(i, j));
    return out;
}

Mat<double> to_f64(const Mat<Rat>& m) {
    Mat<double> out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out(i, j) = rat_to_double(m(i, j));
    return out;
}

} // namespace cylrig
