#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cylrig/framework.hpp"
#include "cylrig/matrix.hpp"

namespace cylrig {

// An equilibrium stress of a cylinder framework: one omega per edge (edge
// order of the graph) and one lambda per vertex, satisfying, for every i,
//   sum_j omega_ij (p_i - p_j) + lambda_i (x_i, y_i, 0) = 0.
template <typename T>
struct Stress {
    std::vector<T> omega;
    std::vector<T> lambda;
};

class CokernelDimensionError : public std::runtime_error {
public:
    explicit CokernelDimensionError(int dim)
        : std::runtime_error("cokernel dimension is " + std::to_string(dim) +
                             ", expected 1"),
          dimension(dim) {}

    int dimension;
};

// Per-vertex residual 3-vectors of the equilibrium condition (equivalently
// (omega, lambda) * R_cyl regrouped by vertex).
template <typename T>
std::vector<std::array<T, 3>> stress_residual(const Framework<T>& f,
                                              const Stress<T>& s);

// True iff the residual is exactly zero everywhere.
template <typename T>
bool verify_stress(const Framework<T>& f, const Stress<T>& s);

// The equilibrium stress of f, unique up to scale, normalised so the first
// nonzero omega (edge order) equals 1.  Throws CokernelDimensionError when
// the cokernel of the rigidity matrix is not 1-dimensional (e.g. independent
// edge sets have none, dependence degree > 1 gives many).
template <typename T>
Stress<T> equilibrium_stress(const Framework<T>& f);

// The 3n x 3n stress matrix is diag(Omega+Lambda, Omega+Lambda, Omega) where
// Omega has off-diagonal -omega_ij and row sums zero, Lambda = diag(lambda).
// Its rank decomposes as 2 rank(Omega+Lambda) + rank(Omega) and is at most
// 3n - 6; "maximum rank" means equality.
template <typename T>
struct StressMatrixReport {
    Mat<T> omega_mat;        // Omega
    Mat<T> omega_lambda_mat; // Omega + Lambda
    int rank_omega = 0;
    int rank_omega_lambda = 0;
    int rank_total = 0;
    bool max_rank = false;

    Mat<T> omega_cyl() const; // assembled 3n x 3n block-diagonal matrix
};

// Assembles the stress matrix of a verified stress and computes its rank.
// Throws std::invalid_argument if s does not verify on f.
template <typename T>
StressMatrixReport<T> stress_matrix_rank(const Framework<T>& f,
                                         const Stress<T>& s);

} // namespace cylrig
