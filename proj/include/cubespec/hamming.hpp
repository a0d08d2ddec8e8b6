#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cubespec/tridiagonal.hpp"
#include "cubespec/weight_vector.hpp"

namespace cubespec {

/// The level-symmetric reduction of A(H_d^i). The Perron vector of the ball
/// is constant on each level j, with value x_j, and
///   λ x_j = j·x_{j-1} + (d-j)·x_{j+1},   0 ≤ j ≤ i,
/// where the terms outside 0..i are dropped.
struct ReducedLevelSystem {
    std::uint64_t d = 0;
    unsigned radius = 0;
    /// sub[j] = j, coefficient of x_{j-1} in row j (sub[0] unused).
    std::vector<double> sub;
    /// sup[j] = d - j, coefficient of x_{j+1} in row j (sup[radius] unused).
    std::vector<double> sup;

    ReducedLevelSystem(std::uint64_t d, unsigned radius);

    /// Diagonal similarity to the symmetric matrix with off-diagonal
    /// √(j·(d-j+1)) between levels j-1 and j.
    SymmetricTridiagonal symmetrized() const;
};

struct HammingSolution {
    std::uint64_t d = 0;
    unsigned radius = 0;
    double lambda1 = 0.0;
    double error_bound = 0.0;
    /// ||T z - λ z||_∞ for the symmetrized system.
    double residual_inf = 0.0;
    std::size_t iterations = 0;
    /// Per-vertex weight on level j, normalised so the full eigenvector on
    /// the ball has unit norm.
    std::vector<double> level_weights;
    /// Eigenvector of the symmetrized system (unit norm).
    std::vector<double> level_vector;

    /// Level weights rescaled so that x_0 = 1.
    std::vector<double> relative_level_weights() const;
    /// Full eigenvector on H_d^i; requires d ≤ 64 and a materializable ball.
    WeightVector expand() const;
};

/// λ₁(H_d^i) from the reduced system; tol bounds the bisection bracket
/// (0 means run to machine precision).
HammingSolution hamming_lambda1_exact(std::uint64_t d, unsigned radius, double tol = 0.0);

/// The (i+1)×(i+1) matrix with (A y)_j = j·y_{j-1} + y_{j+1}, truncated at
/// both ends. Its largest eigenvalue is the limit of λ₁(H_d^i)/√d.
struct LimitConstantSystem {
    unsigned radius = 0;
    explicit LimitConstantSystem(unsigned radius) : radius(radius) {}
    /// Off-diagonal √j between rows j-1 and j.
    SymmetricTridiagonal symmetrized() const;
};

double limit_constant(unsigned radius);

}  // namespace cubespec
