#pragma once

#include <cstddef>
#include <vector>

namespace cubespec {

/// Real symmetric tridiagonal matrix: diagonal a[0..n-1], off-diagonal
/// b[1..n-1] between rows k-1 and k (b[0] is unused).
struct SymmetricTridiagonal {
    std::vector<double> diag;
    std::vector<double> off;

    std::size_t size() const { return diag.size(); }

    /// Number of eigenvalues strictly below x (Sturm count via the LDLᵀ
    /// pivot recurrence).
    std::size_t count_below(double x) const;

    /// Gershgorin enclosure of the spectrum.
    double gershgorin_upper() const;
    double gershgorin_lower() const;
};

struct TridiagonalEigenpair {
    double value = 0.0;
    /// Half-width of the final bisection bracket.
    double bracket = 0.0;
    std::vector<double> vector;
    std::size_t bisection_steps = 0;
    /// ||T v - value v||_∞
    double residual_inf = 0.0;
};

/// Largest eigenvalue by Sturm bisection until the bracket stops shrinking
/// or falls under tol, then its eigenvector by inverse iteration with
/// partial pivoting. The vector has unit 2-norm and nonnegative sum.
TridiagonalEigenpair top_eigenpair(const SymmetricTridiagonal& t, double tol = 0.0);

}  // namespace cubespec
