#pragma once

#include <cstddef>
#include <string_view>

#include "cubespec/family.hpp"
#include "cubespec/weight_vector.hpp"

namespace cubespec {

enum class Method { power, reduced_tridiagonal, dense_small };

std::string_view to_string(Method m);

/// Largest adjacency eigenvalue with a certified enclosure.
///
/// The true λ₁ lies in [lambda1 - error_bound, lambda1 + error_bound]; for the
/// power method the lower end is in fact lambda1 itself (a Rayleigh quotient).
struct SpectralResult {
    double lambda1 = 0.0;
    double error_bound = 0.0;
    /// Entrywise nonnegative, unit norm.
    WeightVector eigenvector{1};
    std::size_t iterations = 0;
    Method method = Method::power;
    /// ||A x - λ₁ x||_∞ for the returned pair.
    double residual_inf = 0.0;
    /// False when the iteration cap was hit; the bracket is then best effort.
    bool converged = true;
};

struct PowerOptions {
    double tol = 1e-10;
    std::size_t max_iterations = 1'000'000;
};

/// Power iteration on A + I for the induced subgraph Q_d[F].
///
/// The identity shift keeps the bipartite eigenvalue pair ±λ₁ from
/// oscillating. Stops once the Rayleigh quotient moves by less than tol/4,
/// the residual is below tol, and the Collatz-Wielandt bracket is narrower
/// than tol. The error bound is the Collatz-Wielandt upper bound minus the
/// Rayleigh quotient (falling back to ||Ax - ρx||₂ if an entry underflows),
/// never smaller than the ∞-norm residual.
SpectralResult lambda1(const VertexFamily& family, const PowerOptions& options = {});

/// Dense symmetric eigensolve for small families (|F| ≤ kDenseLimit).
SpectralResult lambda1_dense(const VertexFamily& family);

inline constexpr std::size_t kDenseLimit = 512;

/// lambda1_dense for small families, lambda1 otherwise.
SpectralResult lambda1_auto(const VertexFamily& family, double tol = 1e-10);

}  // namespace cubespec
