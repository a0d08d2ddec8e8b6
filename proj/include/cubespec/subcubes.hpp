#pragma once

#include <cstdint>

#include "cubespec/family.hpp"

namespace cubespec {

struct SubcubeCount {
    unsigned d_prime = 0;
    std::uint64_t count = 0;
    bool operator==(const SubcubeCount&) const = default;
};

/// Number of d'-dimensional subcubes of Q_d lying entirely inside F. Each
/// subcube is counted once, from its minimum corner.
SubcubeCount count_subcubes(const VertexFamily& family, unsigned d_prime);

/// Subcube count of the initial segment of size n in binary order, by the
/// power-of-two decomposition T(n) = T(r) + T(m) + T(m, d'-1). Memoized and
/// safe to call from several threads. Throws std::overflow_error if the
/// count does not fit in 64 bits.
SubcubeCount initial_count(std::uint64_t n, unsigned d_prime);

/// Π_{t<k}(x-t)/k!, clamped to 0 when x < k.
double generalized_binomial(double x, unsigned k);

/// (n/2^{d'})·C(log₂ n, d')
double subcube_bound_smooth(std::uint64_t n, unsigned d_prime);

/// (n/2^{d'})·C(log₂ n + 1, d'); holds for every family of size n.
double subcube_bound_integer(std::uint64_t n, unsigned d_prime);

/// The expression the smooth bound's induction step needs to be nonnegative:
/// (2+α)C(log(2+α)+β, d) - (1+α)C(log(1+α)+β, d) - C(β, d) - 2C(β, d-1),
/// with unclamped polynomial binomials. Used for numeric audits only.
double smooth_step_gap(double alpha, double beta, unsigned d_prime);

}  // namespace cubespec
