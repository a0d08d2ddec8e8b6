#include "cubespec/hamming.hpp"

#include <cmath>

#include "cubespec/family.hpp"

namespace cubespec {

namespace {

double log_binomial(double n, double k) { return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1); }

}  // namespace

ReducedLevelSystem::ReducedLevelSystem(std::uint64_t d, unsigned radius) : d(d), radius(radius) {
    if (radius > d) throw precondition_error("Hamming radius exceeds dimension");
    sub.assign(radius + 1, 0.0);
    sup.assign(radius + 1, 0.0);
    for (unsigned j = 0; j <= radius; ++j) {
        if (j > 0) sub[j] = static_cast<double>(j);
        if (j < radius) sup[j] = static_cast<double>(d - j);
    }
}

SymmetricTridiagonal ReducedLevelSystem::symmetrized() const {
    SymmetricTridiagonal t;
    t.diag.assign(radius + 1, 0.0);
    t.off.assign(radius + 1, 0.0);
    for (unsigned j = 1; j <= radius; ++j) t.off[j] = std::sqrt(sub[j] * sup[j - 1]);
    return t;
}

std::vector<double> HammingSolution::relative_level_weights() const {
    std::vector<double> out(level_weights);
    for (double& x : out) x /= level_weights.front();
    return out;
}

WeightVector HammingSolution::expand() const {
    if (d > kMaxDimension) throw precondition_error("cannot expand an eigenvector beyond d = 64");
    const VertexFamily ball = hamming_ball(static_cast<unsigned>(d), radius);
    WeightVector out(static_cast<unsigned>(d));
    for (Vertex v : ball) out.set(v, level_weights[v.size()]);
    return out;
}

HammingSolution hamming_lambda1_exact(std::uint64_t d, unsigned radius, double tol) {
    if (d < 1) throw precondition_error("dimension must be positive");
    const ReducedLevelSystem system(d, radius);
    const auto pair = top_eigenpair(system.symmetrized(), tol);

    HammingSolution out;
    out.d = d;
    out.radius = radius;
    out.lambda1 = pair.value;
    out.residual_inf = pair.residual_inf;
    out.error_bound = std::max(pair.bracket, pair.residual_inf);
    out.iterations = pair.bisection_steps;
    out.level_vector = pair.vector;
    out.level_weights.resize(radius + 1);
    // z_j = √C(d,j) · x_j undoes the diagonal similarity.
    for (unsigned j = 0; j <= radius; ++j)
        out.level_weights[j] = pair.vector[j] * std::exp(-0.5 * log_binomial(static_cast<double>(d), j));
    return out;
}

SymmetricTridiagonal LimitConstantSystem::symmetrized() const {
    SymmetricTridiagonal t;
    t.diag.assign(radius + 1, 0.0);
    t.off.assign(radius + 1, 0.0);
    for (unsigned j = 1; j <= radius; ++j) t.off[j] = std::sqrt(static_cast<double>(j));
    return t;
}

double limit_constant(unsigned radius) {
    if (radius < 1) throw precondition_error("limit constants are indexed from 1");
    return top_eigenpair(LimitConstantSystem(radius).symmetrized()).value;
}

}  // namespace cubespec
