#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <vector>

#include "cubespec/graph.hpp"
#include "cubespec/kernels.hpp"
#include "cubespec/spectral.hpp"

namespace cubespec {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::power: return "power";
        case Method::reduced_tridiagonal: return "reduced-tridiagonal";
        case Method::dense_small: return "dense-small";
    }
    return "?";
}

namespace {

WeightVector to_weight_vector(const VertexFamily& family, const double* x) {
    WeightVector out(family.dimension());
    for (std::size_t k = 0; k < family.size(); ++k) out.set(family[k], x[k]);
    return out;
}

}  // namespace

SpectralResult lambda1(const VertexFamily& family, const PowerOptions& options) {
    if (family.empty()) throw precondition_error("lambda1 of an empty family");
    if (!(options.tol > 0.0)) throw precondition_error("tolerance must be positive");

    const auto& kernels = simd::active_kernels();
    const InducedGraph graph(family);
    const auto ell = graph.ell();
    const std::size_t n = graph.order();

    // One padding slot at index n stays zero for the ELL gather.
    std::vector<double> x(n + 1, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n + 1, 0.0);
    x[n] = 0.0;

    SpectralResult result;
    result.method = Method::power;
    result.converged = false;
    double previous = std::numeric_limits<double>::quiet_NaN();
    double shifted_rho = 0.0;
    double residual = 0.0;
    double upper = std::numeric_limits<double>::infinity();

    std::size_t it = 0;
    for (;;) {
        ++it;
        kernels.ell_shifted_matvec(ell.columns.data(), ell.width, n, x.data(), y.data());
        y[n] = 0.0;
        shifted_rho = kernels.dot(x.data(), y.data(), n);
        residual = kernels.residual_inf(y.data(), x.data(), shifted_rho, n);
        upper = kernels.max_ratio(y.data(), x.data(), n);
        const double rho = shifted_rho - 1.0;
        const bool settled = std::fabs(rho - previous) < options.tol / 4;
        if (settled && residual < options.tol && upper - shifted_rho < options.tol) {
            result.converged = true;
            break;
        }
        if (it >= options.max_iterations) break;
        previous = rho;
        const double norm = std::sqrt(kernels.dot(y.data(), y.data(), n));
        kernels.scale(y.data(), 1.0 / norm, n);
        std::swap(x, y);
    }

    result.iterations = it;
    result.lambda1 = shifted_rho - 1.0;
    result.residual_inf = residual;
    if (std::isfinite(upper)) {
        result.error_bound = std::max(upper - shifted_rho, residual);
    } else {
        double r2 = 0.0;
        for (std::size_t k = 0; k < n; ++k) r2 += (y[k] - shifted_rho * x[k]) * (y[k] - shifted_rho * x[k]);
        result.error_bound = std::max(std::sqrt(r2), residual);
    }
    result.eigenvector = to_weight_vector(family, x.data());
    return result;
}

SpectralResult lambda1_dense(const VertexFamily& family) {
    if (family.empty()) throw precondition_error("lambda1 of an empty family");
    if (family.size() > kDenseLimit) throw precondition_error("family too large for the dense solver");
    const InducedGraph graph(family);
    const auto n = static_cast<Eigen::Index>(graph.order());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        for (auto nb : graph.neighbours(static_cast<std::size_t>(k))) a(k, nb) = 1.0;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    Eigen::VectorXd v = solver.eigenvectors().col(n - 1).cwiseAbs();
    v.normalize();
    const double lambda = v.dot(a * v);
    const Eigen::VectorXd r = a * v - lambda * v;

    SpectralResult result;
    result.method = Method::dense_small;
    result.lambda1 = lambda;
    result.residual_inf = r.lpNorm<Eigen::Infinity>();
    result.error_bound = r.norm() + 64 * std::numeric_limits<double>::epsilon() * std::max(1.0, lambda);
    result.iterations = 0;
    result.eigenvector = to_weight_vector(family, v.data());
    return result;
}

SpectralResult lambda1_auto(const VertexFamily& family, double tol) {
    if (family.size() <= kDenseLimit) return lambda1_dense(family);
    return lambda1(family, PowerOptions{tol});
}

}  // namespace cubespec
