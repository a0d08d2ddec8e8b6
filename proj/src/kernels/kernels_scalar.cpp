#include <cmath>
#include <limits>

#include "cubespec/kernels.hpp"

namespace cubespec::simd {

namespace {

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += a[k] * b[k];
    return s;
}

void ell_shifted_matvec(const std::int32_t* cols, std::size_t width, std::size_t n, const double* x, double* y) {
    for (std::size_t k = 0; k < n; ++k) y[k] = x[k];
    for (std::size_t s = 0; s < width; ++s) {
        const std::int32_t* slot = cols + s * n;
        for (std::size_t k = 0; k < n; ++k) y[k] += x[slot[k]];
    }
}

double residual_inf(const double* y, const double* x, double rho, std::size_t n) {
    double m = 0.0;
    for (std::size_t k = 0; k < n; ++k) m = std::fmax(m, std::fabs(y[k] - rho * x[k]));
    return m;
}

double max_ratio(const double* y, const double* x, std::size_t n) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        if (!(x[k] > 0.0)) return std::numeric_limits<double>::infinity();
        m = std::fmax(m, y[k] / x[k]);
    }
    return m;
}

void scale(double* x, double a, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) x[k] *= a;
}

double cube_edge_sum(const double* v, unsigned d) {
    const std::size_t size = std::size_t{1} << d;
    double total = 0.0;
    for (unsigned j = 0; j < d; ++j) {
        const std::size_t half = std::size_t{1} << j;
        for (std::size_t base = 0; base < size; base += 2 * half) total += dot(v + base, v + base + half, half);
    }
    return total;
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", dot, ell_shifted_matvec, residual_inf, max_ratio, scale, cube_edge_sum};
    return table;
}

}  // namespace cubespec::simd
