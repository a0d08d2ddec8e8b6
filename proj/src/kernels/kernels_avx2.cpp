// Built with -mavx2 -mfma. Nothing in here may run before the dispatcher has
// confirmed CPU support.

#include <immintrin.h>

#include <cmath>
#include <limits>

#include "cubespec/kernels.hpp"

namespace cubespec::simd {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_max_sd(lo, swapped));
}

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k + 4), _mm256_loadu_pd(b + k + 4), acc1);
    }
    for (; k + 4 <= n; k += 4) acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc0);
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; k < n; ++k) s += a[k] * b[k];
    return s;
}

void ell_shifted_matvec(const std::int32_t* cols, std::size_t width, std::size_t n, const double* x, double* y) {
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d acc = _mm256_loadu_pd(x + k);
        for (std::size_t s = 0; s < width; ++s) {
            const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(cols + s * n + k));
            acc = _mm256_add_pd(acc, _mm256_i32gather_pd(x, idx, 8));
        }
        _mm256_storeu_pd(y + k, acc);
    }
    for (; k < n; ++k) {
        double acc = x[k];
        for (std::size_t s = 0; s < width; ++s) acc += x[cols[s * n + k]];
        y[k] = acc;
    }
}

double residual_inf(const double* y, const double* x, double rho, std::size_t n) {
    const __m256d r = _mm256_set1_pd(rho);
    const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d m = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256d diff = _mm256_fnmadd_pd(r, _mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k));
        m = _mm256_max_pd(m, _mm256_and_pd(diff, abs_mask));
    }
    double out = hmax(m);
    for (; k < n; ++k) out = std::fmax(out, std::fabs(y[k] - rho * x[k]));
    return out;
}

double max_ratio(const double* y, const double* x, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    __m256d m = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d xv = _mm256_loadu_pd(x + k);
        // any lane with !(x > 0)
        if (_mm256_movemask_pd(_mm256_cmp_pd(xv, zero, _CMP_GT_OQ)) != 0xF)
            return std::numeric_limits<double>::infinity();
        m = _mm256_max_pd(m, _mm256_div_pd(_mm256_loadu_pd(y + k), xv));
    }
    double out = hmax(m);
    for (; k < n; ++k) {
        if (!(x[k] > 0.0)) return std::numeric_limits<double>::infinity();
        out = std::fmax(out, y[k] / x[k]);
    }
    return out;
}

void scale(double* x, double a, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) _mm256_storeu_pd(x + k, _mm256_mul_pd(_mm256_loadu_pd(x + k), av));
    for (; k < n; ++k) x[k] *= a;
}

double cube_edge_sum(const double* v, unsigned d) {
    const std::size_t size = std::size_t{1} << d;
    double total = 0.0;
    // Strides below one register: pair lanes within the same vector.
    for (unsigned j = 0; j < d && j < 2; ++j) {
        const std::size_t half = std::size_t{1} << j;
        for (std::size_t base = 0; base < size; base += 2 * half)
            for (std::size_t t = 0; t < half; ++t) total += v[base + t] * v[base + half + t];
    }
    for (unsigned j = 2; j < d; ++j) {
        const std::size_t half = std::size_t{1} << j;
        for (std::size_t base = 0; base < size; base += 2 * half) total += dot(v + base, v + base + half, half);
    }
    return total;
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable table{"avx2", dot, ell_shifted_matvec, residual_inf, max_ratio, scale, cube_edge_sum};
    return table;
}

}  // namespace cubespec::simd
