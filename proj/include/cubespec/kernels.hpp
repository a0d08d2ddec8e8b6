#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cubespec::simd {

/// Data-parallel inner loops used by the eigensolvers and the Rayleigh
/// quotient. Each ISA provides one table; all tables compute the same
/// quantities up to floating-point reassociation.
struct KernelTable {
    std::string_view name;

    double (*dot)(const double* a, const double* b, std::size_t n);

    /// y[k] = x[k] + Σ_s x[cols[s*n + k]] for a column-major ELL table of
    /// the given width. x must have n + 1 entries with x[n] == 0.
    void (*ell_shifted_matvec)(const std::int32_t* cols, std::size_t width, std::size_t n, const double* x,
                               double* y);

    /// max_k |y[k] - rho * x[k]|
    double (*residual_inf)(const double* y, const double* x, double rho, std::size_t n);

    /// max_k y[k] / x[k]; +inf if some x[k] <= 0.
    double (*max_ratio)(const double* y, const double* x, std::size_t n);

    /// x[k] *= a
    void (*scale)(double* x, double a, std::size_t n);

    /// Σ_{j=0}^{d-1} Σ_{S: bit j clear} v[S] * v[S | 2^j] for a dense vector of
    /// length 2^d.
    double (*cube_edge_sum)(const double* v, unsigned d);
};

const KernelTable& scalar_kernels();
/// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_kernels();

/// Selected once per process: AVX2 when available, unless CUBE_SPECTRA_SIMD
/// is set to "scalar".
const KernelTable& active_kernels();

}  // namespace cubespec::simd
