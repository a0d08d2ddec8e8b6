#include "cubespec/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cubespec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double off_at(const SymmetricTridiagonal& t, std::size_t k) { return k < t.off.size() ? t.off[k] : 0.0; }

/// Solves (T - shift I) x = rhs in place with partial pivoting. Exactly zero
/// pivots are replaced by a tiny multiple of the matrix scale.
void shifted_solve(const SymmetricTridiagonal& t, double shift, std::vector<double>& rhs) {
    const std::size_t n = t.size();
    std::vector<double> dl(n > 0 ? n - 1 : 0), d(n), du(n > 0 ? n - 1 : 0), du2(n > 1 ? n - 2 : 0, 0.0);
    std::vector<bool> swapped(n, false);
    double scale = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        d[k] = t.diag[k] - shift;
        scale = std::max(scale, std::fabs(t.diag[k]) + std::fabs(off_at(t, k)) + std::fabs(off_at(t, k + 1)));
    }
    for (std::size_t k = 0; k + 1 < n; ++k) dl[k] = du[k] = off_at(t, k + 1);
    const double tiny = std::max(scale, 1.0) * kEps;

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::fabs(d[i]) >= std::fabs(dl[i])) {
            if (d[i] == 0.0) d[i] = tiny;
            const double fact = dl[i] / d[i];
            dl[i] = fact;
            d[i + 1] -= fact * du[i];
        } else {
            const double fact = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = fact;
            const double temp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = temp - fact * d[i + 1];
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du[i + 1];
            }
            swapped[i] = true;
        }
    }
    if (n > 0 && d[n - 1] == 0.0) d[n - 1] = tiny;

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!swapped[i]) {
            rhs[i + 1] -= dl[i] * rhs[i];
        } else {
            const double temp = rhs[i];
            rhs[i] = rhs[i + 1];
            rhs[i + 1] = temp - dl[i] * rhs[i];
        }
    }
    for (std::size_t k = n; k-- > 0;) {
        double v = rhs[k];
        if (k + 1 < n) v -= du[k] * rhs[k + 1];
        if (k + 2 < n) v -= du2[k] * rhs[k + 2];
        rhs[k] = v / d[k];
    }
}

void normalize(std::vector<double>& v) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
}

}  // namespace

std::size_t SymmetricTridiagonal::count_below(double x) const {
    std::size_t count = 0;
    double q = 1.0;
    const double tiny = std::numeric_limits<double>::min();
    for (std::size_t k = 0; k < size(); ++k) {
        const double b = off_at(*this, k);
        q = (diag[k] - x) - (k == 0 ? 0.0 : b * b / q);
        if (q == 0.0) q = -tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

double SymmetricTridiagonal::gershgorin_upper() const {
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < size(); ++k)
        hi = std::max(hi, diag[k] + std::fabs(off_at(*this, k)) + std::fabs(off_at(*this, k + 1)));
    return hi;
}

double SymmetricTridiagonal::gershgorin_lower() const {
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < size(); ++k)
        lo = std::min(lo, diag[k] - std::fabs(off_at(*this, k)) - std::fabs(off_at(*this, k + 1)));
    return lo;
}

TridiagonalEigenpair top_eigenpair(const SymmetricTridiagonal& t, double tol) {
    const std::size_t n = t.size();
    if (n == 0) throw std::invalid_argument("empty tridiagonal matrix");
    if (t.off.size() > n) throw std::invalid_argument("off-diagonal longer than the matrix");

    TridiagonalEigenpair out;
    const double span = std::max({std::fabs(t.gershgorin_upper()), std::fabs(t.gershgorin_lower()), 1.0});
    double hi = t.gershgorin_upper() + 2 * kEps * span;
    double lo = t.gershgorin_lower() - 2 * kEps * span;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        ++out.bisection_steps;
        if (t.count_below(mid) == n)
            hi = mid;
        else
            lo = mid;
    }
    out.value = 0.5 * (lo + hi) + 0.0;  // no negative zero for 1x1 systems
    out.bracket = 0.5 * (hi - lo);

    std::vector<double> v(n, 1.0);
    for (int pass = 0; pass < 3; ++pass) {
        shifted_solve(t, out.value, v);
        normalize(v);
    }
    double sum = 0.0;
    for (double x : v) sum += x;
    if (sum < 0)
        for (double& x : v) x = -x;

    for (std::size_t k = 0; k < n; ++k) {
        double tv = t.diag[k] * v[k];
        if (k > 0) tv += off_at(t, k) * v[k - 1];
        if (k + 1 < n) tv += off_at(t, k + 1) * v[k + 1];
        out.residual_inf = std::max(out.residual_inf, std::fabs(tv - out.value * v[k]));
    }
    out.vector = std::move(v);
    return out;
}

}  // namespace cubespec
