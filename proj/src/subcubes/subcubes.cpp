#include "cubespec/subcubes.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cubespec {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("subcube count exceeds 64 bits");
    return out;
}

std::uint64_t exact_binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (unsigned t = 1; t <= k; ++t) acc = acc * (n - k + t) / t;
    return static_cast<std::uint64_t>(acc);
}

/// T(2^k, d') = 2^{k-d'}·C(k, d')
std::uint64_t power_of_two_count(unsigned k, unsigned d_prime) {
    if (d_prime > k) return 0;
    const std::uint64_t b = exact_binomial(k, d_prime);
    const unsigned shift = k - d_prime;
    if (shift >= 64) throw std::overflow_error("subcube count exceeds 64 bits");
    const unsigned __int128 wide = static_cast<unsigned __int128>(b) << shift;
    if (wide > UINT64_MAX) throw std::overflow_error("subcube count exceeds 64 bits");
    return static_cast<std::uint64_t>(wide);
}

class InitialCountMemo {
public:
    std::uint64_t get(std::uint64_t n, int d_prime) {
        if (d_prime < 0 || n == 0) return 0;
        if (d_prime == 0) return n;
        if (std::has_single_bit(n))
            return power_of_two_count(static_cast<unsigned>(std::countr_zero(n)), static_cast<unsigned>(d_prime));
        {
            std::lock_guard lock(mutex_);
            if (auto it = table_.find({n, d_prime}); it != table_.end()) return it->second;
        }
        const std::uint64_t r = std::bit_floor(n);
        const std::uint64_t m = n - r;
        const std::uint64_t value = checked_add(checked_add(get(r, d_prime), get(m, d_prime)), get(m, d_prime - 1));
        std::lock_guard lock(mutex_);
        table_.emplace(std::pair{n, d_prime}, value);
        return value;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::uint64_t, int>, std::uint64_t> table_;
};

InitialCountMemo& memo() {
    static InitialCountMemo instance;
    return instance;
}

double polynomial_binomial(double x, unsigned k) {
    double acc = 1.0;
    for (unsigned t = 0; t < k; ++t) acc *= (x - t) / (t + 1);
    return acc;
}

}  // namespace

SubcubeCount count_subcubes(const VertexFamily& family, unsigned d_prime) {
    const unsigned d = family.dimension();
    if (d_prime > d) throw precondition_error("subcube dimension exceeds cube dimension");
    SubcubeCount out{d_prime, 0};
    if (d_prime == 0) {
        out.count = family.size();
        return out;
    }
    std::vector<unsigned> up;
    std::vector<unsigned> pick;
    for (Vertex base : family) {
        up.clear();
        for (unsigned j = 1; j <= d; ++j)
            if (!base.contains(j) && family.contains(base.with(j))) up.push_back(j);
        if (up.size() < d_prime) continue;
        // Walk all d'-subsets of the up-directions in lexicographic order.
        pick.resize(d_prime);
        for (unsigned t = 0; t < d_prime; ++t) pick[t] = t;
        for (;;) {
            std::uint64_t dirs = 0;
            for (unsigned t : pick) dirs |= std::uint64_t{1} << (up[t] - 1);
            bool inside = true;
            // Every sub-mask of dirs, base plus the corner, must be present.
            for (std::uint64_t sub = dirs; inside; sub = (sub - 1) & dirs) {
                if (!family.contains(Vertex::from_mask(base.mask() | sub))) inside = false;
                if (sub == 0) break;
            }
            if (inside) ++out.count;
            int t = static_cast<int>(d_prime) - 1;
            while (t >= 0 && pick[t] == up.size() - d_prime + t) --t;
            if (t < 0) break;
            ++pick[t];
            for (unsigned s = t + 1; s < d_prime; ++s) pick[s] = pick[s - 1] + 1;
        }
    }
    return out;
}

SubcubeCount initial_count(std::uint64_t n, unsigned d_prime) {
    return {d_prime, memo().get(n, static_cast<int>(d_prime))};
}

double generalized_binomial(double x, unsigned k) {
    if (x < static_cast<double>(k)) return 0.0;
    return polynomial_binomial(x, k);
}

double subcube_bound_smooth(std::uint64_t n, unsigned d_prime) {
    if (n < 1) throw precondition_error("subcube bounds need n >= 1");
    const double nn = static_cast<double>(n);
    return std::ldexp(nn, -static_cast<int>(d_prime)) * generalized_binomial(std::log2(nn), d_prime);
}

double subcube_bound_integer(std::uint64_t n, unsigned d_prime) {
    if (n < 1) throw precondition_error("subcube bounds need n >= 1");
    const double nn = static_cast<double>(n);
    return std::ldexp(nn, -static_cast<int>(d_prime)) * generalized_binomial(std::log2(nn) + 1.0, d_prime);
}

double smooth_step_gap(double alpha, double beta, unsigned d_prime) {
    const double a2 = std::log2(2.0 + alpha) + beta;
    const double a1 = std::log2(1.0 + alpha) + beta;
    const double lower = d_prime == 0 ? 0.0 : polynomial_binomial(beta, d_prime - 1);
    return (2.0 + alpha) * polynomial_binomial(a2, d_prime) - (1.0 + alpha) * polynomial_binomial(a1, d_prime) -
           polynomial_binomial(beta, d_prime) - 2.0 * lower;
}

}  // namespace cubespec
