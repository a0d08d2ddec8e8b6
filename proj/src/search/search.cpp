#include "cubespec/search.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "cubespec/spectral.hpp"

namespace cubespec {

namespace {

/// Down-set generation in the order where T covers S if T = S + a or T is S
/// with one element a replaced by a + 1. Masks strictly increase along covers,
/// so the canonical parent of a down-set is obtained by deleting its maximal
/// element of largest mask.
class CompressedWalker {
public:
    CompressedWalker(std::uint64_t n, unsigned cap, const std::function<bool(const VertexFamily&)>& visit)
        : n_(n), cap_(cap), visit_(visit) {}

    bool run() {
        members_.push_back(0);
        return descend();
    }

private:
    bool has(std::uint64_t m) const { return std::binary_search(members_.begin(), members_.end(), m); }

    bool lower_covers_present(std::uint64_t t) const {
        for (unsigned a = 1; a <= cap_; ++a) {
            const std::uint64_t bit = std::uint64_t{1} << (a - 1);
            if (!(t & bit)) continue;
            if (!has(t & ~bit)) return false;
            if (a >= 2 && !(t & (bit >> 1)) && !has((t & ~bit) | (bit >> 1))) return false;
        }
        return true;
    }

    template <class F>
    void for_upper_covers(std::uint64_t s, F&& f) const {
        for (unsigned a = 1; a <= cap_; ++a) {
            const std::uint64_t bit = std::uint64_t{1} << (a - 1);
            if (!(s & bit)) {
                f(s | bit);
            } else if (a < cap_ && !(s & (bit << 1))) {
                f((s & ~bit) | (bit << 1));
            }
        }
    }

    bool is_maximal(std::uint64_t s) const {
        bool maximal = true;
        for_upper_covers(s, [&](std::uint64_t t) { maximal = maximal && !has(t); });
        return maximal;
    }

    bool descend() {
        if (members_.size() == n_) {
            std::vector<Vertex> vs;
            vs.reserve(members_.size());
            for (auto m : members_) vs.push_back(Vertex::from_mask(m));
            return visit_(VertexFamily(cap_, std::move(vs)));
        }
        std::vector<std::uint64_t> candidates;
        for (auto s : members_)
            for_upper_covers(s, [&](std::uint64_t t) {
                if (!has(t)) candidates.push_back(t);
            });
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        for (auto x : candidates) {
            if (!lower_covers_present(x)) continue;
            // x must end up as the largest maximal element of the child.
            bool canonical = true;
            for (auto y : members_) {
                if (y > x && is_maximal(y)) {
                    canonical = false;
                    break;
                }
            }
            if (!canonical) continue;
            members_.insert(std::upper_bound(members_.begin(), members_.end(), x), x);
            const bool keep_going = descend();
            members_.erase(std::lower_bound(members_.begin(), members_.end(), x));
            if (!keep_going) return false;
        }
        return true;
    }

    std::uint64_t n_;
    unsigned cap_;
    const std::function<bool(const VertexFamily&)>& visit_;
    std::vector<std::uint64_t> members_;
};

double dense_top_eigenvalue(const std::vector<std::uint64_t>& masks) {
    const auto n = static_cast<Eigen::Index>(masks.size());
    if (n <= 1) return 0.0;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = r + 1; c < n; ++c)
            if (std::popcount(masks[r] ^ masks[c]) == 1) a(r, c) = a(c, r) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(n - 1);
}

double binomial_double(double n, double k) {
    if (k < 0 || k > n) return 0.0;
    return std::round(std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)));
}

}  // namespace

unsigned worker_threads() {
    if (const char* env = std::getenv("CUBE_SPECTRA_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

bool for_each_compressed(std::uint64_t n, unsigned cap_dim, const std::function<bool(const VertexFamily&)>& visit) {
    if (n == 0) throw precondition_error("family size must be at least 1");
    if (cap_dim < 1 || cap_dim > kMaxDimension) throw precondition_error("cap_dim must be in 1..64");
    if (cap_dim < 64 && n > (std::uint64_t{1} << cap_dim))
        throw precondition_error("cap_dim too small: no compressed family of size " + std::to_string(n) +
                                 " fits in Q_" + std::to_string(cap_dim));
    CompressedWalker walker(n, cap_dim, visit);
    return walker.run();
}

std::vector<VertexFamily> enumerate_compressed(std::uint64_t n, unsigned cap_dim) {
    std::vector<VertexFamily> out;
    for_each_compressed(n, cap_dim, [&](const VertexFamily& f) {
        out.push_back(f);
        return true;
    });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

SearchResult max_lambda1(std::uint64_t n, unsigned d, const SearchOptions& options) {
    if (d > kMaxDimension) throw precondition_error("dimension exceeds 64");
    if (n == 0 || (d < 64 && n > (std::uint64_t{1} << d))) throw precondition_error("need 1 <= n <= 2^d");
    SearchResult out;
    out.n = n;
    out.d = d;
    out.restricted = d + 1 < n;
    const unsigned cap = static_cast<unsigned>(std::clamp<std::uint64_t>(n - 1, 1, d));

    std::vector<VertexFamily> families;
    const bool finished = for_each_compressed(n, cap, [&](const VertexFamily& f) {
        if (options.budget != 0 && families.size() >= options.budget) return false;
        families.push_back(f.with_dimension(d));
        return true;
    });
    out.partial = !finished;
    out.search_space_size = families.size();

    std::vector<double> values(families.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < families.size(); k = next++)
            values[k] = lambda1_auto(families[k], options.tol).lambda1;
    };
    const unsigned threads = std::min<std::size_t>(worker_threads(), std::max<std::size_t>(1, families.size() / 8));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }

    std::vector<std::size_t> order(families.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b]) return values[a] > values[b];
        return canonical_less(families[a], families[b]);
    });
    if (order.empty()) return out;

    out.best_lambda1 = values[order.front()];
    for (auto k : order)
        if (values[k] >= out.best_lambda1 - options.tie_tolerance) out.maximizers.push_back(families[k]);
    std::sort(out.maximizers.begin(), out.maximizers.end(), canonical_less);
    out.maximizer = out.maximizers.front();
    for (std::size_t r = 0; r < std::min(options.top_k, order.size()); ++r)
        out.runner_ups.push_back({values[order[r]], families[order[r]]});
    return out;
}

OracleResult brute_force_max_lambda1(std::uint64_t n, unsigned d, std::uint64_t max_subsets) {
    if (d > 26) throw precondition_error("brute force needs d <= 26");
    const std::uint64_t total = std::uint64_t{1} << d;
    if (n == 0 || n > total) throw precondition_error("need 1 <= n <= 2^d");
    if (binomial_double(static_cast<double>(total), static_cast<double>(n)) > static_cast<double>(max_subsets))
        throw precondition_error("too many subsets for brute force");

    OracleResult out;
    out.n = n;
    out.d = d;
    out.best_lambda1 = -1.0;
    constexpr double kTie = 1e-9;
    std::vector<std::uint64_t> pick(n);
    for (std::uint64_t k = 0; k < n; ++k) pick[k] = k;
    for (;;) {
        ++out.subsets_tried;
        const double value = dense_top_eigenvalue(pick);
        if (value > out.best_lambda1 + kTie) {
            out.best_lambda1 = value;
            out.ties_found = 1;
            std::vector<Vertex> vs;
            for (auto m : pick) vs.push_back(Vertex::from_mask(m));
            out.maximizer = VertexFamily(d, std::move(vs));
        } else if (value >= out.best_lambda1 - kTie) {
            ++out.ties_found;
        }
        std::int64_t t = static_cast<std::int64_t>(n) - 1;
        while (t >= 0 && pick[t] == total - n + t) --t;
        if (t < 0) break;
        ++pick[t];
        for (std::uint64_t s = t + 1; s < n; ++s) pick[s] = pick[s - 1] + 1;
    }
    return out;
}

std::vector<StarRegimeRow> verify_star_regime(std::uint64_t n_lo, std::uint64_t n_hi, unsigned d,
                                              const SearchOptions& options) {
    if (n_lo < 1 || n_hi > d || n_lo > n_hi) throw precondition_error("star regime needs 1 <= n_lo <= n_hi <= d");
    std::vector<StarRegimeRow> rows;
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
        std::vector<Vertex> star{Vertex::from_mask(0)};
        for (unsigned j = 1; j < n; ++j) star.push_back(Vertex::from_elements({j}));
        const VertexFamily star_family(d, std::move(star));
        const auto result = max_lambda1(n, d, options);
        StarRegimeRow row;
        row.n = n;
        row.best_lambda1 = result.best_lambda1;
        row.star_lambda1 = std::sqrt(static_cast<double>(n - 1));
        row.star_optimal = std::find(result.maximizers.begin(), result.maximizers.end(), star_family) !=
                           result.maximizers.end();
        row.star_unique = row.star_optimal && result.maximizers.size() == 1;
        row.winner = result.maximizer;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace cubespec
