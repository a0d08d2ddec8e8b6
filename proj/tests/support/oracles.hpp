#pragma once

// Brute-force reference implementations used only by tests. They work on raw
// masks and share no code with the library beyond the Vertex/VertexFamily
// containers.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "cubespec/family.hpp"

namespace oracle {

using Masks = std::vector<std::uint64_t>;

inline Masks masks_of(const cubespec::VertexFamily& f) {
    Masks out;
    for (auto v : f) out.push_back(v.mask());
    return out;
}

inline cubespec::VertexFamily family_of(unsigned d, const Masks& masks) {
    std::vector<cubespec::Vertex> vs;
    for (auto m : masks) vs.push_back(cubespec::Vertex::from_mask(m));
    return cubespec::VertexFamily(d, std::move(vs));
}

/// Family with members {k : bit k of subset_bits set}, inside Q_d.
inline cubespec::VertexFamily family_from_bits(unsigned d, std::uint64_t subset_bits) {
    Masks masks;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << d); ++k)
        if (subset_bits >> k & 1) masks.push_back(k);
    return family_of(d, masks);
}

inline Eigen::MatrixXd adjacency(const Masks& masks) {
    const auto n = static_cast<Eigen::Index>(masks.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
            if (std::popcount(masks[r] ^ masks[c]) == 1) a(r, c) = 1.0;
    return a;
}

inline double lambda1(const Masks& masks) {
    if (masks.size() <= 1) return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s(adjacency(masks), Eigen::EigenvaluesOnly);
    return s.eigenvalues().maxCoeff();
}

inline double lambda1(const cubespec::VertexFamily& f) { return lambda1(masks_of(f)); }

/// Plain power iteration on A + I over a hash map of masks, for families too
/// large for a dense eigensolve. Runs a fixed, generous number of steps.
inline double lambda1_sparse(const Masks& masks, unsigned d, int steps = 5000) {
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t k = 0; k < masks.size(); ++k) index.emplace(masks[k], k);
    std::vector<std::vector<std::size_t>> nb(masks.size());
    for (std::size_t k = 0; k < masks.size(); ++k)
        for (unsigned b = 0; b < d; ++b)
            if (auto it = index.find(masks[k] ^ (std::uint64_t{1} << b)); it != index.end()) nb[k].push_back(it->second);
    std::vector<double> x(masks.size(), 1.0), y(masks.size());
    double rho = 0.0;
    for (int s = 0; s < steps; ++s) {
        double norm = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) {
            y[k] = x[k];
            for (auto c : nb[k]) y[k] += x[c];
            norm += y[k] * y[k];
        }
        double xy = 0.0, xx = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) {
            xy += x[k] * y[k];
            xx += x[k] * x[k];
        }
        rho = xy / xx - 1.0;
        norm = std::sqrt(norm);
        for (std::size_t k = 0; k < x.size(); ++k) x[k] = y[k] / norm;
    }
    return rho;
}

inline std::size_t edge_count(const Masks& masks) {
    std::size_t e = 0;
    for (std::size_t r = 0; r < masks.size(); ++r)
        for (std::size_t c = r + 1; c < masks.size(); ++c) e += std::popcount(masks[r] ^ masks[c]) == 1;
    return e;
}

/// Closed walks of length len, by integer matrix powers.
inline long long trace_power(const Masks& masks, unsigned len) {
    const auto n = static_cast<Eigen::Index>(masks.size());
    Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> a(n, n), p;
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) a(r, c) = std::popcount(masks[r] ^ masks[c]) == 1;
    p = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>::Identity(n, n);
    for (unsigned k = 0; k < len; ++k) p = p * a;
    return p.trace();
}

/// Number of d'-subcubes inside the family, by listing every subcube of Q_d
/// as (free coordinates T, fixed part B with B ∩ T = ∅).
inline std::uint64_t subcube_count(unsigned d, const Masks& masks, unsigned dprime) {
    std::vector<char> in(std::size_t{1} << d, 0);
    for (auto m : masks) in[m] = 1;
    std::uint64_t count = 0;
    const std::uint64_t all = (std::uint64_t{1} << d) - 1;
    for (std::uint64_t t = 0; t <= all; ++t) {
        if (static_cast<unsigned>(std::popcount(t)) != dprime) continue;
        const std::uint64_t rest = all & ~t;
        for (std::uint64_t b = rest;; b = (b - 1) & rest) {
            bool inside = true;
            for (std::uint64_t s = t;; s = (s - 1) & t) {
                if (!in[b | s]) {
                    inside = false;
                    break;
                }
                if (s == 0) break;
            }
            count += inside;
            if (b == 0) break;
        }
    }
    return count;
}

/// Down-closed and stable under every left shift j -> i (i < j).
inline bool is_compressed(unsigned d, const Masks& masks) {
    auto has = [&](std::uint64_t m) { return std::find(masks.begin(), masks.end(), m) != masks.end(); };
    for (auto s : masks)
        for (unsigned j = 0; j < d; ++j) {
            if (!(s >> j & 1)) continue;
            if (!has(s & ~(std::uint64_t{1} << j))) return false;
            for (unsigned i = 0; i < j; ++i)
                if (!(s >> i & 1) && !has((s & ~(std::uint64_t{1} << j)) | (std::uint64_t{1} << i))) return false;
        }
    return true;
}

inline double binomial(double n, double k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int t = 0; t < static_cast<int>(k); ++t) r = r * (n - t) / (t + 1);
    return r;
}

/// Random n-subset of V(Q_d).
inline Masks random_subset(unsigned d, std::size_t n, std::mt19937_64& rng) {
    std::vector<std::uint64_t> all(std::size_t{1} << d);
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(n, all.size()));
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace oracle
