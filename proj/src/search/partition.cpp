#include "cubespec/partition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>

#include "cubespec/compress.hpp"

namespace cubespec {

namespace {

using Level = std::vector<Vertex>;

bool in_level(const Level& level, Vertex v) { return std::binary_search(level.begin(), level.end(), v); }

void normalize(Level& level) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
}

bool within_prefix(Vertex s, unsigned m) { return m >= 64 || (s.mask() >> m) == 0; }

std::size_t degree_in(const Level& level, Vertex s, unsigned d) {
    std::size_t deg = 0;
    for (unsigned j = 1; j <= d; ++j) deg += in_level(level, s.flipped(j)) ? 1 : 0;
    return deg;
}

Level block(const PartitionCertificate& cert, unsigned k) {
    Level out = cert.C[k];
    out.insert(out.end(), cert.D[k].begin(), cert.D[k].end());
    normalize(out);
    return out;
}

std::string fmt_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

void fail(PartitionReport& report, bool& flag, std::string message) {
    flag = false;
    if (report.failures.size() < 64) report.failures.push_back(std::move(message));
}

/// Everything except the comparison with a freshly built certificate.
void check_structure(const PartitionCertificate& cert, const VertexFamily& family, PartitionReport& report) {
    const unsigned d = cert.d;
    const unsigned M = cert.M;
    const double thr = cert.threshold();
    std::vector<Level> blocks;
    for (unsigned k = 0; k <= M; ++k) blocks.push_back(block(cert, k));

    // Where each vertex sits.
    std::map<Vertex, std::vector<unsigned>> block_of, ball_of;
    for (unsigned k = 0; k <= M; ++k) {
        for (Vertex s : cert.C[k]) block_of[s].push_back(k);
        for (Vertex s : cert.D[k]) block_of[s].push_back(k);
    }
    for (unsigned b = 0; b < cert.star_balls.size(); ++b)
        for (Vertex s : cert.star_balls[b].members) ball_of[s].push_back(b);

    // Part 1 and assertion 7.
    for (const auto& [v, balls] : ball_of) {
        if (balls.size() > 1) {
            const auto& a = cert.star_balls[balls[0]];
            const auto& b = cert.star_balls[balls[1]];
            const std::string msg = v.to_string() + " lies in N^(" + std::to_string(a.k) + ")_" + a.centre.to_string() +
                                    " and N^(" + std::to_string(b.k) + ")_" + b.centre.to_string();
            fail(report, report.parts[0], "part 1: " + msg);
            fail(report, report.assertions[6], "assertion 7: " + msg);
        }
    }

    // Part 2: every vertex of G in exactly one block, nothing else listed.
    for (Vertex v : family) {
        const auto it = block_of.find(v);
        const std::size_t hits = it == block_of.end() ? 0 : it->second.size();
        if (hits != 1)
            fail(report, report.parts[1], "part 2: " + v.to_string() + " lies in " + std::to_string(hits) + " blocks");
    }
    for (const auto& [v, ks] : block_of)
        if (!family.contains(v)) fail(report, report.parts[1], "part 2: " + v.to_string() + " is not a vertex of G");

    // Part 3: each edge of G inside some block or some star ball.
    auto shares = [](const auto& map, Vertex a, Vertex b) {
        const auto ia = map.find(a);
        const auto ib = map.find(b);
        if (ia == map.end() || ib == map.end()) return false;
        for (auto x : ia->second)
            if (std::find(ib->second.begin(), ib->second.end(), x) != ib->second.end()) return true;
        return false;
    };
    for (Vertex s : family)
        for (unsigned j = 1; j <= d; ++j) {
            if (s.contains(j)) continue;
            const Vertex t = s.with(j);
            if (!family.contains(t)) continue;
            if (!shares(block_of, s, t) && !shares(ball_of, s, t))
                fail(report, report.parts[2], "part 3: edge " + s.to_string() + "-" + t.to_string() + " is not covered");
        }

    // Part 4 and assertion 5.
    for (unsigned k = 0; k <= M; ++k) {
        std::size_t max_deg = 0;
        Vertex argmax;
        for (Vertex s : blocks[k]) {
            const auto deg = degree_in(blocks[k], s, d);
            if (deg > max_deg) max_deg = deg, argmax = s;
        }
        if (static_cast<double>(max_deg) > thr)
            fail(report, report.parts[3],
                 "part 4: block " + std::to_string(k) + " has degree " + std::to_string(max_deg) + " at " +
                     argmax.to_string() + " > " + fmt_number(thr));
        if (max_deg > cert.m[k])
            fail(report, report.assertions[4],
                 "assertion 5: block " + std::to_string(k) + " has degree " + std::to_string(max_deg) + " > m_" +
                     std::to_string(k) + " = " + std::to_string(cert.m[k]));
        if (static_cast<double>(cert.m[k]) > thr)
            fail(report, report.assertions[4],
                 "assertion 5: m_" + std::to_string(k) + " = " + std::to_string(cert.m[k]) + " > " + fmt_number(thr));
    }

    // Assertion 1: unique (j, T) with T ∈ D_j and S = T plus k-j elements
    // t_l > m_{l-1}, one per level.
    for (unsigned k = 0; k <= M; ++k) {
        for (Vertex s : blocks[k]) {
            unsigned reps = 0;
            const std::uint64_t full = s.mask();
            for (std::uint64_t x = full;; x = (x - 1) & full) {
                const unsigned extra = static_cast<unsigned>(std::popcount(x));
                if (extra <= k) {
                    const unsigned j = k - extra;
                    if (in_level(cert.D[j], Vertex::from_mask(full & ~x))) {
                        bool ok = true;
                        unsigned level = j + 1;
                        for (std::uint64_t rest = x; rest; rest &= rest - 1, ++level)
                            if (static_cast<unsigned>(std::countr_zero(rest)) + 1 <= cert.m[level - 1]) ok = false;
                        reps += ok ? 1 : 0;
                    }
                }
                if (x == 0) break;
            }
            if (reps != 1)
                fail(report, report.assertions[0],
                     "assertion 1: " + s.to_string() + " in block " + std::to_string(k) + " has " +
                         std::to_string(reps) + " representations");
        }
    }

    for (unsigned k = 0; k <= M; ++k) {
        // Assertion 2.
        const auto check = is_compressed(VertexFamily(d, cert.E[k]));
        if (!check.compressed)
            fail(report, report.assertions[1],
                 "assertion 2: E_" + std::to_string(k) + " is not fixed by " +
                     (check.violation ? check.violation->to_string() : std::string("?")));

        // Assertion 3.
        for (Vertex s : cert.E[k])
            for (unsigned j = 1; j <= d; ++j) {
                const Vertex t = s.flipped(j);
                if (!family.contains(t)) continue;
                const char* where = nullptr;
                if (k + 1 <= M && in_level(cert.D[k + 1], t)) where = "D_{k+1}";
                if (k + 2 <= M && in_level(cert.C[k + 2], t)) where = "C_{k+2}";
                if (k + 2 <= M && in_level(cert.D[k + 2], t)) where = "D_{k+2}";
                if (where)
                    fail(report, report.assertions[2],
                         "assertion 3: edge " + s.to_string() + "-" + t.to_string() + " from E_" + std::to_string(k) +
                             " into " + where);
            }

        // Assertion 4.
        if (k > 0)
            for (Vertex s : blocks[k])
                if (in_level(cert.E[k - 1], s))
                    fail(report, report.assertions[3],
                         "assertion 4: " + s.to_string() + " in block " + std::to_string(k) + " and in E_" +
                             std::to_string(k - 1));

        // Assertion 6.
        for (Vertex s : cert.A[M - k])
            if (!in_level(cert.E[k], s))
                fail(report, report.assertions[5],
                     "assertion 6: " + s.to_string() + " in A_" + std::to_string(M - k) + " but not in E_" +
                         std::to_string(k));
    }
    const Level everything(family.begin(), family.end());
    if (cert.E[M] != everything)
        fail(report, report.assertions[5], "assertion 6: E_" + std::to_string(M) + " differs from V(G)");
}

void compare_levels(PartitionReport& report, const char* name, unsigned k, const Level& got, const Level& want) {
    if (got == want) return;
    for (Vertex v : want)
        if (!in_level(got, v)) {
            fail(report, report.parts[1],
                 std::string("part 2: ") + name + "_" + std::to_string(k) + " is missing " + v.to_string());
            return;
        }
    for (Vertex v : got)
        if (!in_level(want, v)) {
            fail(report, report.parts[1],
                 std::string("part 2: ") + name + "_" + std::to_string(k) + " should not contain " + v.to_string());
            return;
        }
    fail(report, report.parts[1], std::string("part 2: ") + name + "_" + std::to_string(k) + " is malformed");
}

}  // namespace

PartitionCertificate build_partition(const VertexFamily& family, double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw precondition_error("epsilon must be positive");
    if (const auto check = is_compressed(family); !check.compressed)
        throw precondition_error("family is not compressed (" + check.violation->to_string() + " moves it)");

    PartitionCertificate cert;
    cert.epsilon = epsilon;
    cert.d = family.dimension();
    const unsigned d = cert.d;
    const double thr = cert.threshold();

    cert.A.emplace_back(family.begin(), family.end());
    for (;;) {
        const Level& prev = cert.A.back();
        Level next;
        for (Vertex s : prev)
            if (static_cast<double>(degree_in(prev, s, d)) >= thr) next.push_back(s);
        if (next.empty()) break;
        if (next.size() == prev.size()) {
            cert.core_nonempty = true;
            cert.core_level = static_cast<unsigned>(cert.A.size() - 1);
            break;
        }
        cert.A.push_back(std::move(next));
    }
    if (cert.core_nonempty) {
        const Level core = cert.A.back();
        cert.M = cert.core_level + d + 2;
        while (cert.A.size() <= cert.M) cert.A.push_back(core);
    } else {
        cert.M = static_cast<unsigned>(cert.A.size() - 1);
    }
    const unsigned M = cert.M;

    // k = 0
    std::vector<unsigned> b0{1};
    for (unsigned t = 2; t <= d; ++t)
        if (in_level(cert.A[M], Vertex::from_elements({t}))) b0.push_back(t);
    cert.B.push_back(b0);
    cert.m.push_back(b0.back());
    cert.C.emplace_back();
    Level d0;
    for (Vertex s : family)
        if (within_prefix(s, cert.m[0])) d0.push_back(s);
    cert.D.push_back(d0);
    cert.E.push_back(d0);

    for (unsigned k = 1; k <= M; ++k) {
        const unsigned prev_m = cert.m[k - 1];
        std::vector<unsigned> bk{prev_m + 1};
        Vertex base;
        bool base_fits = true;
        for (unsigned j = 0; j < k; ++j) {
            if (cert.m[j] + 1 > d) {
                base_fits = false;
                break;
            }
            base = base.with(cert.m[j] + 1);
        }
        if (base_fits)
            for (unsigned t = prev_m + 2; t <= d; ++t)
                if (in_level(cert.A[M - k], base.with(t))) bk.push_back(t);
        cert.B.push_back(bk);
        cert.m.push_back(bk.back());

        Level ck;
        for (const Level* source : {&cert.C[k - 1], &cert.D[k - 1]})
            for (Vertex s : *source)
                for (unsigned t = prev_m + 1; t <= d; ++t)
                    if (!s.contains(t) && family.contains(s.with(t))) ck.push_back(s.with(t));
        normalize(ck);

        Level dk;
        for (Vertex s : family)
            if (within_prefix(s, cert.m[k]) && !in_level(cert.E[k - 1], s) && !in_level(ck, s)) dk.push_back(s);

        Level ek = cert.E[k - 1];
        ek.insert(ek.end(), ck.begin(), ck.end());
        ek.insert(ek.end(), dk.begin(), dk.end());
        normalize(ek);

        cert.C.push_back(std::move(ck));
        cert.D.push_back(std::move(dk));
        cert.E.push_back(std::move(ek));
    }

    for (unsigned k = 0; k < M; ++k)
        for (Vertex s : cert.D[k]) {
            PartitionCertificate::StarBall ball{k, s, {s}};
            for (unsigned j = 1; j <= M - k; ++j)
                for (Vertex t : cert.C[k + j])
                    if (hamming_distance(s, t) == j) ball.members.push_back(t);
            normalize(ball.members);
            cert.star_balls.push_back(std::move(ball));
        }

    PartitionReport report;
    check_structure(cert, family, report);
    cert.part_flags = report.parts;
    return cert;
}

EpsilonPreset parse_epsilon_preset(std::string_view name) {
    if (name == "sec51") return EpsilonPreset::sec51;
    if (name == "sec52") return EpsilonPreset::sec52;
    if (name == "sec6") return EpsilonPreset::sec6;
    throw precondition_error("unknown epsilon preset '" + std::string(name) + "'");
}

std::string_view to_string(EpsilonPreset p) {
    switch (p) {
        case EpsilonPreset::sec51: return "sec51";
        case EpsilonPreset::sec52: return "sec52";
        case EpsilonPreset::sec6: return "sec6";
    }
    return "?";
}

double preset_epsilon(EpsilonPreset preset, std::uint64_t n, unsigned d, double alpha) {
    if (d < 1 || n < 1) throw precondition_error("preset needs n >= 1 and d >= 1");
    unsigned i = 0;
    while (i < d && hamming_ball_size(d, i) < n) ++i;
    const double dd = d;
    double eps = 0.0;
    switch (preset) {
        case EpsilonPreset::sec51: eps = std::sqrt(2.0 * (static_cast<double>(n) / dd) / dd); break;
        case EpsilonPreset::sec52:
            if (i == 0 || i >= d) throw precondition_error("sec52 preset needs 1 <= i < d");
            eps = alpha / std::log2(dd / i);
            break;
        case EpsilonPreset::sec6:
            if (i == 0) throw precondition_error("sec6 preset needs i >= 1");
            eps = 2.0 * i * std::pow(dd, -1.0 / (i + 1));
            break;
    }
    if (!(eps > 0.0 && eps < 1.0))
        throw precondition_error("preset " + std::string(to_string(preset)) + " gives epsilon = " + fmt_number(eps) +
                                 ", outside (0, 1)");
    return eps;
}

bool PartitionReport::passed() const {
    for (unsigned p = 0; p < 4; ++p)
        if (!parts[p] && (p != 3 || degree_checks_applicable)) return false;
    for (unsigned a = 0; a < 7; ++a)
        if (!assertions[a] && (a != 4 || degree_checks_applicable)) return false;
    return true;
}

PartitionReport verify_partition(const PartitionCertificate& cert, const VertexFamily& family) {
    PartitionReport report;
    report.degree_checks_applicable = !cert.core_nonempty;
    const auto levels = cert.M + 1;
    if (cert.A.size() != levels || cert.B.size() != levels || cert.m.size() != levels || cert.C.size() != levels ||
        cert.D.size() != levels || cert.E.size() != levels) {
        fail(report, report.parts[1], "part 2: certificate has inconsistent level counts");
        return report;
    }
    const auto fresh = build_partition(family, cert.epsilon);
    if (fresh.M != cert.M) {
        fail(report, report.parts[1],
             "part 2: M = " + std::to_string(cert.M) + " but the A-chain gives " + std::to_string(fresh.M));
        return report;
    }
    for (unsigned k = 0; k <= cert.M; ++k) {
        if (fresh.m[k] != cert.m[k])
            fail(report, report.parts[1],
                 "part 2: m_" + std::to_string(k) + " = " + std::to_string(cert.m[k]) + ", expected " +
                     std::to_string(fresh.m[k]));
        compare_levels(report, "C", k, cert.C[k], fresh.C[k]);
        compare_levels(report, "D", k, cert.D[k], fresh.D[k]);
        compare_levels(report, "E", k, cert.E[k], fresh.E[k]);
    }
    check_structure(cert, family, report);
    return report;
}

}  // namespace cubespec
