#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cubespec/family.hpp"

namespace cubespec {

/// Heavy-vertex decomposition of a compressed family.
///
/// A_0 = V(G) and A_k keeps the members of A_{k-1} with at least εd
/// neighbours in A_{k-1}. The blocks C_k ∪ D_k partition V(G); the star balls
/// N^(k)_S (S ∈ D_k, k < M) are grown outward from the centres S through
/// later C levels.
struct PartitionCertificate {
    struct StarBall {
        unsigned k = 0;
        Vertex centre;
        std::vector<Vertex> members;
    };

    double epsilon = 0.0;
    unsigned d = 0;
    /// M = largest k with A_k non-empty.
    unsigned M = 0;
    /// The A-chain never empties (G has a non-empty εd-core). M is then set
    /// to core_level + d + 2, which is enough for E_M to reach V(G), and the
    /// degree parts are reported as not applicable.
    bool core_nonempty = false;
    unsigned core_level = 0;

    std::vector<std::vector<Vertex>> A;
    std::vector<std::vector<unsigned>> B;
    std::vector<unsigned> m;
    std::vector<std::vector<Vertex>> C;
    std::vector<std::vector<Vertex>> D;
    std::vector<std::vector<Vertex>> E;
    std::vector<StarBall> star_balls;

    /// Parts 1-4 as evaluated when the certificate was built.
    std::array<bool, 4> part_flags{};

    double threshold() const { return epsilon * d; }
};

/// Throws precondition_error unless F is compressed and ε > 0.
PartitionCertificate build_partition(const VertexFamily& family, double epsilon);

enum class EpsilonPreset { sec51, sec52, sec6 };
EpsilonPreset parse_epsilon_preset(std::string_view name);
std::string_view to_string(EpsilonPreset p);

/// ε for the given preset at n = |F| in Q_d:
///   sec51: √(2c/d) with c = n/d;
///   sec52: alpha / log₂(d/i);
///   sec6:  2i·d^(-1/(i+1)),
/// where i is the least radius with |H_d^i| ≥ n. Throws if the value is not
/// in (0, 1) or i is 0.
double preset_epsilon(EpsilonPreset preset, std::uint64_t n, unsigned d, double alpha = 1.0);

struct PartitionReport {
    /// 1: star balls disjoint; 2: blocks partition V(G) and match their
    /// definitions; 3: edge cover; 4: block degree ≤ εd.
    std::array<bool, 4> parts{true, true, true, true};
    /// 1: unique representation; 2: E_k compressed; 3: no edges E_k to
    /// D_{k+1} ∪ C_{k+2} ∪ D_{k+2}; 4: blocks avoid E_{k-1}; 5: block degree
    /// ≤ m_k ≤ εd; 6: A_{M-k} ⊆ E_k and E_M = V(G); 7: star balls disjoint.
    std::array<bool, 7> assertions{true, true, true, true, true, true, true};
    /// False for non-empty cores; part 4 and assertion 5 are then recorded
    /// but not counted.
    bool degree_checks_applicable = true;
    /// One line per failure: which check and a concrete witness.
    std::vector<std::string> failures;

    bool passed() const;
};

/// Checks cert against F: recomputes the definitions and evaluates every
/// part and assertion.
PartitionReport verify_partition(const PartitionCertificate& cert, const VertexFamily& family);

}  // namespace cubespec
