#pragma once

#include <optional>
#include <vector>

#include "uepharq/conv.hpp"
#include "uepharq/gf2.hpp"

namespace uepharq {

// Subcode C_P,j of a UM code: the first j rows of g0 and g1 zeroed,
// equivalently the first j bits of every input block forced to zero.
struct PrunedSubcode {
    UmCode parent;
    int level = 0;  // j
    BinMat g0_pruned, g1_pruned;
    std::optional<int> free_distance;  // d_j; nullopt = no remerging nonzero path

    // rate numerator/denominator: (q - j) / (N*q)
    int rate_num() const { return parent.q() - level; }
    int rate_den() const { return parent.source.n_outputs * parent.q(); }
};

// Throws std::invalid_argument unless 0 <= j <= q-1.
PrunedSubcode prune(const UmCode& parent, int j);

// Minimum weight over nonzero trellis paths that leave the all-zero state
// and first return to it, restricted to branches whose input block has its
// first `level` bits zero. Uniform-cost search; nullopt when no such path.
std::optional<int> free_distance(const UmCode& um, int level = 0);
inline std::optional<int> free_distance(const PrunedSubcode& sub) {
    return sub.free_distance;
}

struct DistanceProfile {
    BinMat scrambler;
    std::vector<int> distances;  // d_0 .. d_{q-1}
};

DistanceProfile distance_profile(const ConvCodeSpec& spec, const BinMat& scrambler);

// Exhaustive search over all invertible q x q scramblers; returns one
// maximizing d_{objective_level}, ties broken by lexicographically greater
// (d_{q-1}, ..., d_1), then by enumeration order. Guard: memory <= 5.
DistanceProfile search_scrambler(const ConvCodeSpec& spec, int objective_level);

// Representative scrambler with no level-1 distance gain: the identity if
// it yields d_1 == d_0, otherwise the first enumerated scrambler that does.
BinMat suboptimal_scrambler(const ConvCodeSpec& spec);

}  // namespace uepharq
