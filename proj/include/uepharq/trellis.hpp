#pragma once

#include <cstdint>
#include <vector>

#include "uepharq/conv.hpp"
#include "uepharq/gf2.hpp"

namespace uepharq {

// Time-invariant decoding trellis. Two kinds share one decoder:
//  - unit_memory: one step per q-bit block, state = previous block value,
//    branches restricted to blocks whose first `level` bits are zero;
//  - polynomial: one step per message bit, state = last q input bits packed
//    newest-first (MSB = most recent), two branches per state.
struct Trellis {
    enum class Kind { unit_memory, polynomial };

    Kind kind = Kind::unit_memory;
    int q = 0;
    int level = 0;
    int n_states = 0;            // 2^q
    int n_out = 0;               // output bits per step
    int branches_per_state = 0;  // 2^(q-level) or 2

    struct Edge {
        std::uint16_t prev;
        std::uint32_t out;  // output bit i at mask bit i
    };
    std::vector<std::vector<Edge>> into;  // [next state] -> edges, prev ascending

    // Dense tables driving the 8-lane kernels (filled when n_states == 8):
    // signs[(next*n_out + i)*8 + p] in {+1,-1} on edges, 0 off edges;
    // bias[next*8 + p] = 0 on edges, kernels::kNoPath off edges.
    std::vector<float> signs;
    std::vector<float> bias;
    bool has_kernel_tables() const { return n_states == 8; }
};

// Trellis of the (possibly pruned) UM code. 0 <= level <= q-1.
Trellis build_trellis(const UmCode& um, int level);

// Bit-level trellis of a rate-1/N polynomial code.
Trellis build_poly_trellis(const ConvCodeSpec& spec);

// Per-bit log-likelihood ratios; positive = bit 0 more likely, 0 = erasure.
using LlrVec = std::vector<float>;

// ML block decode of a terminated UM codeword: |llrs| = (L+1)*N*q, the path
// starts and ends at the all-zero state. Returns the L information blocks.
// Equal-metric ties resolve to the path whose block sequence, read from the
// last block backwards, is smallest (blocks compared as LSB-first integers).
std::vector<BitVec> viterbi(const Trellis& trellis, const LlrVec& llrs, int L);

// ML bit decode of a terminated polynomial codeword; |llrs| = N*(msg+q стеps).
// Returns every decoded input bit including the q zero tail bits.
BitVec viterbi_poly(const Trellis& trellis, const LlrVec& llrs);

// Exhaustive ML references with the same metric and the same tie-break as
// the Viterbi decoders. Guards: (q-level)*L <= 16 resp. message <= 16 bits.
std::vector<BitVec> brute_force_ml(const UmCode& um, int level, const LlrVec& llrs, int L);
BitVec brute_force_ml_poly(const ConvCodeSpec& spec, const LlrVec& llrs, int msg_bits);

// Element-wise sum of independent observations of the same codeword.
LlrVec combine_llrs(const std::vector<LlrVec>& copies);

namespace detail {
// Best terminated path; returns the state after each step (last one = 0).
std::vector<int> decode_path(const Trellis& t, const float* llrs, int n_steps,
                             bool allow_kernels);
}

}  // namespace uepharq
