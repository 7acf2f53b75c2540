#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "uepharq/gf2.hpp"

namespace uepharq {

// Rate-1/N polynomial convolutional code. Generators are octal, read
// MSB-first as taps: octal 15 = binary 1101 = 1 + D + D^3.
struct ConvCodeSpec {
    int n_outputs = 0;                             // N
    int memory = 0;                                // q, number of delay elements
    std::vector<std::uint32_t> generators_octal;   // as written, e.g. {015, ...}

    // tap mask of generator i: bit tau = coefficient of D^tau
    std::uint32_t taps(int i) const;

    static ConvCodeSpec make(std::vector<std::uint32_t> generators_octal, int memory);
    // "15,17" (memory deduced from the widest generator) or "15,17@3"
    static ConvCodeSpec parse(std::string_view text);
    std::string to_string() const;
};

// Shift-register encoding; starts from the zero state and is left wherever
// the message ends (termination is the caller's job via append_tail).
// Output length N*|msg|, bit (t*N + i) from generator i at step t.
BitVec encode_poly(const ConvCodeSpec& spec, const BitVec& msg);

// msg followed by q zeros.
BitVec append_tail(const BitVec& msg, int q);

// Zero-pad msg to a multiple of q and split into ceil(|msg|/q) blocks.
std::vector<BitVec> pad_and_block(const BitVec& msg, int q);

BitVec flatten_blocks(const std::vector<BitVec>& blocks);

// Unit-memory form of a rate-1/N code: per-block encoding
//   c_t = b_t * g0 + b_{t-1} * g1
// with q x (N*q) matrices, left-multiplied by an invertible scrambler.
struct UmCode {
    BinMat g0, g1;      // scrambled
    BinMat scrambler;   // q x q, det 1
    ConvCodeSpec source;

    int q() const { return source.memory; }
    int n_out() const { return source.n_outputs * source.memory; }  // bits per block
};

// Throws std::invalid_argument if the scrambler is not invertible or has
// the wrong shape.
UmCode to_unit_memory(const ConvCodeSpec& spec, const BinMat& scrambler);

// Block encoding per the UM rule; b_0 = 0 and one implicit all-zero
// termination block is appended, so the output is (L+1)*N*q bits.
BitVec encode_um(const UmCode& um, const std::vector<BitVec>& blocks);

// Positions removed from a codeword before transmission (1-based).
struct PuncturePattern {
    std::size_t block_length = 0;
    std::vector<std::size_t> removed;  // strictly increasing, within [1, block_length]

    std::size_t sent_length() const { return block_length - removed.size(); }
};

// removed index i (1-based, i = 1..count) = ceil(i*total/count)
PuncturePattern make_equal_spaced_pattern(std::size_t total, std::size_t count);

BitVec puncture(const BitVec& cw, const PuncturePattern& p);

// Reinsert neutral LLRs (0.0) at the removed positions.
std::vector<float> depuncture(const std::vector<float>& llrs, const PuncturePattern& p);

}  // namespace uepharq
