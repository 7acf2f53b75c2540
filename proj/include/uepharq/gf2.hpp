#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uepharq {

// Bit vector over GF(2), packed into 64-bit words.
// Bit order: element i lives in word i/64 at bit i%64 (LSB of word 0 is element 0).
// Bits at positions >= size() are kept zero so word-wise compare works.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_(words_for(n), 0) {}

    static BitVec from_string(std::string_view s);                // "0101..."
    static BitVec from_bits(std::initializer_list<int> bits);
    // Low `n` bits of `value`, element i = bit i.
    static BitVec from_uint(std::uint64_t value, std::size_t n);

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    int get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, int bit) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (bit)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void push_back(int bit);
    void append(const BitVec& other);
    BitVec slice(std::size_t pos, std::size_t len) const;

    std::size_t weight() const;
    bool is_zero() const;
    // Value of the whole vector as an integer (size() <= 64), element 0 = bit 0.
    std::uint64_t as_uint() const;

    const std::vector<std::uint64_t>& words() const { return w_; }

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }
    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend auto operator<=>(const BitVec&, const BitVec&) = default;

    std::string to_string() const;

private:
    static std::size_t words_for(std::size_t n) { return (n + 63) / 64; }
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

std::size_t hamming_distance(const BitVec& a, const BitVec& b);

// Dense binary matrix; rows stored as BitVecs.
class BinMat {
public:
    BinMat() = default;
    BinMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), r_(rows, BitVec(cols)) {}

    static BinMat identity(std::size_t n);
    // Row-major bit string, row 0 first ("001010101" for a 3x3).
    static BinMat from_string(std::size_t rows, std::size_t cols, std::string_view bits);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int get(std::size_t r, std::size_t c) const { return r_[r].get(c); }
    void set(std::size_t r, std::size_t c, int bit) { r_[r].set(c, bit); }
    const BitVec& row(std::size_t r) const { return r_[r]; }
    BitVec& row(std::size_t r) { return r_[r]; }

    friend bool operator==(const BinMat&, const BinMat&) = default;
    friend auto operator<=>(const BinMat&, const BinMat&) = default;

    std::string to_string() const;  // row-major bits, rows joined by '/'

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> r_;
};

// v * m over GF(2). Throws std::invalid_argument on dimension mismatch.
BitVec vec_mat_mul(const BitVec& v, const BinMat& m);

// a * b over GF(2).
BinMat mat_mul(const BinMat& a, const BinMat& b);

// 1 iff m is square and full rank over GF(2). Throws if non-square.
int det_gf2(const BinMat& m);

// Inverse over GF(2), nullopt if singular. Throws if non-square.
std::optional<BinMat> invert_gf2(const BinMat& m);

// Streams every invertible size x size binary matrix in lexicographic order
// of the row-major bit pattern (entry (0,0) most significant).
// Guard: 1 <= size <= 5.
class InvertibleMatrixEnumerator {
public:
    explicit InvertibleMatrixEnumerator(std::size_t size);
    std::optional<BinMat> next();

private:
    std::size_t size_;
    std::uint64_t counter_ = 0;
    std::uint64_t end_;
};

}  // namespace uepharq
