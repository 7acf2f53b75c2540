#include "uepharq/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace uepharq {

BitVec BitVec::from_string(std::string_view s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, 1);
        else if (s[i] != '0')
            throw std::invalid_argument("BitVec::from_string: expected only 0/1");
    }
    return v;
}

BitVec BitVec::from_bits(std::initializer_list<int> bits) {
    BitVec v(bits.size());
    std::size_t i = 0;
    for (int b : bits)
        v.set(i++, b & 1);
    return v;
}

BitVec BitVec::from_uint(std::uint64_t value, std::size_t n) {
    BitVec v(n);
    for (std::size_t i = 0; i < n && i < 64; ++i)
        v.set(i, (value >> i) & 1);
    return v;
}

void BitVec::push_back(int bit) {
    if (n_ % 64 == 0)
        w_.push_back(0);
    ++n_;
    set(n_ - 1, bit);
}

void BitVec::append(const BitVec& other) {
    for (std::size_t i = 0; i < other.size(); ++i)
        push_back(other.get(i));
}

BitVec BitVec::slice(std::size_t pos, std::size_t len) const {
    if (pos + len > n_)
        throw std::out_of_range("BitVec::slice: range past end");
    BitVec v(len);
    for (std::size_t i = 0; i < len; ++i)
        v.set(i, get(pos + i));
    return v;
}

std::size_t BitVec::weight() const {
    std::size_t w = 0;
    for (std::uint64_t x : w_)
        w += std::popcount(x);
    return w;
}

bool BitVec::is_zero() const {
    for (std::uint64_t x : w_)
        if (x)
            return false;
    return true;
}

std::uint64_t BitVec::as_uint() const {
    if (n_ > 64)
        throw std::invalid_argument("BitVec::as_uint: vector longer than 64 bits");
    return w_.empty() ? 0 : w_[0];
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (o.n_ != n_)
        throw std::invalid_argument("BitVec: xor of different lengths");
    for (std::size_t i = 0; i < w_.size(); ++i)
        w_[i] ^= o.w_[i];
    return *this;
}

std::string BitVec::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

std::size_t hamming_distance(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.words().size(); ++i)
        d += std::popcount(a.words()[i] ^ b.words()[i]);
    return d;
}

BinMat BinMat::identity(std::size_t n) {
    BinMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

BinMat BinMat::from_string(std::size_t rows, std::size_t cols, std::string_view bits) {
    if (bits.size() != rows * cols)
        throw std::invalid_argument("BinMat::from_string: wrong bit count");
    BinMat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            char ch = bits[r * cols + c];
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("BinMat::from_string: expected only 0/1");
            m.set(r, c, ch == '1');
        }
    return m;
}

std::string BinMat::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r)
            s += '/';
        s += r_[r].to_string();
    }
    return s;
}

BitVec vec_mat_mul(const BitVec& v, const BinMat& m) {
    if (v.size() != m.rows())
        throw std::invalid_argument("vec_mat_mul: length of v must equal row count");
    BitVec out(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (v.get(r))
            out ^= m.row(r);
    return out;
}

BinMat mat_mul(const BinMat& a, const BinMat& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: inner dimensions must agree");
    BinMat c(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        c.row(r) = vec_mat_mul(a.row(r), b);
    return c;
}

namespace {

// Gauss-Jordan; returns rank. `inv` (when non-null) must start as identity.
std::size_t eliminate(BinMat& a, BinMat* inv) {
    const std::size_t n = a.rows();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && !a.get(piv, col))
            ++piv;
        if (piv == n)
            continue;
        std::swap(a.row(piv), a.row(rank));
        if (inv)
            std::swap(inv->row(piv), inv->row(rank));
        for (std::size_t r = 0; r < n; ++r) {
            if (r != rank && a.get(r, col)) {
                a.row(r) ^= a.row(rank);
                if (inv)
                    inv->row(r) ^= inv->row(rank);
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int det_gf2(const BinMat& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("det_gf2: matrix must be square");
    BinMat a = m;
    return eliminate(a, nullptr) == m.rows() ? 1 : 0;
}

std::optional<BinMat> invert_gf2(const BinMat& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("invert_gf2: matrix must be square");
    BinMat a = m;
    BinMat inv = BinMat::identity(m.rows());
    if (eliminate(a, &inv) != m.rows())
        return std::nullopt;
    return inv;
}

InvertibleMatrixEnumerator::InvertibleMatrixEnumerator(std::size_t size) : size_(size) {
    if (size < 1 || size > 5)
        throw std::invalid_argument("enumerate_invertible: size must be in [1,5]");
    end_ = std::uint64_t{1} << (size * size);
}

std::optional<BinMat> InvertibleMatrixEnumerator::next() {
    const std::size_t nbits = size_ * size_;
    while (counter_ < end_) {
        const std::uint64_t c = counter_++;
        BinMat m(size_, size_);
        for (std::size_t r = 0; r < size_; ++r)
            for (std::size_t col = 0; col < size_; ++col)
                m.set(r, col, (c >> (nbits - 1 - (r * size_ + col))) & 1);
        if (det_gf2(m))
            return m;
    }
    return std::nullopt;
}

}  // namespace uepharq
