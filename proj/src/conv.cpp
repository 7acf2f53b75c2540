#include "uepharq/conv.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace uepharq {

std::uint32_t ConvCodeSpec::taps(int i) const {
    // octal literal read MSB-first: bit (q - tau) of the value = coeff of D^tau
    const std::uint32_t v = generators_octal[i];
    std::uint32_t mask = 0;
    for (int tau = 0; tau <= memory; ++tau)
        if ((v >> (memory - tau)) & 1)
            mask |= std::uint32_t{1} << tau;
    return mask;
}

ConvCodeSpec ConvCodeSpec::make(std::vector<std::uint32_t> generators_octal, int memory) {
    if (generators_octal.empty())
        throw std::invalid_argument("ConvCodeSpec: need at least one generator");
    if (memory < 1)
        throw std::invalid_argument("ConvCodeSpec: memory must be >= 1");
    for (std::uint32_t g : generators_octal) {
        if (g == 0)
            throw std::invalid_argument("ConvCodeSpec: generator with no taps");
        if (std::bit_width(g) > static_cast<unsigned>(memory + 1))
            throw std::invalid_argument("ConvCodeSpec: generator degree exceeds memory");
    }
    ConvCodeSpec s;
    s.n_outputs = static_cast<int>(generators_octal.size());
    s.memory = memory;
    s.generators_octal = std::move(generators_octal);
    return s;
}

ConvCodeSpec ConvCodeSpec::parse(std::string_view text) {
    int memory = -1;
    if (auto at = text.find('@'); at != std::string_view::npos) {
        const auto mstr = text.substr(at + 1);
        int m = 0;
        auto [p, ec] = std::from_chars(mstr.data(), mstr.data() + mstr.size(), m);
        if (ec != std::errc{} || p != mstr.data() + mstr.size())
            throw std::invalid_argument("code spec: bad memory after '@'");
        memory = m;
        text = text.substr(0, at);
    }
    std::vector<std::uint32_t> gens;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto tok = text.substr(0, comma);
        std::uint32_t g = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), g, 8);
        if (ec != std::errc{} || p != tok.data() + tok.size() || g == 0)
            throw std::invalid_argument("code spec: bad octal generator '" + std::string(tok) + "'");
        gens.push_back(g);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    }
    if (memory < 0) {
        unsigned width = 0;
        for (std::uint32_t g : gens)
            width = std::max(width, static_cast<unsigned>(std::bit_width(g)));
        memory = static_cast<int>(width) - 1;
    }
    return make(std::move(gens), memory);
}

std::string ConvCodeSpec::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < generators_octal.size(); ++i) {
        if (i)
            s += ',';
        char buf[16];
        auto [p, ec] = std::to_chars(buf, buf + sizeof buf, generators_octal[i], 8);
        s.append(buf, p);
    }
    s += '@';
    s += std::to_string(memory);
    return s;
}

BitVec encode_poly(const ConvCodeSpec& spec, const BitVec& msg) {
    const int N = spec.n_outputs, q = spec.memory;
    std::vector<std::uint32_t> taps(N);
    for (int i = 0; i < N; ++i)
        taps[i] = spec.taps(i);
    BitVec out(msg.size() * N);
    std::uint32_t reg = 0;  // bit tau = msg[t - tau]
    for (std::size_t t = 0; t < msg.size(); ++t) {
        reg = ((reg << 1) | static_cast<std::uint32_t>(msg.get(t))) &
              ((std::uint32_t{1} << (q + 1)) - 1);
        for (int i = 0; i < N; ++i)
            out.set(t * N + i, std::popcount(reg & taps[i]) & 1);
    }
    return out;
}

BitVec append_tail(const BitVec& msg, int q) {
    BitVec out = msg;
    for (int i = 0; i < q; ++i)
        out.push_back(0);
    return out;
}

std::vector<BitVec> pad_and_block(const BitVec& msg, int q) {
    if (q < 1)
        throw std::invalid_argument("pad_and_block: q must be >= 1");
    const std::size_t L = (msg.size() + q - 1) / q;
    std::vector<BitVec> blocks(L, BitVec(static_cast<std::size_t>(q)));
    for (std::size_t i = 0; i < msg.size(); ++i)
        blocks[i / q].set(i % q, msg.get(i));
    return blocks;
}

BitVec flatten_blocks(const std::vector<BitVec>& blocks) {
    BitVec out;
    for (const BitVec& b : blocks)
        out.append(b);
    return out;
}

UmCode to_unit_memory(const ConvCodeSpec& spec, const BinMat& scrambler) {
    const int N = spec.n_outputs, q = spec.memory;
    if (scrambler.rows() != static_cast<std::size_t>(q) ||
        scrambler.cols() != static_cast<std::size_t>(q))
        throw std::invalid_argument("to_unit_memory: scrambler must be q x q");
    if (!det_gf2(scrambler))
        throw std::invalid_argument("to_unit_memory: scrambler must be invertible");

    // Column (t*N + i): g0 row r carries coeff_i(t - r) (current block),
    // g1 row r carries coeff_i(q + t - r) (previous block).
    BinMat g0(q, N * q), g1(q, N * q);
    for (int r = 0; r < q; ++r)
        for (int t = 0; t < q; ++t)
            for (int i = 0; i < N; ++i) {
                const std::uint32_t taps = spec.taps(i);
                if (t >= r)
                    g0.set(r, t * N + i, (taps >> (t - r)) & 1);
                if (t <= r)
                    g1.set(r, t * N + i, (taps >> (q + t - r)) & 1);
            }
    UmCode um;
    um.g0 = mat_mul(scrambler, g0);
    um.g1 = mat_mul(scrambler, g1);
    um.scrambler = scrambler;
    um.source = spec;
    return um;
}

BitVec encode_um(const UmCode& um, const std::vector<BitVec>& blocks) {
    const int q = um.q(), n = um.n_out();
    const BitVec zero(static_cast<std::size_t>(q));
    BitVec out((blocks.size() + 1) * n);
    const BitVec* prev = &zero;
    for (std::size_t t = 0; t <= blocks.size(); ++t) {
        const BitVec& cur = t < blocks.size() ? blocks[t] : zero;
        if (cur.size() != static_cast<std::size_t>(q))
            throw std::invalid_argument("encode_um: block length must equal q");
        BitVec c = vec_mat_mul(cur, um.g0) ^ vec_mat_mul(*prev, um.g1);
        for (int i = 0; i < n; ++i)
            out.set(t * n + i, c.get(i));
        prev = &cur;
    }
    return out;
}

PuncturePattern make_equal_spaced_pattern(std::size_t total, std::size_t count) {
    if (count > total)
        throw std::invalid_argument("make_equal_spaced_pattern: count > total");
    PuncturePattern p;
    p.block_length = total;
    p.removed.reserve(count);
    for (std::size_t i = 1; i <= count; ++i)
        p.removed.push_back((i * total + count - 1) / count);  // ceil(i*total/count)
    return p;
}

BitVec puncture(const BitVec& cw, const PuncturePattern& p) {
    if (cw.size() != p.block_length)
        throw std::invalid_argument("puncture: codeword length mismatch");
    BitVec out;
    std::size_t next = 0;
    for (std::size_t i = 0; i < cw.size(); ++i) {
        if (next < p.removed.size() && p.removed[next] == i + 1) {
            ++next;
            continue;
        }
        out.push_back(cw.get(i));
    }
    return out;
}

std::vector<float> depuncture(const std::vector<float>& llrs, const PuncturePattern& p) {
    if (llrs.size() != p.block_length - p.removed.size())
        throw std::invalid_argument("depuncture: length mismatch");
    std::vector<float> out(p.block_length, 0.0f);
    std::size_t next = 0, src = 0;
    for (std::size_t i = 0; i < p.block_length; ++i) {
        if (next < p.removed.size() && p.removed[next] == i + 1) {
            ++next;
            continue;
        }
        out[i] = llrs[src++];
    }
    return out;
}

}  // namespace uepharq
