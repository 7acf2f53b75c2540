#include "uepharq/kernels.hpp"

namespace uepharq::kernels {

namespace {

void add_inplace_scalar(float* y, const float* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] += x[i];
}

void flip_signs_scalar(float* y, const std::uint64_t* bits, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if ((bits[i >> 6] >> (i & 63)) & 1)
            y[i] = -y[i];
}

void branch_metrics8_scalar(const float* llr, const float* signs, const float* bias,
                            int n_out, float* bm) {
    for (int b = 0; b < 8; ++b) {
        float acc[8];
        for (int p = 0; p < 8; ++p)
            acc[p] = bias[b * 8 + p];
        for (int i = 0; i < n_out; ++i) {
            const float v = llr[i];
            const float* s = signs + (b * n_out + i) * 8;
            for (int p = 0; p < 8; ++p)
                acc[p] += v * s[p];
        }
        for (int p = 0; p < 8; ++p)
            bm[b * 8 + p] = acc[p];
    }
}

void acs8_scalar(const float* prev, const float* bm, float* next, std::uint8_t* from) {
    for (int b = 0; b < 8; ++b) {
        float best = prev[0] + bm[b * 8 + 0];
        int arg = 0;
        for (int p = 1; p < 8; ++p) {
            const float cand = prev[p] + bm[b * 8 + p];
            if (cand > best) {
                best = cand;
                arg = p;
            }
        }
        next[b] = best;
        from[b] = static_cast<std::uint8_t>(arg);
    }
}

}  // namespace

const Table& scalar() {
    static const Table t{"scalar", add_inplace_scalar, flip_signs_scalar,
                         branch_metrics8_scalar, acs8_scalar};
    return t;
}

}  // namespace uepharq::kernels
