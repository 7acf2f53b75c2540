// Compiled with -mavx2 on x86-64 (see CMakeLists); elsewhere builds the stub.
#include "uepharq/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace uepharq::kernels {

namespace {

void add_inplace_avx2(float* y, const float* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 a = _mm256_loadu_ps(y + i);
        __m256 b = _mm256_loadu_ps(x + i);
        _mm256_storeu_ps(y + i, _mm256_add_ps(a, b));
    }
    for (; i < n; ++i)
        y[i] += x[i];
}

// byte -> per-lane all-ones where the corresponding bit is set
inline __m256i lane_mask_from_byte(std::uint32_t byte) {
    const __m256i probe = _mm256_setr_epi32(1, 2, 4, 8, 16, 32, 64, 128);
    __m256i v = _mm256_set1_epi32(static_cast<int>(byte));
    return _mm256_cmpeq_epi32(_mm256_and_si256(v, probe), probe);
}

void flip_signs_avx2(float* y, const std::uint64_t* bits, std::size_t n) {
    const __m256 signbit = _mm256_set1_ps(-0.0f);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        // 8-float chunks never straddle a 64-bit word
        const std::uint32_t byte = (bits[i >> 6] >> (i & 63)) & 0xFF;
        __m256 mask = _mm256_and_ps(_mm256_castsi256_ps(lane_mask_from_byte(byte)), signbit);
        __m256 v = _mm256_loadu_ps(y + i);
        _mm256_storeu_ps(y + i, _mm256_xor_ps(v, mask));
    }
    for (; i < n; ++i)
        if ((bits[i >> 6] >> (i & 63)) & 1)
            y[i] = -y[i];
}

void branch_metrics8_avx2(const float* llr, const float* signs, const float* bias,
                          int n_out, float* bm) {
    for (int b = 0; b < 8; ++b) {
        __m256 acc = _mm256_loadu_ps(bias + b * 8);
        const float* s = signs + b * n_out * 8;
        for (int i = 0; i < n_out; ++i) {
            __m256 v = _mm256_set1_ps(llr[i]);
            // separate mul+add (not fmadd) to match the scalar rounding
            acc = _mm256_add_ps(acc, _mm256_mul_ps(v, _mm256_loadu_ps(s + i * 8)));
        }
        _mm256_storeu_ps(bm + b * 8, acc);
    }
}

void acs8_avx2(const float* prev, const float* bm, float* next, std::uint8_t* from) {
    const __m256 old = _mm256_loadu_ps(prev);
    for (int b = 0; b < 8; ++b) {
        __m256 cand = _mm256_add_ps(old, _mm256_loadu_ps(bm + b * 8));
        __m256 m = _mm256_max_ps(cand, _mm256_permute2f128_ps(cand, cand, 1));
        m = _mm256_max_ps(m, _mm256_shuffle_ps(m, m, _MM_SHUFFLE(1, 0, 3, 2)));
        m = _mm256_max_ps(m, _mm256_shuffle_ps(m, m, _MM_SHUFFLE(2, 3, 0, 1)));
        const int eq = _mm256_movemask_ps(_mm256_cmp_ps(cand, m, _CMP_EQ_OQ));
        next[b] = _mm256_cvtss_f32(m);
        from[b] = static_cast<std::uint8_t>(__builtin_ctz(static_cast<unsigned>(eq)));
    }
}

}  // namespace

const Table* avx2() {
    static const Table t{"avx2", add_inplace_avx2, flip_signs_avx2,
                         branch_metrics8_avx2, acs8_avx2};
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2"))
        return &t;
#endif
    return nullptr;
}

}  // namespace uepharq::kernels

#else  // !__AVX2__

namespace uepharq::kernels {

const Table* avx2() {
    return nullptr;
}

}  // namespace uepharq::kernels

#endif
