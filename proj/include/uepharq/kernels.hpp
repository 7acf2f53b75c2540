#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops used by the decoder and the LLR plumbing.
// Every operation has a scalar reference implementation and, on x86-64,
// an AVX2 variant selected at runtime. The AVX2 code performs the exact
// same mul/add/max sequence per lane as the scalar code (no FMA, no
// reassociation), so results are bit-identical across backends.
namespace uepharq::kernels {

// Metric value used for impossible states/branches. Far below any real
// path metric, yet adding two of them stays finite.
inline constexpr float kNoPath = -1e30f;

struct Table {
    const char* name;

    // y[i] += x[i]
    void (*add_inplace)(float* y, const float* x, std::size_t n);

    // y[i] = -y[i] wherever bit i of `bits` (LSB-first packed words) is set
    void (*flip_signs)(float* y, const std::uint64_t* bits, std::size_t n);

    // Branch metrics for an 8-state trellis step.
    //   bm[b*8 + p] = bias[b*8 + p] + sum_i llr[i] * signs[(b*n_out + i)*8 + p]
    // signs hold +-1 for real edges and 0 for non-edges; bias holds 0 for
    // real edges and kNoPath for non-edges. Accumulation order over i is
    // fixed (ascending), identical in every backend.
    void (*branch_metrics8)(const float* llr, const float* signs, const float* bias,
                            int n_out, float* bm);

    // Add-compare-select for an 8-state trellis step.
    //   next[b] = max_p(prev[p] + bm[b*8 + p]); from[b] = smallest argmax p
    void (*acs8)(const float* prev, const float* bm, float* next, std::uint8_t* from);
};

// Scalar reference implementation. Always available.
const Table& scalar();

// AVX2 implementation, or nullptr when unsupported (at build or run time).
const Table* avx2();

// Backend chosen at startup: AVX2 when the CPU supports it, unless the
// environment variable UEPHARQ_KERNELS=scalar overrides.
const Table& active();

}  // namespace uepharq::kernels
