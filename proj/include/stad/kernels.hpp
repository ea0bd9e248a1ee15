#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops with scalar reference implementations and SIMD
// variants selected at runtime. Every variant computes bit-identical results
// to the scalar reference: per-element operation order is pinned and no
// cross-lane reductions are performed here.

namespace stad::kernels {

/// costs[i] = (g[i] + s2t) - (d*d)/len, d = s1t - s1[i], len = t - s[i].
/// g[i] caches F[s_i] - S2[s_i]; this is the candidate scan of the penalized
/// cost dynamic program.
using DpCostsFn = void (*)(double s1t, double s2t, double t, const double* g, const double* s1,
                           const double* s, std::size_t m, double* costs);

/// w[i] = (1 - (u[i]/c)^2)^2 when |u[i]| < c, else 0. u are standardized
/// residuals; this is psi(u)/u for Tukey's biweight.
using TukeyWeightsFn = void (*)(const double* u, std::size_t m, double c, double* w);

/// out[i] = polynomial(coef, x) with x = (i+1)/n, evaluated by Horner's rule,
/// i = 0..n-1.
using PolyvalFn = void (*)(const double* coef, std::size_t ncoef, std::int64_t n, double* out);

/// out[i] = a[i] - b[i].
using VsubFn = void (*)(const double* a, const double* b, std::size_t m, double* out);

struct Ops {
    DpCostsFn dp_costs;
    TukeyWeightsFn tukey_weights;
    PolyvalFn polyval;
    VsubFn vsub;
    const char* name;
};

/// Scalar reference implementation (always available).
const Ops& scalar_ops();

/// SIMD variants; nullptr when not compiled in or not supported by this CPU.
const Ops* avx2_ops();
const Ops* avx512_ops();

/// Best implementation for this machine. Honors STAD_KERNELS=scalar|avx2|avx512
/// (checked once); unknown or unsupported values fall back to auto selection.
const Ops& ops();

}  // namespace stad::kernels
