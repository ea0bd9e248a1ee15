#include "stad/kernels.hpp"

#if defined(STAD_HAVE_X86_KERNELS)

#include <immintrin.h>

namespace stad::kernels {

namespace {

// No FMA anywhere: lane arithmetic must round exactly like the scalar
// reference (mul, div, add, sub are all correctly rounded IEEE ops).

void dp_costs_avx2(double s1t, double s2t, double t, const double* g, const double* s1,
                   const double* s, std::size_t m, double* costs) {
    const __m256d vs1t = _mm256_set1_pd(s1t);
    const __m256d vs2t = _mm256_set1_pd(s2t);
    const __m256d vt = _mm256_set1_pd(t);
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        const __m256d d = _mm256_sub_pd(vs1t, _mm256_loadu_pd(s1 + i));
        const __m256d len = _mm256_sub_pd(vt, _mm256_loadu_pd(s + i));
        const __m256d a = _mm256_add_pd(_mm256_loadu_pd(g + i), vs2t);
        const __m256d q = _mm256_div_pd(_mm256_mul_pd(d, d), len);
        _mm256_storeu_pd(costs + i, _mm256_sub_pd(a, q));
    }
    for (; i < m; ++i) {
        const double d = s1t - s1[i];
        const double len = t - s[i];
        const double a = g[i] + s2t;
        costs[i] = a - (d * d) / len;
    }
}

void tukey_weights_avx2(const double* u, std::size_t m, double c, double* w) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        const __m256d ui = _mm256_loadu_pd(u + i);
        const __m256d v = _mm256_div_pd(ui, vc);
        const __m256d z = _mm256_sub_pd(one, _mm256_mul_pd(v, v));
        const __m256d z2 = _mm256_mul_pd(z, z);
        const __m256d inside = _mm256_cmp_pd(_mm256_and_pd(ui, absmask), vc, _CMP_LT_OQ);
        _mm256_storeu_pd(w + i, _mm256_and_pd(z2, inside));
    }
    for (; i < m; ++i) {
        const double v = u[i] / c;
        const double z = 1.0 - v * v;
        w[i] = (__builtin_fabs(u[i]) < c) ? z * z : 0.0;
    }
}

void polyval_avx2(const double* coef, std::size_t ncoef, std::int64_t n, double* out) {
    const double inv_n = 1.0 / static_cast<double>(n);
    const __m256d vinv = _mm256_set1_pd(inv_n);
    __m256d idx = _mm256_setr_pd(1.0, 2.0, 3.0, 4.0);
    const __m256d four = _mm256_set1_pd(4.0);
    std::int64_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_mul_pd(idx, vinv);
        __m256d acc = _mm256_set1_pd(coef[ncoef - 1]);
        for (std::size_t j = ncoef - 1; j-- > 0;) {
            acc = _mm256_add_pd(_mm256_mul_pd(acc, x), _mm256_set1_pd(coef[j]));
        }
        _mm256_storeu_pd(out + i, acc);
        idx = _mm256_add_pd(idx, four);
    }
    for (; i < n; ++i) {
        const double x = static_cast<double>(i + 1) * inv_n;
        double acc = coef[ncoef - 1];
        for (std::size_t j = ncoef - 1; j-- > 0;) acc = acc * x + coef[j];
        out[i] = acc;
    }
}

void vsub_avx2(const double* a, const double* b, std::size_t m, double* out) {
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < m; ++i) out[i] = a[i] - b[i];
}

const Ops kAvx2Ops{dp_costs_avx2, tukey_weights_avx2, polyval_avx2, vsub_avx2, "avx2"};

}  // namespace

const Ops* avx2_ops() {
    static const Ops* result = __builtin_cpu_supports("avx2") ? &kAvx2Ops : nullptr;
    return result;
}

}  // namespace stad::kernels

#endif  // STAD_HAVE_X86_KERNELS
