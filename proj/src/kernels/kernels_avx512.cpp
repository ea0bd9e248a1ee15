#include "stad/kernels.hpp"

#if defined(STAD_HAVE_X86_KERNELS)

#include <immintrin.h>

namespace stad::kernels {

namespace {

void dp_costs_avx512(double s1t, double s2t, double t, const double* g, const double* s1,
                     const double* s, std::size_t m, double* costs) {
    const __m512d vs1t = _mm512_set1_pd(s1t);
    const __m512d vs2t = _mm512_set1_pd(s2t);
    const __m512d vt = _mm512_set1_pd(t);
    std::size_t i = 0;
    for (; i + 8 <= m; i += 8) {
        const __m512d d = _mm512_sub_pd(vs1t, _mm512_loadu_pd(s1 + i));
        const __m512d len = _mm512_sub_pd(vt, _mm512_loadu_pd(s + i));
        const __m512d a = _mm512_add_pd(_mm512_loadu_pd(g + i), vs2t);
        const __m512d q = _mm512_div_pd(_mm512_mul_pd(d, d), len);
        _mm512_storeu_pd(costs + i, _mm512_sub_pd(a, q));
    }
    for (; i < m; ++i) {
        const double d = s1t - s1[i];
        const double len = t - s[i];
        const double a = g[i] + s2t;
        costs[i] = a - (d * d) / len;
    }
}

void tukey_weights_avx512(const double* u, std::size_t m, double c, double* w) {
    const __m512d vc = _mm512_set1_pd(c);
    const __m512d one = _mm512_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 8 <= m; i += 8) {
        const __m512d ui = _mm512_loadu_pd(u + i);
        const __m512d v = _mm512_div_pd(ui, vc);
        const __m512d z = _mm512_sub_pd(one, _mm512_mul_pd(v, v));
        const __m512d z2 = _mm512_mul_pd(z, z);
        const __m512d au = _mm512_abs_pd(ui);
        const __mmask8 inside = _mm512_cmp_pd_mask(au, vc, _CMP_LT_OQ);
        _mm512_storeu_pd(w + i, _mm512_maskz_mov_pd(inside, z2));
    }
    for (; i < m; ++i) {
        const double v = u[i] / c;
        const double z = 1.0 - v * v;
        w[i] = (__builtin_fabs(u[i]) < c) ? z * z : 0.0;
    }
}

void polyval_avx512(const double* coef, std::size_t ncoef, std::int64_t n, double* out) {
    const double inv_n = 1.0 / static_cast<double>(n);
    const __m512d vinv = _mm512_set1_pd(inv_n);
    __m512d idx = _mm512_setr_pd(1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0);
    const __m512d eight = _mm512_set1_pd(8.0);
    std::int64_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m512d x = _mm512_mul_pd(idx, vinv);
        __m512d acc = _mm512_set1_pd(coef[ncoef - 1]);
        for (std::size_t j = ncoef - 1; j-- > 0;) {
            acc = _mm512_add_pd(_mm512_mul_pd(acc, x), _mm512_set1_pd(coef[j]));
        }
        _mm512_storeu_pd(out + i, acc);
        idx = _mm512_add_pd(idx, eight);
    }
    for (; i < n; ++i) {
        const double x = static_cast<double>(i + 1) * inv_n;
        double acc = coef[ncoef - 1];
        for (std::size_t j = ncoef - 1; j-- > 0;) acc = acc * x + coef[j];
        out[i] = acc;
    }
}

void vsub_avx512(const double* a, const double* b, std::size_t m, double* out) {
    std::size_t i = 0;
    for (; i + 8 <= m; i += 8) {
        _mm512_storeu_pd(out + i, _mm512_sub_pd(_mm512_loadu_pd(a + i), _mm512_loadu_pd(b + i)));
    }
    for (; i < m; ++i) out[i] = a[i] - b[i];
}

const Ops kAvx512Ops{dp_costs_avx512, tukey_weights_avx512, polyval_avx512, vsub_avx512, "avx512"};

}  // namespace

const Ops* avx512_ops() {
    static const Ops* result = __builtin_cpu_supports("avx512f") ? &kAvx512Ops : nullptr;
    return result;
}

}  // namespace stad::kernels

#endif  // STAD_HAVE_X86_KERNELS
