#include "stad/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace stad::kernels {

namespace {

void dp_costs_scalar(double s1t, double s2t, double t, const double* g, const double* s1,
                     const double* s, std::size_t m, double* costs) {
    for (std::size_t i = 0; i < m; ++i) {
        const double d = s1t - s1[i];
        const double len = t - s[i];
        const double a = g[i] + s2t;
        costs[i] = a - (d * d) / len;
    }
}

void tukey_weights_scalar(const double* u, std::size_t m, double c, double* w) {
    for (std::size_t i = 0; i < m; ++i) {
        const double v = u[i] / c;
        const double z = 1.0 - v * v;
        w[i] = (std::abs(u[i]) < c) ? z * z : 0.0;
    }
}

void polyval_scalar(const double* coef, std::size_t ncoef, std::int64_t n, double* out) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::int64_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i + 1) * inv_n;
        double acc = coef[ncoef - 1];
        for (std::size_t j = ncoef - 1; j-- > 0;) {
            acc = acc * x + coef[j];
        }
        out[i] = acc;
    }
}

void vsub_scalar(const double* a, const double* b, std::size_t m, double* out) {
    for (std::size_t i = 0; i < m; ++i) out[i] = a[i] - b[i];
}

const Ops kScalarOps{dp_costs_scalar, tukey_weights_scalar, polyval_scalar, vsub_scalar, "scalar"};

const Ops* select_ops() {
    const char* req = std::getenv("STAD_KERNELS");
    if (req != nullptr) {
        if (std::strcmp(req, "scalar") == 0) return &kScalarOps;
        if (std::strcmp(req, "avx2") == 0 && avx2_ops() != nullptr) return avx2_ops();
        if (std::strcmp(req, "avx512") == 0 && avx512_ops() != nullptr) return avx512_ops();
    }
    if (const Ops* o = avx512_ops()) return o;
    if (const Ops* o = avx2_ops()) return o;
    return &kScalarOps;
}

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

const Ops& ops() {
    static const Ops* selected = select_ops();
    return *selected;
}

#if !defined(STAD_HAVE_X86_KERNELS)
const Ops* avx2_ops() { return nullptr; }
const Ops* avx512_ops() { return nullptr; }
#endif

}  // namespace stad::kernels
