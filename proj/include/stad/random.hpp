#pragma once

#include <cstdint>
#include <random>

namespace stad {

/// Standard normal quantile function (Wichura's AS 241, ~1e-15 relative
/// accuracy). Used both for the IQR_Phi constant and for Gaussian sampling.
double norm_quantile(double p);

/// Deterministic random stream. The engine is std::mt19937_64 (its output
/// sequence is pinned by the ISO standard); every distribution transform here
/// is pinned by this implementation, so identical seeds give identical draws
/// on every platform:
///   uniform01: (x >> 11) * 2^-53 + 2^-54, in (0,1)
///   normal:    inverse-CDF via norm_quantile(uniform01())
///   integers:  multiply-high range reduction
///   poisson:   chunked sequential inversion (chunks of lambda <= 256)
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(make_engine(seed, 0)) {}

    /// Independent substream for replication `stream` of a study.
    static Rng substream(std::uint64_t seed, std::uint64_t stream) {
        return Rng(make_engine(seed, stream + 1));
    }

    /// A fresh 64-bit seed derived from (seed, stream); used to hand an
    /// independent stream to a component that seeds its own Rng.
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
        return make_engine(seed, stream + 1)();
    }

    std::uint64_t next_u64() { return engine_(); }

    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }

    bool bernoulli_half() { return (next_u64() & 1u) != 0; }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const auto r = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * span) >> 64);
        return lo + static_cast<std::int64_t>(r);
    }

    double normal() { return norm_quantile(uniform01()); }
    double normal(double mean, double sd) { return mean + sd * normal(); }

    std::int64_t poisson(double lambda);

private:
    explicit Rng(std::mt19937_64 e) : engine_(e) {}

    static std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream),
                          static_cast<std::uint32_t>(stream >> 32)};
        return std::mt19937_64(seq);
    }

    std::mt19937_64 engine_;
};

}  // namespace stad
