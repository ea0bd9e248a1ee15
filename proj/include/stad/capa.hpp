#pragma once

#include <span>
#include <vector>

#include "stad/types.hpp"

namespace stad::capa {

/// Absolute SIC-type penalties: lambda * sigma^2 * log(n)^exponent.
struct PenaltySpec {
    double sigma_sq = 1.0;
    double pen_collective = 0.0;
    double pen_point = 0.0;

    static PenaltySpec make(double sigma, std::int64_t n, double lambda_coll, double lambda_point,
                            double exponent = 1.0);
    static PenaltySpec from_config(double sigma, std::int64_t n, const StadConfig& config);
};

struct SegmentRecord {
    enum class Kind { collective, point };
    Kind kind = Kind::collective;
    std::int64_t start = 0;  // [start, end) 0-based; for points end = start + 1
    std::int64_t end = 0;
    double cost = 0.0;  // unpenalized segment cost
    double mu = 0.0;    // fitted magnitude (point: the observation itself)
};

struct DetectionResult {
    AnomalySet anomalies;
    double total_cost = 0.0;  // minimized penalized cost
    std::vector<SegmentRecord> per_segment_costs;
};

/// O(1) segment costs from prefix sums. Indices are 1-based inclusive, as in
/// the cost definitions C_{i,j}.
class SegmentCosts {
public:
    explicit SegmentCosts(std::span<const double> z);

    /// C_{i,j}(z) = sum z_l^2 (zero-baseline cost).
    double zero(std::int64_t i, std::int64_t j) const;

    struct FreeMean {
        double cost;
        double mu;
    };
    /// min over mu of C_{i,j}(z - mu) and its minimizer, the segment mean.
    FreeMean free_mean(std::int64_t i, std::int64_t j) const;

    std::int64_t n() const { return n_; }

private:
    void check(std::int64_t i, std::int64_t j) const;

    std::int64_t n_;
    std::vector<double> s1_, s2_;
};

/// Exact minimizer of the penalized cost over all candidate anomaly sets with
/// collective segments of length >= min_len and single-index point anomalies,
/// computed by optimal-partitioning dynamic programming with PELT pruning.
/// Ties are broken toward normal, then point anomaly, then collective
/// (absolute tolerance 1e-9).
DetectionResult detect(std::span<const double> z, const PenaltySpec& penalties,
                       std::int64_t min_len = 2);

/// Anomaly component on the detector's input scale: mu_k within collective k,
/// z_i at point-anomaly indices, 0 elsewhere.
std::vector<double> anomaly_component(std::span<const double> z, const DetectionResult& result);

}  // namespace stad::capa
