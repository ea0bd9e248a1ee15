#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stad/errors.hpp"

namespace stad {

/// Univariate series of real observations. Indices are 0-based internally;
/// all serialized output is 1-based.
struct TimeSeries {
    std::vector<double> values;

    TimeSeries() = default;
    explicit TimeSeries(std::vector<double> v);

    std::int64_t n() const { return static_cast<std::int64_t>(values.size()); }
};

/// A contiguous run of observations sharing a mean offset `magnitude`.
/// Internally half-open [start, end) 0-based, which coincides numerically
/// with the 1-based exclusive-start/inclusive-end interval (start, end].
struct CollectiveAnomaly {
    std::int64_t start = 0;
    std::int64_t end = 0;
    double magnitude = 0.0;

    std::int64_t length() const { return end - start; }
    bool contains(std::int64_t i) const { return i >= start && i < end; }
};

struct PointAnomaly {
    std::int64_t index = 0;  // 0-based
    double value = 0.0;
};

/// Disjoint, sorted collective intervals plus point-anomaly indices.
struct AnomalySet {
    std::vector<CollectiveAnomaly> collectives;
    std::vector<PointAnomaly> points;

    bool empty() const { return collectives.empty() && points.empty(); }
    bool contains_collective(std::int64_t i) const;
};

/// Throws StructuralError unless intervals are sorted, pairwise disjoint
/// (adjacency allowed), inside [0, n], of length >= min_len, and point
/// indices are strictly increasing and outside every interval.
void validate_anomaly_set(const AnomalySet& set, std::int64_t n, std::int64_t min_len = 2);

/// Polynomial trend t_i = sum_q beta_q (i/n)^q over normalized 1-based time.
struct TrendModel {
    int degree = 0;
    std::vector<double> coefficients;  // size degree + 1

    TrendModel() : coefficients{0.0} {}
    TrendModel(int q, std::vector<double> beta);

    double at(std::int64_t i, std::int64_t n) const;  // i is 1-based
    std::vector<double> expand(std::int64_t n) const;
};

/// Seasonal profile of a known period P, expanded via s_i = values[i mod P]
/// with 1-based i.
struct SeasonProfile {
    std::int64_t period = 2;
    std::vector<double> values;

    SeasonProfile() = default;
    SeasonProfile(std::int64_t p, std::vector<double> v);

    std::vector<double> expand(std::int64_t n) const;
};

/// Additive decomposition y = anomaly + trend + season + residual.
/// The residual is defined as y - ((anomaly + trend) + season) evaluated in
/// exactly that grouping; reconstruct() reverses it.
struct Decomposition {
    std::vector<double> anomaly;
    std::vector<double> trend;
    std::vector<double> season;
    std::vector<double> residual;
    double sigma = 0.0;
    AnomalySet anomalies;
    int chosen_degree = 0;
    int chosen_blocks = 0;
    double total_cost = 0.0;

    std::int64_t n() const { return static_cast<std::int64_t>(anomaly.size()); }
};

/// Elementwise ((anomaly + trend) + season) + residual. Exact inverse of the
/// residual definition above.
TimeSeries reconstruct(const Decomposition& d);

/// Builds the residual from y and the three model components, using the
/// grouping that reconstruct() undoes.
std::vector<double> make_residual(const std::vector<double>& y,
                                  const std::vector<double>& anomaly,
                                  const std::vector<double>& trend,
                                  const std::vector<double>& season);

/// Tuning parameters. Defaults follow the recommended values:
/// lambda_coll = 4, lambda_point = 3, c = 4.685, J = 20, B in {1,3,5},
/// Q in {0,1,2,3}, D = C*P ~ 0.1 n.
struct StadConfig {
    std::int64_t period = 0;
    std::vector<int> degree_grid{0, 1, 2, 3};
    std::vector<int> block_grid{1, 3, 5};
    int samples = 20;  // J
    double pen_collective = 4.0;
    double pen_point = 3.0;
    double tukey_c = 4.685;
    int diff_multiplier = 0;  // C; 0 means "auto": C = max(1, round(0.1 n / P))
    bool smooth_season = false;
    std::uint64_t rng_seed = 0;
    int max_irls_iter = 500;
    double irls_tol = 1e-5;
    std::int64_t min_collective_len = 2;
    double penalty_exponent = 1.0;

    /// Throws Error when grids are empty, J < 1, penalties <= 0, P < 2 or P > n.
    void validate(std::int64_t n) const;

    /// Resolved differencing lag D = C*P.
    std::int64_t diff_lag(std::int64_t n) const;
};

/// max(1, max |y_i|); the unit used by relative tolerances.
double value_scale(const std::vector<double>& y);

}  // namespace stad
