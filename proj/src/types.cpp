#include "stad/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace stad {

TimeSeries::TimeSeries(std::vector<double> v) : values(std::move(v)) {
    if (values.size() < 2) {
        throw InsufficientDataError("time series needs at least 2 observations, got " +
                                    std::to_string(values.size()));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw StructuralError("non-finite value at position " + std::to_string(i + 1));
        }
    }
}

bool AnomalySet::contains_collective(std::int64_t i) const {
    for (const auto& c : collectives) {
        if (c.contains(i)) return true;
    }
    return false;
}

void validate_anomaly_set(const AnomalySet& set, std::int64_t n, std::int64_t min_len) {
    std::int64_t prev_end = -1;
    for (const auto& c : set.collectives) {
        if (c.start < 0 || c.start >= c.end || c.end > n) {
            throw StructuralError("collective interval out of range: (" +
                                  std::to_string(c.start) + ", " + std::to_string(c.end) + "]");
        }
        if (c.length() < min_len) {
            throw StructuralError("collective interval shorter than " + std::to_string(min_len));
        }
        if (c.start < prev_end) {
            throw StructuralError("collective intervals overlap or are unsorted");
        }
        prev_end = c.end;  // e_k <= b_{k+1}: adjacency is allowed
    }
    std::int64_t prev_idx = -1;
    for (const auto& p : set.points) {
        if (p.index < 0 || p.index >= n) {
            throw StructuralError("point anomaly index out of range: " + std::to_string(p.index));
        }
        if (p.index <= prev_idx) {
            throw StructuralError("point anomaly indices not strictly increasing");
        }
        if (set.contains_collective(p.index)) {
            throw StructuralError("point anomaly inside a collective interval at index " +
                                  std::to_string(p.index));
        }
        prev_idx = p.index;
    }
}

TrendModel::TrendModel(int q, std::vector<double> beta) : degree(q), coefficients(std::move(beta)) {
    if (degree < 0 || coefficients.size() != static_cast<std::size_t>(degree) + 1) {
        throw StructuralError("trend coefficient count does not match degree");
    }
    for (double b : coefficients) {
        if (!std::isfinite(b)) throw StructuralError("non-finite trend coefficient");
    }
}

double TrendModel::at(std::int64_t i, std::int64_t n) const {
    const double x = static_cast<double>(i) / static_cast<double>(n);
    double acc = 0.0;
    for (std::size_t j = coefficients.size(); j-- > 0;) {
        acc = acc * x + coefficients[j];
    }
    return acc;
}

std::vector<double> TrendModel::expand(std::int64_t n) const {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= n; ++i) {
        out[static_cast<std::size_t>(i - 1)] = at(i, n);
    }
    return out;
}

SeasonProfile::SeasonProfile(std::int64_t p, std::vector<double> v)
    : period(p), values(std::move(v)) {
    if (period < 2) throw StructuralError("seasonal period must be >= 2");
    if (values.size() != static_cast<std::size_t>(period)) {
        throw StructuralError("seasonal profile length does not match period");
    }
}

std::vector<double> SeasonProfile::expand(std::int64_t n) const {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= n; ++i) {
        out[static_cast<std::size_t>(i - 1)] = values[static_cast<std::size_t>(i % period)];
    }
    return out;
}

TimeSeries reconstruct(const Decomposition& d) {
    const std::size_t n = d.anomaly.size();
    if (d.trend.size() != n || d.season.size() != n || d.residual.size() != n) {
        throw StructuralError("decomposition component lengths differ");
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = ((d.anomaly[i] + d.trend[i]) + d.season[i]) + d.residual[i];
    }
    TimeSeries ts;
    ts.values = std::move(out);
    return ts;
}

std::vector<double> make_residual(const std::vector<double>& y,
                                  const std::vector<double>& anomaly,
                                  const std::vector<double>& trend,
                                  const std::vector<double>& season) {
    const std::size_t n = y.size();
    if (anomaly.size() != n || trend.size() != n || season.size() != n) {
        throw StructuralError("component lengths differ from series length");
    }
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = y[i] - (((anomaly[i] + trend[i]) + season[i]));
    }
    return r;
}

void StadConfig::validate(std::int64_t n) const {
    if (period < 2) throw Error("period must be >= 2");
    if (period > n) throw Error("period exceeds series length");
    if (degree_grid.empty()) throw Error("degree grid is empty");
    if (block_grid.empty()) throw Error("block grid is empty");
    for (int q : degree_grid) {
        if (q < 0) throw Error("negative degree in grid");
    }
    for (int b : block_grid) {
        if (b < 1) throw Error("block count must be >= 1");
    }
    if (samples < 1) throw Error("J must be >= 1");
    if (pen_collective <= 0 || pen_point <= 0) throw Error("penalties must be > 0");
    if (tukey_c <= 0) throw Error("tukey_c must be > 0");
    if (diff_multiplier < 0) throw Error("diff multiplier must be >= 1 or 0 for auto");
    if (max_irls_iter < 1) throw Error("max_irls_iter must be >= 1");
    if (irls_tol <= 0) throw Error("irls_tol must be > 0");
    if (min_collective_len < 2) throw Error("min collective length must be >= 2");
}

std::int64_t StadConfig::diff_lag(std::int64_t n) const {
    std::int64_t c = diff_multiplier;
    if (c == 0) {
        const double target = 0.1 * static_cast<double>(n) / static_cast<double>(period);
        c = std::max<std::int64_t>(1, std::llround(target));
    }
    return c * period;
}

double value_scale(const std::vector<double>& y) {
    double m = 0.0;
    for (double v : y) m = std::max(m, std::abs(v));
    return std::max(1.0, m);
}

}  // namespace stad
