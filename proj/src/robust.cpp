#include "stad/robust.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stad/kernels.hpp"
#include "stad/random.hpp"

namespace stad::robust {

double quantile_type7(std::vector<double> sample, double p) {
    const std::size_t m = sample.size();
    if (m == 0) throw InsufficientDataError("quantile of empty sample");
    std::sort(sample.begin(), sample.end());
    const double h = static_cast<double>(m - 1) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, m - 1);
    const double frac = h - static_cast<double>(lo);
    return sample[lo] + frac * (sample[hi] - sample[lo]);
}

double estimate_sigma(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 3) {
        throw InsufficientDataError("estimate_sigma needs n >= 3, got " + std::to_string(n));
    }
    std::vector<double> diffs(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) diffs[i] = values[i + 1] - values[i];
    const double q75 = quantile_type7(diffs, 0.75);
    const double q25 = quantile_type7(std::move(diffs), 0.25);
    static const double iqr_phi = 2.0 * norm_quantile(0.75);
    return (q75 - q25) / iqr_phi / std::sqrt(2.0);
}

double tukey_rho(double x, double c) {
    if (std::abs(x) > c) return c * c / 6.0;
    const double v = x / c;
    const double z = 1.0 - v * v;
    return c * c / 6.0 * (1.0 - z * z * z);
}

double tukey_psi(double x, double c) {
    if (std::abs(x) > c) return 0.0;
    const double v = x / c;
    const double z = 1.0 - v * v;
    return x * z * z;
}

Eigen::VectorXd ols_fit(const Eigen::VectorXd& y, const Eigen::MatrixXd& design) {
    if (design.rows() < design.cols()) {
        throw DegenerateFitError("fewer rows than columns in design");
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < design.cols()) {
        throw DegenerateFitError("rank-deficient design in least squares");
    }
    return qr.solve(y);
}

namespace {

double objective(const Eigen::VectorXd& resid, double sigma, double c) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < resid.size(); ++i) acc += tukey_rho(resid[i] / sigma, c);
    return acc;
}

}  // namespace

RobustFit irls_fit(const Eigen::VectorXd& y, const Eigen::MatrixXd& design, double sigma,
                   const Eigen::VectorXd& init, double c, double tol, int max_iter) {
    if (sigma <= 0) throw Error("irls_fit requires sigma > 0");
    if (design.rows() != y.size()) throw StructuralError("design rows do not match responses");
    if (design.rows() < design.cols()) {
        throw DegenerateFitError("fewer rows than columns in sampled design");
    }

    const Eigen::Index m = design.rows();
    const double inv_sigma = 1.0 / sigma;
    Eigen::VectorXd beta = init;
    Eigen::VectorXd u(m), w(m);

    RobustFit fit;
    for (int it = 0; it < max_iter; ++it) {
        u = (y - design * beta) * inv_sigma;
        kernels::ops().tukey_weights(u.data(), static_cast<std::size_t>(m), c, w.data());
        if ((w.array() > 0.0).count() < design.cols()) {
            throw DegenerateFitError("all IRLS weights vanished");
        }
        const Eigen::VectorXd sqw = w.array().sqrt();
        Eigen::MatrixXd wx = sqw.asDiagonal() * design;
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(wx);
        if (qr.rank() < design.cols()) {
            throw DegenerateFitError("singular weighted normal equations");
        }
        Eigen::VectorXd beta_next = qr.solve((sqw.array() * y.array()).matrix());
        const double delta = (beta_next - beta).lpNorm<1>();
        beta = beta_next;
        fit.iterations = it + 1;
        if (delta < tol) {
            fit.converged = true;
            break;
        }
    }

    u = (y - design * beta) * inv_sigma;
    kernels::ops().tukey_weights(u.data(), static_cast<std::size_t>(m), c, w.data());
    fit.coefficients.assign(beta.data(), beta.data() + beta.size());
    fit.final_weights.assign(w.data(), w.data() + w.size());
    fit.final_objective = objective(y - design * beta, sigma, c);
    return fit;
}

double m_location(std::span<const double> values, double init, double sigma, double c, double tol,
                  int max_iter) {
    const auto m = static_cast<Eigen::Index>(values.size());
    Eigen::VectorXd y(m);
    for (Eigen::Index i = 0; i < m; ++i) y[i] = values[static_cast<std::size_t>(i)];
    const Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(m, 1);
    Eigen::VectorXd b0(1);
    b0[0] = init;
    return irls_fit(y, ones, sigma, b0, c, tol, max_iter).coefficients[0];
}

}  // namespace stad::robust
