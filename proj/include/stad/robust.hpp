#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "stad/types.hpp"

namespace stad::robust {

/// Result of an IRLS M-estimation fit.
struct RobustFit {
    std::vector<double> coefficients;
    int iterations = 0;
    bool converged = false;
    std::vector<double> final_weights;  // evaluated at the returned coefficients
    double final_objective = 0.0;       // sum rho(e_i / sigma)
};

/// Type-7 quantile (linear interpolation at h = (m-1)p between order
/// statistics) of an unsorted sample.
double quantile_type7(std::vector<double> sample, double p);

/// Robust scale estimate: (1/sqrt(2)) * IQR(lag-1 differences) / IQR_Phi.
/// IQR_Phi = 2 * norm_quantile(0.75). Requires n >= 3.
double estimate_sigma(std::span<const double> values);

/// Tukey biweight loss; bounded by c^2/6.
double tukey_rho(double x, double c);

/// Derivative of tukey_rho: x (1 - (x/c)^2)^2 inside [-c, c], 0 outside.
double tukey_psi(double x, double c);

/// Ordinary least squares via column-pivoted QR. Throws DegenerateFitError on
/// rank deficiency.
Eigen::VectorXd ols_fit(const Eigen::VectorXd& y, const Eigen::MatrixXd& design);

/// IRLS for the Tukey M-estimator with residuals standardized by the fixed,
/// externally supplied sigma (the scale is never re-estimated inside the
/// loop). Each step solves weighted least squares by QR on sqrt(W) X. Stops
/// when the L1 change of the coefficients drops below tol or after max_iter
/// iterations; returns the last iterate either way.
RobustFit irls_fit(const Eigen::VectorXd& y, const Eigen::MatrixXd& design, double sigma,
                   const Eigen::VectorXd& init, double c, double tol, int max_iter);

/// Scalar convenience: M-estimate of location for `values` with the given
/// initialization (irls_fit against an all-ones design).
double m_location(std::span<const double> values, double init, double sigma, double c, double tol,
                  int max_iter);

}  // namespace stad::robust
