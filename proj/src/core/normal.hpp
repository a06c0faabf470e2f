#pragma once

namespace vesselmc {

// Inverse CDF of the standard normal distribution, Phi^-1(p).
//
// Rational approximation (Wichura's PPND16 algorithm). Absolute error is
// below 1e-9 everywhere on [1e-12, 1 - 1e-12]; in practice the
// approximation is good to ~1e-15 relative. One call consumes no state,
// which keeps inverse-transform sampling at exactly one uniform per
// variate.
//
// Throws DomainError unless 0 < p < 1.
double standard_normal_quantile(double p);

// CDF of the standard normal distribution, Phi(z). Absolute error < 1e-12;
// monotone nondecreasing. Throws DomainError for non-finite z.
double standard_normal_cdf(double z);

}  // namespace vesselmc
