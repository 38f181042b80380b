#pragma once

namespace quantlet::special {

// Standard normal CDF.
double norm_cdf(double x);

// Inverse standard normal CDF. Rational initial guess refined by one Halley
// step against norm_cdf; absolute error well below 1e-9 for p in (0,1).
// Returns -inf/+inf at p = 0/1, NaN outside [0,1].
double inv_norm_cdf(double p);

// Regularized incomplete beta function I_x(a,b) for a,b > 0, x in [0,1],
// evaluated by the continued-fraction expansion (modified Lentz) to a
// relative tolerance of 1e-12. Throws std::domain_error on invalid input.
double reg_inc_beta(double a, double b, double x);

}  // namespace quantlet::special
