#pragma once

namespace tscx {

// Regularized upper incomplete gamma Q(a, x) for a > 0, x >= 0.
double regularized_gamma_q(double a, double x);

// Regularized incomplete beta I_x(a, b) for a, b > 0, 0 <= x <= 1.
double regularized_beta(double a, double b, double x);

// Upper tail of the chi-square distribution, Q(df/2, x/2).
double chi_square_sf(double x, double df);

// 1 - Phi(z) for the standard normal.
double normal_sf(double z);

// Upper tail P(T > t) of Student's t with (possibly fractional) df > 0.
double student_t_sf(double t, double df);

}  // namespace tscx
