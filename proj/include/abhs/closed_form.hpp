#pragma once

#include "abhs/params.hpp"

namespace abhs {

// Euler Gamma function on (0, 30], accurate to at least 12 significant
// digits (Lanczos approximation, g = 7).
double gamma_fn(double x);

// Optimal constant of the one-dimensional interpolation inequality
//   \int |w'|^2 + A^2 \int |w|^2 >= K* (\int |w|^p)^{2/p},
// depending on |A| only; requires A != 0, p > 2.
double k_star(double A, double p);

// Plane-normalized analogue, c_star = (2 pi)^{1 - 2/p} k_star.
double c_star(double A, double p);

// Optimal constant mu(lambda) of the magnetic interpolation inequality in
// the radial regime, as a function of the spectral shift lambda > -a^2.
// Strictly increasing and concave in lambda.
double h_mu(double lambda, double a, double p);

// Inverse of h_mu in lambda for a given mu > 0, by bracketed bisection with
// a secant polish; h_mu(invert_h(mu)) = mu to 1e-10 relative.
double invert_h(double mu, double a, double p);

// Threshold below which the radial optimizer is provably the minimizer.
double lambda_star(double a, double p);

// Threshold above which the coupled modulus/phase perturbation certifies
// symmetry breaking (larger root of q_poly).
double lambda_bullet(double a, double p);

// Modulus-only (Felli-Schneider type) instability threshold; weaker than
// lambda_bullet everywhere in the open flux range.
double lambda_fs(double a, double p);

// mu thresholds paired with lambda_star and lambda_bullet through h_mu.
// Both degenerate at a = 1/2 where the lambda thresholds hit -a^2; that
// boundary is a domain error here.
double mu_star(double a, double p);
double mu_bullet(double a, double p);

// Quadratic polynomial q(lambda) whose larger root is lambda_bullet.  Note
// the constant term carries (p-2)^4 (p+2) in the denominator; this is what
// the root identity q(lambda_bullet) = 0 and the value of
// q(lambda_star) = (8a/(p^2-4))^2 (1-4a^2) require.
double q_poly(double lambda, double a, double p);

// Closed form of lambda_bullet - lambda_star.
double gap(double a, double p);

// Optimal coupling amplitude of the phase component in the two-mode
// instability ansatz, evaluated at the symmetry-breaking threshold.
double zeta_opt(double a, double p);

struct Thresholds {
  double lambda_star;
  double lambda_bullet;
  double lambda_fs;
  double mu_star;    // NaN at a = 1/2
  double mu_bullet;  // NaN at a = 1/2
};

// All thresholds for a given (a, p); a is gauge-reduced first.
Thresholds thresholds(double a, double p);

enum class ProfileKind {
  w_star_cylinder,  // zeta* cosh(omega s)^{-2/(p-2)} on the cylinder
  psi_disk,         // (r^alpha + r^{-alpha})^{-2/(p-2)} on the punctured plane
  phi_potential,    // (r^alpha + r^{-alpha})^{-2}, the optimal potential
};

// Optimizer / optimal-potential profile with its scale data; callable at a
// cylinder coordinate s (w_star_cylinder) or radius r > 0 (the other kinds).
struct ProfileSpec {
  ProfileKind kind;
  double alpha_or_omega;  // common decay rate (p-2)/2 sqrt(lambda + a^2)
  double amplitude;       // zeta* for the cylinder profile, 1 otherwise
  double decay_exponent;  // 2/(p-2), or 2 for the potential

  double operator()(double x) const;
};

ProfileSpec profile(ProfileKind kind, const Params& params);

// \int_R cosh(omega s)^{-alpha} ds, by exponentially truncated composite
// Gauss quadrature with relative tolerance 1e-10.
double integral_I(double alpha, double omega);

// \int_R sinh(omega s)^2 cosh(omega s)^{-alpha_plus_2} ds.  Satisfies
// integral_J(alpha + 2) = integral_I(alpha) / (alpha + 1).
double integral_J(double alpha_plus_2, double omega);

}  // namespace abhs
