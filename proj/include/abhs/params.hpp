#pragma once

#include <vector>

namespace abhs {

// Maps an arbitrary real flux onto the fundamental range [0, 1/2]:
// the physics is 1-periodic and reflection symmetric in the flux, so the
// reduced value satisfies a~^2 = min_k (a_raw - k)^2.  Ties at half-integer
// flux resolve to 1/2.
double reduce_flux(double a_raw);

// Hoelder-dual exponent q = p/(p-2) for p > 2.
double dual_exponent(double p);

// Inverse map p = 2q/(q-1) of dual_exponent, for q > 1.
double exponent_from_dual(double q);

// Angle-dependent flux sampled on a uniform grid over [0, 2pi).
class FluxProfile {
 public:
  explicit FluxProfile(std::vector<double> samples);
  const std::vector<double>& samples() const { return samples_; }

 private:
  std::vector<double> samples_;
};

// Mean flux (2pi)^{-1} \oint a(theta) dtheta; exact for the sampled
// trigonometric content since periodic trapezoid reduces to the plain mean.
double average_flux(const FluxProfile& profile);

// Problem triple (a, p, lambda).  The flux is gauge-reduced to [0, 1/2] at
// construction; p > 2 and lambda > -a^2 (after reduction) are enforced here
// and nowhere else.
class Params {
 public:
  Params(double a, double p, double lambda);

  double a() const { return a_; }
  double p() const { return p_; }
  double lambda() const { return lambda_; }

  // lambda + a^2, the effective radial coupling; positive by construction.
  double kappa() const { return lambda_ + a_ * a_; }
  // (p-2)/2 * sqrt(lambda + a^2), the decay rate of the radial optimizer.
  double omega() const;

 private:
  double a_;
  double p_;
  double lambda_;
};

}  // namespace abhs
