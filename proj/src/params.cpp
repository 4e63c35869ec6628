#include "abhs/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace abhs {

double reduce_flux(double a_raw) {
  if (!std::isfinite(a_raw)) {
    throw std::domain_error("reduce_flux: flux must be finite");
  }
  // round() sends k + 1/2 away from zero, so both tie cases land on |.| = 1/2.
  double frac = a_raw - std::round(a_raw);
  return std::fabs(frac);
}

double dual_exponent(double p) {
  if (!(p > 2.0)) {
    throw std::domain_error("dual_exponent: requires p > 2, got p = " +
                            std::to_string(p));
  }
  return p / (p - 2.0);
}

double exponent_from_dual(double q) {
  if (!(q > 1.0)) {
    throw std::domain_error("exponent_from_dual: requires q > 1, got q = " +
                            std::to_string(q));
  }
  return 2.0 * q / (q - 1.0);
}

FluxProfile::FluxProfile(std::vector<double> samples)
    : samples_(std::move(samples)) {
  if (samples_.empty()) {
    throw std::domain_error("FluxProfile: needs at least one sample");
  }
  for (double v : samples_) {
    if (!std::isfinite(v)) {
      throw std::domain_error("FluxProfile: samples must be finite");
    }
  }
}

double average_flux(const FluxProfile& profile) {
  const auto& s = profile.samples();
  double sum = 0.0;
  for (double v : s) sum += v;
  return sum / static_cast<double>(s.size());
}

Params::Params(double a, double p, double lambda)
    : a_(reduce_flux(a)), p_(p), lambda_(lambda) {
  if (!(p_ > 2.0)) {
    throw std::domain_error("Params: requires p > 2, got p = " +
                            std::to_string(p_));
  }
  if (!std::isfinite(lambda_) || !(lambda_ > -a_ * a_)) {
    throw std::domain_error("Params: requires lambda > -a^2 = " +
                            std::to_string(-a_ * a_) + ", got lambda = " +
                            std::to_string(lambda_));
  }
}

double Params::omega() const { return 0.5 * (p_ - 2.0) * std::sqrt(kappa()); }

}  // namespace abhs
