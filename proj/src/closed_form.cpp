#include "abhs/closed_form.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "abhs/quadrature.hpp"

namespace abhs {

namespace {

constexpr double kPi = std::numbers::pi;

void require_pq(double p) {
  if (!(p > 2.0)) {
    throw std::domain_error("requires p > 2, got p = " + std::to_string(p));
  }
}

// Gamma-ratio bracket shared by k_star, c_star and the mu thresholds:
//   2 sqrt(pi) Gamma(p/(p-2)) / ((p-2) Gamma(p/(p-2) + 1/2)).
double gamma_bracket(double p) {
  double g = p / (p - 2.0);
  return 2.0 * std::sqrt(kPi) * gamma_fn(g) / ((p - 2.0) * gamma_fn(g + 0.5));
}

double discriminant_sb(double a, double p) {
  return p * p * p * p -
         a * a * (p - 2.0) * (p - 2.0) * (p + 2.0) * (3.0 * p - 2.0);
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("gamma_fn: requires x > 0, got x = " +
                            std::to_string(x));
  }
  // Lanczos, g = 7, 9 terms.
  static constexpr double kCoef[9] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    // Reflection keeps the series argument in its accurate range.
    return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
  }
  double z = x - 1.0;
  double sum = kCoef[0];
  for (int i = 1; i < 9; ++i) sum += kCoef[i] / (z + i);
  double t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

double k_star(double A, double p) {
  require_pq(p);
  if (A == 0.0) {
    throw std::domain_error("k_star: degenerate at A = 0");
  }
  return 0.5 * p * std::pow(std::fabs(A), 1.0 + 2.0 / p) *
         std::pow(gamma_bracket(p), 1.0 - 2.0 / p);
}

double c_star(double A, double p) {
  return std::pow(2.0 * kPi, 1.0 - 2.0 / p) * k_star(A, p);
}

double h_mu(double lambda, double a, double p) {
  require_pq(p);
  double t = lambda + a * a;
  if (!(t > 0.0)) {
    throw std::domain_error("h_mu: requires lambda > -a^2, got lambda = " +
                            std::to_string(lambda) + " with a = " +
                            std::to_string(a));
  }
  return 0.5 * p * std::pow(2.0 * kPi, 1.0 - 2.0 / p) *
         std::pow(t, 0.5 + 1.0 / p) *
         std::pow(gamma_bracket(p), 1.0 - 2.0 / p);
}

double invert_h(double mu, double a, double p) {
  require_pq(p);
  if (!(mu > 0.0)) {
    throw std::domain_error("invert_h: requires mu > 0, got mu = " +
                            std::to_string(mu));
  }
  // Work in t = lambda + a^2 > 0 where h is a strictly increasing power law.
  auto h_of_t = [&](double t) { return h_mu(t - a * a, a, p); };
  double t_lo = 1.0, t_hi = 1.0;
  int guard = 0;
  while (h_of_t(t_hi) < mu) {
    t_hi *= 4.0;
    if (++guard > 600) throw std::runtime_error("invert_h: bracket growth failed");
  }
  guard = 0;
  while (h_of_t(t_lo) > mu) {
    t_lo *= 0.25;
    if (++guard > 600) throw std::runtime_error("invert_h: bracket shrink failed");
  }
  // Bisection in log t, then a few secant steps for the last digits.
  double lo = std::log(t_lo), hi = std::log(t_hi);
  for (int i = 0; i < 80 && hi - lo > 1e-13; ++i) {
    double mid = 0.5 * (lo + hi);
    (h_of_t(std::exp(mid)) < mu ? lo : hi) = mid;
  }
  double t0 = std::exp(lo), t1 = std::exp(hi);
  double f0 = h_of_t(t0) - mu, f1 = h_of_t(t1) - mu;
  for (int i = 0; i < 8 && t1 != t0 && f1 != f0; ++i) {
    double t2 = t1 - f1 * (t1 - t0) / (f1 - f0);
    if (!(t2 > 0.0) || !std::isfinite(t2)) break;
    t0 = t1;
    f0 = f1;
    t1 = t2;
    f1 = h_of_t(t1) - mu;
    if (std::fabs(f1) <= 1e-14 * mu) break;
  }
  return t1 - a * a;
}

double lambda_star(double a, double p) {
  require_pq(p);
  return 4.0 * (1.0 - 4.0 * a * a) / (p * p - 4.0) - a * a;
}

double lambda_bullet(double a, double p) {
  require_pq(p);
  double disc = discriminant_sb(a, p);
  if (disc < 0.0) {
    throw std::runtime_error("lambda_bullet: negative discriminant at a = " +
                             std::to_string(a) + ", p = " + std::to_string(p));
  }
  double den = (p - 2.0) * (p - 2.0) * (p - 2.0) * (p + 2.0);
  return (8.0 * (std::sqrt(disc) + 2.0) - 4.0 * p * (p + 4.0)) / den - a * a;
}

double lambda_fs(double a, double p) {
  require_pq(p);
  return (4.0 * (1.0 + a * a) - a * a * p * p) / (p * p - 4.0);
}

double mu_star(double a, double p) {
  require_pq(p);
  if (!(a < 0.5)) {
    throw std::domain_error("mu_star: degenerate at a = 1/2 (lambda_star = -a^2)");
  }
  double base = (1.0 - 4.0 * a * a) / (p * p - 4.0);
  double g = p / (p - 2.0);
  double br = 2.0 * gamma_fn(g) / ((p - 2.0) * gamma_fn(g + 0.5));
  return 2.0 * p * std::pow(base, 0.5 + 1.0 / p) *
         std::pow(kPi, 1.5 - 3.0 / p) * std::pow(br, 1.0 - 2.0 / p);
}

double mu_bullet(double a, double p) {
  require_pq(p);
  if (!(a < 0.5)) {
    throw std::domain_error("mu_bullet: degenerate at a = 1/2 (lambda_bullet = -a^2)");
  }
  return h_mu(lambda_bullet(a, p), a, p);
}

double q_poly(double lambda, double a, double p) {
  require_pq(p);
  double d3 = (p - 2.0) * (p - 2.0) * (p - 2.0) * (p + 2.0);
  double d4 = d3 * (p - 2.0);
  double lin = 4.0 * (p * p + 4.0 * p - 4.0) / d3 + a * a;
  double cst =
      8.0 * (2.0 * (3.0 * p - 2.0) -
             a * a * (p * p * p + 2.0 * p * p + 12.0 * p - 8.0)) / d4 -
      a * a * a * a;
  return -lambda * lambda - 2.0 * lin * lambda + cst;
}

double gap(double a, double p) {
  require_pq(p);
  double disc = p * p * p * p -
                a * a * (p - 2.0) * (p - 2.0) * (3.0 * p * p + 4.0 * p - 4.0);
  if (disc < 0.0) {
    throw std::runtime_error("gap: negative discriminant");
  }
  double den = (p - 2.0) * (p - 2.0) * (p - 2.0) * (p + 2.0);
  return 8.0 / den *
         (std::sqrt(disc) + 2.0 * a * a * (p - 2.0) * (p - 2.0) - p * p);
}

double zeta_opt(double a, double p) {
  require_pq(p);
  double disc = discriminant_sb(a, p);
  if (disc < 0.0) {
    throw std::runtime_error("zeta_opt: negative discriminant");
  }
  return a * (p + 2.0) * (3.0 * p - 2.0) / (p * p + std::sqrt(disc));
}

Thresholds thresholds(double a, double p) {
  double ar = reduce_flux(a);
  Thresholds t;
  t.lambda_star = lambda_star(ar, p);
  t.lambda_bullet = lambda_bullet(ar, p);
  t.lambda_fs = lambda_fs(ar, p);
  if (ar < 0.5) {
    t.mu_star = mu_star(ar, p);
    t.mu_bullet = mu_bullet(ar, p);
  } else {
    t.mu_star = std::numeric_limits<double>::quiet_NaN();
    t.mu_bullet = std::numeric_limits<double>::quiet_NaN();
  }
  return t;
}

double ProfileSpec::operator()(double x) const {
  switch (kind) {
    case ProfileKind::w_star_cylinder:
      return amplitude * std::pow(std::cosh(alpha_or_omega * x), -decay_exponent);
    case ProfileKind::psi_disk:
    case ProfileKind::phi_potential: {
      double ra = std::pow(x, alpha_or_omega);
      return amplitude * std::pow(ra + 1.0 / ra, -decay_exponent);
    }
  }
  return 0.0;
}

ProfileSpec profile(ProfileKind kind, const Params& params) {
  double p = params.p();
  ProfileSpec spec;
  spec.kind = kind;
  spec.alpha_or_omega = params.omega();  // alpha and omega share one formula
  switch (kind) {
    case ProfileKind::w_star_cylinder:
      spec.amplitude = std::pow(0.5 * p * params.kappa(), 1.0 / (p - 2.0));
      spec.decay_exponent = 2.0 / (p - 2.0);
      break;
    case ProfileKind::psi_disk:
      spec.amplitude = 1.0;
      spec.decay_exponent = 2.0 / (p - 2.0);
      break;
    case ProfileKind::phi_potential:
      spec.amplitude = 1.0;
      spec.decay_exponent = 2.0;
      break;
  }
  return spec;
}

namespace {

// Composite Gauss-Legendre on [0, S] with panel doubling; integrands here
// are even, smooth and exponentially decaying.
template <typename F>
double adaptive_even_integral(F f, double s_max) {
  static const QuadratureRule rule = gauss_legendre(20);
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int panels = 4; panels <= 4096; panels *= 2) {
    double total = 0.0;
    double h = s_max / panels;
    for (int k = 0; k < panels; ++k) {
      double mid = (k + 0.5) * h;
      double acc = 0.0;
      for (int i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
      }
      total += 0.5 * h * acc;
    }
    total *= 2.0;  // even integrand
    if (std::isfinite(prev) &&
        std::fabs(total - prev) <= 1e-12 * std::fabs(total)) {
      return total;
    }
    prev = total;
  }
  throw std::runtime_error("integral: quadrature did not converge");
}

double truncation_length(double alpha, double omega) {
  // cosh(omega s)^{-alpha} <= 2^alpha exp(-alpha omega s); push the tail
  // below 1e-18 of the bulk.
  return (42.0 / alpha + std::numbers::ln2 + 2.0) / omega;
}

}  // namespace

double integral_I(double alpha, double omega) {
  if (!(alpha > 0.0) || !(omega > 0.0)) {
    throw std::domain_error("integral_I: requires alpha > 0 and omega > 0");
  }
  double s_max = truncation_length(alpha, omega);
  return adaptive_even_integral(
      [&](double s) { return std::pow(std::cosh(omega * s), -alpha); }, s_max);
}

double integral_J(double alpha_plus_2, double omega) {
  if (!(alpha_plus_2 > 2.0) || !(omega > 0.0)) {
    throw std::domain_error("integral_J: requires alpha + 2 > 2 and omega > 0");
  }
  double s_max = truncation_length(alpha_plus_2 - 2.0, omega);
  return adaptive_even_integral(
      [&](double s) {
        double sh = std::sinh(omega * s);
        return sh * sh * std::pow(std::cosh(omega * s), -alpha_plus_2);
      },
      s_max);
}

}  // namespace abhs
