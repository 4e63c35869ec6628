#include "abhs/cylinder.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "abhs/closed_form.hpp"

namespace abhs {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::MatrixXd spectral_dtheta(int n) {
  // Periodic spectral differentiation on n (even) equispaced points:
  // D_jk = (-1)^(j-k) / (2 tan((j-k) h / 2)), zero diagonal.
  Eigen::MatrixXd d(n, n);
  double h = 2.0 * kPi / n;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (j == k) {
        d(j, k) = 0.0;
      } else {
        int diff = j - k;
        double sign = (diff % 2 == 0) ? 1.0 : -1.0;
        d(j, k) = 0.5 * sign / std::tan(0.5 * diff * h);
      }
    }
  }
  return d;
}

// Centered first difference in s with Dirichlet ghosts beyond the ends.
ComplexField d_s_centered(const CylinderGrid& g, const ComplexField& f) {
  ComplexField out(g.ns, g.ntheta);
  double inv = 1.0 / (2.0 * g.ds);
  out.row(0) = f.row(1) * inv;
  for (int i = 1; i + 1 < g.ns; ++i) {
    out.row(i) = (f.row(i + 1) - f.row(i - 1)) * inv;
  }
  out.row(g.ns - 1) = -f.row(g.ns - 2) * inv;
  return out;
}

RealField d_s_centered(const CylinderGrid& g, const RealField& f) {
  RealField out(g.ns, g.ntheta);
  double inv = 1.0 / (2.0 * g.ds);
  out.row(0) = f.row(1) * inv;
  for (int i = 1; i + 1 < g.ns; ++i) {
    out.row(i) = (f.row(i + 1) - f.row(i - 1)) * inv;
  }
  out.row(g.ns - 1) = -f.row(g.ns - 2) * inv;
  return out;
}

void check_grid_field(const CylinderField& psi) {
  if (!psi.grid) throw std::domain_error("field has no grid");
  if (psi.values.rows() != psi.grid->ns ||
      psi.values.cols() != psi.grid->ntheta) {
    throw std::domain_error("field shape does not match its grid");
  }
  if (!psi.values.allFinite()) {
    throw std::domain_error("field has non-finite entries");
  }
}

void check_nonzero(const CylinderField& psi) {
  check_grid_field(psi);
  if (psi.values.cwiseAbs().maxCoeff() <= 0.0) {
    throw std::domain_error("field is identically zero");
  }
}

}  // namespace

CylinderGrid build_grid(double length, int ns, int ntheta) {
  if (!(length > 0.0)) {
    throw std::domain_error("build_grid: requires L > 0");
  }
  if (ns < 16) {
    throw std::domain_error("build_grid: requires ns >= 16, got " +
                            std::to_string(ns));
  }
  if (ntheta < 8 || ntheta % 2 != 0) {
    throw std::domain_error("build_grid: requires even ntheta >= 8, got " +
                            std::to_string(ntheta));
  }
  CylinderGrid g;
  g.length = length;
  g.ns = ns;
  g.ntheta = ntheta;
  g.ds = 2.0 * length / (ns - 1);
  g.s_nodes = Eigen::VectorXd::LinSpaced(ns, -length, length);
  g.theta_nodes = Eigen::VectorXd::LinSpaced(ntheta, 0.0, 2.0 * kPi * (ntheta - 1) / ntheta);
  g.s_weights = Eigen::VectorXd::Constant(ns, g.ds);
  g.s_weights(0) *= 0.5;
  g.s_weights(ns - 1) *= 0.5;
  g.dtheta = spectral_dtheta(ntheta);
  return g;
}

CylinderField make_field(std::shared_ptr<const CylinderGrid> grid,
                         ComplexField values) {
  CylinderField f{std::move(grid), std::move(values)};
  check_grid_field(f);
  return f;
}

double integrate(const CylinderGrid& grid, const RealField& f) {
  return (grid.s_weights.transpose() * f).sum() / grid.ntheta;
}

double lp_norm(const CylinderField& psi, double p) {
  check_nonzero(psi);
  RealField ap = psi.values.cwiseAbs().array().pow(p);
  return std::pow(integrate(*psi.grid, ap), 1.0 / p);
}

double lp_functional(const CylinderField& psi, double p) {
  double n = lp_norm(psi, p);
  return n * n;
}

double l2_norm_sq(const CylinderField& psi) {
  check_nonzero(psi);
  RealField a2 = psi.values.cwiseAbs2();
  return integrate(*psi.grid, a2);
}

double energy_magnetic(const CylinderField& psi, const Params& params) {
  check_nonzero(psi);
  const CylinderGrid& g = *psi.grid;
  ComplexField ds = d_s_centered(g, psi.values);
  ComplexField dt = psi.values * g.dtheta.transpose();
  ComplexField mag = dt - std::complex<double>(0.0, params.a()) * psi.values;
  RealField density = ds.cwiseAbs2() + mag.cwiseAbs2() +
                      params.lambda() * psi.values.cwiseAbs2();
  return integrate(g, density);
}

double energy_magnetic_conforming(const CylinderField& psi,
                                  const Params& params) {
  check_nonzero(psi);
  const CylinderGrid& g = *psi.grid;
  // First-difference (P1) stiffness with Dirichlet springs at both ends.
  double acc = 0.0;
  for (int i = 0; i + 1 < g.ns; ++i) {
    acc += (psi.values.row(i + 1) - psi.values.row(i)).cwiseAbs2().sum();
  }
  acc += psi.values.row(0).cwiseAbs2().sum();
  acc += psi.values.row(g.ns - 1).cwiseAbs2().sum();
  double e_s = acc / (g.ds * g.ntheta);
  ComplexField dt = psi.values * g.dtheta.transpose();
  ComplexField mag = dt - std::complex<double>(0.0, params.a()) * psi.values;
  RealField density = mag.cwiseAbs2() + params.lambda() * psi.values.cwiseAbs2();
  return e_s + integrate(g, density);
}

double energy_deficit(const CylinderField& psi, const Params& params,
                      double mu) {
  double e = energy_magnetic(psi, params);
  double n2 = lp_functional(psi, params.p());
  double two_pi = 2.0 * kPi;
  return two_pi * e - mu * std::pow(two_pi, 2.0 / params.p()) * n2;
}

double kinetic_phase_optimized(const CylinderGrid& grid,
                               const ModulusPhase& mp, double a) {
  if (mp.u.rows() != grid.ns || mp.u.cols() != grid.ntheta) {
    throw std::domain_error("kinetic_phase_optimized: modulus shape mismatch");
  }
  if (mp.u.minCoeff() < 1e-12) {
    throw std::domain_error(
        "kinetic_phase_optimized: modulus must stay strictly positive");
  }
  RealField ds = d_s_centered(grid, mp.u);
  RealField dt = mp.u * grid.dtheta.transpose();
  double grad_part =
      integrate(grid, RealField(ds.cwiseAbs2() + dt.cwiseAbs2()));
  // a^2 \int ds / (\oint u^{-2} dsigma): harmonic angular mean per slice.
  double flux_part = 0.0;
  for (int i = 0; i < grid.ns; ++i) {
    double inv_mean = mp.u.row(i).cwiseAbs2().cwiseInverse().mean();
    flux_part += grid.s_weights(i) / inv_mean;
  }
  return grad_part + a * a * flux_part;
}

std::pair<double, double> kinetic_lower_bound_circle(
    const Eigen::VectorXcd& psi_circle, double a) {
  int n = static_cast<int>(psi_circle.size());
  if (n < 8 || n % 2 != 0) {
    throw std::domain_error("kinetic_lower_bound_circle: needs even n >= 8");
  }
  Eigen::MatrixXd d = spectral_dtheta(n);
  Eigen::VectorXcd dpsi = d * psi_circle;
  Eigen::VectorXcd mag =
      dpsi - std::complex<double>(0.0, a) * psi_circle;
  double lhs = mag.cwiseAbs2().mean();
  Eigen::VectorXd u = psi_circle.cwiseAbs();
  Eigen::VectorXd du = d * u;
  double rhs = (1.0 - 4.0 * a * a) * du.cwiseAbs2().mean() +
               a * a * u.cwiseAbs2().mean();
  return {lhs, rhs};
}

double energy_F(const CylinderGrid& grid, const RealField& w, double kappa,
                double nu, double p) {
  if (!(kappa > 0.0) || !(nu > 0.0)) {
    throw std::domain_error("energy_F: requires kappa > 0 and nu > 0");
  }
  if (w.rows() != grid.ns || w.cols() != grid.ntheta) {
    throw std::domain_error("energy_F: field shape mismatch");
  }
  RealField ds = d_s_centered(grid, w);
  RealField dt = w * grid.dtheta.transpose();
  double quad = integrate(
      grid, RealField(ds.cwiseAbs2() + nu * dt.cwiseAbs2() + kappa * w.cwiseAbs2()));
  RealField ap = w.cwiseAbs().array().pow(p);
  double lp2 = std::pow(integrate(grid, ap), 2.0 / p);
  return quad - k_star(std::sqrt(kappa), p) * lp2;
}

SymmetryReport classify_symmetry(const CylinderField& psi, double tolerance) {
  check_nonzero(psi);
  const CylinderGrid& g = *psi.grid;
  RealField u = psi.values.cwiseAbs();
  double var_total = 0.0;
  for (int i = 0; i < g.ns; ++i) {
    double mean = u.row(i).mean();
    double var = (u.row(i).array() - mean).square().mean();
    var_total += g.s_weights(i) * var;
  }
  double score = var_total / l2_norm_sq(psi);
  SymmetryReport rep;
  rep.score = score;
  rep.verdict =
      score < tolerance ? SymmetryVerdict::symmetric : SymmetryVerdict::broken;
  return rep;
}

double quadratic_Q(const CylinderGrid& grid, const RealField& phi,
                   const RealField& chi, const Params& params) {
  if (phi.rows() != grid.ns || phi.cols() != grid.ntheta ||
      chi.rows() != grid.ns || chi.cols() != grid.ntheta) {
    throw std::domain_error("quadratic_Q: field shape mismatch");
  }
  ProfileSpec w_star = profile(ProfileKind::w_star_cylinder, params);
  Eigen::VectorXd w(grid.ns), wpm2(grid.ns);
  for (int i = 0; i < grid.ns; ++i) {
    w(i) = w_star(grid.s_nodes(i));
    wpm2(i) = std::pow(w(i), params.p() - 2.0);
  }
  double a = params.a();
  RealField chi_s = d_s_centered(grid, chi);
  RealField chi_t = chi * grid.dtheta.transpose();
  RealField phi_s = d_s_centered(grid, phi);
  RealField phi_t = phi * grid.dtheta.transpose();

  // |d_theta chi - a|^2 - a^2 = (d_theta chi)^2 - 2 a d_theta chi.
  RealField phase_density =
      chi_s.cwiseAbs2() + chi_t.cwiseAbs2() - 2.0 * a * chi_t;
  phase_density.array().colwise() *= w.array().square();

  RealField cross = phi.cwiseProduct(chi_t);
  cross.array().colwise() *= w.array();

  RealField mod_density = phi_s.cwiseAbs2() + phi_t.cwiseAbs2() +
                          params.kappa() * phi.cwiseAbs2();
  RealField mod_pot = phi.cwiseAbs2();
  mod_pot.array().colwise() *= wpm2.array();

  return integrate(grid, phase_density) - 4.0 * a * integrate(grid, cross) +
         integrate(grid, mod_density) -
         (params.p() - 1.0) * integrate(grid, mod_pot);
}

double ansatz_Q(double zeta, const Params& params) {
  double p = params.p();
  double omega = params.omega();
  double alpha = 2.0 * p / (p - 2.0);
  double i_a = integral_I(alpha, omega);
  double j_a2 = integral_J(alpha + 2.0, omega);
  double i_a2 = integral_I(alpha + 2.0, omega);
  double zsp = 0.5 * p * params.kappa();  // zeta_*^{p-2}
  double pw = p * omega / (p - 2.0);
  return zeta * zeta * (omega * omega * j_a2 + i_a) -
         4.0 * zeta * params.a() * i_a + pw * pw * j_a2 +
         (1.0 + params.kappa()) * i_a - (p - 1.0) * zsp * i_a2;
}

double ansatz_zeta_min(const Params& params) {
  double p = params.p();
  double omega = params.omega();
  double alpha = 2.0 * p / (p - 2.0);
  double i_a = integral_I(alpha, omega);
  double j_a2 = integral_J(alpha + 2.0, omega);
  return 2.0 * params.a() * i_a / (omega * omega * j_a2 + i_a);
}

}  // namespace abhs
