#include "abhs/minimize.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "abhs/closed_form.hpp"

namespace abhs {

namespace {

using Complex = std::complex<double>;

struct Workspace {
  const CylinderGrid& g;
  const Params& prm;
  Eigen::MatrixXcd fwd;   // forward DFT along theta (right-multiply)
  Eigen::MatrixXcd inv;   // inverse DFT along theta
  // Tridiagonal LDL factors of K_s + (mul_m + lambda) W, one per theta mode.
  Eigen::MatrixXd fac_d;  // ns x ntheta
  Eigen::MatrixXd fac_l;  // ns x ntheta (row 0 unused)

  Workspace(const CylinderGrid& grid, const Params& params)
      : g(grid), prm(params) {
    int nt = g.ntheta;
    fwd.resize(nt, nt);
    inv.resize(nt, nt);
    for (int j = 0; j < nt; ++j) {
      for (int k = 0; k < nt; ++k) {
        double ang = -2.0 * std::numbers::pi * j * k / nt;
        fwd(j, k) = Complex(std::cos(ang), std::sin(ang));
        inv(j, k) = std::conj(fwd(j, k)) / static_cast<double>(nt);
      }
    }
    fac_d.resize(g.ns, nt);
    fac_l.resize(g.ns, nt);
    double off = -1.0 / g.ds;
    for (int j = 0; j < nt; ++j) {
      int m = (j <= nt / 2) ? j : j - nt;
      double mul = (j == nt / 2) ? prm.a() * prm.a()
                                 : (m - prm.a()) * (m - prm.a());
      double shift = mul + prm.lambda();
      double d0 = 2.0 / g.ds + shift * g.s_weights(0);
      fac_d(0, j) = d0;
      for (int i = 1; i < g.ns; ++i) {
        double l = off / fac_d(i - 1, j);
        fac_l(i, j) = l;
        fac_d(i, j) = 2.0 / g.ds + shift * g.s_weights(i) - off * l;
      }
    }
  }

  // Zero the Nyquist column in mode space.
  ComplexField project_band(const ComplexField& f) const {
    ComplexField hat = f * fwd;
    hat.col(g.ntheta / 2).setZero();
    return hat * inv;
  }

  // Apply the inverse of the preconditioner K_s + (mul + lambda) W per mode.
  ComplexField solve(const ComplexField& r) const {
    ComplexField hat = r * fwd;
    double off = -1.0 / g.ds;
    for (int j = 0; j < g.ntheta; ++j) {
      // forward substitution
      for (int i = 1; i < g.ns; ++i) {
        hat(i, j) -= fac_l(i, j) * hat(i - 1, j);
      }
      hat(g.ns - 1, j) /= fac_d(g.ns - 1, j);
      for (int i = g.ns - 2; i >= 0; --i) {
        hat(i, j) = hat(i, j) / fac_d(i, j) - off / fac_d(i, j) * hat(i + 1, j);
      }
    }
    hat.col(g.ntheta / 2).setZero();
    return (hat * inv) * (g.ntheta / 2.0);
  }

  // Gradient of the conforming quadratic form in the plain component pairing.
  ComplexField gradient(const ComplexField& psi) const {
    ComplexField out(g.ns, g.ntheta);
    double invds = 1.0 / g.ds;
    // K_s psi: (1/ds) tridiag(-1, 2, -1) with Dirichlet ghosts.
    out.row(0) = invds * (2.0 * psi.row(0) - psi.row(1));
    for (int i = 1; i + 1 < g.ns; ++i) {
      out.row(i) = invds * (2.0 * psi.row(i) - psi.row(i - 1) - psi.row(i + 1));
    }
    out.row(g.ns - 1) = invds * (2.0 * psi.row(g.ns - 1) - psi.row(g.ns - 2));
    Complex ia(0.0, prm.a());
    ComplexField mth = psi * g.dtheta.transpose() - ia * psi;
    ComplexField adm = -(mth * g.dtheta.transpose()) + ia * mth;
    ComplexField rest = adm + prm.lambda() * psi;
    for (int i = 0; i < g.ns; ++i) rest.row(i) *= g.s_weights(i);
    return (out + rest) * (2.0 / g.ntheta);
  }
};

double lp_norm_raw(const CylinderGrid& g, const ComplexField& v, double p) {
  RealField ap = v.cwiseAbs().array().pow(p);
  return std::pow((g.s_weights.transpose() * ap).sum() / g.ntheta, 1.0 / p);
}

double pair_re(const ComplexField& x, const ComplexField& y) {
  return x.cwiseProduct(y.conjugate()).sum().real();
}

}  // namespace

CylinderField symmetric_candidate(std::shared_ptr<const CylinderGrid> grid,
                                  const Params& params) {
  ProfileSpec w_star = profile(ProfileKind::w_star_cylinder, params);
  ComplexField v(grid->ns, grid->ntheta);
  for (int i = 0; i < grid->ns; ++i) {
    v.row(i).setConstant(Complex(w_star(grid->s_nodes(i)), 0.0));
  }
  return make_field(std::move(grid), std::move(v));
}

CylinderField seeded_candidate(std::shared_ptr<const CylinderGrid> grid,
                               const Params& params, double amplitude) {
  ProfileSpec w_star = profile(ProfileKind::w_star_cylinder, params);
  double p = params.p();
  double omega = params.omega();
  ComplexField v(grid->ns, grid->ntheta);
  for (int i = 0; i < grid->ns; ++i) {
    double s = grid->s_nodes(i);
    double w = w_star(s);
    double mod_env = std::pow(std::cosh(omega * s), -p / (p - 2.0));
    double phase_env = 1.0 / std::cosh(omega * s);
    for (int j = 0; j < grid->ntheta; ++j) {
      double th = grid->theta_nodes(j);
      double mod = w + amplitude * mod_env * std::cos(th);
      double phase = amplitude * phase_env * std::sin(th);
      v(i, j) = mod * Complex(std::cos(phase), std::sin(phase));
    }
  }
  return make_field(std::move(grid), std::move(v));
}

MinimizeResult minimize_magnetic(const Params& params,
                                 std::shared_ptr<const CylinderGrid> grid,
                                 const CylinderField& init,
                                 const MinimizeOptions& options) {
  if (!grid) throw std::domain_error("minimize_magnetic: null grid");
  if (init.values.rows() != grid->ns || init.values.cols() != grid->ntheta) {
    throw std::domain_error("minimize_magnetic: init shape mismatch");
  }
  const CylinderGrid& g = *grid;
  const double p = params.p();
  Workspace ws(g, params);

  ComplexField psi = ws.project_band(init.values);
  double n0 = lp_norm_raw(g, psi, p);
  if (!(n0 > 1e-14)) {
    throw std::domain_error("minimize_magnetic: init has negligible L^p mass");
  }
  psi /= n0;

  auto objective = [&](const ComplexField& v) {
    return energy_magnetic_conforming(
        CylinderField{grid, v}, params);
  };

  MinimizeReport report;
  double energy = objective(psi);
  report.energy_history.push_back(energy);
  double residual = std::numeric_limits<double>::infinity();

  int it = 0;
  for (; it < options.max_iters; ++it) {
    if (!std::isfinite(energy)) {
      throw std::runtime_error("minimize_magnetic: energy became non-finite");
    }
    ComplexField grad = ws.gradient(psi);
    ComplexField pterm = psi.cwiseAbs().array().pow(p - 2.0).matrix().cast<Complex>()
                             .cwiseProduct(psi);
    pterm.array().colwise() *= g.s_weights.array().cast<Complex>();
    pterm /= static_cast<double>(g.ntheta);
    ComplexField resid = grad - 2.0 * energy * pterm;
    double gnorm = grad.norm();
    residual = gnorm > 0.0 ? resid.norm() / gnorm : 0.0;
    if (residual < options.tol) break;

    ComplexField dir = ws.solve(resid);
    double e0 = energy;
    double b = 0.5 * pair_re(dir, grad);
    double ed = objective(dir);
    auto along = [&](double t) {
      ComplexField cand = psi - t * dir;
      double n = lp_norm_raw(g, cand, p);
      if (!(n > 1e-14)) return std::numeric_limits<double>::infinity();
      return (e0 - 2.0 * t * b + t * t * ed) / (n * n);
    };

    // Coarse geometric sweep, then golden-section refinement of the best
    // bracket.
    double best_t = 0.0, best_e = energy;
    constexpr int kSweep = 40;
    double t_lo_sweep = 1e-5;
    double ratio = std::pow(options.step_max / t_lo_sweep, 1.0 / (kSweep - 1));
    double tprev = 0.0, t = t_lo_sweep;
    double lo = 0.0, hi = options.step_max;
    for (int k = 0; k < kSweep; ++k) {
      double e = along(t);
      if (e < best_e) {
        best_e = e;
        best_t = t;
        lo = tprev;
        hi = std::min(t * ratio, options.step_max);
      }
      tprev = t;
      t *= ratio;
    }
    if (best_t == 0.0) break;  // no improvement along this direction
    double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = along(x1), f2 = along(x2);
    for (int k = 0; k < 40; ++k) {
      if (f1 < f2) {
        hi = x2; x2 = x1; f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = along(x1);
      } else {
        lo = x1; x1 = x2; f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = along(x2);
      }
    }
    double t_star = 0.5 * (lo + hi);
    double e_star = along(t_star);
    if (!(e_star < energy)) {
      double e_best = along(best_t);
      if (!(e_best < energy)) break;
      t_star = best_t;
      e_star = e_best;
    }
    psi -= t_star * dir;
    psi /= lp_norm_raw(g, psi, p);
    energy = objective(psi);
    report.energy_history.push_back(energy);
  }

  report.converged = residual < options.tol;
  report.iterations = it;
  report.energy = energy;
  report.residual = residual;
  return MinimizeResult{make_field(grid, std::move(psi)), energy,
                        std::move(report)};
}

}  // namespace abhs
