#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <utility>

#include "abhs/params.hpp"

namespace abhs {

using ComplexField = Eigen::MatrixXcd;  // (s index) x (theta index)
using RealField = Eigen::MatrixXd;

// Truncated Emden-Fowler cylinder [-L, L] x S^1 with a uniform tensor grid.
// Fields are Dirichlet-truncated in s (zero beyond +-L) and periodic in
// theta; the theta measure is the probability measure dtheta / (2 pi).
struct CylinderGrid {
  double length = 0.0;  // half-length L of the s interval
  int ns = 0;
  int ntheta = 0;
  double ds = 0.0;
  Eigen::VectorXd s_nodes;
  Eigen::VectorXd theta_nodes;
  Eigen::VectorXd s_weights;  // trapezoid weights, sum = 2L
  // Periodic spectral differentiation matrix in theta (antisymmetric,
  // exact on modes |m| < ntheta/2, Nyquist mode differentiates to zero).
  Eigen::MatrixXd dtheta;
};

CylinderGrid build_grid(double length, int ns, int ntheta);

// Complex field bound to its grid.  Grids are shared, never mutated.
struct CylinderField {
  std::shared_ptr<const CylinderGrid> grid;
  ComplexField values;
};

CylinderField make_field(std::shared_ptr<const CylinderGrid> grid,
                         ComplexField values);

// \iint f ds dsigma for a nodal sample f (real).
double integrate(const CylinderGrid& grid, const RealField& f);

// (\iint |psi|^p ds dsigma)^{1/p} and its square.
double lp_norm(const CylinderField& psi, double p);
double lp_functional(const CylinderField& psi, double p);
double l2_norm_sq(const CylinderField& psi);

// Magnetic energy \iint (|d_s psi|^2 + |(d_theta - i a) psi|^2
//                        + lambda |psi|^2) ds dsigma
// with centered differences in s and spectral differentiation in theta.
double energy_magnetic(const CylinderField& psi, const Params& params);

// Same kinetic + shift quadratic form but evaluated with the conforming
// first-difference stencil in s; this is the discrete objective the
// minimizer drives downhill (the centered form has a spurious alternating
// null mode that a minimizer will exploit).
double energy_magnetic_conforming(const CylinderField& psi, const Params& params);

// Energy deficit  E[psi] - mu (2 pi \iint |psi|^p)^{2/p}  in plane
// normalization (both terms carry the 2 pi of the angular measure).
double energy_deficit(const CylinderField& psi, const Params& params, double mu);

// Strictly positive modulus u and phase S with psi = u exp(i S).
struct ModulusPhase {
  RealField u;
  RealField phase;
};

// Phase-optimized kinetic lower bound
//   \iint (|d_s u|^2 + |d_theta u|^2) ds dsigma
//     + a^2 \int ( \oint u^{-2} dsigma )^{-1} ds ;
// never exceeds the magnetic kinetic energy of u exp(i S) for any phase S.
double kinetic_phase_optimized(const CylinderGrid& grid, const ModulusPhase& mp,
                               double a);

// Circle inequality: returns {lhs, rhs} of
//   \oint |d_theta psi - i a psi|^2 >= (1-4a^2) \oint |d_theta u|^2
//                                      + a^2 \oint u^2 ,
// all integrals with respect to dsigma on a uniform grid.
std::pair<double, double> kinetic_lower_bound_circle(
    const Eigen::VectorXcd& psi_circle, double a);

// Relaxed anisotropic functional
//   \iint (w_s^2 + nu w_theta^2 + kappa w^2) - K*_{sqrt(kappa)} (\iint |w|^p)^{2/p}
// for real fields w.
double energy_F(const CylinderGrid& grid, const RealField& w, double kappa,
                double nu, double p);

enum class SymmetryVerdict { symmetric, broken };

struct SymmetryReport {
  SymmetryVerdict verdict;
  double score;  // integrated angular variance of |psi|, normalized by |psi|_2^2
};

// Gauge-invariant symmetry classifier; score == tolerance counts as broken.
SymmetryReport classify_symmetry(const CylinderField& psi, double tolerance);

// Second-variation quadratic form around the radial optimizer, acting on a
// real modulus perturbation phi and phase perturbation chi.
double quadratic_Q(const CylinderGrid& grid, const RealField& phi,
                   const RealField& chi, const Params& params);

// Closed-form value of quadratic_Q on the separable two-mode ansatz with
// phase amplitude zeta, via the cosh-power integrals.
double ansatz_Q(double zeta, const Params& params);

// Minimizer of ansatz_Q over zeta.
double ansatz_zeta_min(const Params& params);

}  // namespace abhs
