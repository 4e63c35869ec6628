#include "abhs/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "abhs/closed_form.hpp"

namespace abhs {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::domain_error("gauss_legendre: n must be positive");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

namespace {

// Monic three-term recurrence coefficient b_k for the ultraspherical weight
// (1 - x^2)^beta (Gautschi's formula with lambda = beta + 1/2).
double monic_bk(int k, double beta) {
  double lam = beta + 0.5;
  return k * (k + 2.0 * lam - 1.0) / (4.0 * (k + lam) * (k + lam - 1.0));
}

double weight_mass(double beta) {
  // \int_{-1}^{1} (1-x^2)^beta dx = sqrt(pi) Gamma(beta+1) / Gamma(beta+3/2)
  return std::sqrt(std::numbers::pi) * gamma_fn(beta + 1.0) /
         gamma_fn(beta + 1.5);
}

}  // namespace

QuadratureRule gauss_jacobi_symmetric(int n, double beta) {
  if (n < 1) throw std::domain_error("gauss_jacobi_symmetric: n must be positive");
  if (!(beta > -1.0)) {
    throw std::domain_error("gauss_jacobi_symmetric: beta must exceed -1");
  }
  // Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal Jacobi
  // matrix, weights come from the first eigenvector components.
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    double off = std::sqrt(monic_bk(k, beta));
    jac(k, k - 1) = off;
    jac(k - 1, k) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("gauss_jacobi_symmetric: eigensolve failed");
  }
  QuadratureRule rule;
  rule.nodes = es.eigenvalues();
  rule.weights.resize(n);
  double mu0 = weight_mass(beta);
  for (int i = 0; i < n; ++i) {
    double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

OrthonormalBasis ultraspherical_basis(int k, double beta,
                                      const Eigen::VectorXd& nodes) {
  if (k < 1) throw std::domain_error("ultraspherical_basis: k must be positive");
  const Eigen::Index m = nodes.size();
  OrthonormalBasis basis;
  basis.values.setZero(m, k);
  basis.derivatives.setZero(m, k);
  double mu0 = weight_mass(beta);
  basis.values.col(0).setConstant(1.0 / std::sqrt(mu0));
  if (k == 1) return basis;
  double s1 = std::sqrt(monic_bk(1, beta));
  basis.values.col(1) = nodes.cwiseProduct(basis.values.col(0)) / s1;
  basis.derivatives.col(1) = basis.values.col(0) / s1;
  for (int j = 1; j + 1 < k; ++j) {
    double s0 = std::sqrt(monic_bk(j, beta));
    double s2 = std::sqrt(monic_bk(j + 1, beta));
    basis.values.col(j + 1) =
        (nodes.cwiseProduct(basis.values.col(j)) - s0 * basis.values.col(j - 1)) / s2;
    basis.derivatives.col(j + 1) =
        (basis.values.col(j) + nodes.cwiseProduct(basis.derivatives.col(j)) -
         s0 * basis.derivatives.col(j - 1)) / s2;
  }
  return basis;
}

}  // namespace abhs
