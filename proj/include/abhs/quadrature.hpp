#pragma once

#include <Eigen/Dense>
#include <utility>

namespace abhs {

struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

// n-point Gauss rule for the symmetric Jacobi weight (1 - x^2)^beta on
// [-1, 1], beta > -1.  Exact for polynomials of degree <= 2n - 1 against
// that weight.
QuadratureRule gauss_jacobi_symmetric(int n, double beta);

// Values and derivatives at the given nodes of the first k polynomials
// orthonormal with respect to (1 - x^2)^beta.  Column j holds degree j.
struct OrthonormalBasis {
  Eigen::MatrixXd values;
  Eigen::MatrixXd derivatives;
};
OrthonormalBasis ultraspherical_basis(int k, double beta,
                                      const Eigen::VectorXd& nodes);

}  // namespace abhs
