#pragma once

#include <vector>

#include "abhs/cylinder.hpp"
#include "abhs/params.hpp"

namespace abhs {

struct MinimizeOptions {
  int max_iters = 500;
  double tol = 1e-8;       // relative gradient-residual target
  double step_max = 4.0;   // line-search upper bound
};

struct MinimizeReport {
  bool converged = false;
  int iterations = 0;
  double energy = 0.0;     // conforming objective at the returned field
  double residual = 0.0;   // |grad - 2E |psi|^{p-2} psi|_w / |grad|
  std::vector<double> energy_history;  // one entry per accepted step
};

struct MinimizeResult {
  CylinderField field;  // L^p-normalized
  double energy;
  MinimizeReport report;
};

// Radial optimizer sampled on the grid (theta-independent).
CylinderField symmetric_candidate(std::shared_ptr<const CylinderGrid> grid,
                                  const Params& params);

// Radial optimizer with the two-mode instability ansatz mixed in at the
// given amplitude, in both the modulus and the phase.
CylinderField seeded_candidate(std::shared_ptr<const CylinderGrid> grid,
                               const Params& params, double amplitude);

// Gradient descent on the magnetic energy over the L^p unit sphere,
// preconditioned by the inverse of the quadratic part (solved per angular
// Fourier mode), with an exact line search along each direction.  Iterates
// live in the Nyquist-free angular subspace and the conforming
// first-difference metric in s; energy never increases across accepted
// steps.  Throws on NaN; non-convergence is flagged in the report with the
// partial result returned.
MinimizeResult minimize_magnetic(const Params& params,
                                 std::shared_ptr<const CylinderGrid> grid,
                                 const CylinderField& init,
                                 const MinimizeOptions& options = {});

}  // namespace abhs
