#pragma once

#include <span>
#include <utility>
#include <vector>

namespace vbsge {

/// Parameters of the spin-scaling law f(s) = alpha * log_base(s + beta/s + gamma) + delta.
/// The log base is an explicit input, not a fitted parameter.
struct FitParams {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double log_base = 2.0;
};

double eval_f(const FitParams& params, double s);

struct FitReport {
  FitParams params;
  double rms_residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct FitOptions {
  int max_iter = 200;
  double tol = 1e-12;
};

/// Damped Gauss-Newton least squares over (alpha, beta, gamma, delta) with a
/// central-difference Jacobian (step 1e-6 * max(1, |param|)). Steps that
/// leave the log domain or fail to reduce the residual raise the damping
/// factor; the fit never aborts on a singular step. Requires >= 4 points
/// whose abscissae are integers of a single parity.
FitReport fit_scaling(std::span<const std::pair<double, double>> points,
                      const FitParams& init, const FitOptions& options = {});

/// Reference parameter sets for the two spin parities.
FitParams reference_params_even(double log_base = 2.0);
FitParams reference_params_odd(double log_base = 2.0);

}  // namespace vbsge
