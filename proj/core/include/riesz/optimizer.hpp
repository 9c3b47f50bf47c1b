#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "riesz/certifier.hpp"
#include "riesz/energy.hpp"

namespace riesz {

struct OptimizerSettings {
  int max_iters = 20000;
  double step_init = 1e-2;
  double armijo_c = 1e-4;
  double armijo_shrink = 0.5;
  double grad_stop = 1e-8;
  std::uint64_t seed = 0;
};

struct MinimizeResult {
  Configuration config;
  double gradient_norm = 0.0;
  double scaled_energy = 0.0;
  int iterations = 0;
  bool converged = false;       // gradient_norm <= grad_stop
  bool step_collapsed = false;  // backtracking hit the 1e-16 floor
  std::vector<double> energy_trace;  // scaled energy at start and after each accepted step
};

/// Projected-gradient descent with Armijo backtracking and the normalization
/// retraction. Accepted steps never increase the (serially summed) energy.
MinimizeResult minimize(const Configuration& start, const RieszParams& params,
                        const OptimizerSettings& settings);

/// Orthonormal basis of the whole tangent bundle: d vectors per point, in
/// point-major order, built by orthonormal_tangent_basis.
std::vector<TangentVector> tangent_basis(const Configuration& config);

/// (N d) x (N d) matrix of the second-variation quadratic form in the
/// tangent_basis coordinates, assembled by polarization:
///   H[a][b] = (S(e_a + e_b) - S(e_a) - S(e_b)) / 2,  S = second_variation.
Eigen::MatrixXd hessian(const Configuration& config, const RieszParams& params);

enum class Classification { Minimum, Saddle, Maximum, Degenerate };

const char* to_string(Classification c);

struct CriticalPointReport {
  double gradient_norm = 0.0;
  Eigen::VectorXd eigenvalues;  // ascending
  double zero_tol = 0.0;        // 1e-6 * max(1, spectral radius)
  int num_zero = 0;
  int num_positive = 0;
  int num_negative = 0;
  Classification classification = Classification::Degenerate;
};

/// Eigendecomposition-based classification at a critical point. Eigenvalues
/// within zero_tol of zero are rotation modes of the orbit, not degeneracy.
/// Throws std::invalid_argument("not a critical point") when the gradient
/// norm exceeds grad_tol.
CriticalPointReport classify(const Configuration& config, const RieszParams& params,
                             double grad_tol = kGradTol);

}  // namespace riesz
