#include "riesz/optimizer.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace riesz {

namespace {

constexpr double kStepFloor = 1e-16;
constexpr double kStepCeiling = 1e1;

void validate(const OptimizerSettings& s) {
  if (s.max_iters <= 0 || s.step_init <= 0.0 || s.grad_stop <= 0.0) {
    throw std::invalid_argument("optimizer settings must be positive");
  }
  if (s.armijo_c <= 0.0 || s.armijo_c >= 1.0 || s.armijo_shrink <= 0.0 ||
      s.armijo_shrink >= 1.0) {
    throw std::invalid_argument("Armijo parameters must lie in (0, 1)");
  }
}

// Damped Newton refinement on the tangent bundle. Line-searched descent
// cannot push the gradient much below the square root of the energy's ulp,
// so the final decades to grad_stop are covered by solving H delta = -g in
// tangent coordinates (zero modes excluded by an eigenvalue cutoff) and
// accepting steps on strict gradient-norm decrease.
bool newton_polish(Configuration& current, double& current_energy, double& norm,
                   const RieszParams& params, double grad_stop, int max_rounds = 100) {
  const int d = current.dim();
  bool moved = false;
  const auto finish = [&](bool converged) {
    if (moved) current_energy = energy(current, params).scaled;
    return converged;
  };
  for (int round = 0; round < max_rounds; ++round) {
    const Perturbation grad = riemannian_gradient(current, params);
    norm = gradient_norm(grad);
    if (norm <= grad_stop) return finish(true);

    const std::vector<TangentVector> basis = tangent_basis(current);
    const int dim = static_cast<int>(basis.size());
    Eigen::VectorXd coords(dim);
    for (int a = 0; a < dim; ++a) {
      coords[a] = grad.tangents[static_cast<size_t>(a / d)].direction.dot(
          basis[static_cast<size_t>(a)].direction);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hessian(current, params));
    if (solver.info() != Eigen::Success) return finish(false);
    const Eigen::VectorXd& values = solver.eigenvalues();
    const double radius = std::max(std::abs(values[0]), std::abs(values[dim - 1]));

    // Smallest cutoff keeps genuinely soft modes (degenerate critical
    // families exist, e.g. the inverse-square energy on S^2); the larger
    // rungs recover when those eigenvalues are still dominated by noise away
    // from the critical point.
    bool accepted = false;
    for (const double cutoff_scale : {1e-12, 1e-8, 1e-4}) {
      const double cutoff = cutoff_scale * radius;
      Eigen::VectorXd weights = solver.eigenvectors().transpose() * coords;
      for (int k = 0; k < dim; ++k) {
        weights[k] = std::abs(values[k]) > cutoff ? weights[k] / values[k] : 0.0;
      }
      const Eigen::VectorXd delta = -(solver.eigenvectors() * weights);

      Perturbation step = zero_perturbation(current);
      for (int a = 0; a < dim; ++a) {
        step.tangents[static_cast<size_t>(a / d)].direction +=
            delta[a] * basis[static_cast<size_t>(a)].direction;
      }

      for (double damping = 1.0; damping >= 1.0 / 1024.0; damping *= 0.5) {
        const Configuration trial = retract_configuration(current, step, damping);
        double trial_norm;
        try {
          trial_norm = gradient_norm(riemannian_gradient(trial, params));
        } catch (const KernelSingularity&) {
          continue;
        }
        if (trial_norm < norm) {
          current = trial;
          norm = trial_norm;
          accepted = true;
          moved = true;
          break;
        }
      }
      if (accepted) break;
    }
    if (!accepted) return finish(false);
  }
  return finish(norm <= grad_stop);
}

}  // namespace

MinimizeResult minimize(const Configuration& start, const RieszParams& params,
                        const OptimizerSettings& settings) {
  validate(settings);
  MinimizeResult result{start, 0.0, 0.0, 0, false, false, {}};
  Configuration current = start;
  double current_energy = energy(current, params).scaled;
  result.energy_trace.push_back(current_energy);
  double step = settings.step_init;
  int noise_steps = 0;  // consecutive accepted steps with no usable energy signal
  int polish_attempts = 0;
  bool collapsed = false;

  for (int iter = 0;; ++iter) {
    const Perturbation grad = riemannian_gradient(current, params);
    double norm = gradient_norm(grad);
    result.iterations = iter;
    if (norm <= settings.grad_stop) {
      result.converged = true;
      break;
    }
    if (iter >= settings.max_iters) {
      result.converged = newton_polish(current, current_energy, norm, params,
                                       settings.grad_stop);
      break;
    }
    if (noise_steps > 50) {
      // The energy signal is exhausted; hand the remaining decades to the
      // Newton polish. If it stalls, resume descent from where it got to.
      noise_steps = 0;
      if (newton_polish(current, current_energy, norm, params, settings.grad_stop)) {
        result.converged = true;
        break;
      }
      if (++polish_attempts >= 5) break;
      continue;
    }

    // Below this, the Armijo decrease is smaller than the rounding noise of
    // the energy itself; the energy comparison carries no information there
    // and the gradient norm (still resolvable) takes over as the test.
    const double energy_resolution = 64.0 * std::numeric_limits<double>::epsilon() *
                                     std::max(std::abs(current_energy), 1.0);

    bool accepted = false;
    for (double trial = step; trial >= kStepFloor; trial *= settings.armijo_shrink) {
      // Descent direction is -grad: retract with negative parameter.
      Configuration trial_config = retract_configuration(current, grad, -trial);
      double trial_energy;
      try {
        trial_energy = energy(trial_config, params).scaled;
      } catch (const KernelSingularity&) {
        continue;  // step drove a pair into the collision cap; shrink
      }
      const double required = settings.armijo_c * trial * norm * norm;
      bool ok;
      if (required >= energy_resolution) {
        ok = trial_energy <= current_energy - required;
        if (ok) noise_steps = 0;
      } else {
        ok = trial_energy <= current_energy &&
             gradient_norm(riemannian_gradient(trial_config, params)) < norm;
        if (ok) ++noise_steps;
      }
      if (ok) {
        current = std::move(trial_config);
        current_energy = trial_energy;
        result.energy_trace.push_back(current_energy);
        step = std::min(trial * 2.0, kStepCeiling);
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      result.converged =
          newton_polish(current, current_energy, norm, params, settings.grad_stop);
      collapsed = !result.converged;
      break;
    }
  }

  const Perturbation grad = riemannian_gradient(current, params);
  result.config = std::move(current);
  result.gradient_norm = gradient_norm(grad);
  result.scaled_energy = current_energy;
  result.step_collapsed = collapsed;
  result.converged = result.gradient_norm <= settings.grad_stop;
  return result;
}

std::vector<TangentVector> tangent_basis(const Configuration& config) {
  std::vector<TangentVector> basis;
  basis.reserve(static_cast<size_t>(config.size() * config.dim()));
  for (int i = 0; i < config.size(); ++i) {
    for (Vector& v : orthonormal_tangent_basis(config[i])) {
      basis.push_back(TangentVector{config[i], std::move(v)});
    }
  }
  return basis;
}

Eigen::MatrixXd hessian(const Configuration& config, const RieszParams& params) {
  const std::vector<TangentVector> basis = tangent_basis(config);
  const int dim = static_cast<int>(basis.size());
  const int d = config.dim();

  const auto point_of = [d](int a) { return a / d; };
  const auto with_slots = [&](int a, int b) {
    Perturbation pert = zero_perturbation(config);
    pert.tangents[static_cast<size_t>(point_of(a))].direction +=
        basis[static_cast<size_t>(a)].direction;
    pert.tangents[static_cast<size_t>(point_of(b))].direction +=
        basis[static_cast<size_t>(b)].direction;
    return pert;
  };

  Eigen::VectorXd diag(dim);
  for (int a = 0; a < dim; ++a) {
    diag[a] = second_variation(
        config, params,
        one_hot_perturbation(config, point_of(a), basis[static_cast<size_t>(a)].direction));
  }

  Eigen::MatrixXd h(dim, dim);
  for (int a = 0; a < dim; ++a) {
    h(a, a) = diag[a];
    for (int b = a + 1; b < dim; ++b) {
      const double combined = second_variation(config, params, with_slots(a, b));
      h(a, b) = 0.5 * (combined - diag[a] - diag[b]);
      h(b, a) = h(a, b);
    }
  }
  return h;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Minimum:
      return "Minimum";
    case Classification::Saddle:
      return "Saddle";
    case Classification::Maximum:
      return "Maximum";
    default:
      return "Degenerate";
  }
}

CriticalPointReport classify(const Configuration& config, const RieszParams& params,
                             double grad_tol) {
  CriticalPointReport report;
  report.gradient_norm = gradient_norm(riemannian_gradient(config, params));
  if (report.gradient_norm > grad_tol) {
    throw std::invalid_argument("not a critical point (gradient norm " +
                                std::to_string(report.gradient_norm) + ")");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hessian(config, params));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  report.eigenvalues = solver.eigenvalues();  // ascending

  const int count = static_cast<int>(report.eigenvalues.size());
  const double spectral_radius =
      std::max(std::abs(report.eigenvalues[0]), std::abs(report.eigenvalues[count - 1]));
  report.zero_tol = 1e-6 * std::max(1.0, spectral_radius);
  for (int k = 0; k < count; ++k) {
    const double value = report.eigenvalues[k];
    if (std::abs(value) <= report.zero_tol) {
      ++report.num_zero;
    } else if (value > 0.0) {
      ++report.num_positive;
    } else {
      ++report.num_negative;
    }
  }

  if (report.num_positive == 0 && report.num_negative >= 1) {
    report.classification = Classification::Maximum;
  } else if (report.num_negative == 0 && report.num_positive >= 1) {
    report.classification = Classification::Minimum;
  } else if (report.num_positive == 0 && report.num_negative == 0) {
    report.classification = Classification::Degenerate;
  } else {
    report.classification = Classification::Saddle;
  }
  return report;
}

}  // namespace riesz
