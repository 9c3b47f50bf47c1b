// Shared helpers for the test suites: independent oracles (finite differences
// of the energy curve, Monte Carlo equator averages) and seeded generators.
// Everything here is test-only and deliberately avoids the closed-form code
// paths it is used to check.
#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "riesz/energy.hpp"
#include "riesz/rng.hpp"

namespace riesz::testsupport {

inline bool rel_close(double a, double b, double tol) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) <= tol * scale;
}

// Relative comparison with a problem-scale floor. Derivatives along
// directions near the rotation zero modes are legitimately ~0; comparing
// them "relatively" against finite differences whose own noise floor is a
// fixed fraction of the energy would be meaningless, so the floor supplies
// the scale on which agreement is claimed.
inline bool rel_close_scaled(double a, double b, double tol, double scale_floor) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), scale_floor});
}

// Central first difference of f(t) = curve_energy(...).scaled at t = 0.
inline double fd_first_derivative(const Configuration& config, const RieszParams& params,
                                  const Perturbation& pert, double eps = 1e-5) {
  const double plus = curve_energy(config, params, pert, eps).scaled;
  const double minus = curve_energy(config, params, pert, -eps).scaled;
  return (plus - minus) / (2.0 * eps);
}

// Central second difference of f(t) at t = 0.
inline double fd_second_derivative(const Configuration& config, const RieszParams& params,
                                   const Perturbation& pert, double eps = 1e-4) {
  const double plus = curve_energy(config, params, pert, eps).scaled;
  const double center = curve_energy(config, params, pert, 0.0).scaled;
  const double minus = curve_energy(config, params, pert, -eps).scaled;
  return (plus - 2.0 * center + minus) / (eps * eps);
}

// Random configuration with all pairwise inner products <= 1 - min_gap, by
// rejection; keeps finite-difference truncation error well away from the
// kernel's blowup so the oracles stay trustworthy.
inline Configuration random_separated_configuration(int d, int n, Rng& rng,
                                                    double min_gap = 0.05) {
  for (;;) {
    std::vector<Point> points;
    points.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) points.push_back(sample_uniform_sphere(d, rng));
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        if (points[static_cast<size_t>(i)].coords().dot(points[static_cast<size_t>(j)].coords()) >
            1.0 - min_gap) {
          ok = false;
        }
      }
    }
    if (ok) return Configuration(d, std::move(points));
  }
}

// Tangent perturbation with i.i.d. Gaussian directions projected to each
// tangent space; component magnitudes vary in [0.5, 1.5] so the squared-norm
// terms of the second variation are exercised and exact zero modes are
// measure-zero even on S^1.
inline Perturbation random_perturbation(const Configuration& config, Rng& rng) {
  Perturbation pert = zero_perturbation(config);
  for (int i = 0; i < config.size(); ++i) {
    Vector g = rng.gaussian_vector(config.dim() + 1);
    Vector projected = project_tangent(config[i], g).direction;
    const double norm = projected.norm();
    if (norm > 1e-8) projected *= (0.5 + rng.uniform()) / norm;
    pert.tangents[static_cast<size_t>(i)].direction = std::move(projected);
  }
  return pert;
}

// Haar-ish random orthogonal matrix via QR of a Gaussian matrix.
inline Eigen::MatrixXd random_orthogonal(int size, Rng& rng) {
  Eigen::MatrixXd gaussian(size, size);
  for (int row = 0; row < size; ++row) {
    for (int col = 0; col < size; ++col) gaussian(row, col) = rng.gaussian();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian);
  return qr.householderQ();
}

struct MonteCarloMean {
  double mean;
  double standard_error;
};

// Sample mean and standard error of `f(h)` over equator draws at x.
template <typename F>
MonteCarloMean equator_monte_carlo(const Point& x, Rng& rng, int samples, F&& f) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double value = f(sample_equator(x, rng));
    sum += value;
    sum_sq += value * value;
  }
  const double mean = sum / samples;
  const double variance = std::max(0.0, sum_sq / samples - mean * mean);
  return MonteCarloMean{mean, std::sqrt(variance / samples)};
}

}  // namespace riesz::testsupport
