#include "riesz/energy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace riesz {

namespace {

// 1 - <x, y> evaluated as ||x - y||^2 / 2, which stays accurate when the
// points are close (the direct dot product cancels catastrophically there).
double one_minus_dot(const Point& x, const Point& y) {
  return 0.5 * (x.coords() - y.coords()).squaredNorm();
}

void check_gap(double om, double collision_eps, int i, int j, double t_hint) {
  if (om < collision_eps) {
    throw KernelSingularity("kernel singularity: points " + std::to_string(i) + " and " +
                                std::to_string(j) + " at inner product " +
                                std::to_string(t_hint),
                            i, j);
  }
}

void check_index(const Configuration& config, int i) {
  if (i < 0 || i >= config.size()) {
    throw std::invalid_argument("point index " + std::to_string(i) + " out of range");
  }
}

}  // namespace

RieszParams::RieszParams(double alpha_) : alpha(alpha_), r(alpha_ / 2.0) {
  if (!(alpha_ > 0.0)) {
    throw std::invalid_argument("RieszParams: alpha must be positive");
  }
}

Perturbation zero_perturbation(const Configuration& config) {
  Perturbation pert;
  pert.tangents.reserve(static_cast<size_t>(config.size()));
  for (int i = 0; i < config.size(); ++i) {
    pert.tangents.push_back(TangentVector{config[i], Vector::Zero(config.dim() + 1)});
  }
  return pert;
}

Perturbation one_hot_perturbation(const Configuration& config, int i, Vector direction) {
  check_index(config, i);
  Perturbation pert = zero_perturbation(config);
  pert.tangents[static_cast<size_t>(i)].direction = std::move(direction);
  return pert;
}

void check_compatible(const Configuration& config, const Perturbation& pert) {
  if (static_cast<int>(pert.tangents.size()) != config.size()) {
    throw std::invalid_argument("perturbation has " + std::to_string(pert.tangents.size()) +
                                " tangents for " + std::to_string(config.size()) + " points");
  }
  for (int i = 0; i < config.size(); ++i) {
    const TangentVector& h = pert.tangents[static_cast<size_t>(i)];
    if (h.direction.size() != config.dim() + 1 ||
        (h.base.coords() - config[i].coords()).lpNorm<Eigen::Infinity>() > 1e-12) {
      throw std::invalid_argument("perturbation tangent " + std::to_string(i) +
                                  " is not based at configuration point " + std::to_string(i));
    }
    const double along = std::abs(config[i].coords().dot(h.direction));
    if (along > 1e-9 * std::max(1.0, h.direction.norm())) {
      throw std::invalid_argument("perturbation tangent " + std::to_string(i) +
                                  " is not orthogonal to its base point");
    }
  }
}

double kernel(const RieszParams& params, double t, int order, double collision_eps) {
  if (order < 0 || order > 2) {
    throw std::invalid_argument("kernel: order must be 0, 1 or 2");
  }
  const double om = 1.0 - t;
  if (om < collision_eps) {
    throw KernelSingularity("kernel singularity at t = " + std::to_string(t));
  }
  const double r = params.r;
  switch (order) {
    case 0:
      return std::pow(om, -r);
    case 1:
      return r * std::pow(om, -r - 1.0);
    default:
      return r * (r + 1.0) * std::pow(om, -r - 2.0);
  }
}

EnergyValue energy(const Configuration& config, const RieszParams& params) {
  const int n = config.size();
  const double eps = config.collision_eps();
  double raw = 0.0;
  double scaled = 0.0;
  // Fixed ascending (i, j) order; each unordered pair counts twice.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vector diff = config[i].coords() - config[j].coords();
      const double om = 0.5 * diff.squaredNorm();
      check_gap(om, eps, i, j, 1.0 - om);
      raw += std::pow(diff.norm(), -params.alpha);
      scaled += std::pow(om, -params.r);
    }
  }
  return EnergyValue{2.0 * raw, 2.0 * scaled};
}

Perturbation riemannian_gradient(const Configuration& config, const RieszParams& params) {
  const int n = config.size();
  const double eps = config.collision_eps();
  const double r = params.r;
  Perturbation grad = zero_perturbation(config);
  for (int i = 0; i < n; ++i) {
    Vector sum = Vector::Zero(config.dim() + 1);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double om = one_minus_dot(config[i], config[j]);
      check_gap(om, eps, i, j, 1.0 - om);
      const double g1 = r * std::pow(om, -r - 1.0);
      sum += g1 * config[j].coords();
    }
    grad.tangents[static_cast<size_t>(i)].direction =
        2.0 * project_tangent(config[i], sum).direction;
  }
  return grad;
}

double gradient_norm(const Perturbation& pert) {
  double sq = 0.0;
  for (const TangentVector& h : pert.tangents) sq += h.direction.squaredNorm();
  return std::sqrt(sq);
}

Configuration retract_configuration(const Configuration& config, const Perturbation& pert,
                                    double t) {
  std::vector<Point> moved;
  moved.reserve(static_cast<size_t>(config.size()));
  for (int i = 0; i < config.size(); ++i) {
    moved.push_back(retract(config[i], pert.tangents[static_cast<size_t>(i)], t));
  }
  return Configuration::unchecked(config.dim(), std::move(moved), config.collision_eps());
}

EnergyValue curve_energy(const Configuration& config, const RieszParams& params,
                         const Perturbation& pert, double t) {
  check_compatible(config, pert);
  const Configuration moved = retract_configuration(config, pert, t);
  try {
    return energy(moved, params);
  } catch (const KernelSingularity& e) {
    throw KernelSingularity(std::string(e.what()) + " at t = " + std::to_string(t), e.pair_i,
                            e.pair_j);
  }
}

double second_variation(const Configuration& config, const RieszParams& params,
                        const Perturbation& pert) {
  check_compatible(config, pert);
  const int n = config.size();
  const double eps = config.collision_eps();
  const double r = params.r;
  std::vector<double> hsq(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    hsq[static_cast<size_t>(i)] = pert.tangents[static_cast<size_t>(i)].direction.squaredNorm();
  }
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vector& xi = config[i].coords();
    const Vector& hi = pert.tangents[static_cast<size_t>(i)].direction;
    for (int j = i + 1; j < n; ++j) {
      const Vector& xj = config[j].coords();
      const Vector& hj = pert.tangents[static_cast<size_t>(j)].direction;
      const double om = one_minus_dot(config[i], config[j]);
      check_gap(om, eps, i, j, 1.0 - om);
      const double t = xi.dot(xj);
      const double g1 = r * std::pow(om, -r - 1.0);
      const double g2 = r * (r + 1.0) * std::pow(om, -r - 2.0);
      const double cross = xi.dot(hj) + xj.dot(hi);
      sum += g2 * cross * cross +
             g1 * (2.0 * hi.dot(hj) -
                   (hsq[static_cast<size_t>(i)] + hsq[static_cast<size_t>(j)]) * t);
    }
  }
  return 2.0 * sum;  // the summand is symmetric in i <-> j
}

double raw_second_variation(const RieszParams& params, double scaled_second_variation) {
  return std::exp2(-params.r) * scaled_second_variation;
}

double single_point_second_variation(const Configuration& config, const RieszParams& params,
                                     int i, const TangentVector& h) {
  check_index(config, i);
  if (std::abs(h.direction.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("unit tangent required");
  }
  if ((h.base.coords() - config[i].coords()).lpNorm<Eigen::Infinity>() > 1e-12) {
    throw std::invalid_argument("tangent vector is not based at point " + std::to_string(i));
  }
  const int n = config.size();
  const double eps = config.collision_eps();
  const double r = params.r;
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    const double om = one_minus_dot(config[i], config[j]);
    check_gap(om, eps, i, j, 1.0 - om);
    const double t = config[i].coords().dot(config[j].coords());
    const double g1 = r * std::pow(om, -r - 1.0);
    const double g2 = r * (r + 1.0) * std::pow(om, -r - 2.0);
    const double along = config[j].coords().dot(h.direction);
    sum += g2 * along * along - g1 * t;
  }
  return sum;
}

namespace {

double mean_term_kernel_from(double r, int d, double t, double om) {
  const double g1 = r * std::pow(om, -r - 1.0);
  const double g2 = r * (r + 1.0) * std::pow(om, -r - 2.0);
  return g2 * (om * (1.0 + t)) / static_cast<double>(d) - g1 * t;
}

// r [(r+1) + (r+1-d) t] / (d (1-t)^(r+1)), with the numerator rearranged as
// (r+1)(1-t) + (2(r+1)-d) t so the two addends cannot cancel catastrophically
// anywhere on -1 <= t < 1 while the condition alpha >= d-2 holds.
double mean_term_closed_from(double r, int d, double t, double om) {
  const double beta = 2.0 * (r + 1.0) - static_cast<double>(d);
  const double numerator = (r + 1.0) * om + beta * t;
  return r * numerator / (static_cast<double>(d) * std::pow(om, r + 1.0));
}

}  // namespace

double equator_mean_term_kernel(const RieszParams& params, int d, double t) {
  if (d < 1) throw std::invalid_argument("equator mean requires sphere dimension >= 1");
  return mean_term_kernel_from(params.r, d, t, 1.0 - t);
}

double equator_mean_term_closed(const RieszParams& params, int d, double t) {
  if (d < 1) throw std::invalid_argument("equator mean requires sphere dimension >= 1");
  return mean_term_closed_from(params.r, d, t, 1.0 - t);
}

AveragedSecondVariation averaged_second_variation(const Configuration& config,
                                                  const RieszParams& params, int i) {
  check_index(config, i);
  const int n = config.size();
  const int d = config.dim();
  const double eps = config.collision_eps();
  AveragedSecondVariation out;
  out.kernel_form_terms.reserve(static_cast<size_t>(n - 1));
  out.closed_form_terms.reserve(static_cast<size_t>(n - 1));
  double kernel_total = 0.0;
  double closed_total = 0.0;
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    const double om = one_minus_dot(config[i], config[j]);
    check_gap(om, eps, i, j, 1.0 - om);
    const double t = config[i].coords().dot(config[j].coords());
    const double kernel_term = mean_term_kernel_from(params.r, d, t, om);
    const double closed_term = mean_term_closed_from(params.r, d, t, om);
    out.kernel_form_terms.push_back(kernel_term);
    out.closed_form_terms.push_back(closed_term);
    kernel_total += kernel_term;
    closed_total += closed_term;
  }
  out.kernel_form_total = kernel_total;
  out.closed_form_total = closed_total;
  return out;
}

}  // namespace riesz
