#pragma once

#include <vector>

#include "riesz/errors.hpp"
#include "riesz/manifold.hpp"

namespace riesz {

/// Riesz exponent alpha > 0 together with its half r = alpha/2, which is the
/// exponent of the inner-product kernel (1 - t)^(-r).
struct RieszParams {
  double alpha;
  double r;

  explicit RieszParams(double alpha_);
};

/// Pair energy in both conventions, summed over ordered pairs i != j:
///   raw    = sum ||x_i - x_j||^(-alpha)
///   scaled = sum (1 - <x_i, x_j>)^(-r)  ( = 2^r * raw )
struct EnergyValue {
  double raw;
  double scaled;
};

/// Tangent directions h_1..h_N, one per configuration point.
struct Perturbation {
  std::vector<TangentVector> tangents;
};

/// All-zero perturbation compatible with config.
Perturbation zero_perturbation(const Configuration& config);

/// Perturbation with `direction` in slot i and zeros elsewhere.
Perturbation one_hot_perturbation(const Configuration& config, int i, Vector direction);

/// Throws std::invalid_argument unless pert has one tangent per point, each
/// based at the corresponding point and orthogonal to it.
void check_compatible(const Configuration& config, const Perturbation& pert);

/// Kernel g(t) = (1-t)^(-r) and its derivatives:
///   order 0: (1-t)^(-r)
///   order 1: r (1-t)^(-r-1)
///   order 2: r (r+1) (1-t)^(-r-2)
/// Throws KernelSingularity when t >= 1 - collision_eps.
double kernel(const RieszParams& params, double t, int order,
              double collision_eps = kDefaultCollisionEps);

/// Energy of the configuration. Accumulation order is fixed (ascending pairs
/// i < j, doubled) so results are bit-reproducible.
EnergyValue energy(const Configuration& config, const RieszParams& params);

/// Riemannian gradient of the scaled energy: component i is the tangent
/// projection at x_i of 2 sum_{j != i} g'(<x_i,x_j>) x_j.
Perturbation riemannian_gradient(const Configuration& config, const RieszParams& params);

/// l2 norm over all gradient components.
double gradient_norm(const Perturbation& pert);

/// Applies the normalization retraction to every point: x_i -> (x_i + t h_i)/||.||.
Configuration retract_configuration(const Configuration& config,
                                    const Perturbation& pert, double t);

/// f(t): energy of the configuration retracted along pert. Equals
/// energy(config, params) bit-for-bit at t = 0.
EnergyValue curve_energy(const Configuration& config, const RieszParams& params,
                         const Perturbation& pert, double t);

/// f''(0) of the scaled energy along pert, in closed form:
///   sum_{i != j} [ g''(t_ij)(<x_i,h_j> + <x_j,h_i>)^2
///                + g'(t_ij)(2<h_i,h_j> - (||h_i||^2 + ||h_j||^2) t_ij) ].
double second_variation(const Configuration& config, const RieszParams& params,
                        const Perturbation& pert);

/// The second variation of the raw energy is 2^(-r) times the scaled one.
double raw_second_variation(const RieszParams& params, double scaled_second_variation);

/// f''(0)/2 for the perturbation that moves only point i along the unit
/// tangent h:  sum_{j != i} [ g''(t_j) <x_j,h>^2 - g'(t_j) t_j ].
/// Throws std::invalid_argument unless ||h|| = 1 within 1e-12 and h is based
/// at x_i.
double single_point_second_variation(const Configuration& config,
                                     const RieszParams& params, int i,
                                     const TangentVector& h);

/// Mean of single_point_second_variation over the equatorial sphere at x_i,
/// reported per neighbor j in two algebraically identical forms:
///   kernel form: g''(t_j)(1 - t_j^2)/d - g'(t_j) t_j
///   closed form: r[(r+1) + (r+1-d) t_j] / (d (1-t_j)^(r+1))
struct AveragedSecondVariation {
  std::vector<double> kernel_form_terms;
  std::vector<double> closed_form_terms;
  double kernel_form_total;
  double closed_form_total;
};

AveragedSecondVariation averaged_second_variation(const Configuration& config,
                                                  const RieszParams& params, int i);

/// Scalar per-neighbor equator means as functions of t = <x_i, x_j>.
double equator_mean_term_kernel(const RieszParams& params, int d, double t);
double equator_mean_term_closed(const RieszParams& params, int d, double t);

}  // namespace riesz
