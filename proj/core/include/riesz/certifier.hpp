#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riesz/energy.hpp"

namespace riesz {

/// Gradient norm above which a configuration counts as non-critical.
inline constexpr double kGradTol = 1e-8;

/// Whether the no-local-maxima guarantee applies: alpha >= d - 2
/// (equivalently |r + 1 - d| <= r + 1 with r = alpha/2).
bool certifiable(double alpha, int dim_d);

/// Scale-aware strict-positivity threshold for accepting an ascent direction.
double positivity_tol(double equator_mean_total);

enum class CertificateKind { GradientWitness, AscentDirection, ConditionNotMet };

const char* to_string(CertificateKind kind);

/// A checkable witness that a configuration is not a local maximum of the
/// energy. Either the gradient is nonzero (first-order escape), or an
/// explicit unit tangent direction has strictly positive second variation.
struct Certificate {
  CertificateKind kind = CertificateKind::ConditionNotMet;
  int dim_d = 0;
  int num_points = 0;
  double alpha = 0.0;
  std::uint64_t seed = 0;

  int point_index = -1;
  std::optional<Vector> direction;                 // unit tangent at x_{point_index}
  std::optional<double> second_variation_value;    // f''(0) along the one-hot move
  double gradient_norm = 0.0;
  std::vector<double> equator_mean_terms;          // per-neighbor means, all > 0
  std::optional<double> fd_confirmation;           // central second difference of f
};

/// Per-neighbor equator means at point i in the stable closed form; strictly
/// positive whenever alpha >= d - 2. Throws std::domain_error when the
/// condition does not hold.
std::vector<double> equator_mean_terms(const Configuration& config,
                                       const RieszParams& params, int i);

struct AscentSearchResult {
  TangentVector direction;
  double value;  // single-point second variation (= f''(0)/2) at direction
  int draws_used;
  bool used_fallback;
};

/// Finds a unit tangent h at x_i with single_point_second_variation > tol.
/// Samples the equator up to max_tries/2 times (the positive mean guarantees
/// success with positive probability), then falls back to the top eigenvector
/// of the projected quadratic form, which attains at least the mean. Throws
/// std::runtime_error if even the fallback fails numerically.
AscentSearchResult find_ascent_direction(const Configuration& config,
                                         const RieszParams& params, int i,
                                         Rng& rng, int max_tries = 64);

/// Produces the not-a-local-maximum certificate. Deterministic given
/// (config, params, seed).
Certificate certify_not_max(const Configuration& config, const RieszParams& params,
                            std::uint64_t seed);

/// Recomputes the certificate's claimed quantities from scratch and checks
/// the kind's invariants. Pure; throws std::invalid_argument on a
/// certificate/config mismatch (wrong d, N, or alpha).
bool verify_certificate(const Configuration& config, const RieszParams& params,
                        const Certificate& cert);

}  // namespace riesz
