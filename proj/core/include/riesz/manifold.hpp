#pragma once

#include <vector>

#include <Eigen/Core>

#include "riesz/rng.hpp"

namespace riesz {

using Vector = Eigen::VectorXd;

inline constexpr double kDefaultCollisionEps = 1e-9;
inline constexpr double kUnitTol = 1e-12;
inline constexpr double kDegenerateSampleTol = 1e-12;

/// A point of the unit sphere S^d, stored as its coordinates in R^(d+1).
/// Unit norm (within 1e-12) is established at construction and preserved by
/// every operation in this module.
class Point {
 public:
  /// Normalizes the given coordinates. Throws std::invalid_argument when the
  /// norm is below 1e-12.
  explicit Point(Vector coords);

  /// Adopts coordinates that are already unit norm within 1e-12, preserving
  /// them bit-for-bit. Throws std::invalid_argument otherwise.
  static Point from_unit(Vector coords);

  const Vector& coords() const { return coords_; }
  Eigen::Index ambient_dim() const { return coords_.size(); }
  int sphere_dim() const { return static_cast<int>(coords_.size()) - 1; }

 private:
  struct unchecked_t {};
  Point(Vector coords, unchecked_t) : coords_(std::move(coords)) {}

  Vector coords_;
};

/// Tangent vector at a base point: <base, direction> = 0.
struct TangentVector {
  Point base;
  Vector direction;
};

/// N >= 2 pairwise-distinct unit points on S^d. Distinctness is enforced as
/// <x_i, x_j> <= 1 - collision_eps; violating pairs raise KernelSingularity
/// carrying the pair indices.
class Configuration {
 public:
  Configuration(int dim_d, std::vector<Point> points,
                double collision_eps = kDefaultCollisionEps);

  /// Skips validation; for internal construction of iterates whose energy is
  /// about to be evaluated anyway (the kernel guard re-checks every pair).
  static Configuration unchecked(int dim_d, std::vector<Point> points,
                                 double collision_eps);

  int dim() const { return dim_d_; }
  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](int i) const { return points_[static_cast<size_t>(i)]; }
  const std::vector<Point>& points() const { return points_; }
  double collision_eps() const { return collision_eps_; }

 private:
  Configuration() = default;

  int dim_d_ = 0;
  std::vector<Point> points_;
  double collision_eps_ = kDefaultCollisionEps;
};

/// Orthogonal projection of v onto the tangent space at x: v - <x,v>x.
TangentVector project_tangent(const Point& x, const Vector& v);

/// Normalization retraction (x + t h)/||x + t h||. Returns x bit-for-bit at
/// t = 0. h must be based at x.
Point retract(const Point& x, const TangentVector& h, double t);

/// Uniform point on S^d: normalized Gaussian vector, resampling the
/// probability-zero near-degenerate draws.
Point sample_uniform_sphere(int d, Rng& rng);

/// Uniform unit tangent at x, i.e. uniform on the equatorial sphere
/// H = {h in S^d : <x, h> = 0} (Gaussian draw, project, normalize).
/// Throws std::invalid_argument for d = 0, where H is empty.
TangentVector sample_equator(const Point& x, Rng& rng);

/// d orthonormal tangent vectors at x: Gram-Schmidt on the projected standard
/// basis vectors in index order, skipping near-parallel candidates. Sign
/// convention: first coordinate of magnitude > 1e-12 is positive.
std::vector<Vector> orthonormal_tangent_basis(const Point& x);

}  // namespace riesz
