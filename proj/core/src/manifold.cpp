#include "riesz/manifold.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "riesz/errors.hpp"

namespace riesz {

Point::Point(Vector coords) : coords_(std::move(coords)) {
  const double norm = coords_.norm();
  if (norm < 1e-12) {
    throw std::invalid_argument("Point: cannot normalize a near-zero vector");
  }
  coords_ /= norm;
}

Point Point::from_unit(Vector coords) {
  const double norm = coords.norm();
  if (std::abs(norm - 1.0) > kUnitTol) {
    throw std::invalid_argument("Point::from_unit: vector is not unit norm (deviation " +
                                std::to_string(norm - 1.0) + ")");
  }
  return Point(std::move(coords), unchecked_t{});
}

Configuration::Configuration(int dim_d, std::vector<Point> points, double collision_eps)
    : dim_d_(dim_d), points_(std::move(points)), collision_eps_(collision_eps) {
  if (dim_d_ < 1) throw std::invalid_argument("Configuration: sphere dimension must be >= 1");
  if (points_.size() < 2) throw std::invalid_argument("Configuration: needs at least 2 points");
  if (collision_eps_ <= 0.0 || collision_eps_ >= 1.0) {
    throw std::invalid_argument("Configuration: collision_eps must lie in (0, 1)");
  }
  const Eigen::Index ambient = dim_d_ + 1;
  for (const Point& p : points_) {
    if (p.ambient_dim() != ambient) {
      throw std::invalid_argument("Configuration: point dimension does not match sphere dimension");
    }
  }
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double t = points_[static_cast<size_t>(i)].coords().dot(
          points_[static_cast<size_t>(j)].coords());
      if (t > 1.0 - collision_eps_) {
        throw KernelSingularity("configuration points " + std::to_string(i) + " and " +
                                    std::to_string(j) + " collide (inner product " +
                                    std::to_string(t) + ")",
                                i, j);
      }
    }
  }
}

Configuration Configuration::unchecked(int dim_d, std::vector<Point> points,
                                       double collision_eps) {
  Configuration c;
  c.dim_d_ = dim_d;
  c.points_ = std::move(points);
  c.collision_eps_ = collision_eps;
  return c;
}

TangentVector project_tangent(const Point& x, const Vector& v) {
  if (v.size() != x.ambient_dim()) {
    throw std::invalid_argument("project_tangent: dimension mismatch");
  }
  Vector direction = v - x.coords().dot(v) * x.coords();
  return TangentVector{x, std::move(direction)};
}

Point retract(const Point& x, const TangentVector& h, double t) {
  if (h.direction.size() != x.ambient_dim()) {
    throw std::invalid_argument("retract: dimension mismatch");
  }
  if (t == 0.0) return x;
  Vector moved = x.coords() + t * h.direction;
  return Point(std::move(moved));  // ||x + t h|| >= 1 since x _|_ h
}

Point sample_uniform_sphere(int d, Rng& rng) {
  if (d < 1) throw std::invalid_argument("sample_uniform_sphere: d must be >= 1");
  for (;;) {
    Vector g = rng.gaussian_vector(d + 1);
    if (g.norm() >= kDegenerateSampleTol) return Point(std::move(g));
  }
}

TangentVector sample_equator(const Point& x, Rng& rng) {
  if (x.sphere_dim() < 1) {
    throw std::invalid_argument("equator undefined on S^0");
  }
  for (;;) {
    Vector g = rng.gaussian_vector(x.ambient_dim());
    Vector projected = g - x.coords().dot(g) * x.coords();
    const double norm = projected.norm();
    if (norm < kDegenerateSampleTol) continue;
    projected /= norm;
    // One cleanup pass: the normalization can leave an O(eps) residual along x.
    projected -= x.coords().dot(projected) * x.coords();
    return TangentVector{x, std::move(projected)};
  }
}

std::vector<Vector> orthonormal_tangent_basis(const Point& x) {
  const Eigen::Index ambient = x.ambient_dim();
  const int d = x.sphere_dim();
  std::vector<Vector> basis;
  basis.reserve(static_cast<size_t>(d));
  for (Eigen::Index k = 0; k < ambient && static_cast<int>(basis.size()) < d; ++k) {
    Vector v = -x.coords()[k] * x.coords();
    v[k] += 1.0;  // project e_k
    // Two Gram-Schmidt passes for stable orthogonality.
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& b : basis) v -= b.dot(v) * b;
    }
    const double norm = v.norm();
    if (norm <= 1e-8) continue;  // e_k near-parallel to x, pivot past it
    v /= norm;
    for (Eigen::Index idx = 0; idx < ambient; ++idx) {
      if (std::abs(v[idx]) > 1e-12) {
        if (v[idx] < 0.0) v = -v;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  if (static_cast<int>(basis.size()) != d) {
    throw std::runtime_error("orthonormal_tangent_basis: could not complete basis");
  }
  return basis;
}

}  // namespace riesz
