#include "riesz/named_configs.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace riesz {

NamedKind named_kind_from_string(const std::string& name) {
  if (name == "antipodal") return NamedKind::Antipodal;
  if (name == "simplex") return NamedKind::Simplex;
  if (name == "cross-polytope") return NamedKind::CrossPolytope;
  if (name == "ngon") return NamedKind::Ngon;
  if (name == "random") return NamedKind::Random;
  throw std::invalid_argument("unknown named configuration '" + name +
                              "' (expected antipodal, simplex, cross-polytope, ngon or random)");
}

const char* to_string(NamedKind kind) {
  switch (kind) {
    case NamedKind::Antipodal:
      return "antipodal";
    case NamedKind::Simplex:
      return "simplex";
    case NamedKind::CrossPolytope:
      return "cross-polytope";
    case NamedKind::Ngon:
      return "ngon";
    default:
      return "random";
  }
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::vector<Point> antipodal_points(int d) {
  Vector plus = Vector::Zero(d + 1);
  plus[0] = 1.0;
  Vector minus = -plus;
  return {Point::from_unit(plus), Point::from_unit(minus)};
}

// d+2 unit vectors with mutual inner product -1/(d+1): images of the standard
// basis of R^(d+2) under an orthonormal basis of the hyperplane sum = 0
// (Helmert vectors), then normalized.
std::vector<Point> simplex_points(int d) {
  const int n = d + 2;
  Eigen::MatrixXd helmert(d + 1, n);
  for (int k = 1; k <= d + 1; ++k) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int col = 0; col < n; ++col) {
      double entry = 0.0;
      if (col < k) {
        entry = scale;
      } else if (col == k) {
        entry = -static_cast<double>(k) * scale;
      }
      helmert(k - 1, col) = entry;
    }
  }
  std::vector<Point> points;
  points.reserve(static_cast<size_t>(n));
  for (int col = 0; col < n; ++col) {
    points.emplace_back(Vector(helmert.col(col)));
  }
  return points;
}

std::vector<Point> cross_polytope_points(int d) {
  std::vector<Point> points;
  points.reserve(static_cast<size_t>(2 * (d + 1)));
  for (int axis = 0; axis <= d; ++axis) {
    Vector plus = Vector::Zero(d + 1);
    plus[axis] = 1.0;
    points.push_back(Point::from_unit(plus));
    points.push_back(Point::from_unit(Vector(-plus)));
  }
  return points;
}

std::vector<Point> ngon_points(int n) {
  std::vector<Point> points;
  points.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n;
    Vector v(2);
    v << std::cos(angle), std::sin(angle);
    points.emplace_back(std::move(v));
  }
  return points;
}

std::vector<Point> random_points(int d, int n, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x67656e72u));
  std::vector<Point> points;
  points.reserve(static_cast<size_t>(n));
  while (static_cast<int>(points.size()) < n) {
    Point candidate = sample_uniform_sphere(d, rng);
    bool collides = false;
    for (const Point& existing : points) {
      if (existing.coords().dot(candidate.coords()) > 1.0 - kDefaultCollisionEps) {
        collides = true;
        break;
      }
    }
    if (!collides) points.push_back(std::move(candidate));
  }
  return points;
}

}  // namespace

Configuration generate_named(const NamedConfigSpec& spec) {
  require(spec.d >= 1, "named configuration: d must be >= 1");
  switch (spec.kind) {
    case NamedKind::Antipodal:
      require(spec.n == 0 || spec.n == 2, "antipodal: N must be 2");
      return Configuration(spec.d, antipodal_points(spec.d));
    case NamedKind::Simplex:
      require(spec.n == 0 || spec.n == spec.d + 2, "simplex: N must equal d + 2");
      return Configuration(spec.d, simplex_points(spec.d));
    case NamedKind::CrossPolytope:
      require(spec.n == 0 || spec.n == 2 * (spec.d + 1),
              "cross-polytope: N must equal 2(d + 1)");
      return Configuration(spec.d, cross_polytope_points(spec.d));
    case NamedKind::Ngon:
      require(spec.d == 1, "ngon: requires d = 1");
      require(spec.n >= 2, "ngon: N must be >= 2");
      return Configuration(1, ngon_points(spec.n));
    default:
      require(spec.n >= 2, "random: N must be >= 2");
      return Configuration(spec.d, random_points(spec.d, spec.n, spec.seed));
  }
}

}  // namespace riesz
