#pragma once

#include <cstdint>
#include <string>

#include "riesz/manifold.hpp"

namespace riesz {

enum class NamedKind { Antipodal, Simplex, CrossPolytope, Ngon, Random };

/// Parses one of "antipodal", "simplex", "cross-polytope", "ngon", "random".
NamedKind named_kind_from_string(const std::string& name);
const char* to_string(NamedKind kind);

struct NamedConfigSpec {
  NamedKind kind = NamedKind::Random;
  int d = 1;
  int n = 0;  // 0 = use the kind's implied count where one exists
  std::uint64_t seed = 0;
};

/// Generates the named configuration:
///   antipodal       +-e_1 on S^d                          (N = 2)
///   simplex         d+2 points, <x_i,x_j> = -1/(d+1)
///   cross-polytope  +-e_1..+-e_{d+1}                      (N = 2(d+1))
///   ngon            angles 2 pi k / N on S^1              (d = 1)
///   random          N i.i.d. uniform points, seeded
/// Throws std::invalid_argument on parameter-constraint violations.
Configuration generate_named(const NamedConfigSpec& spec);

}  // namespace riesz
