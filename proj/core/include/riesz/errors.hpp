#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

/// Thrown whenever an energy kernel would be evaluated at or beyond the
/// collision cap (two points closer than the configured tolerance), either in
/// a configuration as given or along a retraction curve.
class KernelSingularity : public std::runtime_error {
 public:
  explicit KernelSingularity(const std::string& what, int i = -1, int j = -1)
      : std::runtime_error(what), pair_i(i), pair_j(j) {}

  int pair_i;  // offending pair, -1 when not applicable
  int pair_j;
};

}  // namespace riesz
