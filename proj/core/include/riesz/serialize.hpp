#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

#include "riesz/certifier.hpp"
#include "riesz/manifold.hpp"

namespace riesz {

/// JSON/decimal parse failure; byte is the offset reported by the parser
/// (0 when unknown).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t byte_ = 0)
      : std::runtime_error(what), byte(byte_) {}
  std::size_t byte;
};

/// Shortest decimal string that round-trips to the same double.
std::string format_shortest(double v);

/// Decimal string with 17 significant digits (always round-trips).
std::string format_sig17(double v);

/// Strict decimal parse of an entire string. Throws ParseError.
double parse_decimal(const std::string& text);

/// In-memory form of a configuration file.
struct ParsedConfig {
  Configuration config;
  double alpha;
  std::map<std::string, std::string> meta;
  double max_renorm_delta;  // largest | ||p|| - 1 | seen across input points
};

/// Renormalization deltas above this are an error; above kRenormWarn the
/// caller should emit a warning.
inline constexpr double kRenormWarn = 1e-6;
inline constexpr double kRenormError = 1e-3;

/// Configuration file schema:
///   {"d": int, "alpha": "decimal", "points": [["decimal", ...], ...],
///    "meta": {"key": "value", ...}}
/// Points are renormalized on read; a delta above kRenormError throws.
ParsedConfig parse_config_json(const std::string& text);
ParsedConfig read_config_file(const std::string& path);

std::string config_to_json(const Configuration& config, double alpha,
                           const std::map<std::string, std::string>& meta = {});
void write_config_file(const std::string& path, const Configuration& config,
                       double alpha,
                       const std::map<std::string, std::string>& meta = {});

/// Certificate schema: a flat JSON object; reals are decimal strings with 17
/// significant digits. Optional fields are omitted when absent.
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);
void write_certificate_file(const std::string& path, const Certificate& cert);
Certificate read_certificate_file(const std::string& path);

}  // namespace riesz
