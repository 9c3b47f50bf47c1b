#include "riesz/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace riesz {

using nlohmann::json;

std::string format_shortest(double v) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
  if (ec != std::errc()) throw std::runtime_error("format_shortest failed");
  return std::string(buffer, ptr);
}

std::string format_sig17(double v) {
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), v, std::chars_format::general, 17);
  if (ec != std::errc()) throw std::runtime_error("format_sig17 failed");
  return std::string(buffer, ptr);
}

double parse_decimal(const std::string& text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("invalid decimal literal '" + text + "'");
  }
  return value;
}

namespace {

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what(),
                     e.byte);
  }
}

double number_field(const json& value, const std::string& context) {
  if (value.is_string()) return parse_decimal(value.get<std::string>());
  if (value.is_number()) return value.get<double>();
  throw ParseError(context + ": expected a decimal string");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open file '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::map<std::string, std::string> meta_from_json(const json& object) {
  std::map<std::string, std::string> meta;
  if (!object.contains("meta")) return meta;
  const json& m = object.at("meta");
  if (!m.is_object()) throw ParseError("meta: expected an object of strings");
  for (const auto& [key, value] : m.items()) {
    meta[key] = value.is_string() ? value.get<std::string>() : value.dump();
  }
  return meta;
}

}  // namespace

ParsedConfig parse_config_json(const std::string& text) {
  const json object = parse_json_text(text);
  if (!object.is_object()) throw ParseError("configuration file: expected a JSON object");
  for (const char* key : {"d", "alpha", "points"}) {
    if (!object.contains(key)) {
      throw ParseError(std::string("configuration file: missing field '") + key + "'");
    }
  }
  if (!object.at("d").is_number_integer()) {
    throw ParseError("configuration file: 'd' must be an integer");
  }
  const int d = object.at("d").get<int>();
  if (d < 1) throw ParseError("configuration file: d must be >= 1");
  const double alpha = number_field(object.at("alpha"), "alpha");
  if (!(alpha > 0.0)) throw ParseError("configuration file: alpha must be positive");

  const json& rows = object.at("points");
  if (!rows.is_array() || rows.size() < 2) {
    throw ParseError("configuration file: 'points' must list at least two points");
  }
  std::vector<Point> points;
  points.reserve(rows.size());
  double max_delta = 0.0;
  for (size_t row = 0; row < rows.size(); ++row) {
    const json& entry = rows[row];
    if (!entry.is_array() || static_cast<int>(entry.size()) != d + 1) {
      throw ParseError("configuration file: point " + std::to_string(row) + " must have " +
                       std::to_string(d + 1) + " coordinates");
    }
    Vector coords(d + 1);
    for (int k = 0; k <= d; ++k) {
      coords[k] = number_field(entry[static_cast<size_t>(k)],
                               "point " + std::to_string(row) + " coordinate " +
                                   std::to_string(k));
    }
    const double delta = std::abs(coords.norm() - 1.0);
    max_delta = std::max(max_delta, delta);
    if (delta > kRenormError) {
      throw ParseError("configuration file: point " + std::to_string(row) +
                       " deviates from unit norm by " + format_shortest(delta));
    }
    if (delta <= kUnitTol) {
      points.push_back(Point::from_unit(std::move(coords)));  // keep bits
    } else {
      points.emplace_back(std::move(coords));  // renormalize
    }
  }

  return ParsedConfig{Configuration(d, std::move(points)), alpha, meta_from_json(object),
                      max_delta};
}

ParsedConfig read_config_file(const std::string& path) {
  return parse_config_json(read_text_file(path));
}

std::string config_to_json(const Configuration& config, double alpha,
                           const std::map<std::string, std::string>& meta) {
  json object;
  object["d"] = config.dim();
  object["alpha"] = format_shortest(alpha);
  json rows = json::array();
  for (int i = 0; i < config.size(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < config[i].ambient_dim(); ++k) {
      row.push_back(format_shortest(config[i].coords()[k]));
    }
    rows.push_back(std::move(row));
  }
  object["points"] = std::move(rows);
  if (!meta.empty()) object["meta"] = meta;
  return object.dump(2) + "\n";
}

void write_config_file(const std::string& path, const Configuration& config, double alpha,
                       const std::map<std::string, std::string>& meta) {
  write_text_file(path, config_to_json(config, alpha, meta));
}

std::string certificate_to_json(const Certificate& cert) {
  json object;
  object["kind"] = to_string(cert.kind);
  object["d"] = cert.dim_d;
  object["n"] = cert.num_points;
  object["alpha"] = format_sig17(cert.alpha);
  object["seed"] = cert.seed;
  object["gradient_norm"] = format_sig17(cert.gradient_norm);
  if (cert.point_index >= 0) object["point_index"] = cert.point_index;
  if (cert.direction) {
    json row = json::array();
    for (Eigen::Index k = 0; k < cert.direction->size(); ++k) {
      row.push_back(format_sig17((*cert.direction)[k]));
    }
    object["direction"] = std::move(row);
  }
  if (cert.second_variation_value) {
    object["second_variation_value"] = format_sig17(*cert.second_variation_value);
  }
  if (!cert.equator_mean_terms.empty()) {
    json terms = json::array();
    for (double term : cert.equator_mean_terms) terms.push_back(format_sig17(term));
    object["equator_mean_terms"] = std::move(terms);
  }
  if (cert.fd_confirmation) object["fd_confirmation"] = format_sig17(*cert.fd_confirmation);
  return object.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  const json object = parse_json_text(text);
  if (!object.is_object()) throw ParseError("certificate: expected a JSON object");
  Certificate cert;
  const std::string kind = object.at("kind").get<std::string>();
  if (kind == "GradientWitness") {
    cert.kind = CertificateKind::GradientWitness;
  } else if (kind == "AscentDirection") {
    cert.kind = CertificateKind::AscentDirection;
  } else if (kind == "ConditionNotMet") {
    cert.kind = CertificateKind::ConditionNotMet;
  } else {
    throw ParseError("certificate: unknown kind '" + kind + "'");
  }
  cert.dim_d = object.at("d").get<int>();
  cert.num_points = object.at("n").get<int>();
  cert.alpha = number_field(object.at("alpha"), "alpha");
  cert.seed = object.at("seed").get<std::uint64_t>();
  cert.gradient_norm = number_field(object.at("gradient_norm"), "gradient_norm");
  if (object.contains("point_index")) cert.point_index = object.at("point_index").get<int>();
  if (object.contains("direction")) {
    const json& row = object.at("direction");
    Vector direction(row.size());
    for (size_t k = 0; k < row.size(); ++k) {
      direction[static_cast<Eigen::Index>(k)] =
          number_field(row[k], "direction coordinate " + std::to_string(k));
    }
    cert.direction = std::move(direction);
  }
  if (object.contains("second_variation_value")) {
    cert.second_variation_value =
        number_field(object.at("second_variation_value"), "second_variation_value");
  }
  if (object.contains("equator_mean_terms")) {
    for (const json& term : object.at("equator_mean_terms")) {
      cert.equator_mean_terms.push_back(number_field(term, "equator_mean_terms"));
    }
  }
  if (object.contains("fd_confirmation")) {
    cert.fd_confirmation = number_field(object.at("fd_confirmation"), "fd_confirmation");
  }
  return cert;
}

void write_certificate_file(const std::string& path, const Certificate& cert) {
  write_text_file(path, certificate_to_json(cert));
}

Certificate read_certificate_file(const std::string& path) {
  return certificate_from_json(read_text_file(path));
}

}  // namespace riesz
