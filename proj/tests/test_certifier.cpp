#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "riesz/certifier.hpp"
#include "riesz/named_configs.hpp"
#include "riesz/serialize.hpp"
#include "test_support.hpp"

using namespace riesz;
namespace ts = riesz::testsupport;

namespace {

Configuration named(NamedKind kind, int d, int n = 0, std::uint64_t seed = 0) {
  return generate_named(NamedConfigSpec{kind, d, n, seed});
}

double total(const std::vector<double>& terms) {
  double sum = 0.0;
  for (double v : terms) sum += v;
  return sum;
}

}  // namespace

TEST_CASE("certifiable threshold") {
  CHECK(certifiable(1.0, 2));
  CHECK_FALSE(certifiable(0.5, 3));
  CHECK(certifiable(2.0, 4));  // boundary alpha = d - 2 is included
  CHECK(certifiable(0.1, 1));  // d = 1: every positive alpha qualifies
  CHECK(certifiable(0.1, 2));
  CHECK_FALSE(certifiable(1.999999, 4));
}

TEST_CASE("equator mean terms are strictly positive under the condition") {
  Rng rng(41);
  for (int d = 1; d <= 4; ++d) {
    for (int k = 0; k <= 4; ++k) {
      const double alpha = std::max(static_cast<double>(d) - 2.0, 0.0) + 0.5 * k;
      if (alpha <= 0.0) continue;
      for (int n = 2; n <= 8; ++n) {
        const Configuration config = ts::random_separated_configuration(d, n, rng, 1e-3);
        const std::vector<double> terms = equator_mean_terms(config, RieszParams(alpha), 0);
        REQUIRE(terms.size() == static_cast<size_t>(n - 1));
        for (double term : terms) CHECK(term > 0.0);
      }
    }
  }
}

TEST_CASE("equator mean terms require the condition") {
  Rng rng(42);
  const Configuration config = ts::random_separated_configuration(4, 3, rng);
  CHECK_THROWS_AS(equator_mean_terms(config, RieszParams(0.5), 0), std::domain_error);
}

TEST_CASE("find_ascent_direction on the antipodal pair") {
  const Configuration config = named(NamedKind::Antipodal, 1);
  const RieszParams params(2.0);
  Rng rng(43);
  const AscentSearchResult found = find_ascent_direction(config, params, 0, rng);
  CHECK(ts::rel_close(found.value, 0.25, 1e-12));  // every unit tangent attains 1/4
  CHECK(std::abs(found.direction.direction.norm() - 1.0) <= 1e-12);
}

TEST_CASE("find_ascent_direction on the regular simplex") {
  const Configuration config = named(NamedKind::Simplex, 2);
  const RieszParams params(1.0);
  Rng rng(44);
  const AscentSearchResult found = find_ascent_direction(config, params, 0, rng);
  CHECK(found.value > 0.0);
  // The sign must agree with the finite-difference second derivative.
  const double fd = ts::fd_second_derivative(
      config, params, one_hot_perturbation(config, 0, found.direction.direction));
  CHECK(fd > 0.0);
  CHECK(ts::rel_close(2.0 * found.value, fd, 1e-4));
}

TEST_CASE("eigenvector fallback attains at least the equator mean") {
  const Configuration config = named(NamedKind::Ngon, 1, 3);
  const RieszParams params(1.0);
  Rng rng(45);
  // max_tries = 0 skips sampling entirely and forces the deterministic path.
  const AscentSearchResult found = find_ascent_direction(config, params, 0, rng, 0);
  CHECK(found.used_fallback);
  const double mean_total = total(equator_mean_terms(config, params, 0));
  CHECK(found.value >= mean_total - 1e-12 * std::abs(mean_total));
}

TEST_CASE("certify_not_max on a non-critical configuration yields a gradient witness") {
  const Configuration config = named(NamedKind::Random, 2, 5, 7);
  const Certificate cert = certify_not_max(config, RieszParams(1.0), 7);
  CHECK(cert.kind == CertificateKind::GradientWitness);
  CHECK(cert.gradient_norm > kGradTol);
  CHECK(verify_certificate(config, RieszParams(1.0), cert));
}

TEST_CASE("certify_not_max on the triangle yields an ascent direction") {
  const Configuration config = named(NamedKind::Ngon, 1, 3);
  const RieszParams params(1.0);
  const Certificate cert = certify_not_max(config, params, 7);
  CHECK(cert.kind == CertificateKind::AscentDirection);
  CHECK(cert.point_index == 0);
  REQUIRE(cert.second_variation_value.has_value());
  CHECK(*cert.second_variation_value > 0.0);
  REQUIRE(cert.fd_confirmation.has_value());
  CHECK(*cert.fd_confirmation > 0.0);
  CHECK(cert.equator_mean_terms.size() == 2);
  CHECK(verify_certificate(config, params, cert));
}

TEST_CASE("certify_not_max below the threshold reports ConditionNotMet") {
  const Configuration config = named(NamedKind::Random, 3, 4, 11);
  const Certificate cert = certify_not_max(config, RieszParams(0.5), 11);
  CHECK(cert.kind == CertificateKind::ConditionNotMet);
  CHECK(verify_certificate(config, RieszParams(0.5), cert));
}

TEST_CASE("certificates are deterministic given the seed") {
  const Configuration config = named(NamedKind::Ngon, 1, 5);
  const RieszParams params(2.0);
  const std::string first = certificate_to_json(certify_not_max(config, params, 123));
  const std::string second = certificate_to_json(certify_not_max(config, params, 123));
  CHECK(first == second);
}

TEST_CASE("certification works for every alpha on the circle") {
  // d = 1 means d - 2 = -1, so the condition holds for all positive alpha.
  Rng rng(46);
  for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
    for (int n : {2, 4, 6}) {
      const Configuration config = ts::random_separated_configuration(1, n, rng, 1e-3);
      const Certificate cert = certify_not_max(config, RieszParams(alpha), 5);
      CHECK(cert.kind != CertificateKind::ConditionNotMet);
      CHECK(verify_certificate(config, RieszParams(alpha), cert));
    }
  }
}

TEST_CASE("verify_certificate detects tampering and accepts sign flips") {
  const Configuration config = named(NamedKind::Ngon, 1, 3);
  const RieszParams params(1.0);
  Certificate cert = certify_not_max(config, params, 9);
  REQUIRE(cert.kind == CertificateKind::AscentDirection);
  CHECK(verify_certificate(config, params, cert));

  Certificate negated = cert;
  *negated.direction = -*negated.direction;
  CHECK(verify_certificate(config, params, negated));  // quadratic in h

  Certificate tampered = cert;
  *tampered.second_variation_value *= 1.1;
  CHECK_FALSE(verify_certificate(config, params, tampered));

  Certificate tampered_fd = cert;
  *tampered_fd.fd_confirmation *= 1.1;
  CHECK_FALSE(verify_certificate(config, params, tampered_fd));

  Certificate tampered_terms = cert;
  tampered_terms.equator_mean_terms[0] *= 1.1;
  CHECK_FALSE(verify_certificate(config, params, tampered_terms));
}

TEST_CASE("verify_certificate detects gradient-witness tampering") {
  const Configuration config = named(NamedKind::Random, 2, 5, 3);
  const RieszParams params(1.0);
  Certificate cert = certify_not_max(config, params, 3);
  REQUIRE(cert.kind == CertificateKind::GradientWitness);
  CHECK(verify_certificate(config, params, cert));
  cert.gradient_norm *= 1.1;
  CHECK_FALSE(verify_certificate(config, params, cert));
}

TEST_CASE("verify_certificate rejects mismatched configurations") {
  const Configuration config = named(NamedKind::Ngon, 1, 3);
  const Configuration other = named(NamedKind::Ngon, 1, 4);
  const RieszParams params(1.0);
  const Certificate cert = certify_not_max(config, params, 9);
  CHECK_THROWS_AS(verify_certificate(other, params, cert), std::invalid_argument);
  CHECK_THROWS_AS(verify_certificate(config, RieszParams(2.0), cert), std::invalid_argument);
}

TEST_CASE("certificate JSON round trip") {
  const Configuration config = named(NamedKind::Ngon, 1, 3);
  const RieszParams params(1.0);
  const Certificate cert = certify_not_max(config, params, 17);
  const Certificate back = certificate_from_json(certificate_to_json(cert));
  CHECK(back.kind == cert.kind);
  CHECK(back.point_index == cert.point_index);
  CHECK(back.gradient_norm == cert.gradient_norm);  // 17 digits round-trips exactly
  REQUIRE(back.direction.has_value());
  CHECK((*back.direction - *cert.direction).norm() == 0.0);
  CHECK(*back.second_variation_value == *cert.second_variation_value);
  CHECK(*back.fd_confirmation == *cert.fd_confirmation);
  CHECK(back.equator_mean_terms == cert.equator_mean_terms);
  CHECK(verify_certificate(config, params, back));
}
