#include <cmath>
#include <complex>

#include "doctest.h"
#include "hardcore/errors.hpp"
#include "hardcore/regions.hpp"

using namespace hardcore;

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex polar(double r, double arg) {
  return r * Complex{std::cos(arg), std::sin(arg)};
}

}  // namespace

TEST_CASE("shearer radius") {
  CHECK(shearer_radius(2) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(shearer_radius(3) == doctest::Approx(4.0 / 27.0).epsilon(1e-15));
  CHECK(shearer_radius(10) ==
        doctest::Approx(std::pow(9.0, 9) / std::pow(10.0, 10)).epsilon(1e-15));
  CHECK_THROWS_AS(shearer_radius(1), InputError);
}

TEST_CASE("beta prime") {
  CHECK(beta_prime(0.7, 0.0) == 0.0);
  CHECK(beta_prime(0.0, 1.2) == 0.0);
  CHECK(beta_prime(1.0, kPi / 2) == doctest::Approx(kPi / 4).epsilon(1e-15));
  for (double r : {0.1, 0.8, 2.5}) {
    for (double ang : {0.0, 0.3, 1.0, kPi / 2}) {
      double expect = std::arg(1.0 + polar(r, ang));
      CHECK(beta_prime(r, ang) == doctest::Approx(expect).epsilon(1e-14));
    }
  }
}

TEST_CASE("modulus quadratic coefficients") {
  QuadraticCoeffs q = quadratic_coeffs(0.0, kPi / 2, 2);
  CHECK(q.u == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(q.a == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(q.b) <= 1e-15);
  CHECK(q.c == doctest::Approx(-1.0).epsilon(1e-14));

  q = quadratic_coeffs(kPi / 2, kPi / 2, 4);
  CHECK(q.u == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(q.a == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(q.b == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(q.c == doctest::Approx(-1.0).epsilon(1e-14));

  q = quadratic_coeffs(0.0, kPi / 2, 9);
  double u9 = std::tan(kPi / 18.0);
  CHECK(q.a == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(q.b == doctest::Approx(1.0 - u9).epsilon(1e-14));
  CHECK(q.c == doctest::Approx(-u9).epsilon(1e-14));

  CHECK_THROWS_AS(quadratic_coeffs(-0.1, kPi / 2, 3), InputError);
  CHECK_THROWS_AS(quadratic_coeffs(0.2, 0.3, 1), InputError);
}

TEST_CASE("boundary modulus s") {
  for (int i = 0; i <= 16; ++i) {
    double beta = kPi / 2 * i / 16.0;
    CHECK(s_radius(beta, kPi / 2, 2) == doctest::Approx(1.0).epsilon(1e-12));
  }
  for (int d = 2; d <= 20; ++d) {
    double expect = std::tan(kPi / (2.0 * d));
    CHECK(s_radius(0.0, kPi / 2, d) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(s_radius(kPi / 2, kPi / 2, d) == doctest::Approx(expect).epsilon(1e-12));
  }

  // s solves its quadratic, and at |x| = s the angle identity
  // d (beta' + gamma') = beta + gamma closes.
  for (int d : {2, 3, 9, 33, 64}) {
    for (int i = 0; i <= 32; ++i) {
      double beta = kPi / 2 * i / 32.0;
      QuadraticCoeffs q = quadratic_coeffs(beta, kPi / 2, d);
      double s = s_radius(beta, kPi / 2, d);
      CHECK(std::abs(q.a * s * s + q.b * s + q.c) <= 1e-12);
      double closed = d * (beta_prime(s, beta) + beta_prime(s, kPi / 2));
      CHECK(closed == doctest::Approx(beta + kPi / 2).epsilon(1e-10));
    }
  }
}

TEST_CASE("boundary argument t") {
  for (int d : {2, 3, 10, 64}) {
    CHECK(t_angle(0.0, d) == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(std::abs(t_angle(kPi / 2, d)) <= 1e-12);
  }
  CHECK(t_angle(kPi / 4, 2) == doctest::Approx(kPi / 4).epsilon(1e-12));
}

TEST_CASE("traced boundary") {
  auto samples = new_domain_boundary(9, 257);
  REQUIRE(samples.size() == 257);
  double tan9 = std::tan(kPi / 18.0);
  CHECK(samples.front().beta == 0.0);
  CHECK(samples.front().t_value == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK(samples.front().s_value == doctest::Approx(tan9).epsilon(1e-12));
  CHECK(samples.back().t_value == 0.0);
  CHECK(samples.back().s_value == doctest::Approx(tan9).epsilon(1e-12));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    CHECK(samples[i].s_value >= 0.875 * tan9);
    if (i > 0) {
      CHECK(std::abs(samples[i].t_value - samples[i - 1].t_value) < 0.05);
      CHECK(std::abs(samples[i].s_value - samples[i - 1].s_value) < 0.05);
    }
  }

  for (const auto& s : new_domain_boundary(2, 129))
    CHECK(s.s_value == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(new_domain_boundary(9, 1), InputError);
}

TEST_CASE("traced domain membership") {
  for (int d : {2, 3, 9}) {
    double tan_d = std::tan(kPi / (2.0 * d));
    CHECK(new_domain_contains({0.9 * tan_d, 0.0}, d));
    for (int i = 0; i <= 8; ++i) {
      double phi = kPi / 2 * i / 8.0;
      CHECK(new_domain_contains(polar(0.87 * tan_d, phi), d));
      CHECK(new_domain_contains(polar(0.87 * tan_d, -phi), d));
    }
    CHECK(!new_domain_contains({0.0, 1.01 * tan_d}, d));
    CHECK(!new_domain_contains({-0.1, 0.0}, d));
    CHECK(new_domain_max_modulus(0.0, d) == doctest::Approx(tan_d).epsilon(1e-9));
  }
}

TEST_CASE("eps sector union") {
  for (int delta : {3, 5, 10}) {
    double cap = std::tan(kPi / (2.0 * (delta - 1)));
    CHECK(pr_contains({cap - 1e-12, 0.0}, delta));
    CHECK(!pr_contains({0.0, cap}, delta));
  }
  // arg pi/6 forces eps = 1, radius tan(pi/27) at delta = 10.
  double r = std::tan(kPi / 27.0);
  CHECK(pr_contains(polar(r - 1e-9, kPi / 6), 10));
  CHECK(!pr_contains(polar(r + 1e-6, kPi / 6), 10));
  CHECK(pr_union_radius(kPi / 6, 10) == doctest::Approx(r).epsilon(1e-12));

  CHECK(pr_eps_contains(polar(std::tan(kPi / 27.0) * 0.999, kPi / 6), 10, 1.0));
  CHECK(!pr_eps_contains(polar(0.01, kPi / 3), 10, 1.0));
}

TEST_CASE("zero-dense domain boundary and membership") {
  for (int d : {2, 3, 9}) {
    Complex at0 = ud_boundary_point(0.0, d);
    CHECK(std::abs(at0 - Complex{-shearer_radius(d + 1), 0.0}) <= 1e-12);
    CHECK(ud_curve_is_simple(d));

    CHECK(ud_contains({0.0, 0.0}, d));
    double extreme = std::pow(d, d) / std::pow(d - 1.0, d + 1);
    CHECK(ud_contains({0.99 * extreme, 0.0}, d));
    CHECK(!ud_contains({2.0 * at0.real(), 0.0}, d));
  }
  CHECK(std::abs(ud_boundary_point(kPi, 2) - Complex{4.0, 0.0}) <= 1e-12);
}

TEST_CASE("certificate margins") {
  CHECK(certificate_check({0.0, 0.0}, 0.3, 0.9, 3));

  // Real activities: the symmetric sector certifies exactly up to tan(pi/2d).
  for (int d : {2, 3, 7}) {
    double cap = std::tan(kPi / (2.0 * d));
    CHECK(certificate_check({0.999 * cap, 0.0}, kPi / 2, kPi / 2, d));
    CHECK(!certificate_check({1.01 * cap, 0.0}, kPi / 2, kPi / 2, d));
  }

  // Boundary points certify with equality on one side.
  for (int i = 1; i < 8; ++i) {
    double beta = kPi / 2 * i / 8.0;
    int d = 5;
    Complex lam = polar(s_radius(beta, kPi / 2, d), t_angle(beta, d));
    CertificateMargins m = certificate_margins(lam, beta, kPi / 2, d);
    CHECK(m.holds);
    CHECK(std::min(m.left_margin, m.right_margin) <= 1e-10);

    // Monotone in modulus: shrinking the activity keeps the certificate.
    CHECK(certificate_check(0.5 * lam, beta, kPi / 2, d));
  }

  CHECK_THROWS_AS(certificate_margins({-0.5, 0.0}, 0.3, 0.9, 3), InputError);
}

TEST_CASE("containment scan") {
  for (int d : {2, 3, 9}) {
    ContainmentReport rep = region_containment_scan(d, 128);
    CHECK(rep.checks > 0);
    CHECK(rep.counterexamples.empty());
  }
  CHECK(region_containment_scan(9, 1).counterexamples.empty());
}

TEST_CASE("region specs and polar boundaries") {
  RegionSpec bad{RegionKind::new_domain, 2};
  CHECK_THROWS_AS(bad.validate(), InputError);
  RegionSpec bad2{RegionKind::shearer, 1};
  CHECK_THROWS_AS(bad2.validate(), InputError);

  RegionSpec shearer{RegionKind::shearer, 3};
  auto circle = region_boundary(shearer, 64);
  CHECK(circle.size() >= 64);
  for (const auto& p : circle)
    CHECK(p.modulus == doctest::Approx(4.0 / 27.0).epsilon(1e-14));

  RegionSpec nd{RegionKind::new_domain, 10};
  CHECK(region_radius_at(nd, 0.0) ==
        doctest::Approx(std::tan(kPi / 18.0)).epsilon(1e-9));
  CHECK(region_contains(nd, {0.15, 0.0}));
  CHECK(!region_contains(nd, {0.18, 0.0}));

  RegionSpec d1{RegionKind::half_disk_d1, 10};
  RegionSpec d2{RegionKind::half_disk_d2, 10};
  double tan10 = std::tan(kPi / 18.0);
  CHECK(region_radius_at(d1, 0.3) == doctest::Approx(0.875 * tan10).epsilon(1e-14));
  CHECK(region_radius_at(d2, 0.3) == doctest::Approx(tan10).epsilon(1e-14));
  CHECK(region_radius_at(d2, 2.0) == 0.0);
  CHECK(region_contains(d2, {0.0, tan10 - 1e-9}));
  CHECK(!region_contains(d2, {-0.01, 0.1}));

  RegionSpec ud{RegionKind::ud, 4};
  CHECK_THROWS_AS(region_radius_at(ud, 0.0), InputError);
  CHECK(region_contains(ud, {0.0, 0.0}));
}
