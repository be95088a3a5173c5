#include <doctest.h>

#include <cmath>

#include "gst/catalog.hpp"
#include "gst/transform.hpp"

using namespace gst;

TEST_CASE("power pair closed forms") {
  auto p = pair_power(0.5, 1.5);
  CHECK(p.rho == 1.5);
  CHECK(p.G.eval(Cplx(1.0, 0.0)).real() == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(p.G.deriv(Cplx(1.0, 0.0)).real() == doctest::Approx(-2.0).epsilon(1e-13));
  CHECK(p.F.density(4.0) == doctest::Approx(0.5));

  auto p1 = pair_power(0.5, 1.0);
  Cplx g = p1.G.eval(Cplx(4.0, 0.0));
  CHECK(g.real() == doctest::Approx(M_PI * 0.5).epsilon(1e-13));

  CHECK_THROWS_AS(pair_power(1.2, 1.0), DomainError);
  CHECK_THROWS_AS(pair_power(-0.5, 1.0), DomainError);
}

TEST_CASE("power pair delta at rho=1 equals F") {
  auto p = pair_power(0.4, 1.0);
  for (double t : {0.5, 1.0, 3.0})
    CHECK(p.delta.eval(t) == doctest::Approx(p.F.density(t)).epsilon(1e-13));
}

TEST_CASE("point mass pair") {
  auto p = pair_point_mass(2.0, 1.5);
  CHECK(p.G.eval(Cplx(1.0, 0.0)).real() ==
        doctest::Approx(std::pow(3.0, -1.5)).epsilon(1e-14));
  auto p2 = pair_point_mass(1.0, 0.5);
  CHECK(p2.G.eval(Cplx(0.5, 0.0)).real() ==
        doctest::Approx(std::pow(1.5, -0.5)).epsilon(1e-14));
  CHECK(p.F.point_masses.size() == 1);
  CHECK_THROWS_AS(pair_point_mass(-1.0, 1.0), DomainError);
}

TEST_CASE("hyper pair closed form inside the disk") {
  auto p = pair_power_hyper(0.5, 1.0, 1.5);
  CHECK(p.G.eval(Cplx(1.0, 0.0)).real() ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(p.G.eval(Cplx(0.5, 0.0)).real() ==
        doctest::Approx(3.0141980788781559).epsilon(1e-11));
  CHECK_THROWS_AS(pair_power_hyper(2.0, 1.0, 0.5), DomainError);
}

TEST_CASE("hyper pair numeric continuation outside the disk") {
  auto p = pair_power_hyper(0.5, 1.0, 1.5);
  // |1 - z| >= 0.9 falls back to the defining integral
  CHECK(p.G.eval(Cplx(2.0, 0.0)).real() ==
        doctest::Approx(0.57079632679489667).epsilon(1e-10));
  CHECK(p.G.eval(Cplx(3.0, 0.0)).real() ==
        doctest::Approx(0.34217752552270664).epsilon(1e-10));
  Cplx g = p.G.eval(Cplx(2.0, 1.0));
  CHECK(g.real() == doctest::Approx(0.41767407646368115).epsilon(1e-10));
  CHECK(g.imag() == doctest::Approx(-0.27501973764920351).epsilon(1e-10));
  CHECK(p.G.deriv(Cplx(3.0, 0.0)).real() ==
        doctest::Approx(-0.14552203303091887).epsilon(1e-9));
  // near the cut the ray rotates
  Cplx zc = std::polar(1.0, 0.99 * M_PI);
  CHECK(std::isfinite(p.G.eval(zc).real()));
}

TEST_CASE("continued power pair") {
  auto p = pair_power_continued(1.5, 1.2);
  // beta continues through the gamma ratio; nu >= rho allowed
  CHECK(std::isfinite(p.G.eval(Cplx(1.0, 0.0)).real()));
  CHECK(p.delta.eval(1.0) == doctest::Approx(
      beta_fn(1.5, -0.3) * std::sin(-0.3 * M_PI) / M_PI).epsilon(1e-13));
  CHECK_THROWS_AS(pair_power_continued(-1.0, 1.2), DomainError);
}

TEST_CASE("forward transform reproduces every pair") {
  std::vector<TransformPair> pairs = {pair_power(0.5, 1.5),
                                      pair_point_mass(1.0, 1.5),
                                      pair_power_hyper(0.5, 1.0, 1.5)};
  for (const auto& pair : pairs) {
    TransformParams tp;
    tp.rho = pair.rho;
    for (Cplx z : {Cplx(0.5, 0.0), Cplx(1.0, 0.0), Cplx(1.0, 0.5)}) {
      Cplx got = forward_gst(pair.F, tp, z);
      Cplx want = pair.G.eval(z);
      CHECK(std::abs(got - want) <= 1e-7 * std::abs(want));
    }
  }
}

TEST_CASE("numeric discontinuity matches closed delta") {
  auto p = pair_power(0.6, 1.5);
  TransformParams tp;
  tp.rho = p.rho;
  for (double t : {0.5, 1.0, 2.0}) {
    double got = discontinuity(p.G, tp, t);
    CHECK(got == doctest::Approx(p.delta.eval(t)).epsilon(1e-5));
  }
}
