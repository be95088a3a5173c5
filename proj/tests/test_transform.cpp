#include <doctest.h>

#include <cmath>

#include "gst/catalog.hpp"
#include "gst/transform.hpp"

using namespace gst;

namespace {

TransformParams params(double rho) {
  TransformParams tp;
  tp.rho = rho;
  return tp;
}

}  // namespace

TEST_CASE("forward power law matches the closed form") {
  for (double rho : {0.5, 1.0, 1.5, 2.5}) {
    auto pair = pair_power(0.5 * rho, rho);
    TransformParams tp = params(rho);
    for (Cplx z : {Cplx(0.5, 0.0), Cplx(1.0, 0.0), Cplx(2.0, 1.0)}) {
      Cplx got = forward_gst(pair.F, tp, z);
      Cplx want = pair.G.eval(z);
      CHECK(std::abs(got - want) <= 1e-7 * std::abs(want));
    }
  }
}

TEST_CASE("forward near the cut uses the rotated ray") {
  auto pair = pair_power(0.5, 1.5);
  TransformParams tp = params(1.5);
  Cplx z = std::polar(1.0, 0.999 * M_PI);
  Cplx got = forward_gst(pair.F, tp, z);
  Cplx want = pair.G.eval(z);
  CHECK(std::abs(got - want) <= 1e-7 * std::abs(want));
}

TEST_CASE("forward point mass is exact sifting") {
  auto pair = pair_point_mass(2.0, 1.5);
  TransformParams tp = params(1.5);
  Cplx got = forward_gst(pair.F, tp, Cplx(1.0, 0.0));
  CHECK(got.real() == doctest::Approx(std::pow(3.0, -1.5)).epsilon(1e-14));
  CHECK(got.imag() == 0.0);
}

TEST_CASE("forward preconditions") {
  auto pair = pair_power(0.5, 1.5);
  SourceFunction bad = pair.F;
  bad.alpha = 2.0;  // outside (0, rho)
  CHECK_THROWS_AS(forward_gst(bad, params(1.5), Cplx(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(forward_gst(pair.F, params(1.5), Cplx(-1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(forward_gst(SourceFunction{}, params(1.5), Cplx(1.0, 0.0)),
                  DomainError);
}

TEST_CASE("tabulated source") {
  std::vector<double> ys, fs;
  for (int i = 0; i <= 200; ++i) {
    ys.push_back(0.05 + i * (10.0 - 0.05) / 200.0);
    fs.push_back(1.0);
  }
  SourceFunction F = make_tabulated_source(ys, fs, 0.5);
  TransformParams tp = params(1.5);
  double a = ys.front(), b = ys.back();
  double want = 2.0 * (std::pow(1.0 + a, -0.5) - std::pow(1.0 + b, -0.5));
  Cplx got = forward_gst(F, tp, Cplx(1.0, 0.0));
  CHECK(got.real() == doctest::Approx(want).epsilon(1e-8));

  CHECK_THROWS_AS(make_tabulated_source({1.0, 1.0}, {1.0, 1.0}, 0.5), DomainError);
  CHECK_THROWS_AS(make_tabulated_source({-1.0, 1.0}, {1.0, 1.0}, 0.5), DomainError);
  CHECK_THROWS_AS(make_tabulated_source({1.0}, {1.0}, 0.5), DomainError);
}

TEST_CASE("inverse recovers the power density") {
  auto pair = pair_power(0.5, 1.5);
  TransformParams tp = params(1.5);
  for (double y : {0.25, 1.0, 4.0}) {
    double want = std::pow(y, -0.5);
    CHECK(inverse_gst(pair.G, tp, y) == doctest::Approx(want).epsilon(1e-8));
    CHECK(inverse_gst_zplane(pair.G, tp, y) == doctest::Approx(want).epsilon(1e-8));
    CHECK(inverse_gst_ibp(pair.G, tp, y) == doctest::Approx(want).epsilon(1e-8));
  }
}

TEST_CASE("inverse without an analytic derivative") {
  auto pair = pair_power(0.5, 1.5);
  CutPlaneFunction numeric_only{pair.G.eval, nullptr, pair.G.beta};
  TransformParams tp = params(1.5);
  CHECK(inverse_gst(numeric_only, tp, 1.0) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("inverse preconditions") {
  auto pair = pair_power(0.5, 1.5);
  CHECK_THROWS_AS(inverse_gst(pair.G, params(1.5), -1.0), DomainError);
  CHECK_THROWS_AS(inverse_gst_ibp(pair.G, params(0.9), 1.0), DomainError);
  CHECK_THROWS_AS(stieltjes_disc_inverse(pair.G, params(1.5), 1.0), DomainError);
}

TEST_CASE("discontinuity matches the closed form") {
  auto pair = pair_power(0.6, 1.5);
  TransformParams tp = params(1.5);
  for (double t : {0.5, 1.0, 2.0}) {
    double want = pair.delta.eval(t);
    CHECK(discontinuity(pair.G, tp, t) == doctest::Approx(want).epsilon(1e-8));
  }
}

TEST_CASE("rho=1 inverse via the disc formula") {
  auto pair = pair_power(0.5, 1.0);
  TransformParams tp = params(1.0);
  CHECK(stieltjes_disc_inverse(pair.G, tp, 1.0) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(stieltjes_disc_inverse(pair.G, tp, 4.0) == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("Abel forms recover F") {
  auto pair = pair_power(1.2, 1.5);
  TransformParams tp = params(1.5);
  for (double y : {0.5, 1.0, 2.0}) {
    double want = std::pow(y, 0.2);
    CHECK(abel_inverse_from_delta(pair.delta, tp, y) ==
          doctest::Approx(want).epsilon(1e-9));
  }
  // derivative form, needs Delta(0) = 0
  auto pc = pair_power_continued(1.5, 1.2);
  TransformParams tp2 = params(1.2);
  double coef = beta_fn(1.5, -0.3) * std::sin(M_PI * -0.3) / M_PI;
  auto dprime = [coef](double t) { return 0.3 * coef * std::pow(t, -0.7); };
  for (double y : {0.5, 2.0}) {
    CHECK(abel_inverse_from_delta_prime(dprime, tp2, y) ==
          doctest::Approx(std::pow(y, 0.5)).epsilon(1e-8));
  }
}

TEST_CASE("delta_from_f") {
  auto pc = pair_power_continued(1.5, 1.2);
  TransformParams tp = params(1.2);
  for (double t : {0.5, 1.0, 2.0}) {
    double want = pc.delta.eval(t);
    CHECK(delta_from_f(pc.F, tp, t) == doctest::Approx(want).epsilon(1e-8));
  }
  // rho = 1 returns F itself
  TransformParams tp1 = params(1.0);
  CHECK(delta_from_f(pc.F, tp1, 2.0) == doctest::Approx(std::sqrt(2.0)));
  // preconditions
  CHECK_THROWS_AS(delta_from_f(pc.F, params(2.5), 1.0), DomainError);
  auto blows = pair_power(0.5, 1.5);  // F(0) != 0
  CHECK_THROWS_AS(delta_from_f(blows.F, params(1.5), 1.0), DomainError);
}

TEST_CASE("radial inverse") {
  for (double nu : {0.5, 1.0}) {
    auto pair = pair_power(nu, 1.5);
    auto g = [&pair](Cplx zeta) { return pair.G.eval(zeta * zeta); };
    for (double mu : {0.5, 1.0, 2.0}) {
      double want = 2.0 * mu * std::pow(mu * mu, nu - 1.0);
      CHECK(radial_inverse(g, mu) == doctest::Approx(want).epsilon(1e-8));
    }
  }
  CHECK_THROWS_AS(radial_inverse([](Cplx z) { return z; }, -1.0), DomainError);
}

TEST_CASE("laplace") {
  auto pair = pair_power(0.5, 1.5);
  for (double x : {0.5, 2.0}) {
    double want = std::sqrt(M_PI) * std::pow(x, -0.5);  // Gamma(1/2) x^{-1/2}
    CHECK(laplace(pair.F, x) == doctest::Approx(want).epsilon(1e-10));
  }
  auto pm = pair_point_mass(2.0, 1.5);
  CHECK(laplace(pm.F, 1.5) == doctest::Approx(std::exp(-3.0)).epsilon(1e-14));
}

TEST_CASE("iterated Laplace equals the direct transform") {
  auto pair = pair_power(0.5, 1.5);
  TransformParams tp = params(1.5);
  for (double z : {0.5, 1.0, 2.0}) {
    double want = pair.G.eval(Cplx(z, 0.0)).real();
    CHECK(iterated_laplace_forward(pair.F, tp, z) ==
          doctest::Approx(want).epsilon(1e-6));
  }
}

TEST_CASE("imaginary residue gate") {
  // a G that violates the analyticity contract: not real on the real axis
  CutPlaneFunction bad;
  bad.eval = [](Cplx z) { return principal_pow(z, -0.5) * Cplx(0.0, 1.0); };
  TransformParams tp = params(1.0);
  CHECK_THROWS_AS(stieltjes_disc_inverse(bad, tp, 1.0), ResidualImaginaryError);
}
