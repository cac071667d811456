#include <doctest.h>

#include <cmath>

#include "ybrg/coupling.hpp"

using namespace ybrg;

TEST_CASE("closed-form couplings at the marked points") {
  SUBCASE("phi = 0 gives (pi, pi) for any u") {
    for (const double u : {0.2, 0.5, 1.2}) {
      const CouplingPair p = couplings_from_spectral(u, 0.0);
      CHECK(p.j_par == M_PI);
      CHECK(p.j_perp == M_PI);
      const CouplingPair m = couplings_from_spectral(u, 0.0, Branch::minus);
      CHECK(m.j_par == M_PI);
      CHECK(m.j_perp == M_PI);
    }
  }
  SUBCASE("phi -> +inf on the plus branch gives (2u, 0)") {
    const CouplingPair p = couplings_from_spectral(0.3, 40.0);
    CHECK(p.j_par == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(p.j_perp < 1e-15);
  }
  SUBCASE("frozen value at u=0.5, phi=1.0") {
    // direct evaluation of the trajectory formulas; satisfies the
    // half-angle constraint to machine precision
    const CouplingPair p = couplings_from_spectral(0.5, 1.0);
    CHECK(p.j_par == doctest::Approx(1.2445042517193921).epsilon(1e-15));
    CHECK(p.j_perp == doctest::Approx(0.7746851917126083).epsilon(1e-15));
    CHECK(check_constraint(p, 0.5) < 1e-15);
  }
  SUBCASE("minus branch at phi equals plus branch at -phi") {
    const CouplingPair a = couplings_from_spectral(0.7, -1.3, Branch::plus);
    const CouplingPair b = couplings_from_spectral(0.7, 1.3, Branch::minus);
    CHECK(a.j_par == b.j_par);
    CHECK(a.j_perp == b.j_perp);
  }
  SUBCASE("couplings stay inside [0, 2pi)") {
    for (const double phi : {-6.0, -1.0, 0.0, 0.4, 3.0, 8.0}) {
      const CouplingPair p = couplings_from_spectral(1.1, phi, Branch::minus);
      CHECK(p.j_par >= 0.0);
      CHECK(p.j_par < 2.0 * M_PI);
      CHECK(p.j_perp >= 0.0);
      CHECK(p.j_perp < 2.0 * M_PI);
    }
  }
}

TEST_CASE("spectral_from_couplings inverts the trajectory map") {
  SUBCASE("(pi, pi) maps to the degenerate point") {
    const SpectralPoint pt = spectral_from_couplings({M_PI, M_PI});
    CHECK(pt.f == 0.0);
    CHECK(pt.u == 0.0);
  }
  SUBCASE("frozen pair inverts to (1.0, 0.5)") {
    const SpectralPoint pt =
        spectral_from_couplings({1.2445042517193921, 0.7746851917126083});
    CHECK(pt.f == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pt.u == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("weak-coupling endpoint: f diverges as j_perp -> 0") {
    const CouplingPair near_end = couplings_from_spectral(0.3, 12.0);
    const SpectralPoint pt = spectral_from_couplings(near_end);
    CHECK(pt.f == doctest::Approx(12.0).epsilon(1e-12));
    CHECK(pt.u == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(pt.f > 8.0);
  }
  SUBCASE("round trip over the verification grid") {
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
      const double u = 0.06 + (1.39 - 0.06) * i / 24.0;
      for (int k = 0; k < 40; ++k) {
        const double phi = 0.1 + (5.0 - 0.1) * k / 39.0;
        const SpectralPoint pt =
            spectral_from_couplings(couplings_from_spectral(u, phi));
        worst = std::max({worst, std::abs(pt.f - phi), std::abs(pt.u - u)});
      }
    }
    CHECK(worst < 1e-11);
  }
  SUBCASE("the minus branch at negative phi round-trips to |phi|") {
    const CouplingPair p = couplings_from_spectral(0.4, -2.0, Branch::minus);
    const SpectralPoint pt = spectral_from_couplings(p);
    CHECK(pt.f == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(pt.u == doctest::Approx(0.4).epsilon(1e-13));
  }
}

TEST_CASE("spectral_from_couplings domain errors") {
  CHECK_THROWS_AS(spectral_from_couplings({0.1, 0.3}), NonHyperbolicRegime);
  CHECK_THROWS_AS(spectral_from_couplings({0.5, 0.0}), NonHyperbolicRegime);
  CHECK_THROWS_AS(spectral_from_couplings({0.5, -0.1}), NonHyperbolicRegime);
  // j_par + j_perp beyond 2 pi leaves the invertible branch
  CHECK_THROWS_AS(spectral_from_couplings({4.4, 4.3}), NonHyperbolicRegime);
  CHECK_THROWS_AS(spectral_from_couplings({2.0 * M_PI, 0.5}), DomainError);
  const double nan = std::nan("");
  CHECK_THROWS_AS(spectral_from_couplings({nan, 0.5}), DomainError);
}

TEST_CASE("couplings_from_spectral argument validation") {
  CHECK_THROWS_AS(couplings_from_spectral(0.0, 1.0), InvalidAnisotropy);
  CHECK_THROWS_AS(couplings_from_spectral(1.6, 1.0), InvalidAnisotropy);
  CHECK_THROWS_AS(couplings_from_spectral(-0.5, 1.0), InvalidAnisotropy);
  CHECK_THROWS_AS(couplings_from_spectral(0.5, INFINITY), DomainError);
  CHECK_NOTHROW(couplings_from_spectral(M_PI / 2.0, 1.0));
}

TEST_CASE("half-angle constraint") {
  SUBCASE("(pi, pi) satisfies it for any u") {
    CHECK(check_constraint({M_PI, M_PI}, 0.3) < 1e-16);
    CHECK(check_constraint({M_PI, M_PI}, 1.2) < 1e-16);
  }
  SUBCASE("holds along the closed-form family") {
    CHECK(check_constraint(couplings_from_spectral(0.5, 1.0), 0.5) < 1e-14);
    for (int k = 0; k < 40; ++k) {
      const double phi = -5.0 + 10.0 * k / 39.0;
      CHECK(check_constraint(couplings_from_spectral(0.8, phi), 0.8) < 1e-13);
    }
  }
  SUBCASE("small couplings satisfying the quadratic relation nearly satisfy it") {
    const double u = std::sqrt(0.02);  // 4u^2 = 0.3^2 - 0.1^2
    CHECK(check_constraint({0.3, 0.1}, u) < 2e-4);
  }
}

TEST_CASE("weak-coupling residual") {
  SUBCASE("exact zero at the endpoint (2u, 0)") {
    for (const double u : {0.1, 0.37}) {
      CHECK(weak_coupling_residual({2.0 * u, 0.0}, u) == 0.0);
    }
  }
  SUBCASE("constructed pair") {
    CHECK(std::abs(weak_coupling_residual({0.3, 0.1}, std::sqrt(0.02))) < 1e-16);
  }
  SUBCASE("small-u family") {
    const CouplingPair p = couplings_from_spectral(0.05, 2.0);
    CHECK(std::abs(weak_coupling_residual(p, 0.05)) < 1e-5);
  }
  SUBCASE("quartic shrinkage under a tenfold u reduction") {
    const double r1 = std::abs(weak_coupling_residual(
        couplings_from_spectral(0.05, 1.5), 0.05));
    const double r2 = std::abs(weak_coupling_residual(
        couplings_from_spectral(0.005, 1.5), 0.005));
    CHECK(r1 / r2 == doctest::Approx(1e4).epsilon(0.05));
  }
}

TEST_CASE("monotonicity of J_perp on the plus branch") {
  for (const double u : {0.2, 0.7, 1.4}) {
    double prev = couplings_from_spectral(u, 0.01).j_perp;
    for (int k = 1; k <= 100; ++k) {
      const double phi = 0.01 + 6.0 * k / 100.0;
      const double next = couplings_from_spectral(u, phi).j_perp;
      CHECK(next < prev);
      prev = next;
    }
  }
}

TEST_CASE("Toulouse point u = pi/2: J_par is pinned at pi") {
  for (const double phi : {0.3, 1.0, 2.5, -1.7}) {
    const CouplingPair p = couplings_from_spectral(M_PI / 2.0, phi);
    CHECK(std::abs(p.j_par - M_PI) < 1e-12);
  }
}

TEST_CASE("isotropic maps") {
  CHECK(su2_coupling(1.0) == M_PI);
  CHECK(su2_coupling(2.0) == M_PI / 2.0);
  CHECK(su2_spectral(M_PI / 2.0) == doctest::Approx(1.0).epsilon(1e-15));  // cot(pi/4)
  CHECK(su2_spectral(0.1) == doctest::Approx(19.983330554894014).epsilon(1e-15));
  // small-angle: cot(J/2) ~ 2/J
  CHECK(std::abs(su2_spectral(0.1) - 2.0 / 0.1) < 0.02);
  CHECK(std::abs(su2_spectral(M_PI)) < 1e-16);  // closure point J = pi
  CHECK_THROWS_AS(su2_coupling(0.0), InvalidTime);
  CHECK_THROWS_AS(su2_coupling(-1.0), InvalidTime);
  CHECK_THROWS_AS(su2_spectral(0.0), DomainError);
  CHECK_THROWS_AS(su2_spectral(3.2), DomainError);
}

TEST_CASE("Kondo temperature") {
  CHECK(kondo_temperature(2.0, 1.0, KondoScheme::bethe) ==
        doctest::Approx(0.0018674427317079893).epsilon(1e-15));
  CHECK(kondo_temperature(0.0, 7.0, KondoScheme::bethe) == 7.0);
  // the two schemes agree exactly when f = 1/J
  for (const double j : {0.1, 0.25, 0.5, 1.0}) {
    for (const double lam : {1.0, 10.0}) {
      CHECK(kondo_temperature(1.0 / j, lam, KondoScheme::bethe) ==
            kondo_temperature(j, lam, KondoScheme::wilson));
    }
  }
  CHECK_THROWS_AS(kondo_temperature(0.0, 1.0, KondoScheme::wilson), DomainError);
  CHECK_THROWS_AS(kondo_temperature(1.0, 0.0, KondoScheme::bethe), DomainError);
}

TEST_CASE("shift property of spectral profiles") {
  SUBCASE("exactly representable linear data gives exact zeros") {
    const SpectralProfile lin = SpectralProfile::linear(0.5, 0.125);
    const double samples[] = {-0.75, 0.25, 1.0, 2.0};
    CHECK(check_shift_property(lin, 1.0, 0.5, samples) == 0.0);
  }
  SUBCASE("generic linear data is zero to rounding") {
    const SpectralProfile lin = SpectralProfile::linear(0.5, 0.1);
    const double samples[] = {-0.7, 0.25, 0.3, 0.5, 1.0};
    CHECK(check_shift_property(lin, 1.0, 0.5, samples) < 1e-15);

    const double a = -2.0 * 0.3 / M_PI;
    const SpectralProfile lin2 = SpectralProfile::linear(a, 0.0);
    CHECK(check_shift_property(lin2, 2.0, a * 2.0, samples) < 1e-15);
  }
  SUBCASE("quadratic profile violates it, worse at larger |z|") {
    const SpectralProfile quad =
        SpectralProfile::custom([](double z) { return z * z; }, "z^2");
    const double near[] = {0.5};
    const double far[] = {4.0};
    const double r_near = check_shift_property(quad, 1.0, 0.5, near);
    const double r_far = check_shift_property(quad, 1.0, 0.5, far);
    CHECK(r_near > 0.1);
    CHECK(r_far > r_near);
  }
}

TEST_CASE("SpectralParams validates and carries kappa = a L") {
  const SpectralParams params(-0.25, 0.1, 0.5, 2.0);
  CHECK(params.kappa() == -0.5);
  CHECK(params.profile()(2.0) == doctest::Approx(-0.4).epsilon(1e-15));
  CHECK_THROWS_AS(SpectralParams(0.1, 0.0, 0.0, 1.0), InvalidAnisotropy);
  CHECK_THROWS_AS(SpectralParams(0.1, 0.0, 2.0, 1.0), InvalidAnisotropy);
  CHECK_THROWS_AS(SpectralParams(0.1, 0.0, 0.5, 0.0), DomainError);
}

TEST_CASE("SpectralProfile kinds") {
  const SpectralProfile lin = SpectralProfile::linear(0.4, 0.2);
  CHECK(lin.is_linear());
  CHECK(lin.slope() == 0.4);
  CHECK(lin.offset() == 0.2);
  const SpectralProfile sine = SpectralProfile::sine_perturbed(0.4, 0.2, 0.1);
  CHECK(!sine.is_linear());
  CHECK_THROWS_AS(sine.slope(), DomainError);
  CHECK(sine(0.7) ==
        doctest::Approx(0.4 * 0.7 + 0.2 + 0.1 * std::sin(3.0 * 0.7)));
}
