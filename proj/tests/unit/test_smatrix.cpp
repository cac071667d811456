#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ybrg/smatrix.hpp"

using namespace ybrg;

TEST_CASE("impurity_smatrix frozen entries at f=1, u=0.5") {
  // reference values from direct complex arithmetic:
  //   b = sinh(1)/sinh(1 + 0.5i), c = i sin(0.5)/sinh(1 + 0.5i)
  const TwoSiteOperator s = impurity_smatrix(SMatrixArgs(1.0, 0.5));
  const Complex b = s(1, 1);
  const Complex c = s(1, 2);
  CHECK(std::abs(b - Complex(0.75236964144969454, -0.53968561233382306)) < 1e-15);
  CHECK(std::abs(c - Complex(0.22016576120710182, 0.30693061114333681)) < 1e-15);
  CHECK(std::abs(std::norm(b) + std::norm(c) - 1.0) < 1e-15);
  // block structure
  CHECK(s(0, 0) == Complex(1.0, 0.0));
  CHECK(s(3, 3) == Complex(1.0, 0.0));
  CHECK(s(2, 2) == b);
  CHECK(s(2, 1) == c);
  CHECK(s(0, 1) == Complex(0.0, 0.0));
}

TEST_CASE("impurity_smatrix degenerates to the permutation at f=0") {
  const TwoSiteOperator s = impurity_smatrix(SMatrixArgs(0.0, 0.5));
  CHECK((s - testing::swap_two_site()).norm() == 0.0);
}

TEST_CASE("impurity_smatrix is the identity at u=0") {
  const TwoSiteOperator s = impurity_smatrix(SMatrixArgs(1.0, 0.0));
  CHECK((s - TwoSiteOperator::Identity()).norm() == 0.0);
}

TEST_CASE("unitarity of the mixing block over a parameter grid") {
  for (int i = 0; i <= 40; ++i) {
    const double f = -5.0 + 0.25 * i;
    for (int k = 0; k < 30; ++k) {
      const double u = 0.03 + (3.10 - 0.03) * k / 29.0;
      const TwoSiteOperator s = impurity_smatrix(SMatrixArgs(f, u));
      const Complex b = s(1, 1), c = s(1, 2);
      CHECK(std::abs(std::norm(b) + std::norm(c) - 1.0) < 1e-14);
      CHECK(std::abs(b * std::conj(c) + c * std::conj(b)) < 1e-14);
    }
  }
}

TEST_CASE("inverse property S(-x) S(x) = I") {
  const ChainSpec chain(1);
  CHECK(inverse_property_residual(0.0, 0.9, chain, 1, 0) == 0.0);  // P^2 = I
  CHECK(inverse_property_residual(0.7, 0.4, chain, 1, 0) < 1e-13);
  CHECK(inverse_property_residual(1.3, 1.2, chain, 1, 0) < 1e-13);

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> xd(-3.0, 3.0), ud(0.05, 1.5);
  for (int k = 0; k < 100; ++k) {
    CHECK(inverse_property_residual(xd(rng), ud(rng), chain, 1, 0) < 1e-13);
  }
}

TEST_CASE("particle_smatrix has the difference property") {
  // equal arguments give the permutation
  const TwoSiteOperator p = particle_smatrix(0.8, 0.8, 0.5);
  CHECK((p - testing::swap_two_site()).norm() == 0.0);
  // only the difference enters
  CHECK((particle_smatrix(2.0, 1.0, 0.5) -
         impurity_smatrix(SMatrixArgs(1.0, 0.5))).norm() == 0.0);
  // translation invariance
  CHECK((particle_smatrix(2.0 + 0.37, 1.0 + 0.37, 0.5) -
         particle_smatrix(2.0, 1.0, 0.5)).norm() < 1e-15);
}

TEST_CASE("Yang-Baxter with the impurity") {
  const SpectralProfile lin = SpectralProfile::linear(0.5, 0.1);
  SUBCASE("identity at u=0") {
    CHECK(ybe_impurity_residual(0.3, 1.1, lin, 0.0) == 0.0);
  }
  SUBCASE("linear profile") {
    CHECK(ybe_impurity_residual(0.3, 1.1, lin, 0.6) < 1e-12);
  }
  SUBCASE("nonlinear profile works as well: only the f-values enter") {
    const SpectralProfile quad =
        SpectralProfile::custom([](double z) { return z * z; }, "z^2");
    CHECK(ybe_impurity_residual(0.3, 1.1, quad, 0.6) < 1e-12);
  }
}

TEST_CASE("Yang-Baxter among particles") {
  // spectral profile mapping z to itself lets us feed f-values directly
  const SpectralProfile ident =
      SpectralProfile::custom([](double z) { return z; }, "identity");
  SUBCASE("equal f-values: permutation pattern on both sides") {
    CHECK(ybe_particle_residual(0.4, 0.4, 0.4, ident, 0.6) < 1e-15);
  }
  SUBCASE("generic f-values") {
    CHECK(ybe_particle_residual(0.2, 0.9, 1.7, ident, 0.6) < 1e-12);
  }
  SUBCASE("non-difference argument breaks the identity") {
    const ChainSpec chain(3);
    const double fi = 0.2, fj = 0.9, fk = 1.7, u = 0.6;
    const ChainOperator s_ij =
        embed_two_site(particle_smatrix(fi, fj, u), 1, 2, chain);
    const ChainOperator s_ik =  // tampered middle factor: f_i - 2 f_k
        embed_two_site(particle_smatrix(fi, 2.0 * fk, u), 1, 3, chain);
    const ChainOperator s_jk =
        embed_two_site(particle_smatrix(fj, fk, u), 2, 3, chain);
    CHECK(residual(compose({s_ij, s_ik, s_jk}), compose({s_jk, s_ik, s_ij})) >
          1e-3);
  }
}

TEST_CASE("distance from identity is controlled by |c| as u -> 0") {
  double prev = 1.0;
  for (const double u : {0.5, 0.05, 0.005}) {
    const TwoSiteOperator s = impurity_smatrix(SMatrixArgs(0.7, u));
    const double dist =
        (s - TwoSiteOperator::Identity()).cwiseAbs().maxCoeff();
    const double c_mag = std::abs(s(1, 2));
    CHECK(dist <= 2.0 * c_mag);
    CHECK(c_mag < prev);
    prev = c_mag;
  }
  // |c| ~ sin(u)/sinh(f): a tenfold u reduction shrinks it about tenfold
  const double c1 = std::abs(impurity_smatrix(SMatrixArgs(0.7, 0.05))(1, 2));
  const double c2 = std::abs(impurity_smatrix(SMatrixArgs(0.7, 0.005))(1, 2));
  CHECK(c1 / c2 == doctest::Approx(10.0).epsilon(0.05));
}

TEST_CASE("singularity guard and argument validation") {
  CHECK_THROWS_AS(SMatrixArgs(0.0, 0.0), SingularSMatrix);
  CHECK_THROWS_AS(SMatrixArgs(1e-13, 1e-13), SingularSMatrix);
  CHECK_THROWS_AS(SMatrixArgs(1.0, M_PI), InvalidAnisotropy);
  CHECK_THROWS_AS(SMatrixArgs(1.0, -3.5), InvalidAnisotropy);
  const double nan = std::nan("");
  CHECK_THROWS_AS(SMatrixArgs(nan, 0.5), DomainError);
  CHECK_NOTHROW(SMatrixArgs(0.0, 0.5));   // f = 0 is fine away from u = 0
  CHECK_NOTHROW(SMatrixArgs(1.0, 0.0));   // u = 0 is fine away from f = 0
}
