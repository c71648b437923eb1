#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gammatype/analysis.hpp"
#include "gammatype/catalog.hpp"
#include "gammatype/rep.hpp"

using namespace gammatype;

TEST(Spectrum, UniformHasSinglePole) {
  const auto sp = analysis::spectrum(catalog::make_uniform().rep, -10.0, 10.0);
  ASSERT_EQ(sp.size(), 1u);
  EXPECT_DOUBLE_EQ(sp[0].location, -1.0);
  EXPECT_EQ(sp[0].order, 1);
}

TEST(Spectrum, SortedAndMergedWithOrders) {
  const auto gamma_n = catalog::make_gamma_n_mgf(3).rep;  // (1 - s)^{-3}
  const auto sp = analysis::spectrum(gamma_n, -5.0, 5.0);
  ASSERT_EQ(sp.size(), 1u);
  EXPECT_DOUBLE_EQ(sp[0].location, 1.0);
  EXPECT_EQ(sp[0].order, 3);
  const auto area = analysis::spectrum(catalog::make_brownian_sup_area().rep, -6.0, 0.0);
  for (std::size_t i = 1; i < area.size(); ++i) EXPECT_LT(area[i - 1].location, area[i].location);
}

TEST(Spectrum, NuMatchesSpectrum) {
  const auto rep = catalog::make_hashing_M().rep;
  for (const auto& e : analysis::spectrum(rep, -8.0, 8.0))
    EXPECT_EQ(analysis::nu(rep, e.location), e.order) << e.location;
  EXPECT_EQ(analysis::nu(rep, 0.0), 0);
}

TEST(RhoBounds, WindowAndCertificate) {
  EXPECT_EQ(analysis::rho_bounds(catalog::make_exponential().rep), std::make_pair(-1.0, kInf));
  const auto [lo, hi] = analysis::rho_bounds(catalog::make_levy_area_mgf().rep);
  EXPECT_NEAR(lo, -std::numbers::pi / 2, 1e-14);
  EXPECT_NEAR(hi, std::numbers::pi / 2, 1e-14);
  // Poles beyond the scan windows are still found.
  const auto far = GammaTypeRep::normalized(0.0, {{1e-3, 20.0}}, {});
  EXPECT_NEAR(analysis::rho_bounds(far).first, -2e4, 1e-6);
}

TEST(Params, InvariantUnderMultiplicationRewrite) {
  const auto rep = catalog::make_hashing_M().rep;
  const auto p = analysis::params(rep);
  for (int m : {2, 3, 5}) {
    const auto rw = rewrite_multiplication(rep, FactorSide::numerator, 1, m);
    const auto q = analysis::params(rw);
    EXPECT_NEAR(q.gamma, p.gamma, 1e-12);
    EXPECT_NEAR(q.gamma_prime, p.gamma_prime, 1e-12);
    EXPECT_NEAR(q.delta, p.delta, 1e-12);
    EXPECT_NEAR(q.kappa, p.kappa, 1e-12);
    EXPECT_NEAR(q.C1, p.C1, 1e-12 * p.C1);
  }
}

TEST(Params, TransformationRules) {
  const auto x = catalog::make_gamma(2.0).rep;
  const auto p = analysis::params(x);
  const auto pw = analysis::params(power(x, 0.5));
  EXPECT_NEAR(pw.gamma, 0.5 * p.gamma, 1e-14);
  EXPECT_NEAR(pw.delta, p.delta, 1e-14);
  const auto pr = analysis::params(reciprocal(x));
  EXPECT_NEAR(pr.gamma_prime, -p.gamma_prime, 1e-14);
  EXPECT_NEAR(pr.kappa, -p.kappa, 1e-14);
  const auto ps = analysis::params(scale(x, 4.0));
  EXPECT_NEAR(ps.kappa, p.kappa + std::log(4.0), 1e-14);
}

TEST(Laurent, SimplePoleResidues) {
  const auto e = catalog::make_exponential().rep;  // Gamma(s+1): residue (-1)^n / n!
  for (int n = 0; n < 6; ++n) {
    const auto L = analysis::laurent(e, -1.0 - n);
    EXPECT_NEAR(L.coefficient(1), std::pow(-1.0, n) / std::tgamma(n + 1.0), 1e-13);
  }
}

TEST(Laurent, ContourAgreesWithClosedForm) {
  const auto rep = catalog::make_hashing_M().rep;
  for (double s0 : {-1.5, -3.0, 1.5, 3.0}) {
    const auto a = analysis::laurent(rep, s0);
    const auto b = analysis::laurent_contour(rep, s0);
    EXPECT_NEAR(a.coefficient(1), b.coefficient(1), 1e-9 * std::fabs(a.coefficient(1))) << s0;
  }
}

TEST(Laurent, TriplePole) {
  // (1 - s)^{-3} = -(s - 1)^{-3}
  const auto L = analysis::laurent(catalog::make_gamma_n_mgf(3).rep, 1.0);
  ASSERT_EQ(L.coefficients.size(), 3u);
  EXPECT_NEAR(L.coefficient(3), -1.0, 1e-10);
  EXPECT_NEAR(L.coefficient(2), 0.0, 1e-10);
  EXPECT_NEAR(L.coefficient(1), 0.0, 1e-10);
}

TEST(Asymptotics, RealAxisAndImaginaryAxis) {
  const auto rep = catalog::make_brownian_sup_area().rep;
  const double s = 200.0;
  EXPECT_NEAR(evaluate(rep, s) / analysis::real_axis_asymptotic(rep, s), 1.0, 2e-3);
  const double t = 60.0;
  const double mag = std::abs(evaluate(rep, Complex(0.0, t)));
  EXPECT_NEAR(mag / analysis::imag_axis_asymptotic(rep, t), 1.0, 1e-2);
  const double sigma = 0.7;
  EXPECT_NEAR(std::abs(evaluate(rep, Complex(sigma, t))) / analysis::strip_asymptotic(rep, sigma, t),
              1.0, 2e-2);
}

TEST(SafeAbscissa, AvoidsLattice) {
  const auto rep = catalog::make_exponential().rep;
  const auto a = analysis::safe_abscissa(rep, -1.9);
  EXPECT_GT(a.margin, 0.99);
  EXPECT_NEAR(a.point, -1.5, 1e-3);
  EXPECT_NEAR(analysis::sine_margin(rep, -3.0), 0.0, 1e-12);
}

TEST(PoleDensity, CountsPoles) {
  const auto rep = catalog::make_exponential().rep;
  EXPECT_EQ(analysis::pole_density(rep, -10.5), 10);
  EXPECT_EQ(analysis::pole_density(rep, 5.0), 0);
}

TEST(Misc, PsiArctanAndSlopeSum) {
  EXPECT_NEAR(analysis::psi_arctan(1.0, 1.0), std::numbers::pi / 4 - 0.5 * std::log(2.0), 1e-14);
  EXPECT_DOUBLE_EQ(analysis::positive_slope_sum(catalog::make_hashing_M().rep), 2.0 / 3.0);
}
