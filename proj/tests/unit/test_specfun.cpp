#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gammatype/error.hpp"
#include "gammatype/specfun.hpp"

using namespace gammatype;
using specfun::log_gamma;

namespace {

constexpr double kPi = std::numbers::pi;

double mismatch(Complex lhs, Complex rhs) { return std::abs(std::exp(lhs - rhs) - 1.0); }

std::vector<Complex> sample_points(unsigned seed, int n) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> re(-9.0, 12.0), im(-10.0, 10.0);
  std::vector<Complex> out;
  while (static_cast<int>(out.size()) < n) {
    const Complex z(re(gen), im(gen));
    if (std::fabs(z.imag()) > 0.02) out.push_back(z);
  }
  return out;
}

}  // namespace

TEST(LogGamma, RealValuesMatchStdLgamma) {
  for (double x : {0.1, 0.5, 1.0, 1.5, 2.5, 7.3, 30.0, 171.5, -0.5, -2.5, -7.25}) {
    EXPECT_NEAR(log_gamma(x), std::lgamma(x), 1e-13 * std::max(1.0, std::fabs(std::lgamma(x))))
        << x;
  }
}

TEST(LogGamma, ComplexAgreesWithRealOnPositiveAxis) {
  for (double x : {0.3, 1.0, 4.5, 20.0}) {
    const Complex v = log_gamma(Complex(x, 0.0));
    EXPECT_NEAR(v.real(), std::lgamma(x), 1e-13);
    EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  }
}

TEST(LogGamma, KnownValues) {
  EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(kPi), 1e-15);
  // |Gamma(i)|^2 = pi / sinh(pi)
  EXPECT_NEAR(2.0 * log_gamma(Complex(0.0, 1.0)).real(), std::log(kPi / std::sinh(kPi)), 1e-14);
  // |Gamma(1/2 + i t)|^2 = pi / cosh(pi t)
  EXPECT_NEAR(2.0 * log_gamma(Complex(0.5, 3.0)).real(), std::log(kPi / std::cosh(3.0 * kPi)),
              1e-13);
}

TEST(LogGamma, ConjugateSymmetry) {
  for (const Complex& z : sample_points(1, 50)) {
    const Complex a = log_gamma(std::conj(z));
    const Complex b = std::conj(log_gamma(z));
    EXPECT_NEAR(a.real(), b.real(), 1e-12 * std::max(1.0, std::abs(b)));
    EXPECT_NEAR(a.imag(), b.imag(), 1e-12 * std::max(1.0, std::abs(b)));
  }
}

TEST(LogGamma, BranchIsContinuousAlongHorizontalLine) {
  const double y = 0.7;
  Complex prev = log_gamma(Complex(-12.0, y));
  for (int k = 1; k <= 2400; ++k) {
    const Complex cur = log_gamma(Complex(-12.0 + 0.01 * k, y));
    EXPECT_LT(std::fabs(cur.imag() - prev.imag()), 0.2) << k;
    prev = cur;
  }
}

TEST(LogGamma, PolesThrow) {
  EXPECT_THROW(log_gamma(Complex(0.0, 0.0)), PoleError);
  EXPECT_THROW(log_gamma(Complex(-3.0, 0.0)), PoleError);
  EXPECT_THROW(log_gamma(-2.0), PoleError);
}

TEST(GammaIdentities, FunctionalEquation) {
  for (const Complex& z : sample_points(2, 200))
    EXPECT_LT(mismatch(log_gamma(z + 1.0), log_gamma(z) + std::log(z)), 1e-11) << z;
}

TEST(GammaIdentities, Reflection) {
  for (const Complex& z : sample_points(3, 200))
    EXPECT_LT(mismatch(log_gamma(z) + log_gamma(1.0 - z), std::log(kPi / std::sin(kPi * z))), 1e-11)
        << z;
}

TEST(GammaIdentities, Duplication) {
  for (const Complex& z : sample_points(4, 200)) {
    const Complex rhs = (1.0 - 2.0 * z) * std::log(2.0) + 0.5 * std::log(kPi) + log_gamma(2.0 * z);
    EXPECT_LT(mismatch(log_gamma(z) + log_gamma(z + 0.5), rhs), 1e-11) << z;
  }
}

TEST(GammaIdentities, Triplication) {
  for (const Complex& z : sample_points(5, 200)) {
    const Complex lhs = log_gamma(z) + log_gamma(z + 1.0 / 3.0) + log_gamma(z + 2.0 / 3.0);
    const Complex rhs = std::log(2.0 * kPi) + (0.5 - 3.0 * z) * std::log(3.0) + log_gamma(3.0 * z);
    EXPECT_LT(mismatch(lhs, rhs), 1e-11) << z;
  }
}

TEST(GammaIdentities, GaussMultiplication) {
  for (int m = 4; m <= 7; ++m) {
    for (const Complex& z : sample_points(6 + m, 60)) {
      Complex lhs = 0.0;
      for (int j = 0; j < m; ++j) lhs += log_gamma(z + double(j) / m);
      const Complex rhs = 0.5 * (m - 1) * std::log(2.0 * kPi) +
                          (0.5 - double(m) * z) * std::log(double(m)) + log_gamma(double(m) * z);
      EXPECT_LT(mismatch(lhs, rhs), 1e-11) << m << " " << z;
    }
  }
}

TEST(Gamma, SignAndReciprocal) {
  EXPECT_EQ(specfun::gamma_sign(2.5), 1);
  EXPECT_EQ(specfun::gamma_sign(-0.5), -1);
  EXPECT_EQ(specfun::gamma_sign(-1.5), 1);
  EXPECT_EQ(specfun::reciprocal_gamma(-3.0), 0.0);
  EXPECT_NEAR(specfun::gamma(5.0), 24.0, 1e-12);
  EXPECT_TRUE(specfun::is_nonpositive_integer(-4.0));
  EXPECT_FALSE(specfun::is_nonpositive_integer(-4.1));
}

TEST(HypSeries, ElementaryCases) {
  // 0F0(;;x) = e^x, 1F0(a;;x) = (1 - x)^{-a}
  EXPECT_NEAR(specfun::hyp_series({{}, {}, 1.5}).value, std::exp(1.5), 1e-14);
  EXPECT_NEAR(specfun::hyp_series({{2.5}, {}, 0.3}).value, std::pow(0.7, -2.5), 1e-13);
  EXPECT_THROW(specfun::hyp_series({{2.5}, {}, 1.3}), DomainError);
}

TEST(HypSeries, DivergentSeriesIsFlagged) {
  const auto r = specfun::hyp_series({{1.0, 1.0}, {}, -0.1}, 8);
  EXPECT_EQ(r.regime, SeriesRegime::asymptotic_truncated);
  EXPECT_EQ(r.terms_used, 8u);
}

TEST(Hyp1f1, KnownValues) {
  EXPECT_NEAR(specfun::hyp1f1(1.0, 1.0, 2.0), std::exp(2.0), 1e-13);
  EXPECT_NEAR(specfun::hyp1f1(1.0, 2.0, 3.0), std::expm1(3.0) / 3.0, 1e-13);
  // Kummer transformation
  EXPECT_NEAR(specfun::hyp1f1(0.3, 1.7, -4.0), std::exp(-4.0) * specfun::hyp1f1(1.4, 1.7, 4.0),
              1e-13);
}

TEST(KummerU, ReducesToIncompleteGamma) {
  // U(1, 1 + a, x) = x^{-a} e^x Gamma(a, x); a = 1/2 gives sqrt(pi) e^x erfc(sqrt x) / sqrt x.
  for (double x : {0.2, 1.0, 3.0, 10.0, 40.0}) {
    const double ref = std::sqrt(kPi) * std::exp(x) * std::erfc(std::sqrt(x)) / std::sqrt(x);
    EXPECT_NEAR(specfun::kummer_U(1.0, 1.5, x), ref, 1e-11 * ref) << x;
  }
}

TEST(KummerU, WronskianLikeRecurrence) {
  // U(a-1,b,x) + (b - 2a - x) U(a,b,x) + a(a - b + 1) U(a+1,b,x) = 0
  for (double x : {0.7, 2.5, 6.0, 30.0}) {
    const double a = 0.35, b = 0.6;
    const double lhs = specfun::kummer_U(a - 1, b, x) + (b - 2 * a - x) * specfun::kummer_U(a, b, x) +
                       a * (a - b + 1) * specfun::kummer_U(a + 1, b, x);
    EXPECT_NEAR(lhs, 0.0, 1e-10 * std::fabs(specfun::kummer_U(a - 1, b, x))) << x;
  }
}

TEST(KummerU, IntegerBUnsupported) {
  EXPECT_THROW(specfun::kummer_U(0.5, 2.0, 1.0), UnsupportedParameter);
  EXPECT_THROW(specfun::kummer_U(0.5, 0.5, -1.0), DomainError);
}
