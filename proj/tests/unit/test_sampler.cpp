#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/beta.hpp>

#include "gammatype/catalog.hpp"
#include "gammatype/error.hpp"
#include "gammatype/sampler.hpp"

using namespace gammatype;
using namespace gammatype::sampler;

namespace {

std::vector<double> draws(const std::function<double(RngStream&)>& f, std::size_t n,
                          std::uint64_t stream) {
  return sample_many(f, n, RngStream(99, stream));
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / v.size();
}

double se(const std::vector<double>& v) {
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / (v.size() - 1) / v.size());
}

}  // namespace

TEST(Rng, ReproducibleAndIndependentStreams) {
  RngStream a(7, 3), b(7, 3), c(7, 4);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a(), y = b(), z = c();
    EXPECT_EQ(x, y);
    differs = differs || x != z;
  }
  EXPECT_TRUE(differs);
  RngStream u(1, 1);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform();
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, 1.0);
  }
}

TEST(Rng, ParallelDrawsDoNotDependOnThreadCount) {
  auto f = [](RngStream& r) { return r.normal(); };
  const auto one = sample_many(f, 5000, RngStream(5, 0), 1);
  const auto four = sample_many(f, 5000, RngStream(5, 0), 4);
  EXPECT_EQ(one, four);
}

TEST(Rng, ReportsAreBitIdenticalForSameSeed) {
  const auto e = catalog::make_gamma(2.0);
  const auto r1 = verify_moments(e, {0.5, 1.0}, 4000, RngStream(11, 0));
  const auto r2 = verify_moments(e, {0.5, 1.0}, 4000, RngStream(11, 0));
  EXPECT_EQ(r1.to_json(), r2.to_json());
}

TEST(BrownianArea, TwoStepStubByHand) {
  const double h = 1.0 / std::sqrt(2.0);
  const double inc[] = {h, h};
  // Running max 0, h, 2h on grid 0, 1/2, 1: trapezoid gives (h/2 + 3h/2) / 2 = h.
  EXPECT_NEAR(brownian_sup_area_from_increments(inc), h, 1e-15);
  const double down[] = {-h, h};
  EXPECT_NEAR(brownian_sup_area_from_increments(down), 0.0, 1e-15);
  const double one[] = {1.0};
  EXPECT_THROW(brownian_sup_area_from_increments(one), DomainError);
  RngStream r;
  EXPECT_THROW(sample_brownian_sup_area(1, r), DomainError);
}

TEST(BrownianArea, ScalingIsExactPathwise) {
  for (std::uint64_t k = 0; k < 20; ++k) {
    RngStream a(3, k), b(3, k);
    const double one = sample_brownian_sup_area(512, a);
    const double four = sample_brownian_sup_area(512, b, 4.0);
    EXPECT_NEAR(four, 8.0 * one, 1e-12 * four);
  }
}

TEST(BrownianArea, MeanMatchesRep) {
  const std::size_t n = 1024;
  const auto r = verify_moments(catalog::make_brownian_sup_area(), {1.0}, 4000, RngStream(21, 0), n,
                                3.0 / std::sqrt(double(n)));
  EXPECT_TRUE(r.passed()) << r.to_json();
}

TEST(Stable, HalfIsInverseSquaredNormal) {
  const auto v = draws([](RngStream& r) { return sample_stable(0.5, r); }, 20000, 1);
  const double ks = ks_distance(v, [](double x) { return std::erfc(0.5 / std::sqrt(x)); });
  EXPECT_LT(ks, 0.02);
}

TEST(Stable, NegativeMoment) {
  const double alpha = 0.7;
  const auto v = draws([&](RngStream& r) { return 1.0 / sample_stable(alpha, r); }, 40000, 2);
  EXPECT_NEAR(mean(v), std::tgamma(1.0 + 1.0 / alpha), 4.0 * se(v));
}

TEST(Stable, NearOneConcentrates) {
  auto v = draws([](RngStream& r) { return sample_stable(0.99, r); }, 5001, 3);
  std::nth_element(v.begin(), v.begin() + 2500, v.end());
  EXPECT_GT(v[2500], 0.5);
  EXPECT_LT(v[2500], 2.0);
}

TEST(MittagLeffler, MeanMatchesMomentFormula) {
  const auto v = draws([](RngStream& r) { return sample_mittag_leffler(0.4, r); }, 40000, 4);
  EXPECT_NEAR(mean(v), 1.0 / std::tgamma(1.4), 4.0 * se(v));
}

TEST(Pillai, AlphaOneIsExponential) {
  const auto v = draws([](RngStream& r) { return sample_pillai(1.0, r); }, 20000, 5);
  EXPECT_LT(ks_distance(v, [](double x) { return -std::expm1(-x); }), 0.02);
}

TEST(Lvz, TailOfTransformMatchesLaplaceOfZ) {
  // V = (T / Z)^{1/alpha} has P(V > x) = E exp(-x^alpha Z).
  const double alpha = 0.5;
  const std::size_t n = 40000;
  const auto z = draws([&](RngStream& r) { return sample_mittag_leffler(0.5, r); }, n, 6);
  const auto v = draws(
      [&](RngStream& r) {
        const double t = r.exponential();
        return std::pow(t / sample_mittag_leffler(0.5, r), 1.0 / alpha);
      },
      n, 7);
  double worst = 0.0;
  for (double x : {0.05, 0.2, 0.5, 1.0, 2.0, 5.0, 20.0}) {
    double lap = 0.0;
    for (double zi : z) lap += std::exp(-std::pow(x, alpha) * zi);
    lap /= n;
    const double tail = double(std::count_if(v.begin(), v.end(), [&](double vi) { return vi > x; })) / n;
    worst = std::max(worst, std::fabs(tail - lap));
  }
  EXPECT_LT(worst, 0.015);
}

TEST(Urn, ClassicalPolyaIsUniform) {
  const auto v = draws(
      [](RngStream& r) {
        const auto [b, w] = sample_urn(1, 0, 0, 1, 1, 1, 2000, r);
        (void)b;
        return w / 2000.0;
      },
      1000, 8);
  EXPECT_NEAR(mean(v), 0.5, 4.0 * se(v) + 1e-3);
}

TEST(Urn, OnlyWhiteBallsGrowDeterministically) {
  RngStream r(1, 1);
  const auto [b, w] = sample_urn(1, 0, 0, 1, 0, 2, 100, r);
  EXPECT_EQ(b, 0.0);
  EXPECT_EQ(w, 102.0);
  EXPECT_THROW(sample_urn(1, 0, 0, 1, 0, 0, 10, r), DomainError);
}

TEST(Urn, TriangularMomentsMatchRep) {
  const auto e = catalog::make_urn_triangular(2, 1, 1, 1, 1);
  const auto r = verify_moments(e, {1.0, 2.0}, 400, RngStream(3, 3), 20000);
  EXPECT_TRUE(r.passed()) << r.to_json();
}

TEST(SampleRep, ExponentialRecognised) {
  const auto rep = catalog::make_exponential().rep;
  const auto v = draws([&](RngStream& r) { return *sample_rep(rep, r); }, 20000, 9);
  EXPECT_LT(ks_distance(v, [](double x) { return -std::expm1(-x); }), 0.02);
}

TEST(SampleRep, FisherFRecognised) {
  const auto rep = catalog::make_fisher_f(3, 5).rep;
  const auto v = draws([&](RngStream& r) { return *sample_rep(rep, r); }, 20000, 10);
  auto cdf = [](double x) { return boost::math::ibeta(1.5, 2.5, 3.0 * x / (3.0 * x + 5.0)); };
  EXPECT_LT(ks_distance(v, cdf), 0.02);
}

TEST(SampleRep, AreaIsNotRecognised) {
  RngStream r;
  EXPECT_FALSE(sample_rep(catalog::make_brownian_sup_area().rep, r));
}

TEST(Verify, DensityHistogramAgrees) {
  const auto r = verify_density(catalog::make_gamma(2.0), {0.5, 1.0, 2.0, 4.0}, 40000, RngStream(4, 0));
  EXPECT_TRUE(r.passed()) << r.to_json();
}

TEST(Verify, MomentsAcrossSamplers) {
  for (const char* name : {"beta", "chi", "fisher_f", "abs_t", "weibull", "stable", "pareto",
                           "frechet", "gumbel_mgf", "gamma_n_mgf", "levy_area_mgf",
                           "uniform_atom_mixture", "exp_over_uniform", "pillai_ml"}) {
    const auto e = catalog::make(name);
    const auto p = analysis::params(e.rep);
    const double s = std::min(0.5, 0.25 * p.rho_plus);
    const auto r = verify_moments(e, {s}, 20000, RngStream(8, 1));
    EXPECT_TRUE(r.passed()) << name << " " << r.to_json();
  }
}

TEST(DoubleLaplace, IdentityHolds) {
  const auto r = verify_double_laplace(std::sqrt(8.0) / 3.0, {1.0, 1000.0});
  EXPECT_TRUE(r.passed()) << r.to_json();
  EXPECT_NEAR(r.statistics[1].predicted * 1000.0, 1.0, 1e-3);
  EXPECT_NEAR(verify_double_laplace(1.0, {2.0}).statistics[0].empirical,
              verify_double_laplace(1.0, {2.0}).statistics[0].predicted, 1e-6);
}
