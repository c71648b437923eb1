#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gammatype/analysis.hpp"
#include "gammatype/catalog.hpp"
#include "gammatype/density.hpp"
#include "gammatype/error.hpp"
#include "gammatype/quadrature.hpp"

using namespace gammatype;

namespace {

bool same(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <= tol * std::max(1.0, std::fabs(b));
}

}  // namespace

TEST(Catalog, EveryEntryMatchesItsExpectedParams) {
  for (const auto& name : catalog::names()) {
    const auto e = catalog::make(name);
    const auto p = analysis::params(e.rep);
    EXPECT_TRUE(same(p.gamma, e.expected.gamma, 1e-12)) << name;
    EXPECT_TRUE(same(p.gamma_prime, e.expected.gamma_prime, 1e-12)) << name;
    EXPECT_TRUE(same(p.delta, e.expected.delta, 1e-12)) << name;
    EXPECT_TRUE(same(p.kappa, e.expected.kappa, 1e-12)) << name;
    EXPECT_TRUE(same(p.C1, e.expected.C1, 1e-12)) << name;
    EXPECT_TRUE(same(p.rho_minus, e.expected.rho_minus, 1e-12)) << name;
    EXPECT_TRUE(same(p.rho_plus, e.expected.rho_plus, 1e-12)) << name;
    EXPECT_NEAR(evaluate(e.rep, 0.0), 1.0, 1e-13) << name;
  }
}

TEST(Catalog, ParametrizedEntriesMatchExpectedParams) {
  const catalog::CatalogEntry entries[] = {
      catalog::make_gamma(0.3),          catalog::make_beta(4, 0.5),
      catalog::make_abs_t(7),            catalog::make_stable(0.8),
      catalog::make_pillai_ml(0.3),      catalog::make_urn_triangular(5, 2, 3, 0, 1),
      catalog::make_urn_triangular(5, 2, 3, 2, 1), catalog::make_urn_diagonal(3, 1, 2, 0.5),
      catalog::make_urn_diagonal(1, 3, 2, 0.5),    catalog::make_gamma_n_mgf(4)};
  for (const auto& e : entries) {
    const auto p = analysis::params(e.rep);
    EXPECT_TRUE(same(p.delta, e.expected.delta, 1e-12)) << e.name;
    EXPECT_TRUE(same(p.kappa, e.expected.kappa, 1e-12)) << e.name;
    EXPECT_TRUE(same(p.C1, e.expected.C1, 1e-12)) << e.name;
    EXPECT_TRUE(same(p.rho_minus, e.expected.rho_minus, 1e-12)) << e.name;
    EXPECT_TRUE(same(p.rho_plus, e.expected.rho_plus, 1e-12)) << e.name;
  }
}

TEST(Catalog, OraclesIntegrateToMass) {
  for (const char* name : {"gamma", "beta", "chi", "fisher_f", "abs_t", "weibull", "frechet",
                           "shifted_pareto", "brownian_sup_area", "exp_over_uniform",
                           "levy_area_mgf", "stable"}) {
    const auto e = catalog::make(name);
    auto f = [&](double x) { return *e.oracle(x); };
    // Split at 1 for the bounded and the heavy-tailed cases.
    const double mass = quadrature::adaptive(f, 0.0, 1.0, 1e-10).value +
                        quadrature::semi_infinite(f, 1.0, 1e-10).value;
    EXPECT_NEAR(mass, 1.0, 1e-7) << name;
  }
}

TEST(Catalog, OracleMeansMatchRep) {
  for (const char* name : {"gamma", "chi", "weibull", "brownian_sup_area", "frechet"}) {
    const auto e = catalog::make(name);
    auto f = [&](double x) { return x * *e.oracle(x); };
    const double mean = quadrature::adaptive(f, 0.0, 1.0, 1e-10).value +
                        quadrature::semi_infinite(f, 1.0, 1e-10).value;
    EXPECT_NEAR(mean, evaluate(e.rep, 1.0), 1e-7) << name;
  }
}

TEST(Catalog, SeriesOraclesDeclineInsteadOfCancelling) {
  const auto ml = catalog::make_mittag_leffler(0.5);
  const auto urn = catalog::make_urn_triangular(2, 1, 1, 1, 1);
  for (double x : {0.5, 2.0, 5.0}) {
    const double ref = std::exp(-x * x / 4) / std::sqrt(std::numbers::pi);
    EXPECT_NEAR(*ml.oracle(x), ref, 1e-12) << x;
    EXPECT_NEAR(*urn.oracle(x), ref, 1e-12) << x;
  }
  EXPECT_FALSE(ml.oracle(20.0));
  const auto diag = catalog::make("urn_diagonal");
  for (double x : {0.5, 2.0, 6.0})
    EXPECT_NEAR(*diag.oracle(x), density::density_mellin(diag.rep, x), 1e-9) << x;
  EXPECT_FALSE(diag.oracle(40.0));
}

TEST(Catalog, HashingOracleMatchesMellin) {
  const auto rep = catalog::make_hashing_M().rep;
  for (double x : {0.1, 0.7, 1.5, 3.0})
    EXPECT_NEAR(*catalog::hashing_M_density(x), density::density_mellin(rep, x), 1e-10) << x;
  EXPECT_FALSE(catalog::hashing_M_density(5.0));
}

TEST(Catalog, PrintedFormsShareParams) {
  for (const auto& forms : {catalog::brownian_sup_area_forms(), catalog::hashing_M_forms()}) {
    const auto p0 = analysis::params(forms[0]);
    for (const auto& f : forms) {
      const auto p = analysis::params(f);
      EXPECT_NEAR(p.gamma, p0.gamma, 1e-12);
      EXPECT_NEAR(p.delta, p0.delta, 1e-12);
      EXPECT_NEAR(p.kappa, p0.kappa, 1e-12);
      EXPECT_NEAR(p.C1, p0.C1, 1e-12 * p0.C1);
      EXPECT_NEAR(evaluate(f, 1.0), evaluate(forms[0], 1.0), 1e-12);
    }
  }
}

TEST(Catalog, HashingRepIsLvzTransformOfArea) {
  const auto direct = catalog::hashing_M_forms()[0];
  const auto lvz = catalog::make_hashing_M().rep;
  for (double s : {-1.0, 0.4, 1.0, 1.3}) EXPECT_NEAR(evaluate(lvz, s), evaluate(direct, s), 1e-12);
}

TEST(Catalog, DegenerateAlphaOne) {
  EXPECT_EQ(catalog::make_stable(1.0).rep.numerator().size(), 0u);
  EXPECT_NEAR(evaluate(catalog::make_pillai_ml(1.0).rep, 2.0), 2.0, 1e-13);
  EXPECT_THROW(catalog::make_stable(1.5), DomainError);
}

TEST(Catalog, StableMomentsOfNegativeOrder) {
  // E S^{-1} = Gamma(1 + 1/alpha) / Gamma(2)
  const double alpha = 0.7;
  EXPECT_NEAR(evaluate(catalog::make_stable(alpha).rep, -1.0), std::tgamma(1.0 + 1.0 / alpha), 1e-12);
  // E M^n = n! / Gamma(n alpha + 1)
  EXPECT_NEAR(evaluate(catalog::make_mittag_leffler(0.4).rep, 2.0), 2.0 / std::tgamma(1.8), 1e-12);
}

TEST(Catalog, Registry) {
  const auto n = catalog::names();
  EXPECT_GE(n.size(), 25u);
  EXPECT_THROW(catalog::make("not_an_entry"), DomainError);
  EXPECT_THROW(catalog::make("gamma", {1.0, 2.0}), DomainError);
  EXPECT_NEAR(catalog::make("gamma", {4.0}).expected.rho_minus, -4.0, 0.0);
  EXPECT_THROW(catalog::make_urn_triangular(2, 1, 2, 1, 1), DomainError);
}

TEST(Catalog, AbsTMomentFormula) {
  // E|t_n|^s = n^{s/2} Gamma((s+1)/2) Gamma((n-s)/2) / (sqrt(pi) Gamma(n/2))
  const double n = 5.0, s = 1.3;
  const double ref = std::pow(n, s / 2) * std::tgamma((s + 1) / 2) * std::tgamma((n - s) / 2) /
                     (std::sqrt(std::numbers::pi) * std::tgamma(n / 2));
  EXPECT_NEAR(evaluate(catalog::make_abs_t(n).rep, s), ref, 1e-12);
}
