#include "gammatype/catalog.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "gammatype/error.hpp"
#include "gammatype/specfun.hpp"

namespace gammatype::catalog {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2Pi = 2.5066282746310005024157652848110;

using specfun::gamma;
using specfun::log_gamma;

InvariantParams expected(double g, double gp, double delta, double kappa, double c1,
                         double rho_minus, double rho_plus) {
  return {g, gp, delta, kappa, c1, rho_minus, rho_plus};
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

// Sum of a power series sum_n t_n where log|t_n| and sign(t_n) are supplied.
// Stops once terms are negligible after they start decreasing. Empty when
// cancellation between terms costs more than 8 digits.
template <typename LogTerm>
std::optional<double> sum_log_series(LogTerm&& log_term, int max_terms = 4000) {
  double sum = 0.0;
  double prev = -kInf;
  double peak = -kInf;
  int small = 0;
  for (int n = 0; n < max_terms; ++n) {
    int sign = 1;
    const double lt = log_term(n, sign);
    if (std::isinf(lt) && lt < 0.0) continue;
    peak = std::max(peak, lt);
    const double t = sign * std::exp(lt);
    sum += t;
    small = (lt < prev && std::fabs(t) < 1e-17 * std::fabs(sum)) ? small + 1 : 0;
    if (small == 4) break;
    prev = lt;
  }
  if (!std::isfinite(sum) || peak > std::log(std::fabs(sum)) + 8.0 * std::numbers::ln10)
    return std::nullopt;
  return sum;
}

CatalogEntry entry(std::string name, std::vector<double> parameters, GammaTypeRep rep,
                   InvariantParams exp, std::string source) {
  CatalogEntry e;
  e.name = std::move(name);
  e.parameters = std::move(parameters);
  e.rep = std::move(rep);
  e.expected = exp;
  e.source = std::move(source);
  return e;
}

double log_variable_to_x(double (*f_y)(double), double x) { return f_y(std::log(x)) / x; }

}  // namespace

double brownian_sup_area_density(double x) {
  if (!(x > 0.0)) return 0.0;
  const double z = 1.5 * x * x;
  if (z > 800.0) return 0.0;
  return std::pow(2.0, 7.0 / 6.0) / gamma(2.0 / 3.0) * std::exp(-z) *
         specfun::kummer_U(-1.0 / 6.0, 2.0 / 3.0, z);
}

std::optional<double> hashing_M_density(double x) {
  if (!(x > 0.0)) return 0.0;
  if (x > 4.0) return std::nullopt;  // cancellation between the two terms
  const double z = x * x * x / 6.0;
  const double f22 = specfun::hyp_series({{4.0 / 3.0, 1.0}, {7.0 / 6.0, 0.5}, z}, 5000).value;
  const double f11 = specfun::hyp1f1(11.0 / 6.0, 5.0 / 3.0, z);
  return std::sqrt(2.0 / kPi) * std::sqrt(x) * f22 - 0.625 * x * x * f11;
}

std::optional<double> stable_density(double alpha, double x) {
  if (!(x > 0.0)) return 0.0;
  if (alpha == 0.5) return std::exp(-0.25 / x) / (2.0 * std::sqrt(kPi) * std::pow(x, 1.5));
  const double lx = std::log(x);
  return sum_log_series([&](int k, int& sign) {
    const int n = k + 1;
    const double s = std::sin(kPi * n * alpha);
    if (std::fabs(s) < 1e-13) return -kInf;
    sign = ((n + 1) % 2 == 0 ? 1 : -1) * (s > 0.0 ? 1 : -1);
    return log_gamma(n * alpha + 1.0) + std::log(std::fabs(s)) - std::log(kPi) -
           log_gamma(n + 1.0) - (n * alpha + 1.0) * lx;
  });
}

std::optional<double> mittag_leffler_density(double alpha, double x) {
  if (!(x > 0.0)) return 0.0;
  const double lx = std::log(x);
  return sum_log_series([&](int m, int& sign) {
    const double s = std::sin(kPi * alpha * (m + 1));
    if (std::fabs(s) < 1e-13) return -kInf;
    sign = (m % 2 == 0 ? 1 : -1) * (s > 0.0 ? 1 : -1);
    return log_gamma(m * alpha + alpha) + std::log(std::fabs(s)) - log_gamma(m + 1.0) -
           std::log(kPi) + m * lx;
  });
}

CatalogEntry make_gamma(double alpha) {
  require(alpha > 0.0, "gamma: alpha must be positive");
  auto e = entry("gamma", {alpha}, GammaTypeRep::normalized(0.0, {{1.0, alpha}}, {}),
                 expected(1, 1, alpha - 0.5, 0, kSqrt2Pi / gamma(alpha), -alpha, kInf),
                 "Gamma(alpha) variable; E X^s = Gamma(s + alpha) / Gamma(alpha)");
  e.oracle = [alpha](double x) -> std::optional<double> {
    if (!(x > 0.0)) return 0.0;
    return std::exp((alpha - 1.0) * std::log(x) - x - log_gamma(alpha));
  };
  e.sampler = {"gamma", {alpha}};
  return e;
}

CatalogEntry make_exponential(double mu) {
  require(mu > 0.0, "exponential: mu must be positive");
  auto e = entry("exponential", {mu}, GammaTypeRep::normalized(std::log(mu), {{1.0, 1.0}}, {}),
                 expected(1, 1, 0.5, std::log(mu), kSqrt2Pi, -1, kInf),
                 "exponential variable with mean mu; E X^s = Gamma(s + 1) mu^s");
  e.oracle = [mu](double x) -> std::optional<double> {
    if (!(x > 0.0)) return 0.0;
    return std::exp(-x / mu) / mu;
  };
  e.sampler = {"gamma_power", {1.0, 1.0, mu}};
  return e;
}

CatalogEntry make_uniform() {
  auto e = entry("uniform", {}, GammaTypeRep::normalized(0.0, {{1.0, 1.0}}, {{1.0, 2.0}}),
                 expected(0, 0, -1, 0, 1, -1, kInf),
                 "uniform variable on (0, 1); E X^s = 1 / (s + 1)");
  e.oracle = [](double x) -> std::optional<double> { return (x > 0.0 && x < 1.0) ? 1.0 : 0.0; };
  e.sampler = {"uniform", {}};
  return e;
}

CatalogEntry make_beta(double alpha, double beta) {
  require(alpha > 0.0 && beta > 0.0, "beta: parameters must be positive");
  auto e = entry("beta", {alpha, beta},
                 GammaTypeRep::normalized(0.0, {{1.0, alpha}}, {{1.0, alpha + beta}}),
                 expected(0, 0, -beta, 0, gamma(alpha + beta) / gamma(alpha), -alpha, kInf),
                 "Beta(alpha, beta) variable; E X^s = B(s + alpha, beta) / B(alpha, beta)");
  e.oracle = [alpha, beta](double x) -> std::optional<double> {
    if (!(x > 0.0 && x < 1.0)) return 0.0;
    return std::exp((alpha - 1.0) * std::log(x) + (beta - 1.0) * std::log1p(-x) +
                    log_gamma(alpha + beta) - log_gamma(alpha) - log_gamma(beta));
  };
  e.sampler = {"beta", {alpha, beta}};
  return e;
}

CatalogEntry make_chi2(double n) {
  require(n > 0.0, "chi2: n must be positive");
  auto e = entry("chi2", {n}, GammaTypeRep::normalized(std::log(2.0), {{1.0, n / 2}}, {}),
                 expected(1, 1, (n - 1) / 2, std::log(2.0), kSqrt2Pi / gamma(n / 2), -n / 2, kInf),
                 "chi-squared variable with n degrees of freedom; E X^s = 2^s Gamma(s + n/2) / Gamma(n/2)");
  e.oracle = [n](double x) -> std::optional<double> {
    if (!(x > 0.0)) return 0.0;
    return std::exp((n / 2 - 1) * std::log(x) - x / 2 - (n / 2) * std::log(2.0) - log_gamma(n / 2));
  };
  e.sampler = {"gamma_power", {n / 2, 1.0, 2.0}};
  return e;
}

CatalogEntry make_chi(double n) {
  require(n > 0.0, "chi: n must be positive");
  const GammaTypeRep rep = power(make_chi2(n).rep, 0.5);
  auto e = entry("chi", {n}, rep,
                 expected(0.5, 0.5, (n - 1) / 2, 0,
                          std::pow(2.0, 1 - n / 2) * std::sqrt(kPi) / gamma(n / 2), -n, kInf),
                 "chi variable, square root of chi-squared");
  e.oracle = [n](double x) -> std::optional<double> {
    if (!(x > 0.0)) return 0.0;
    return std::exp((n - 1) * std::log(x) - x * x / 2 - (n / 2 - 1) * std::log(2.0) -
                    log_gamma(n / 2));
  };
  e.sampler = {"gamma_power", {n / 2, 0.5, std::sqrt(2.0)}};
  return e;
}

CatalogEntry make_fisher_f(double m, double n) {
  require(m > 0.0 && n > 0.0, "fisher_f: degrees of freedom must be positive");
  const GammaTypeRep rep =
      GammaTypeRep::normalized(std::log(n / m), {{1.0, m / 2}, {-1.0, n / 2}}, {});
  auto e = entry("fisher_f", {m, n}, rep,
                 expected(2, 0, (n + m - 2) / 2, std::log(n / m),
                          2 * kPi / (gamma(m / 2) * gamma(n / 2)), -m / 2, n / 2),
                 "F variable (Q_m/m)/(Q_n/n) of independent chi-squared variables");
  e.oracle = [m, n](double x) -> std::optional<double> {
    if (!(x > 0.0)) return 0.0;
    const double lb = log_gamma(m / 2) + log_gamma(n / 2) - log_gamma((m + n) / 2);
    return std::exp((m / 2) * std::log(m / n) + (m / 2 - 1) * std::log(x) -
                    ((m + n) / 2) * std::log1p(m * x / n) - lb);
  };
  e.sampler = {"fisher_f", {m, n}};
  return e;
}

CatalogEntry make_abs_t(double n) {
  require(n > 0.0, "abs_t: n must be positive");
  const GammaTypeRep rep =
      GammaTypeRep::normalized(0.5 * std::log(n), {{0.5, 0.5}, {-0.5, n / 2}}, {});
  auto e = entry("abs_t", {n}, rep,
                 expected(1, 0, (n - 1) / 2, 0.5 * std::log(n),
                          std::pow(2.0, 1.5 - n / 2) * std::sqrt(kPi) / gamma(n / 2), -1, n),
                 "absolute value of a Student t variable with n degrees of freedom");
  e.oracle = [n](double x) -> std::optional<double> {
    if (!(x > 0.0)) return 0.0;
    return 2.0 * std::exp(log_gamma((n + 1) / 2) - log_gamma(n / 2) - 0.5 * std::log(n * kPi) -
                          ((n + 1) / 2) * std::log1p(x * x / n));
  };
  e.sampler = {"abs_t", {n}};
  return e;
}

CatalogEntry make_weibull(double alpha) {
  require(alpha > 0.0, "weibull: alpha must be positive");
  const GammaTypeRep rep = power(make_exponential().rep, 1.0 / alpha);
  auto e = entry("weibull", {alpha}, rep,
                 expected(1 / alpha, 1 / alpha, 0.5, std::log(1 / alpha) / alpha,
                          std::sqrt(2 * kPi / alpha), -alpha, kInf),
                 "Weibull variable T^{1/alpha} with T exponential");
  e.oracle = [alpha](double x) -> std::optional<double> {
    if (!(x > 0.0)) return 0.0;
    return alpha * std::exp((alpha - 1) * std::log(x) - std::pow(x, alpha));
  };
  e.sampler = {"gamma_power", {1.0, 1.0 / alpha, 1.0}};
  return e;
}

CatalogEntry make_stable(double alpha) {
  require(alpha > 0.0 && alpha <= 1.0, "stable: alpha must lie in (0, 1]");
  if (alpha == 1.0) {
    auto e = entry("stable", {alpha}, constant_rep(), expected(0, 0, 0, 0, 1, -kInf, kInf),
                   "degenerate stable law S_1 = 1");
    e.sampler = {"constant", {1.0}};
    return e;
  }
  const GammaTypeRep rep = GammaTypeRep::normalized(0.0, {{-1 / alpha, 1.0}}, {{-1.0, 1.0}});
  auto e = entry("stable", {alpha}, rep,
                 expected(1 / alpha - 1, -(1 / alpha - 1), 0, std::log(alpha) / alpha,
                          1 / std::sqrt(alpha), -kInf, alpha),
                 "positive stable variable with E exp(-t S) = exp(-t^alpha)");
  e.oracle = [alpha](double x) -> std::optional<double> { return stable_density(alpha, x); };
  e.sampler = {"stable", {alpha}};
  return e;
}

CatalogEntry make_mittag_leffler(double alpha) {
  require(alpha > 0.0 && alpha <= 1.0, "mittag_leffler: alpha must lie in (0, 1]");
  if (alpha == 1.0) {
    auto e = entry("mittag_leffler", {alpha}, constant_rep(), expected(0, 0, 0, 0, 1, -kInf, kInf),
                   "degenerate Mittag-Leffler law M_1 = 1");
    e.sampler = {"constant", {1.0}};
    return e;
  }
  const GammaTypeRep rep = GammaTypeRep::normalized(0.0, {{1.0, 1.0}}, {{alpha, 1.0}});
  auto e = entry("mittag_leffler", {alpha}, rep,
                 expected(1 - alpha, 1 - alpha, 0, -alpha * std::log(alpha), 1 / std::sqrt(alpha),
                          -1, kInf),
                 "Mittag-Leffler variable S^{-alpha} with S positive stable");
  e.oracle = [alpha](double x) -> std::optional<double> {
    return mittag_leffler_density(alpha, x);
  };
  e.sampler = {"mittag_leffler", {alpha}};
  return e;
}

CatalogEntry make_pillai_ml(double alpha) {
  require(alpha > 0.0 && alpha <= 1.0, "pillai_ml: alpha must lie in (0, 1]");
  if (alpha == 1.0) {
    auto e = make_exponential();
    e.name = "pillai_ml";
    e.parameters = {alpha};
    e.source = "Mittag-Leffler law of the second kind at alpha = 1, the exponential law";
    e.sampler = {"pillai", {alpha}};
    return e;
  }
  const GammaTypeRep rep =
      GammaTypeRep::normalized(0.0, {{1 / alpha, 1.0}, {-1 / alpha, 1.0}}, {{-1.0, 1.0}});
  auto e = entry("pillai_ml", {alpha}, rep,
                 expected(2 / alpha - 1, 1, 0.5, 0, kSqrt2Pi / alpha, -alpha, alpha),
                 "Mittag-Leffler law of the second kind, T^{1/alpha} S with T exponential");
  e.sampler = {"pillai", {alpha}};
  return e;
}

CatalogEntry make_pareto(double alpha) {
  require(alpha > 0.0, "pareto: alpha must be positive");
  const GammaTypeRep rep = reciprocal(power(make_uniform().rep, 1.0 / alpha));
  auto e = entry("pareto", {alpha}, rep, expected(0, 0, -1, 0, alpha, -kInf, alpha),
                 "Pareto variable U^{-1/alpha} on (1, infinity)");
  e.oracle = [alpha](double x) -> std::optional<double> {
    if (!(x > 1.0)) return 0.0;
    return alpha * std::pow(x, -alpha - 1.0);
  };
  e.sampler = {"pareto", {alpha}};
  return e;
}

CatalogEntry make_shifted_pareto(double alpha) {
  require(alpha > 0.0, "shifted_pareto: alpha must be positive");
  const GammaTypeRep rep = GammaTypeRep::normalized(0.0, {{1.0, 1.0}, {-1.0, alpha}}, {});
  auto e = entry("shifted_pareto", {alpha}, rep,
                 expected(2, 0, alpha, 0, 2 * kPi / gamma(alpha), -1, alpha),
                 "shifted Pareto variable P - 1, equal in law to T / G_alpha");
  e.oracle = [alpha](double x) -> std::optional<double> {
    if (!(x > 0.0)) return 0.0;
    return alpha * std::pow(1.0 + x, -alpha - 1.0);
  };
  e.sampler = {"shifted_pareto", {alpha}};
  return e;
}

CatalogEntry make_frechet(double alpha) {
  require(alpha > 0.0, "frechet: alpha must be positive");
  const GammaTypeRep rep = reciprocal(make_weibull(alpha).rep);
  auto e = entry("frechet", {alpha}, rep,
                 expected(1 / alpha, -1 / alpha, 0.5, std::log(alpha) / alpha,
                          std::sqrt(2 * kPi / alpha), -kInf, alpha),
                 "Frechet extreme-value variable 1 / W_alpha");
  e.oracle = [alpha](double x) -> std::optional<double> {
    if (!(x > 0.0)) return 0.0;
    return alpha * std::exp((-alpha - 1) * std::log(x) - std::pow(x, -alpha));
  };
  e.sampler = {"gamma_power", {1.0, -1.0 / alpha, 1.0}};
  return e;
}

CatalogEntry make_neg_weibull_extreme(double alpha) {
  auto e = make_weibull(alpha);
  e.name = "neg_weibull_extreme";
  e.source = "negated Weibull-type extreme-value variable, equal in law to W_alpha";
  return e;
}

CatalogEntry make_gumbel_mgf() {
  auto e = entry("gumbel_mgf", {}, GammaTypeRep::normalized(0.0, {{-1.0, 1.0}}, {}),
                 expected(1, -1, 0.5, 0, kSqrt2Pi, -kInf, 1),
                 "moment generating function Gamma(1 - s) of a Gumbel variable Y");
  e.log_variable = true;
  e.oracle = [](double x) -> std::optional<double> {
    if (!(x > 0.0)) return 0.0;
    return log_variable_to_x([](double y) { return std::exp(-y - std::exp(-y)); }, x);
  };
  e.sampler = {"gumbel_exp", {}};
  return e;
}

CatalogEntry make_gamma_n_mgf(int n) {
  require(n >= 1, "gamma_n_mgf: n must be a positive integer");
  std::vector<GammaFactor> num(n, GammaFactor{-1.0, 1.0});
  std::vector<GammaFactor> den(n, GammaFactor{-1.0, 2.0});
  auto e = entry("gamma_n_mgf", {double(n)}, GammaTypeRep::normalized(0.0, num, den),
                 expected(0, 0, -n, 0, 1, -kInf, 1),
                 "moment generating function (1 - s)^{-n} of a Gamma(n) variable Y");
  e.log_variable = true;
  e.oracle = [n](double x) -> std::optional<double> {
    if (!(x > 1.0)) return 0.0;
    const double y = std::log(x);
    return std::exp((n - 1) * std::log(y) - y - log_gamma(double(n))) / x;
  };
  e.sampler = {"gamma_exp", {double(n)}};
  return e;
}

CatalogEntry make_exponential_mgf() {
  auto e = make_gamma_n_mgf(1);
  e.name = "exponential_mgf";
  e.parameters = {};
  e.source = "moment generating function 1 / (1 - s) of an exponential variable Y";
  return e;
}

CatalogEntry make_levy_area_mgf() {
  const GammaTypeRep rep =
      GammaTypeRep::normalized(0.0, {{1.0 / kPi, 0.5}, {-1.0 / kPi, 0.5}}, {});
  auto e = entry("levy_area_mgf", {}, rep, expected(2 / kPi, 0, 0, 0, 2, -kPi / 2, kPi / 2),
                 "moment generating function 1 / cos(s) of the Levy stochastic area");
  e.log_variable = true;
  e.oracle = [](double x) -> std::optional<double> {
    if (!(x > 0.0)) return 0.0;
    return 1.0 / (x * 2.0 * std::cosh(0.5 * kPi * std::log(x)));
  };
  e.sampler = {"levy_area_exp", {}};
  return e;
}

std::vector<GammaTypeRep> brownian_sup_area_forms() {
  const double third = 1.0 / 3.0;
  return {
      GammaTypeRep(-log_gamma(2.0 / 3.0), 1, std::log(3.0 / std::sqrt(8.0)),
                   {{1.0, 1.0}, {1.0, 2.0 / 3.0}}, {{1.5, 1.0}}),
      GammaTypeRep(-log_gamma(5.0 / 3.0), 1, std::log(3.0 / std::sqrt(8.0)),
                   {{1.0, 1.0}, {1.0, 5.0 / 3.0}}, {{1.5, 2.0}}),
      GammaTypeRep(std::log(2.0 * gamma(third) / (3.0 * std::sqrt(kPi))), 1,
                   std::log(std::sqrt(8.0) / 9.0), {{1.5, 1.5}}, {{1.0, 4.0 / 3.0}}),
      GammaTypeRep(std::log(gamma(third) / (std::cbrt(2.0) * kPi)), 1, 0.5 * std::log(2.0 / 3.0),
                   {{0.5, 0.5}, {0.5, 5.0 / 6.0}}, {{0.5, 2.0 / 3.0}}),
  };
}

std::vector<GammaTypeRep> hashing_M_forms() {
  const double third = 1.0 / 3.0;
  const double g13 = gamma(third);
  return {
      GammaTypeRep(-log_gamma(2.0 / 3.0), 1, std::log(2.0 / std::pow(3.0, 2.0 / 3.0)),
                   {{2.0 / 3.0, 1.0}, {-2.0 / 3.0, 2.0 / 3.0}, {-2.0 / 3.0, 1.0}}, {{-1.0, 1.0}}),
      GammaTypeRep(std::log(2.0 * g13 / (3.0 * std::sqrt(kPi))), 1,
                   std::log(std::pow(3.0, 4.0 / 3.0) / 2.0), {{2.0 / 3.0, 1.0}, {-1.0, 1.5}},
                   {{-2.0 / 3.0, 4.0 / 3.0}}),
      GammaTypeRep(std::log(g13 / (std::cbrt(2.0) * kPi)), 1, third * std::log(1.5),
                   {{2.0 / 3.0, 1.0}, {-third, 0.5}, {-third, 5.0 / 6.0}}, {{-third, 2.0 / 3.0}}),
      GammaTypeRep(std::log(g13 / (std::cbrt(2.0) * std::pow(kPi, 1.5))), 1, third * std::log(6.0),
                   {{third, 0.5}, {third, 1.0}, {-third, 0.5}, {-third, 5.0 / 6.0}},
                   {{-third, 2.0 / 3.0}}),
  };
}

GammaTypeRep lvz_transform(const GammaTypeRep& rep_z, double alpha) {
  require(alpha > 0.0, "lvz_transform: alpha must be positive");
  const GammaTypeRep t = GammaTypeRep::normalized(0.0, {{1.0 / alpha, 1.0}}, {});
  return product(t, power(reciprocal(rep_z), 1.0 / alpha));
}

CatalogEntry make_brownian_sup_area() {
  const double g13 = gamma(1.0 / 3.0);
  auto e = entry("brownian_sup_area", {}, brownian_sup_area_forms()[3],
                 expected(0.5, 0.5, 1.0 / 6.0, -0.5 * std::log(3.0), g13 / std::sqrt(kPi), -1,
                          kInf),
                 "area under the running maximum of standard Brownian motion on [0, 1]");
  e.oracle = [](double x) -> std::optional<double> { return brownian_sup_area_density(x); };
  e.sampler = {"brownian_sup_area", {}};
  return e;
}

CatalogEntry make_hashing_M() {
  const double g13 = gamma(1.0 / 3.0);
  auto e = entry("hashing_M", {}, lvz_transform(make_brownian_sup_area().rep, 1.5),
                 expected(1, 1.0 / 3.0, 2.0 / 3.0, std::log(2.0) / 3.0,
                          std::pow(2.0, 7.0 / 6.0) * std::pow(3.0, -2.0 / 3.0) * g13, -1.5, 1.5),
                 "linear-probing hashing limit with P(M > x) = E exp(-x^{3/2} A)");
  e.oracle = [](double x) { return hashing_M_density(x); };
  e.sampler = {"hashing_M", {}};
  return e;
}

CatalogEntry make_urn_triangular(double a, double c, double d, double b0, double w0) {
  require(a > 0.0 && c > 0.0 && d > 0.0 && std::fabs(a - c - d) <= 1e-12 * a,
          "urn_triangular: needs a = c + d with a, c, d > 0");
  require(w0 > 0.0 && b0 >= 0.0, "urn_triangular: needs w0 > 0 and b0 >= 0");
  const double t = (b0 + w0) / a;
  const GammaTypeRep rep = GammaTypeRep::normalized(std::log(d), {{1.0, w0 / d}}, {{d / a, t}});
  const double rho_minus = b0 > 0.0 ? -w0 / d : -w0 / d - 1.0;
  auto e = entry("urn_triangular", {a, c, d, b0, w0}, rep,
                 expected(c / a, c / a, w0 / d - t, (c * std::log(d) + d * std::log(a)) / a,
                          std::pow(a / d, t - 0.5) * gamma(t) / gamma(w0 / d), rho_minus, kInf),
                 "limit of W_n / n^{d/a} in a balanced triangular two-colour urn");
  e.oracle = [=](double x) -> std::optional<double> {
    if (!(x > 0.0)) return 0.0;
    const double lx = std::log(x);
    const double lead = log_gamma(t) - log_gamma(w0 / d);
    return sum_log_series([&](int n, int& sign) {
      const double arg = b0 / a - d * n / a;
      if (specfun::is_nonpositive_integer(arg, 1e-12)) return -kInf;
      sign = (n % 2 == 0 ? 1 : -1) * specfun::gamma_sign(arg);
      return lead - log_gamma(n + 1.0) - (n + w0 / d) * std::log(d) - log_gamma(arg) +
             (n + w0 / d - 1.0) * lx;
    });
  };
  e.sampler = {"urn", {a, 0.0, c, d, b0, w0}};
  return e;
}

CatalogEntry make_urn_diagonal_polya(double a, double b0, double w0) {
  require(a > 0.0 && b0 > 0.0 && w0 > 0.0, "urn_diagonal_polya: parameters must be positive");
  const GammaTypeRep rep =
      GammaTypeRep::normalized(std::log(a), {{1.0, w0 / a}}, {{1.0, (b0 + w0) / a}});
  auto e = entry("urn_diagonal_polya", {a, b0, w0}, rep,
                 expected(0, 0, -b0 / a, std::log(a), gamma((b0 + w0) / a) / gamma(w0 / a),
                          -w0 / a, kInf),
                 "limit of W_n / n in a classical Polya urn, a Beta variable times a");
  e.oracle = [=](double x) -> std::optional<double> {
    const double u = x / a;
    if (!(u > 0.0 && u < 1.0)) return 0.0;
    const double p = w0 / a, q = b0 / a;
    return std::exp((p - 1) * std::log(u) + (q - 1) * std::log1p(-u) + log_gamma(p + q) -
                    log_gamma(p) - log_gamma(q)) /
           a;
  };
  e.sampler = {"urn", {a, 0.0, 0.0, a, b0, w0}};
  return e;
}

CatalogEntry make_urn_diagonal(double a, double d, double b0, double w0) {
  require(a > 0.0 && d > 0.0 && b0 > 0.0 && w0 > 0.0, "urn_diagonal: parameters must be positive");
  if (a == d) {
    auto e = make_urn_diagonal_polya(a, b0, w0);
    e.name = "urn_diagonal";
    e.parameters = {a, d, b0, w0};
    return e;
  }
  if (a < d) {
    // Swap the colours; the limit of (nd - W_n) / n^{a/d} is (d/a) times the swapped law.
    auto swapped = make_urn_diagonal(d, a, w0, b0);
    const double f = d / a;
    CatalogEntry e = entry("urn_diagonal", {a, d, b0, w0}, scale(swapped.rep, f),
                           swapped.expected,
                           "limit of (n d - W_n) / n^{a/d} in a diagonal urn with a < d");
    e.expected.kappa += std::log(f);
    auto inner = swapped.oracle;
    e.oracle = [inner, f](double x) -> std::optional<double> {
      const auto v = inner(x / f);
      if (!v) return std::nullopt;
      return *v / f;
    };
    e.sampler = {"urn_diagonal_swapped", {a, d, b0, w0}};
    return e;
  }
  const double r = d / a;
  const GammaTypeRep rep =
      GammaTypeRep::normalized(std::log(d), {{-r, b0 / a}, {1.0, w0 / d}}, {});
  auto e = entry("urn_diagonal", {a, d, b0, w0}, rep,
                 expected(1 + r, 1 - r, b0 / a + w0 / d - 1, -r * std::log(r) + std::log(d),
                          2 * kPi / (gamma(b0 / a) * gamma(w0 / d)) * std::pow(r, b0 / a - 0.5),
                          -w0 / d, b0 / d),
                 "limit of W_n / n^{d/a} in a diagonal two-colour urn with a > d");
  e.oracle = [=](double x) -> std::optional<double> {
    if (!(x > 0.0)) return 0.0;
    const double lxd = std::log(x / d);
    const double lead = -std::log(d) - log_gamma(b0 / a) - log_gamma(w0 / d);
    return sum_log_series([&](int n, int& sign) {
      sign = n % 2 == 0 ? 1 : -1;
      return lead - log_gamma(n + 1.0) + log_gamma((d * n + b0 + w0) / a) +
             (n + w0 / d - 1.0) * lxd;
    });
  };
  e.sampler = {"urn", {a, 0.0, 0.0, d, b0, w0}};
  return e;
}

CatalogEntry make_uniform_atom_mixture() {
  const GammaTypeRep rep =
      GammaTypeRep::normalized(0.0, {{1.0, 3.0}, {1.0, 1.0}}, {{1.0, 2.0}, {1.0, 2.0}});
  auto e = entry("uniform_atom_mixture", {}, rep, expected(0, 0, 0, 0, 0.5, -1, kInf),
                 "equal mixture of a point mass at 1 and the uniform law on (0, 1)");
  e.oracle = [](double x) -> std::optional<double> { return (x > 0.0 && x < 1.0) ? 0.5 : 0.0; };
  e.sampler = {"uniform_atom_mixture", {}};
  return e;
}

CatalogEntry make_exp_over_uniform() {
  const GammaTypeRep rep = GammaTypeRep::normalized(0.0, {{1.0, 1.0}, {-1.0, 1.0}}, {{-1.0, 2.0}});
  auto e = entry("exp_over_uniform", {}, rep, expected(1, 1, -0.5, 0, kSqrt2Pi, -1, 1),
                 "ratio T / U of an exponential and an independent uniform variable");
  e.oracle = [](double x) -> std::optional<double> {
    if (!(x > 0.0)) return 0.0;
    if (x < 1e-4) return 0.5 - x / 3.0 + x * x / 8.0;
    return -std::expm1(-x) / (x * x) - std::exp(-x) / x;
  };
  e.sampler = {"exp_over_uniform", {}};
  return e;
}

std::optional<double> oracle_density(const CatalogEntry& entry, double x) {
  if (!entry.oracle) return std::nullopt;
  return entry.oracle(x);
}

namespace {

struct Maker {
  std::vector<double> defaults;
  std::function<CatalogEntry(const std::vector<double>&)> make;
};

const std::map<std::string, Maker>& registry() {
  static const std::map<std::string, Maker> r = {
      {"gamma", {{2.0}, [](const auto& p) { return make_gamma(p[0]); }}},
      {"exponential", {{1.0}, [](const auto& p) { return make_exponential(p[0]); }}},
      {"uniform", {{}, [](const auto&) { return make_uniform(); }}},
      {"beta", {{2.0, 3.0}, [](const auto& p) { return make_beta(p[0], p[1]); }}},
      {"chi2", {{3.0}, [](const auto& p) { return make_chi2(p[0]); }}},
      {"chi", {{3.0}, [](const auto& p) { return make_chi(p[0]); }}},
      {"fisher_f", {{3.0, 5.0}, [](const auto& p) { return make_fisher_f(p[0], p[1]); }}},
      {"abs_t", {{3.0}, [](const auto& p) { return make_abs_t(p[0]); }}},
      {"weibull", {{2.0}, [](const auto& p) { return make_weibull(p[0]); }}},
      {"stable", {{0.5}, [](const auto& p) { return make_stable(p[0]); }}},
      {"mittag_leffler", {{0.5}, [](const auto& p) { return make_mittag_leffler(p[0]); }}},
      {"pillai_ml", {{0.5}, [](const auto& p) { return make_pillai_ml(p[0]); }}},
      {"pareto", {{2.0}, [](const auto& p) { return make_pareto(p[0]); }}},
      {"shifted_pareto", {{2.0}, [](const auto& p) { return make_shifted_pareto(p[0]); }}},
      {"frechet", {{2.0}, [](const auto& p) { return make_frechet(p[0]); }}},
      {"neg_weibull_extreme",
       {{2.0}, [](const auto& p) { return make_neg_weibull_extreme(p[0]); }}},
      {"gumbel_mgf", {{}, [](const auto&) { return make_gumbel_mgf(); }}},
      {"gamma_n_mgf", {{2.0}, [](const auto& p) {
                         const double n = std::round(p[0]);
                         require(n == p[0], "gamma_n_mgf: n must be an integer");
                         return make_gamma_n_mgf(static_cast<int>(n));
                       }}},
      {"exponential_mgf", {{}, [](const auto&) { return make_exponential_mgf(); }}},
      {"levy_area_mgf", {{}, [](const auto&) { return make_levy_area_mgf(); }}},
      {"brownian_sup_area", {{}, [](const auto&) { return make_brownian_sup_area(); }}},
      {"hashing_M", {{}, [](const auto&) { return make_hashing_M(); }}},
      {"urn_triangular",
       {{2.0, 1.0, 1.0, 1.0, 1.0},
        [](const auto& p) { return make_urn_triangular(p[0], p[1], p[2], p[3], p[4]); }}},
      {"urn_diagonal_polya",
       {{1.0, 1.0, 1.0}, [](const auto& p) { return make_urn_diagonal_polya(p[0], p[1], p[2]); }}},
      {"urn_diagonal",
       {{2.0, 1.0, 1.0, 1.0},
        [](const auto& p) { return make_urn_diagonal(p[0], p[1], p[2], p[3]); }}},
      {"uniform_atom_mixture", {{}, [](const auto&) { return make_uniform_atom_mixture(); }}},
      {"exp_over_uniform", {{}, [](const auto&) { return make_exp_over_uniform(); }}},
  };
  return r;
}

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [name, maker] : registry()) out.push_back(name);
  return out;
}

CatalogEntry make(const std::string& name, const std::vector<double>& params) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw DomainError("catalog: unknown entry '" + name + "'");
  const Maker& m = it->second;
  if (params.size() > m.defaults.size())
    throw DomainError("catalog: too many parameters for '" + name + "'");
  std::vector<double> p = m.defaults;
  for (std::size_t i = 0; i < params.size(); ++i) p[i] = params[i];
  return m.make(p);
}

}  // namespace gammatype::catalog
