#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gammatype/analysis.hpp"
#include "gammatype/rep.hpp"

namespace gammatype::catalog {

// Which generator in the sampler module draws this law, with its parameters.
struct SamplerTag {
  std::string kind;  // empty when no sampler exists
  std::vector<double> params;
};

struct CatalogEntry {
  std::string name;
  std::vector<double> parameters;
  GammaTypeRep rep;
  InvariantParams expected;
  std::string source;  // how the law and its moment function arise
  std::function<std::optional<double>(double)> oracle;  // closed-form density of X, if known
  SamplerTag sampler;
  bool log_variable = false;  // rep is E e^{sY}; X = e^Y
};

CatalogEntry make_gamma(double alpha);
CatalogEntry make_exponential(double mu = 1.0);
CatalogEntry make_uniform();
CatalogEntry make_beta(double alpha, double beta);
CatalogEntry make_chi2(double n);
CatalogEntry make_chi(double n);
CatalogEntry make_fisher_f(double m, double n);
CatalogEntry make_abs_t(double n);
CatalogEntry make_weibull(double alpha);
CatalogEntry make_stable(double alpha);
CatalogEntry make_mittag_leffler(double alpha);
CatalogEntry make_pillai_ml(double alpha);
CatalogEntry make_pareto(double alpha);
CatalogEntry make_shifted_pareto(double alpha);
CatalogEntry make_frechet(double alpha);
CatalogEntry make_neg_weibull_extreme(double alpha);
CatalogEntry make_gumbel_mgf();
CatalogEntry make_gamma_n_mgf(int n);
CatalogEntry make_exponential_mgf();
CatalogEntry make_levy_area_mgf();
CatalogEntry make_brownian_sup_area();
CatalogEntry make_hashing_M();
CatalogEntry make_urn_triangular(double a, double c, double d, double b0, double w0);
CatalogEntry make_urn_diagonal_polya(double a, double b0, double w0);
CatalogEntry make_urn_diagonal(double a, double d, double b0, double w0);
// Half point mass at 1, half uniform on (0, 1).
CatalogEntry make_uniform_atom_mixture();
// T / U with T exponential and U uniform.
CatalogEntry make_exp_over_uniform();

// Rep of V with P(V > x) = E exp(-x^alpha Z): Gamma(s/alpha + 1) E Z^{-s/alpha}.
GammaTypeRep lvz_transform(const GammaTypeRep& rep_z, double alpha);

// Moment functions of the Brownian supremum area and of the hashing limit, each in
// four printed forms with their printed constants.
std::vector<GammaTypeRep> brownian_sup_area_forms();
std::vector<GammaTypeRep> hashing_M_forms();

// Closed-form density of X; nullopt where no closed form applies.
std::optional<double> oracle_density(const CatalogEntry& entry, double x);

// Registry of constructible names, and construction with default parameters.
std::vector<std::string> names();
CatalogEntry make(const std::string& name, const std::vector<double>& params = {});

// Closed forms used as oracles, exposed for tests.
double brownian_sup_area_density(double x);
std::optional<double> hashing_M_density(double x);
std::optional<double> stable_density(double alpha, double x);
std::optional<double> mittag_leffler_density(double alpha, double x);

}  // namespace gammatype::catalog
