#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "gammatype/rep.hpp"

namespace gammatype {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct SpectrumEntry {
  double location = 0.0;
  int order = 0;  // positive: pole, negative: zero
};

struct InvariantParams {
  double gamma = 0.0;
  double gamma_prime = 0.0;
  double delta = 0.0;
  double kappa = 0.0;
  double C1 = 0.0;
  double rho_minus = -kInf;
  double rho_plus = kInf;
};

// Singular part of F at a pole: F(s) = sum_l c_l (s - s0)^{-l} + regular.
// The actual coefficients are coefficients[l-1] * exp(log_scale).
struct LaurentData {
  double location = 0.0;
  std::vector<double> coefficients;
  double log_scale = 0.0;
  double coefficient(std::size_t l) const;  // c_l, 1-based
};

struct SafeAbscissa {
  double point = 0.0;
  double margin = 0.0;  // min over factors of |sin(pi (a s + b))|
};

namespace analysis {

int nu(const GammaTypeRep& rep, double s);
std::vector<SpectrumEntry> spectrum(const GammaTypeRep& rep, double lo, double hi);

// Nearest poles on each side of 0; +-infinity when there are none.
std::pair<double, double> rho_bounds(const GammaTypeRep& rep);

// Extended-real parameters that need no strip: gamma, gamma', delta, kappa, C1.
InvariantParams params(const GammaTypeRep& rep);

LaurentData laurent(const GammaTypeRep& rep, double s0, int max_order = 8);
// Contour-integral path only, for cross-checks.
LaurentData laurent_contour(const GammaTypeRep& rep, double s0, int max_order = 8);

double imag_axis_asymptotic(const GammaTypeRep& rep, double t);
double strip_asymptotic(const GammaTypeRep& rep, double sigma, double t);
double real_axis_asymptotic(const GammaTypeRep& rep, double s);

SafeAbscissa safe_abscissa(const GammaTypeRep& rep, double near);
double sine_margin(const GammaTypeRep& rep, double s);

// N+(x) for x > 0, N-(x) for x < 0.
int pole_density(const GammaTypeRep& rep, double x);

// int_0^t arctan(u / sigma) du.
double psi_arctan(double sigma, double t);

// Sum of positive slopes in the numerator minus those in the denominator.
double positive_slope_sum(const GammaTypeRep& rep);

}  // namespace analysis
}  // namespace gammatype
