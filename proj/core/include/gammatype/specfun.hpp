#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gammatype {

using Complex = std::complex<double>;

enum class SeriesRegime { convergent, asymptotic_truncated, refused };

const char* to_string(SeriesRegime regime);

// Result of summing a (possibly divergent) series.
struct SeriesEvaluation {
  double value = 0.0;
  std::size_t terms_used = 0;
  double last_term = 0.0;  // magnitude of the last term added
  SeriesRegime regime = SeriesRegime::convergent;
};

namespace specfun {

// Principal branch of log Gamma, continuous off the negative real axis.
// On the negative real axis the upper-side limit is returned.
Complex log_gamma(Complex z);
double log_gamma(double x);  // log|Gamma(x)|

Complex gamma(Complex z);
double gamma(double x);
Complex reciprocal_gamma(Complex z);
double reciprocal_gamma(double x);

// Sign of Gamma(x) for real non-pole x.
int gamma_sign(double x);

// True when x lies within tol of a non-positive integer.
bool is_nonpositive_integer(double x, double tol = 1e-14);

struct HypSeriesSpec {
  std::vector<double> upper;
  std::vector<double> lower;
  double argument = 0.0;
};

// Generalized hypergeometric series pFq. For p <= q + 1 the series is summed
// to convergence (|term| < 1e-16 (1 + |sum|)) and ConvergenceError is thrown
// if max_terms is reached first. For p > q + 1 exactly max_terms terms are
// summed and the result is flagged asymptotic_truncated.
SeriesEvaluation hyp_series(const HypSeriesSpec& spec, std::size_t max_terms = 500);

// Kummer's function 1F1(a; b; x).
double hyp1f1(double a, double b, double x);

// Confluent hypergeometric function of the second kind, x > 0, b not an integer.
double kummer_U(double a, double b, double x);

}  // namespace specfun
}  // namespace gammatype
