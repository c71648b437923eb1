#include "gammatype/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "gammatype/error.hpp"
#include "gammatype/quadrature.hpp"

namespace gammatype {

const char* to_string(SeriesRegime regime) {
  switch (regime) {
    case SeriesRegime::convergent:
      return "convergent";
    case SeriesRegime::asymptotic_truncated:
      return "asymptotic-truncated";
    case SeriesRegime::refused:
      return "refused";
  }
  return "unknown";
}

namespace specfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogPi = 1.1447298858494001741434273513530587;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kMaxLog = 709.0;

// Godfrey's coefficients for g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5};

template <typename T>
T lanczos_log_gamma(T z) {
  // Valid for Re z >= 1/2.
  const T w = z - 1.0;
  T series = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) series += kLanczos[k] / (w + double(k));
  const T t = w + (kLanczosG + 0.5);
  using std::log;
  return kHalfLog2Pi + (w + 0.5) * log(t) - t + log(series);
}

// e^{i theta} - 1 for real theta without cancellation.
Complex expm1_i(double theta) {
  const double s = std::sin(0.5 * theta);
  return {-2.0 * s * s, std::sin(theta)};
}

// log(1 - e^{2 pi i z}) for Im z >= 0, rounded away from lattice cancellation.
Complex log_one_minus_e2piz(Complex z) {
  const double shift = std::round(z.real());
  const double zeta = z.real() - shift;
  const double decay = std::exp(-2.0 * kPi * z.imag());
  // e^{2 pi i z} - 1 = e^{-2 pi Im z} (e^{2 pi i zeta} - 1) + (e^{-2 pi Im z} - 1)
  const Complex em1 = decay * expm1_i(2.0 * kPi * zeta) + std::expm1(-2.0 * kPi * z.imag());
  return std::log(-em1);
}

double sin_pi(double x) {
  const double n = std::round(x);
  const double r = std::sin(kPi * (x - n));
  return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -r : r;
}

}  // namespace

bool is_nonpositive_integer(double x, double tol) {
  if (x > tol) return false;
  return std::fabs(x - std::round(x)) <= tol * std::max(1.0, std::fabs(x));
}

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("log_gamma: non-finite argument");
  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
  if (z.real() <= 0.5) {
    const double n = std::round(z.real());
    if (n <= 0.0 && std::abs(z - Complex(n, 0.0)) <= 1e-14 * std::max(1.0, std::fabs(n)))
      throw PoleError("log_gamma: pole at " + std::to_string(n), n, 1);
  }
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Reflection with a branch of log sin(pi z) continuous in the closed upper half-plane.
  const Complex i(0.0, 1.0);
  const Complex log_sin = -i * kPi * z + i * (0.5 * kPi) - kLn2 + log_one_minus_e2piz(z);
  return kLogPi - log_sin - lanczos_log_gamma(1.0 - z);
}

double log_gamma(double x) {
  if (!std::isfinite(x)) throw DomainError("log_gamma: non-finite argument");
  if (is_nonpositive_integer(x)) throw PoleError("log_gamma: pole", std::round(x), 1);
  if (x >= 0.5) return lanczos_log_gamma(x);
  return kLogPi - std::log(std::fabs(sin_pi(x))) - lanczos_log_gamma(1.0 - x);
}

int gamma_sign(double x) {
  if (x > 0.0) return 1;
  const double f = std::floor(x);
  return (std::fmod(std::fabs(f), 2.0) == 1.0) ? -1 : 1;
}

Complex gamma(Complex z) {
  const Complex lg = log_gamma(z);
  if (lg.real() > kMaxLog) throw OverflowError("gamma: result overflows");
  return std::exp(lg);
}

double gamma(double x) {
  const double lg = log_gamma(x);
  if (lg > kMaxLog) throw OverflowError("gamma: result overflows");
  return gamma_sign(x) * std::exp(lg);
}

Complex reciprocal_gamma(Complex z) {
  const double n = std::round(z.real());
  if (n <= 0.0 && std::abs(z - Complex(n, 0.0)) <= 1e-14 * std::max(1.0, std::fabs(n)))
    return {0.0, 0.0};
  const Complex lg = log_gamma(z);
  if (-lg.real() > kMaxLog) throw OverflowError("reciprocal_gamma: result overflows");
  return std::exp(-lg);
}

double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  const double lg = log_gamma(x);
  if (-lg > kMaxLog) throw OverflowError("reciprocal_gamma: result overflows");
  return gamma_sign(x) * std::exp(-lg);
}

SeriesEvaluation hyp_series(const HypSeriesSpec& spec, std::size_t max_terms) {
  for (double b : spec.lower)
    if (is_nonpositive_integer(b, 1e-14))
      throw DomainError("hyp_series: lower parameter is a non-positive integer");
  const std::size_t p = spec.upper.size();
  const std::size_t q = spec.lower.size();
  const double x = spec.argument;
  const bool asymptotic = p > q + 1;
  bool terminating = false;
  for (double a : spec.upper)
    if (is_nonpositive_integer(a, 1e-14)) terminating = true;
  if (!asymptotic && p == q + 1 && std::fabs(x) >= 1.0 && !terminating)
    throw DomainError("hyp_series: argument outside the disc of convergence");
  if (max_terms == 0) throw DomainError("hyp_series: max_terms must be positive");

  SeriesEvaluation out;
  double term = 1.0;
  double sum = 0.0;
  for (std::size_t n = 0; n < max_terms; ++n) {
    sum += term;
    out.terms_used = n + 1;
    out.last_term = std::fabs(term);
    if (term == 0.0 || (n > 0 && std::fabs(term) < 1e-16 * (1.0 + std::fabs(sum)))) {
      out.value = sum;
      out.regime = SeriesRegime::convergent;
      return out;
    }
    double ratio = x / double(n + 1);
    for (double a : spec.upper) ratio *= a + double(n);
    for (double b : spec.lower) ratio /= b + double(n);
    term *= ratio;
  }
  if (!asymptotic) throw ConvergenceError("hyp_series: no convergence within max_terms");
  out.value = sum;
  out.regime = SeriesRegime::asymptotic_truncated;
  return out;
}

double hyp1f1(double a, double b, double x) {
  if (x < 0.0) return std::exp(x) * hyp1f1(b - a, b, -x);
  return hyp_series({{a}, {b}, x}, 5000).value;
}

namespace {

double pochhammer(double a, int m) {
  double r = 1.0;
  for (int k = 0; k < m; ++k) r *= a + k;
  return r;
}

double kummer_u_combination(double a, double b, double x) {
  const double t1 = gamma(1.0 - b) * reciprocal_gamma(a - b + 1.0) * hyp1f1(a, b, x);
  const double t2 =
      gamma(b - 1.0) * reciprocal_gamma(a) * std::pow(x, 1.0 - b) * hyp1f1(a - b + 1.0, 2.0 - b, x);
  return t1 + t2;
}

// Integral representation, a > 0: x^{-a} / Gamma(a) int e^{-t} t^{a-1} (1 + t/x)^{b-a-1} dt.
double kummer_u_integral(double a, double b, double x) {
  const double p = b - a - 1.0;
  double integral = 0.0;
  if (a < 1.0) {
    // t = v^{1/a} removes the endpoint singularity.
    const double inv = 1.0 / a;
    auto f = [=](double v) {
      if (v <= 0.0) return 1.0;
      const double t = std::pow(v, inv);
      if (t > 1e300) return 0.0;
      return std::exp(-t + p * std::log1p(t / x));
    };
    integral = quadrature::semi_infinite(f, 0.0, 1e-14).value;
    return std::exp(-a * std::log(x) - log_gamma(a + 1.0)) * integral;
  }
  auto f = [=](double t) {
    if (t <= 0.0) return a == 1.0 ? 1.0 : 0.0;
    if (t > 1e300) return 0.0;
    return std::exp(-t + (a - 1.0) * std::log(t) + p * std::log1p(t / x));
  };
  integral = quadrature::semi_infinite(f, 0.0, 1e-14).value;
  return std::exp(-a * std::log(x) - log_gamma(a)) * integral;
}

// Optimally truncated 2F0(a, a-b+1;; -1/x); returns false if not accurate enough.
bool kummer_u_asymptotic(double a, double b, double x, double& out) {
  const double c = a - b + 1.0;
  double term = 1.0;
  double sum = 1.0;
  double prev = 1.0;
  for (int n = 0; n < 400; ++n) {
    term *= -(a + n) * (c + n) / (double(n + 1) * x);
    if (std::fabs(term) > prev) break;
    sum += term;
    prev = std::fabs(term);
    if (prev < 1e-17 * std::fabs(sum)) break;
  }
  if (term == 0.0 || prev <= 1e-15 * std::fabs(sum)) {
    out = std::pow(x, -a) * sum;
    return true;
  }
  return false;
}

}  // namespace

double kummer_U(double a, double b, double x) {
  if (!(x > 0.0)) throw DomainError("kummer_U: x must be positive");
  if (std::fabs(b - std::round(b)) < 1e-12)
    throw UnsupportedParameter("kummer_U: integer b is not supported");
  if (is_nonpositive_integer(a, 1e-14)) {
    const int m = int(-std::round(a));
    return ((m % 2) ? -1.0 : 1.0) * pochhammer(b, m) * hyp1f1(-m, b, x);
  }
  const double a2 = a - b + 1.0;
  if (is_nonpositive_integer(a2, 1e-14)) return std::pow(x, 1.0 - b) * kummer_U(a2, 2.0 - b, x);
  double asym = 0.0;
  if (x >= 25.0 && kummer_u_asymptotic(a, b, x, asym)) return asym;
  if (x <= 2.0) return kummer_u_combination(a, b, x);
  if (a > 0.0) return kummer_u_integral(a, b, x);
  if (a2 > 0.0) return std::pow(x, 1.0 - b) * kummer_u_integral(a2, 2.0 - b, x);
  return kummer_u_combination(a, b, x);
}

}  // namespace specfun
}  // namespace gammatype
