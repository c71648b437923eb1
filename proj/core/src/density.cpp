#include "gammatype/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gammatype/error.hpp"
#include "gammatype/quadrature.hpp"

namespace gammatype::density {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxPoles = 500;
constexpr double kMaxCancellation = 1e6;
constexpr double kWalkReach = 1e5;
constexpr double kCutoffMargin = 1e-6;
constexpr int kMaxLaurentOrder = 16;

// Poles on one side of 0, nearest first, fetched in growing windows.
class PoleWalker {
 public:
  PoleWalker(const GammaTypeRep& rep, int direction) : rep_(rep), dir_(direction) {}

  std::optional<double> next() {
    while (pending_.empty() && reach_ < kWalkReach) fill();
    if (pending_.empty()) return std::nullopt;
    const double loc = pending_.front();
    pending_.erase(pending_.begin());
    return loc;
  }

 private:
  void fill() {
    const double width = std::max(16.0, reach_);
    const double lo = reach_, hi = reach_ + width;
    const auto entries =
        dir_ > 0 ? analysis::spectrum(rep_, lo, hi) : analysis::spectrum(rep_, -hi, -lo);
    std::vector<double> found;
    for (const auto& e : entries) {
      const double r = dir_ * e.location;
      if (e.order > 0 && r > 0.0 && r > last_ + 1e-9 * std::max(1.0, last_)) found.push_back(r);
    }
    std::sort(found.begin(), found.end());
    for (double r : found) {
      pending_.push_back(dir_ * r);
      last_ = r;
    }
    reach_ = hi;
  }

  const GammaTypeRep& rep_;
  int dir_;
  double reach_ = 0.0;
  double last_ = 0.0;
  std::vector<double> pending_;
};

// True when the poles on this side form a finite set.
bool finite_pole_side(const GammaTypeRep& rep, int dir) {
  const auto [lo, hi] = analysis::rho_bounds(rep);
  if (dir > 0 ? std::isinf(hi) : std::isinf(lo)) return true;
  const auto far = dir > 0 ? analysis::spectrum(rep, 5e3, 1e4) : analysis::spectrum(rep, -1e4, -5e3);
  return std::none_of(far.begin(), far.end(), [](const SpectrumEntry& e) { return e.order > 0; });
}

bool has_pole_on_side(const GammaTypeRep& rep, int dir) {
  PoleWalker walker(rep, dir);
  return walker.next().has_value();
}

// log of the magnitude envelope of the residue term at distance r from 0.
double log_envelope(const InvariantParams& p, int dir, double r, double y) {
  const double gp = dir < 0 ? p.gamma_prime : -p.gamma_prime;
  const double kappa = dir < 0 ? p.kappa : -p.kappa;
  const double yy = dir < 0 ? y : -y;
  return p.delta * std::log(r) - gp * r * std::log(r) + (gp - kappa) * r + r * yy;
}

// Contribution of one pole to f_Y(y).
double pole_term(const LaurentData& L, int dir, double y) {
  const double r = std::fabs(L.location);
  double poly = 0.0;
  double ypow = 1.0;
  double fact = 1.0;
  for (std::size_t l = 0; l < L.coefficients.size(); ++l) {
    if (l > 0) fact *= double(l);
    const double c = L.coefficients[l];
    if (dir < 0) {
      poly += c * ypow / fact;  // (-y)^l
    } else {
      poly += ((l % 2 == 0) ? -1.0 : 1.0) * c * ypow / fact;  // (-1)^{l+1} y^l
    }
    ypow *= dir < 0 ? -y : y;
  }
  if (poly == 0.0) return 0.0;
  const double exponent = L.log_scale + (dir < 0 ? r * y : -r * y);
  return poly * std::exp(exponent);
}

SeriesEvaluation refused() {
  SeriesEvaluation out;
  out.regime = SeriesRegime::refused;
  return out;
}

SeriesEvaluation residue_series(const GammaTypeRep& rep, double y, int dir) {
  const InvariantParams p = analysis::params(rep);
  SeriesRegime mode = SeriesRegime::convergent;
  const bool flat = p.gamma == 0.0 || std::fabs(p.gamma_prime) <= 1e-12;
  if (flat) {
    // One-sided validity around x = e^kappa.
    if (std::fabs(std::expm1(y - p.kappa)) < kCutoffMargin) return refused();
    if (dir < 0 ? !(y < p.kappa) : !(y > p.kappa)) return refused();
  } else {
    const bool convergent_side = dir < 0 ? p.gamma_prime > 0.0 : p.gamma_prime < 0.0;
    if (!convergent_side) {
      if (!finite_pole_side(rep, dir) || !has_pole_on_side(rep, dir)) return refused();
      mode = SeriesRegime::asymptotic_truncated;
    }
  }

  SeriesEvaluation out;
  out.regime = mode;
  PoleWalker walker(rep, dir);
  std::vector<std::pair<double, double>> history;  // (r, log|term| - log E(r))
  double sum = 0.0;
  double peak = 0.0;
  bool capped = false;
  std::optional<double> pole = walker.next();
  while (pole) {
    if (out.terms_used == kMaxPoles) {
      out.regime = SeriesRegime::asymptotic_truncated;
      capped = true;
      break;
    }
    const LaurentData L = analysis::laurent(rep, *pole, kMaxLaurentOrder);
    const double term = pole_term(L, dir, y);
    sum += term;
    peak = std::max(peak, std::fabs(term));
    ++out.terms_used;
    out.last_term = std::fabs(term);
    const double r = std::fabs(*pole);
    if (term != 0.0) {
      history.emplace_back(r, std::log(std::fabs(term)) - log_envelope(p, dir, r, y));
      if (history.size() > 4) history.erase(history.begin());
    }
    const std::optional<double> next = walker.next();
    if (!next) {
      out.last_term = 0.0;
      break;
    }
    if (mode == SeriesRegime::convergent &&
        (history.size() >= 3 || (!history.empty() && term == 0.0))) {
      double log_k = -kInf;
      for (const auto& h : history) log_k = std::max(log_k, h.second);
      const double rn = std::fabs(*next);
      const double log_next = log_k + log_envelope(p, dir, rn, y);
      const bool past_peak = log_envelope(p, dir, rn, y) < log_envelope(p, dir, r, y);
      const double scale = 1.0 + std::fabs(sum);
      if (past_peak && log_next < std::log(1e-15 * scale) && std::fabs(term) < 1e-14 * scale) {
        out.last_term = std::exp(log_next);
        break;
      }
    }
    pole = next;
  }
  const bool unconverged = capped && out.last_term * kMaxCancellation > std::fabs(sum);
  if (!std::isfinite(sum) || unconverged || peak > kMaxCancellation * std::fabs(sum)) {
    // Fewer than 10 significant digits survive the cancellation or the truncation.
    out.regime = SeriesRegime::refused;
    out.value = 0.0;
    return out;
  }
  out.value = sum;
  return out;
}

double default_sigma(const InvariantParams& p) {
  if (std::isinf(p.rho_minus) || std::isinf(p.rho_plus)) return 0.0;
  const double mid = 0.5 * (p.rho_minus + p.rho_plus);
  return std::clamp(mid, p.rho_minus + 0.1, p.rho_plus - 0.1);
}

}  // namespace

double log_density_mellin(const GammaTypeRep& rep, double y, std::optional<double> sigma_opt) {
  const InvariantParams p = analysis::params(rep);
  if (!(p.gamma > 0.0)) throw UnsupportedRegime("density_mellin: requires gamma > 0");
  const double sigma = sigma_opt ? *sigma_opt : default_sigma(p);
  if (!(sigma > p.rho_minus && sigma < p.rho_plus))
    throw DomainError("density_mellin: sigma outside the strip");

  const Complex log_f0 = log_evaluate(rep, sigma);
  const double ref = -sigma * y + log_f0.real();
  auto integrand = [&](double t) {
    const Complex s(sigma, t);
    return std::exp(-s * y + log_evaluate(rep, s) - ref).real();
  };

  // Truncation from the imaginary-axis bound, then confirmed on the actual integrand.
  const double log_target = log_f0.real() + std::log(1e-15);
  auto log_bound = [&](double t) {
    return std::log(p.C1) + p.kappa * sigma + (p.delta + p.gamma_prime * sigma) * std::log(t) -
           0.5 * kPi * p.gamma * t;
  };
  double T = 1.0;
  while (log_bound(T) > log_target && T < 1e6) T *= 2.0;
  for (int iter = 0; iter < 60 && T < 1e6; ++iter) {
    if (log_evaluate(rep, Complex(sigma, T)).real() < log_target) break;
    T *= 1.2;
  }

  const double rate = std::fabs(y) + std::fabs(p.gamma_prime) * std::log(2.0 + T) + 1.0;
  const double width = std::min(1.0, 2.0 / rate);
  const int panels = std::max(1, static_cast<int>(std::ceil(T / width)));
  double total = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double a = T * k / panels;
    const double b = T * (k + 1) / panels;
    total += quadrature::adaptive(integrand, a, b, 1e-13, 10).value;
  }
  return std::exp(ref) * total / kPi;
}

double density_mellin(const GammaTypeRep& rep, double x, std::optional<double> sigma) {
  if (!(x > 0.0)) throw DomainError("density_mellin: x must be positive");
  return log_density_mellin(rep, std::log(x), sigma) / x;
}

SeriesEvaluation log_variable_series_from_left(const GammaTypeRep& rep, double y) {
  return residue_series(rep, y, -1);
}

SeriesEvaluation log_variable_series_from_right(const GammaTypeRep& rep, double y) {
  return residue_series(rep, y, 1);
}

SeriesEvaluation density_series_from_left(const GammaTypeRep& rep, double x) {
  if (!(x > 0.0)) throw DomainError("density series: x must be positive");
  SeriesEvaluation e = residue_series(rep, std::log(x), -1);
  e.value /= x;
  e.last_term /= x;
  return e;
}

SeriesEvaluation density_series_from_right(const GammaTypeRep& rep, double x) {
  if (!(x > 0.0)) throw DomainError("density series: x must be positive");
  SeriesEvaluation e = residue_series(rep, std::log(x), 1);
  e.value /= x;
  e.last_term /= x;
  return e;
}

double log_variable_density(const GammaTypeRep& rep, double y, DensityMethod method) {
  switch (method) {
    case DensityMethod::mellin:
      return log_density_mellin(rep, y);
    case DensityMethod::series_left:
    case DensityMethod::series_right: {
      const auto e = method == DensityMethod::series_left ? log_variable_series_from_left(rep, y)
                                                          : log_variable_series_from_right(rep, y);
      if (e.regime == SeriesRegime::refused)
        throw UnsupportedRegime("density: series refused at this point");
      return e.value;
    }
    case DensityMethod::series: {
      const auto left = log_variable_series_from_left(rep, y);
      if (left.regime == SeriesRegime::convergent) return left.value;
      const auto right = log_variable_series_from_right(rep, y);
      if (right.regime == SeriesRegime::convergent) return right.value;
      if (left.regime != SeriesRegime::refused) return left.value;
      if (right.regime != SeriesRegime::refused) return right.value;
      throw UnsupportedRegime("density: both residue series are refused at this point");
    }
  }
  throw DomainError("density: unknown method");
}

double density(const GammaTypeRep& rep, double x, DensityMethod method) {
  if (!(x > 0.0)) throw DomainError("density: x must be positive");
  if (method == DensityMethod::mellin) return density_mellin(rep, x);
  return log_variable_density(rep, std::log(x), method) / x;
}

namespace {

TailLaw power_log_law(const GammaTypeRep& rep, int dir, int max_poles) {
  TailLaw law;
  law.kind = TailKind::power_log;
  law.at_zero = dir < 0;
  PoleWalker walker(rep, dir);
  for (int k = 0; k < max_poles; ++k) {
    const auto pole = walker.next();
    if (!pole) break;
    law.poles.push_back(analysis::laurent(rep, *pole, kMaxLaurentOrder));
  }
  return law;
}

}  // namespace

TailLaw tail_law_at_infinity(const GammaTypeRep& rep, int max_poles) {
  const InvariantParams p = analysis::params(rep);
  if (std::isinf(p.rho_plus) && p.gamma > 0.0) {
    TailLaw law;
    law.kind = TailKind::stretched_exponential;
    law.gamma = p.gamma;
    law.c1 = (p.delta + 0.5) / p.gamma;
    law.c23 = p.gamma * std::exp(-p.kappa / p.gamma);
    law.C23 = p.C1 / std::sqrt(2.0 * kPi * p.gamma) * std::exp(-law.c1 * p.kappa);
    return law;
  }
  return power_log_law(rep, 1, max_poles);
}

TailLaw tail_law_at_zero(const GammaTypeRep& rep, int max_poles) {
  const InvariantParams p = analysis::params(rep);
  if (std::isinf(p.rho_minus) && p.gamma > 0.0) {
    TailLaw law;
    law.kind = TailKind::stretched_exponential;
    law.at_zero = true;
    law.gamma = p.gamma;
    law.c1 = (p.delta + 0.5) / p.gamma;
    law.c23 = p.gamma * std::exp(p.kappa / p.gamma);
    law.C23 = p.C1 / std::sqrt(2.0 * kPi * p.gamma) * std::exp(law.c1 * p.kappa);
    return law;
  }
  return power_log_law(rep, -1, max_poles);
}

double tail_eval(const TailLaw& law, double x, int order) {
  if (!(x > 0.0)) throw DomainError("tail_eval: x must be positive");
  const double lx = std::log(x);
  if (law.kind == TailKind::stretched_exponential) {
    if (law.at_zero)
      return law.C23 * std::exp((-law.c1 - 1.0) * lx - law.c23 * std::pow(x, -1.0 / law.gamma));
    return law.C23 * std::exp((law.c1 - 1.0) * lx - law.c23 * std::pow(x, 1.0 / law.gamma));
  }
  double sum = 0.0;
  const int n = std::min<int>(order, static_cast<int>(law.poles.size()));
  for (int k = 0; k < n; ++k) sum += pole_term(law.poles[k], law.at_zero ? -1 : 1, lx);
  return sum / x;
}

const char* to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::smooth:
      return "smooth-at-0";
    case BoundaryKind::continuous:
      return "continuous-at-0";
    case BoundaryKind::finite_jump:
      return "finite-jump";
    case BoundaryKind::unbounded:
      return "unbounded-at-0";
  }
  return "unknown";
}

BoundaryBehavior boundary_classification(const GammaTypeRep& rep) {
  const auto [rho_minus, rho_plus] = analysis::rho_bounds(rep);
  (void)rho_plus;
  BoundaryBehavior out;
  if (std::isinf(rho_minus)) {
    out.kind = BoundaryKind::smooth;
  } else if (rho_minus < -1.0 - 1e-12) {
    out.kind = BoundaryKind::continuous;
  } else if (std::fabs(rho_minus + 1.0) <= 1e-12 && analysis::nu(rep, rho_minus) == 1) {
    out.kind = BoundaryKind::finite_jump;
    out.value = analysis::laurent(rep, rho_minus).coefficient(1);
  } else {
    out.kind = BoundaryKind::unbounded;
  }
  return out;
}

}  // namespace gammatype::density
