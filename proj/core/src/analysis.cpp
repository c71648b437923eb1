#include "gammatype/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gammatype/error.hpp"

namespace gammatype {

double LaurentData::coefficient(std::size_t l) const {
  if (l == 0 || l > coefficients.size()) return 0.0;
  return coefficients[l - 1] * std::exp(log_scale);
}

namespace analysis {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLog2Pi = 1.8378770664093454835606594728112;
constexpr double kMergeTol = 1e-9;
constexpr double kRhoWindows[] = {8.0, 64.0, 512.0, 4096.0, 1e4};

double sin_pi(double x) {
  const double n = std::round(x);
  const double r = std::sin(kPi * (x - n));
  return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -r : r;
}

void append_lattice(const GammaFactor& f, int sgn, double lo, double hi,
                    std::vector<std::pair<double, int>>& out) {
  const double tol = kMergeTol * std::max({1.0, std::fabs(lo), std::fabs(hi)});
  // Poles at s_n = -(n + b) / a, n >= 0.
  double nlo, nhi;
  if (f.a > 0.0) {
    nlo = -f.a * (hi + tol) - f.b;
    nhi = -f.a * (lo - tol) - f.b;
  } else {
    nlo = -f.a * (lo - tol) - f.b;
    nhi = -f.a * (hi + tol) - f.b;
  }
  const double first = std::max(0.0, std::ceil(nlo));
  const double last = std::floor(nhi);
  if (last < first) return;
  if (last - first > 1e7) throw DomainError("spectrum: window too large");
  for (double n = first; n <= last; n += 1.0) out.emplace_back(-(n + f.b) / f.a, sgn);
}

double first_pole(const GammaTypeRep& rep, int direction) {
  double lower = 0.0;
  for (double width : kRhoWindows) {
    const auto entries =
        direction > 0 ? spectrum(rep, lower, width) : spectrum(rep, -width, -lower);
    if (direction > 0) {
      for (const auto& e : entries)
        if (e.order > 0 && e.location > 0.0) return e.location;
    } else {
      for (auto it = entries.rbegin(); it != entries.rend(); ++it)
        if (it->order > 0 && it->location < 0.0) return it->location;
    }
    lower = width;
  }
  // Beyond the windows, test the leading poles of each numerator factor directly.
  std::vector<double> candidates;
  for (const auto& f : rep.numerator())
    for (int n = 0; n < 64; ++n) {
      const double loc = -(f.b + n) / f.a;
      if (direction * loc > lower) candidates.push_back(loc);
    }
  std::sort(candidates.begin(), candidates.end(),
            [direction](double x, double y) { return direction * x < direction * y; });
  for (double loc : candidates)
    if (nu(rep, loc) > 0) return loc;
  return direction > 0 ? kInf : -kInf;
}

struct SlopeCertificate {
  bool no_positive_poles = false;
  bool no_negative_poles = false;
};

// After lifting all offsets above 0, numerator factors with a > 0 only have poles
// on the negative axis and vice versa.
SlopeCertificate slope_certificate(const GammaTypeRep& rep) {
  SlopeCertificate c;
  try {
    const GammaTypeRep lifted = shift_offsets_positive(rep);
    c.no_positive_poles = std::none_of(lifted.numerator().begin(), lifted.numerator().end(),
                                       [](const GammaFactor& f) { return f.a < 0.0; });
    c.no_negative_poles = std::none_of(lifted.numerator().begin(), lifted.numerator().end(),
                                       [](const GammaFactor& f) { return f.a > 0.0; });
  } catch (const InvalidRep&) {
  }
  return c;
}

double spectrum_gap(const GammaTypeRep& rep, double s0) {
  double gap = kInf;
  for (const auto& e : spectrum(rep, s0 - 1.0, s0 + 1.0)) {
    const double dist = std::fabs(e.location - s0);
    if (dist > kMergeTol * std::max(1.0, std::fabs(s0))) gap = std::min(gap, dist);
  }
  return gap;
}

// Trapezoid rule on the circle |s - s0| = r; coefficients carry r^l.
LaurentData contour_coefficients(const GammaTypeRep& rep, double s0, int order, double r, int nodes) {
  std::vector<Complex> logs(nodes);
  std::vector<Complex> points(nodes);
  double peak = -kInf;
  for (int k = 0; k < nodes; ++k) {
    const double theta = 2.0 * kPi * (k + 0.5) / nodes;
    points[k] = r * Complex(std::cos(theta), std::sin(theta));
    logs[k] = log_evaluate(rep, s0 + points[k]);
    peak = std::max(peak, logs[k].real());
  }
  LaurentData out;
  out.location = s0;
  out.log_scale = peak;
  out.coefficients.assign(order, 0.0);
  for (int l = 1; l <= order; ++l) {
    Complex acc = 0.0;
    for (int k = 0; k < nodes; ++k) acc += std::exp(logs[k] - peak) * std::pow(points[k], l);
    out.coefficients[l - 1] = acc.real() / nodes;
  }
  return out;
}

}  // namespace

int nu(const GammaTypeRep& rep, double s) { return net_order(rep, Complex(s, 0.0), kMergeTol); }

std::vector<SpectrumEntry> spectrum(const GammaTypeRep& rep, double lo, double hi) {
  std::vector<std::pair<double, int>> pts;
  for (const auto& f : rep.numerator()) append_lattice(f, 1, lo, hi, pts);
  for (const auto& f : rep.denominator()) append_lattice(f, -1, lo, hi, pts);
  std::sort(pts.begin(), pts.end());
  std::vector<SpectrumEntry> out;
  std::size_t i = 0;
  while (i < pts.size()) {
    const double loc = pts[i].first;
    int order = 0;
    std::size_t j = i;
    while (j < pts.size() && pts[j].first - loc <= kMergeTol * std::max(1.0, std::fabs(loc)))
      order += pts[j++].second;
    if (order != 0) out.push_back({loc, order});
    i = j;
  }
  return out;
}

std::pair<double, double> rho_bounds(const GammaTypeRep& rep) {
  auto& memo = rep.rho_memo();
  std::call_once(memo.once, [&] {
    const SlopeCertificate cert = slope_certificate(rep);
    memo.rho_plus = cert.no_positive_poles ? kInf : first_pole(rep, 1);
    memo.rho_minus = cert.no_negative_poles ? -kInf : first_pole(rep, -1);
  });
  return {memo.rho_minus, memo.rho_plus};
}

InvariantParams params(const GammaTypeRep& rep) {
  InvariantParams p;
  const auto& num = rep.numerator();
  const auto& den = rep.denominator();
  double log_c1 = rep.log_c();
  p.kappa = rep.d();
  for (const auto& f : num) {
    p.gamma += std::fabs(f.a);
    p.gamma_prime += f.a;
    p.delta += f.b - 0.5;
    p.kappa += f.a * std::log(std::fabs(f.a));
    log_c1 += 0.5 * kLog2Pi + (f.b - 0.5) * std::log(std::fabs(f.a));
  }
  for (const auto& f : den) {
    p.gamma -= std::fabs(f.a);
    p.gamma_prime -= f.a;
    p.delta -= f.b - 0.5;
    p.kappa -= f.a * std::log(std::fabs(f.a));
    log_c1 -= 0.5 * kLog2Pi + (f.b - 0.5) * std::log(std::fabs(f.a));
  }
  p.C1 = std::exp(log_c1);
  std::tie(p.rho_minus, p.rho_plus) = rho_bounds(rep);
  return p;
}

LaurentData laurent_contour(const GammaTypeRep& rep, double s0, int max_order) {
  const int order = nu(rep, s0);
  LaurentData out;
  out.location = s0;
  if (order <= 0) return out;
  if (order > max_order) throw DomainError("laurent: pole order exceeds max_order");
  const double r = std::min(0.45 * spectrum_gap(rep, s0), 0.25);
  LaurentData coarse = contour_coefficients(rep, s0, order, r, 256);
  LaurentData fine = contour_coefficients(rep, s0, order, r, 512);
  double scale = 0.0, diff = 0.0;
  for (int l = 1; l <= order; ++l) {
    scale = std::max(scale, std::fabs(fine.coefficient(l)));
    diff = std::max(diff, std::fabs(fine.coefficient(l) - coarse.coefficient(l)));
  }
  return diff > 1e-10 * scale ? fine : coarse;
}

LaurentData laurent(const GammaTypeRep& rep, double s0, int max_order) {
  const int order = nu(rep, s0);
  LaurentData out;
  out.location = s0;
  if (order <= 0) return out;
  if (order > max_order) throw DomainError("laurent: pole order exceeds max_order");
  if (order > 1) return laurent_contour(rep, s0, max_order);
  // Simple pole: each singular factor contributes (-1)^n / (n! a h).
  std::vector<GammaFactor> num_rest, den_rest;
  double log_mag = 0.0;
  int sign = 1;
  double location = s0;
  bool located = false;
  auto split = [&](const std::vector<GammaFactor>& fs, std::vector<GammaFactor>& rest, int side) {
    for (const auto& f : fs) {
      const auto n = lattice_index(f, s0);
      if (!n) {
        rest.push_back(f);
        continue;
      }
      if (!located && side > 0) {
        location = (-double(*n) - f.b) / f.a;
        located = true;
      }
      log_mag -= side * (std::lgamma(*n + 1.0) + std::log(std::fabs(f.a)));
      if ((*n % 2 == 1) != (f.a < 0.0)) sign = -sign;
    }
  };
  split(rep.numerator(), num_rest, 1);
  split(rep.denominator(), den_rest, -1);
  const GammaTypeRep rest(rep.log_c(), rep.sign(), rep.d(), num_rest, den_rest);
  const Complex lr = log_evaluate(rest, location);
  out.location = location;
  out.log_scale = log_mag + lr.real();
  out.coefficients = {sign * (std::cos(lr.imag()) >= 0.0 ? 1.0 : -1.0)};
  return out;
}

double imag_axis_asymptotic(const GammaTypeRep& rep, double t) {
  const InvariantParams p = params(rep);
  const double at = std::fabs(t);
  return p.C1 * std::exp(p.delta * std::log(at) - 0.5 * kPi * p.gamma * at);
}

double strip_asymptotic(const GammaTypeRep& rep, double sigma, double t) {
  const InvariantParams p = params(rep);
  return std::exp(p.kappa * sigma + p.gamma_prime * sigma * std::log(std::fabs(t))) *
         imag_axis_asymptotic(rep, t);
}

double real_axis_asymptotic(const GammaTypeRep& rep, double s) {
  const InvariantParams p = params(rep);
  const double as = std::fabs(s);
  return p.C1 * std::exp(p.delta * std::log(as) + p.gamma_prime * s * std::log(as) +
                         (p.kappa - p.gamma_prime) * s);
}

double sine_margin(const GammaTypeRep& rep, double s) {
  double margin = 1.0;
  for (const auto& f : rep.numerator()) margin = std::min(margin, std::fabs(sin_pi(f.a * s + f.b)));
  for (const auto& f : rep.denominator())
    margin = std::min(margin, std::fabs(sin_pi(f.a * s + f.b)));
  return margin;
}

SafeAbscissa safe_abscissa(const GammaTypeRep& rep, double near) {
  SafeAbscissa best{near, sine_margin(rep, near)};
  for (int k = -1000; k <= 1000; ++k) {
    const double s = near + 1e-3 * k;
    const double m = sine_margin(rep, s);
    if (m > best.margin + 1e-12 ||
        (m >= best.margin - 1e-12 && std::fabs(s - near) < std::fabs(best.point - near))) {
      best = {s, m};
    }
  }
  return best;
}

int pole_density(const GammaTypeRep& rep, double x) {
  if (x == 0.0) return 0;
  int count = 0;
  const auto entries = x > 0.0 ? spectrum(rep, 0.0, x) : spectrum(rep, x, 0.0);
  for (const auto& e : entries)
    if (e.location != 0.0) count += e.order;
  return count;
}

double psi_arctan(double sigma, double t) {
  if (t == 0.0) return 0.0;
  return t * std::atan(t / sigma) - 0.5 * sigma * std::log1p((t / sigma) * (t / sigma));
}

double positive_slope_sum(const GammaTypeRep& rep) {
  double sum = 0.0;
  for (const auto& f : rep.numerator())
    if (f.a > 0.0) sum += f.a;
  for (const auto& f : rep.denominator())
    if (f.a > 0.0) sum -= f.a;
  return sum;
}

}  // namespace analysis
}  // namespace gammatype
