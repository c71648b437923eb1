#include "gammatype/rep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gammatype/analysis.hpp"
#include "gammatype/error.hpp"

namespace gammatype {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLog2Pi = 1.8378770664093454835606594728112;
constexpr double kMaxLog = 709.78;
constexpr double kRemovableStep = 1e-7;

void validate_factors(const std::vector<GammaFactor>& factors) {
  for (const auto& f : factors)
    if (!(f.a != 0.0) || !std::isfinite(f.a) || !std::isfinite(f.b))
      throw InvalidRep("gamma factor needs a finite nonzero slope and finite offset");
}

// A factor whose argument lies on the lattice {0, -1, -2, ...} at s.
struct LatticeHit {
  bool hit = false;
  int n = 0;
  double location = 0.0;
};

LatticeHit lattice_hit(const GammaFactor& f, Complex s, double tol) {
  LatticeHit h;
  if (std::fabs(s.imag()) > tol) return h;
  const double n = std::round(-(f.a * s.real() + f.b));
  if (n < 0.0) return h;
  const double loc = (-n - f.b) / f.a;
  if (std::fabs(s.real() - loc) > tol * std::max(1.0, std::fabs(loc))) return h;
  h.hit = true;
  h.n = static_cast<int>(n);
  h.location = loc;
  return h;
}

// log Gamma(-n + eta) for small nonzero eta, without forming -n + eta.
Complex log_gamma_near_pole(int n, Complex eta) {
  Complex v = std::log(kPi / std::sin(kPi * eta)) - specfun::log_gamma(Complex(1.0 + n) - eta);
  if (n % 2) v += Complex(0.0, kPi);
  return v;
}

Complex log_constant(const GammaTypeRep& rep) {
  return {rep.log_c(), rep.sign() < 0 ? kPi : 0.0};
}

Complex log_evaluate_regular(const GammaTypeRep& rep, Complex s) {
  Complex v = log_constant(rep) + rep.d() * s;
  for (const auto& f : rep.numerator()) v += specfun::log_gamma(f.a * s + f.b);
  for (const auto& f : rep.denominator()) v -= specfun::log_gamma(f.a * s + f.b);
  return v;
}

struct SingularSet {
  std::vector<LatticeHit> num;
  std::vector<LatticeHit> den;
  int order = 0;
  bool any = false;
  double location = 0.0;
};

SingularSet classify(const GammaTypeRep& rep, Complex s, double tol) {
  SingularSet out;
  auto scan = [&](const std::vector<GammaFactor>& factors, std::vector<LatticeHit>& hits, int sgn) {
    hits.reserve(factors.size());
    for (const auto& f : factors) {
      hits.push_back(lattice_hit(f, s, tol));
      if (hits.back().hit) {
        if (!out.any) out.location = hits.back().location;
        out.any = true;
        out.order += sgn;
      }
    }
  };
  scan(rep.numerator(), out.num, 1);
  scan(rep.denominator(), out.den, -1);
  return out;
}

// log F(s0 + h) with singular factors evaluated on their exact lattice offsets.
Complex log_evaluate_offset(const GammaTypeRep& rep, const SingularSet& sing, Complex h) {
  const Complex s = sing.location + h;
  Complex v = log_constant(rep) + rep.d() * s;
  const auto& num = rep.numerator();
  const auto& den = rep.denominator();
  for (std::size_t j = 0; j < num.size(); ++j)
    v += sing.num[j].hit ? log_gamma_near_pole(sing.num[j].n, num[j].a * h)
                         : specfun::log_gamma(num[j].a * s + num[j].b);
  for (std::size_t k = 0; k < den.size(); ++k)
    v -= sing.den[k].hit ? log_gamma_near_pole(sing.den[k].n, den[k].a * h)
                         : specfun::log_gamma(den[k].a * s + den[k].b);
  return v;
}

Complex log_evaluate_removable(const GammaTypeRep& rep, const SingularSet& sing, Complex s) {
  const Complex delta = s - sing.location;
  const double ref = log_evaluate_offset(rep, sing, delta + kRemovableStep).real();
  auto average = [&](double eps) {
    return 0.5 * (std::exp(log_evaluate_offset(rep, sing, delta + eps) - ref) +
                  std::exp(log_evaluate_offset(rep, sing, delta - eps) - ref));
  };
  const Complex value = (4.0 * average(0.5 * kRemovableStep) - average(kRemovableStep)) / 3.0;
  return std::log(value) + ref;
}

}  // namespace

GammaTypeRep::GammaTypeRep() : memo_(std::make_shared<detail::RhoMemo>()) {}

GammaTypeRep::GammaTypeRep(double log_c, int sign, double d, std::vector<GammaFactor> numerator,
                           std::vector<GammaFactor> denominator)
    : log_c_(log_c),
      sign_(sign),
      d_(d),
      num_(std::move(numerator)),
      den_(std::move(denominator)),
      memo_(std::make_shared<detail::RhoMemo>()) {
  if (sign != 1 && sign != -1) throw InvalidRep("sign must be +1 or -1");
  if (!std::isfinite(log_c) || !std::isfinite(d)) throw InvalidRep("logC and d must be finite");
  validate_factors(num_);
  validate_factors(den_);
}

GammaTypeRep GammaTypeRep::normalized(double d, std::vector<GammaFactor> numerator,
                                      std::vector<GammaFactor> denominator) {
  return normalize(GammaTypeRep(0.0, 1, d, std::move(numerator), std::move(denominator)));
}

GammaTypeRep constant_rep() { return GammaTypeRep(); }

int net_order(const GammaTypeRep& rep, Complex s, double tol) {
  return classify(rep, s, tol).order;
}

std::optional<int> lattice_index(const GammaFactor& f, double s, double tol) {
  const LatticeHit h = lattice_hit(f, s, tol);
  if (!h.hit) return std::nullopt;
  return h.n;
}

Complex log_evaluate(const GammaTypeRep& rep, Complex s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw DomainError("evaluate: non-finite argument");
  const SingularSet sing = classify(rep, s, 1e-9);
  if (!sing.any) return log_evaluate_regular(rep, s);
  if (sing.order > 0)
    throw PoleError("evaluate: pole of order " + std::to_string(sing.order) + " at s = " +
                        std::to_string(sing.location),
                    sing.location, sing.order);
  if (sing.order < 0) return {-std::numeric_limits<double>::infinity(), 0.0};
  return log_evaluate_removable(rep, sing, s);
}

Complex evaluate(const GammaTypeRep& rep, Complex s) {
  const Complex lv = log_evaluate(rep, s);
  if (lv.real() > kMaxLog) throw OverflowError("evaluate: result overflows");
  if (std::isinf(lv.real())) return {0.0, 0.0};
  return std::exp(lv);
}

double evaluate(const GammaTypeRep& rep, double s) { return evaluate(rep, Complex(s, 0.0)).real(); }

GammaTypeRep normalize(const GammaTypeRep& rep) {
  const GammaTypeRep bare(0.0, 1, rep.d(), rep.numerator(), rep.denominator());
  if (net_order(bare, 0.0) != 0) throw InvalidRep("normalize: net pole or zero at s = 0");
  const Complex lv = log_evaluate(bare, 0.0);
  if (!std::isfinite(lv.real())) throw InvalidRep("normalize: F(0) is not finite");
  const int sign = std::cos(lv.imag()) >= 0.0 ? 1 : -1;
  return GammaTypeRep(-lv.real(), sign, rep.d(), rep.numerator(), rep.denominator());
}

GammaTypeRep power(const GammaTypeRep& rep, double alpha) {
  if (!(alpha != 0.0) || !std::isfinite(alpha)) throw DomainError("power: alpha must be nonzero");
  auto scale_slopes = [alpha](std::vector<GammaFactor> fs) {
    for (auto& f : fs) f.a *= alpha;
    return fs;
  };
  return GammaTypeRep(rep.log_c(), rep.sign(), alpha * rep.d(), scale_slopes(rep.numerator()),
                      scale_slopes(rep.denominator()));
}

GammaTypeRep product(const GammaTypeRep& lhs, const GammaTypeRep& rhs) {
  auto num = lhs.numerator();
  num.insert(num.end(), rhs.numerator().begin(), rhs.numerator().end());
  auto den = lhs.denominator();
  den.insert(den.end(), rhs.denominator().begin(), rhs.denominator().end());
  return GammaTypeRep(lhs.log_c() + rhs.log_c(), lhs.sign() * rhs.sign(), lhs.d() + rhs.d(),
                      std::move(num), std::move(den));
}

GammaTypeRep reciprocal(const GammaTypeRep& rep) { return power(rep, -1.0); }

GammaTypeRep scale(const GammaTypeRep& rep, double factor) {
  if (!(factor > 0.0)) throw DomainError("scale: factor must be positive");
  return GammaTypeRep(rep.log_c(), rep.sign(), rep.d() + std::log(factor), rep.numerator(),
                      rep.denominator());
}

GammaTypeRep tilt(const GammaTypeRep& rep, double r) {
  if (r == 0.0) return rep;
  const auto [lo, hi] = analysis::rho_bounds(rep);
  if (!(r > lo && r < hi)) throw DomainError("tilt: r outside the strip");
  auto shift = [r](std::vector<GammaFactor> fs) {
    for (auto& f : fs) f.b += f.a * r;
    return fs;
  };
  return normalize(GammaTypeRep(0.0, 1, rep.d(), shift(rep.numerator()), shift(rep.denominator())));
}

GammaTypeRep shift_offsets_positive(const GammaTypeRep& rep) {
  double log_c = rep.log_c();
  int sign = rep.sign();
  std::vector<std::pair<double, int>> roots;  // (r, m) for (s - r)^m
  auto add_root = [&roots](double r, int m) {
    for (auto& [root, mult] : roots)
      if (std::fabs(root - r) <= 1e-12 * std::max(1.0, std::fabs(r))) {
        mult += m;
        return;
      }
    roots.emplace_back(r, m);
  };
  // Gamma(a s + b) = Gamma(a s + b + 1) / (a (s - r)), r = -b / a.
  auto lift = [&](std::vector<GammaFactor> fs, int side) {
    for (auto& f : fs) {
      while (f.b <= 0.0) {
        log_c -= side * std::log(std::fabs(f.a));
        if (f.a < 0.0) sign = -sign;
        add_root(-f.b / f.a, -side);
        f.b += 1.0;
      }
    }
    return fs;
  };
  auto num = lift(rep.numerator(), 1);
  auto den = lift(rep.denominator(), -1);
  for (const auto& [r, m] : roots) {
    if (m == 0) continue;
    if (std::fabs(r) <= 1e-12) throw InvalidRep("shift_offsets_positive: net pole or zero at 0");
    auto& up = m > 0 ? num : den;
    auto& down = m > 0 ? den : num;
    for (int k = 0; k < std::abs(m); ++k) {
      if (r < 0.0) {
        // s - r = Gamma(s - r + 1) / Gamma(s - r)
        up.push_back({1.0, -r + 1.0});
        down.push_back({1.0, -r});
      } else {
        // s - r = -Gamma(r - s + 1) / Gamma(r - s)
        up.push_back({-1.0, r + 1.0});
        down.push_back({-1.0, r});
        sign = -sign;
      }
    }
  }
  return GammaTypeRep(log_c, sign, rep.d(), std::move(num), std::move(den));
}

GammaTypeRep rewrite_multiplication(const GammaTypeRep& rep, FactorSide side, std::size_t index,
                                    int m) {
  if (m < 2) throw DomainError("rewrite_multiplication: m must be at least 2");
  auto num = rep.numerator();
  auto den = rep.denominator();
  auto& fs = side == FactorSide::numerator ? num : den;
  if (index >= fs.size()) throw DomainError("rewrite_multiplication: index out of range");
  const GammaFactor f = fs[index];
  fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(index));
  for (int k = 0; k < m; ++k) fs.push_back({f.a / m, (f.b + k) / m});
  // Gamma(m z) = (2 pi)^{(1-m)/2} m^{m z - 1/2} prod_k Gamma(z + k/m)
  const double lm = std::log(double(m));
  const double sgn = side == FactorSide::numerator ? 1.0 : -1.0;
  const double log_c = rep.log_c() + sgn * (0.5 * (1.0 - m) * kLog2Pi + (f.b - 0.5) * lm);
  const double d = rep.d() + sgn * f.a * lm;
  return GammaTypeRep(log_c, rep.sign(), d, std::move(num), std::move(den));
}

std::optional<std::pair<long, long>> rational_approximation(double x, long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Continued-fraction convergents.
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(r);
    if (std::fabs(fl) > 1e15) break;
    const long ai = static_cast<long>(fl);
    const long p2 = ai * p1 + p0;
    const long q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    if (std::fabs(x - double(p2) / double(q2)) <= tol * std::max(1.0, std::fabs(x)))
      return std::make_pair(p2, q2);
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = r - fl;
    if (frac == 0.0) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

bool commensurable(double a1, double a2) {
  if (a1 == 0.0 || a2 == 0.0) return false;
  return rational_approximation(a1 / a2).has_value();
}

Equivalence equivalent(const GammaTypeRep& lhs, const GammaTypeRep& rhs) {
  Equivalence out;
  const auto sl = analysis::spectrum(lhs, -40.0, 40.0);
  const auto sr = analysis::spectrum(rhs, -40.0, 40.0);
  if (sl.size() != sr.size()) return out;
  for (std::size_t i = 0; i < sl.size(); ++i) {
    if (sl[i].order != sr[i].order) return out;
    if (std::fabs(sl[i].location - sr[i].location) >
        1e-9 * std::max(1.0, std::fabs(sl[i].location)))
      return out;
  }
  // Move real sample points away from spectrum entries.
  auto nudge = [&sl](double p) {
    for (int iter = 0; iter < 50; ++iter) {
      bool close = false;
      for (const auto& e : sl)
        if (std::fabs(e.location - p) < 0.02) close = true;
      if (!close) return p;
      p += 0.0371;
    }
    return p;
  };
  auto log_ratio = [&](Complex s) { return log_evaluate(rhs, s) - log_evaluate(lhs, s); };
  try {
    const double p1 = nudge(0.3);
    const double p2 = nudge(0.7);
    const Complex l1 = log_ratio(p1);
    const Complex l2 = log_ratio(p2);
    if (!std::isfinite(l1.real()) || !std::isfinite(l2.real())) return out;
    const int s1 = std::cos(l1.imag()) >= 0.0 ? 1 : -1;
    const int s2 = std::cos(l2.imag()) >= 0.0 ? 1 : -1;
    if (s1 != s2) return out;
    const double log_d = (l2.real() - l1.real()) / (p2 - p1);
    const double log_c = l1.real() - p1 * log_d;
    const Complex fit_c(log_c, s1 < 0 ? kPi : 0.0);
    const Complex points[] = {nudge(0.3), nudge(-0.3), nudge(0.7), nudge(-0.7),
                              Complex(0.0, 1.1), Complex(0.0, -1.1)};
    for (const Complex& s : points) {
      const Complex diff = log_ratio(s) - (fit_c + s * log_d);
      if (!std::isfinite(diff.real()) || std::abs(std::exp(diff) - 1.0) > 1e-10) return out;
    }
    out.equivalent = true;
    out.C = s1 * std::exp(log_c);
    out.D = std::exp(log_d);
  } catch (const Error&) {
    return out;
  }
  return out;
}

}  // namespace gammatype
