#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "gammatype/specfun.hpp"

namespace gammatype {

// One factor Gamma(a s + b), a != 0.
struct GammaFactor {
  double a = 1.0;
  double b = 0.0;
  friend bool operator==(const GammaFactor&, const GammaFactor&) = default;
};

namespace detail {
struct RhoMemo {
  std::once_flag once;
  double rho_minus = 0.0;
  double rho_plus = 0.0;
};
}  // namespace detail

// F(s) = sign * exp(logC) * exp(d s) * prod Gamma(a_j s + b_j) / prod Gamma(a'_k s + b'_k).
// Immutable after construction.
class GammaTypeRep {
 public:
  GammaTypeRep();
  GammaTypeRep(double log_c, int sign, double d, std::vector<GammaFactor> numerator,
               std::vector<GammaFactor> denominator);

  // Builds a rep with C chosen so that F(0) = 1.
  static GammaTypeRep normalized(double d, std::vector<GammaFactor> numerator,
                                 std::vector<GammaFactor> denominator);

  double log_c() const noexcept { return log_c_; }
  int sign() const noexcept { return sign_; }
  double d() const noexcept { return d_; }
  const std::vector<GammaFactor>& numerator() const noexcept { return num_; }
  const std::vector<GammaFactor>& denominator() const noexcept { return den_; }

  detail::RhoMemo& rho_memo() const { return *memo_; }

 private:
  double log_c_ = 0.0;
  int sign_ = 1;
  double d_ = 0.0;
  std::vector<GammaFactor> num_;
  std::vector<GammaFactor> den_;
  std::shared_ptr<detail::RhoMemo> memo_;
};

// The constant function F = 1.
GammaTypeRep constant_rep();

// Net pole order of F at s: number of singular numerator factors minus singular
// denominator factors, with lattice tolerance tol in s.
int net_order(const GammaTypeRep& rep, Complex s, double tol = 1e-9);

// n when a s + b lies within tol (in s) of the lattice point -n, n >= 0.
std::optional<int> lattice_index(const GammaFactor& f, double s, double tol = 1e-9);

// log F(s) on a branch continuous along horizontal lines; -inf real part at zeros.
Complex log_evaluate(const GammaTypeRep& rep, Complex s);
Complex evaluate(const GammaTypeRep& rep, Complex s);
double evaluate(const GammaTypeRep& rep, double s);

GammaTypeRep normalize(const GammaTypeRep& rep);
GammaTypeRep power(const GammaTypeRep& rep, double alpha);
GammaTypeRep product(const GammaTypeRep& lhs, const GammaTypeRep& rhs);
GammaTypeRep reciprocal(const GammaTypeRep& rep);
GammaTypeRep scale(const GammaTypeRep& rep, double factor);  // rep of factor * X, factor > 0
GammaTypeRep tilt(const GammaTypeRep& rep, double r);
GammaTypeRep shift_offsets_positive(const GammaTypeRep& rep);

enum class FactorSide { numerator, denominator };

// Replaces factor `index` on `side` by m factors via the Gauss multiplication formula.
GammaTypeRep rewrite_multiplication(const GammaTypeRep& rep, FactorSide side, std::size_t index,
                                    int m);

// Rational p/q approximating x with q <= max_den, if one exists within tol.
std::optional<std::pair<long, long>> rational_approximation(double x, long max_den = 64,
                                                            double tol = 1e-9);
bool commensurable(double a1, double a2);

struct Equivalence {
  bool equivalent = false;
  double C = 0.0;
  double D = 0.0;
};

// Tests whether rhs(s) = C D^s lhs(s).
Equivalence equivalent(const GammaTypeRep& lhs, const GammaTypeRep& rhs);

}  // namespace gammatype
