#pragma once

#include <optional>
#include <vector>

#include "gammatype/analysis.hpp"
#include "gammatype/rep.hpp"
#include "gammatype/specfun.hpp"

namespace gammatype::density {

// Density of X by inversion along Re s = sigma. Requires gamma > 0.
double density_mellin(const GammaTypeRep& rep, double x, std::optional<double> sigma = {});
// Density of Y = log X by the same inversion.
double log_density_mellin(const GammaTypeRep& rep, double y, std::optional<double> sigma = {});

// Residue series over the poles left of 0 (expansion in powers of x) and right of 0
// (powers of 1/x). last_term bounds the first omitted term; it is 0 once the pole set
// is exhausted. A series whose terms cancel to fewer than 10 significant digits is
// refused.
SeriesEvaluation density_series_from_left(const GammaTypeRep& rep, double x);
SeriesEvaluation density_series_from_right(const GammaTypeRep& rep, double x);
SeriesEvaluation log_variable_series_from_left(const GammaTypeRep& rep, double y);
SeriesEvaluation log_variable_series_from_right(const GammaTypeRep& rep, double y);

enum class DensityMethod { mellin, series_left, series_right, series };

// f_Y(y) = e^y f_X(e^y) along the chosen path. `series` picks whichever side is
// not refused. Throws UnsupportedRegime when the selected series is refused.
double log_variable_density(const GammaTypeRep& rep, double y,
                            DensityMethod method = DensityMethod::mellin);
// f_X(x) along the chosen path, with the same conventions.
double density(const GammaTypeRep& rep, double x, DensityMethod method = DensityMethod::mellin);

enum class TailKind { stretched_exponential, power_log };

struct TailLaw {
  TailKind kind = TailKind::power_log;
  bool at_zero = false;
  double gamma = 0.0;
  double c1 = 0.0;
  double c23 = 0.0;  // c2 at infinity, c3 at zero
  double C23 = 0.0;  // C2 at infinity, C3 at zero
  std::vector<LaurentData> poles;  // nearest first, for power_log
};

TailLaw tail_law_at_infinity(const GammaTypeRep& rep, int max_poles = 8);
TailLaw tail_law_at_zero(const GammaTypeRep& rep, int max_poles = 8);
// Evaluates the law; power_log keeps the first `order` poles.
double tail_eval(const TailLaw& law, double x, int order = 1);

enum class BoundaryKind { smooth, continuous, finite_jump, unbounded };
const char* to_string(BoundaryKind kind);

struct BoundaryBehavior {
  BoundaryKind kind = BoundaryKind::smooth;
  double value = 0.0;  // f(0+) for finite_jump
};

BoundaryBehavior boundary_classification(const GammaTypeRep& rep);

}  // namespace gammatype::density
