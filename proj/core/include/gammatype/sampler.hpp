#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gammatype/catalog.hpp"
#include "gammatype/rep.hpp"

namespace gammatype::sampler {

// Philox4x32-10 counter-based generator. (seed, stream) fixes the sequence.
class RngStream {
 public:
  using result_type = std::uint32_t;

  explicit RngStream(std::uint64_t seed = 0, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  // Independent child stream derived from this stream's identity.
  RngStream split(std::uint64_t index) const;

  double uniform();  // in (0, 1)
  double exponential();
  double normal();
  double gamma(double shape);

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int used_ = 4;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct McStatistic {
  std::string name;
  double empirical = 0.0;
  double predicted = 0.0;
  double standard_error = 0.0;
  double z_score = 0.0;
  double allowance = 0.0;  // deterministic slack added to 4 standard errors
  bool pass(double z_limit = 4.0) const;
};

struct McReport {
  std::string label;
  std::vector<McStatistic> statistics;
  std::size_t samples = 0;
  std::map<std::string, double> discretization;
  bool passed(double z_limit = 4.0) const;
  std::string to_json(int indent = 2) const;
};

McStatistic make_statistic(std::string name, double empirical, double predicted, double se,
                           double allowance = 0.0);

// Area under the running maximum of the grid path with the given increments over [0, T].
double brownian_sup_area_from_increments(std::span<const double> increments, double T = 1.0);
// Same area for a simulated path; the running maximum includes the exact bridge maximum
// within each step.
double sample_brownian_sup_area(std::size_t nsteps, RngStream& rng, double T = 1.0);

double sample_stable(double alpha, RngStream& rng);
double sample_mittag_leffler(double alpha, RngStream& rng);
double sample_pillai(double alpha, RngStream& rng);
double sample_hashing_M(RngStream& rng, std::size_t nsteps);

// Ball masses (B_n, W_n) after n_draws. A black draw adds a black and b white; a
// white draw adds c black and d white.
std::pair<double, double> sample_urn(double a, double b, double c, double d, double b0, double w0,
                                     std::size_t n_draws, RngStream& rng);

// Draws from a rep recognised as e^d times a product of independent Gamma powers.
std::optional<double> sample_rep(const GammaTypeRep& rep, RngStream& rng);

inline constexpr std::size_t kDefaultSteps = std::size_t{1} << 14;

// One draw of X for a catalog entry; `steps` is the path or urn resolution.
double sample_entry(const catalog::CatalogEntry& entry, RngStream& rng,
                    std::size_t steps = kDefaultSteps);
bool has_sampler(const catalog::CatalogEntry& entry);

// N draws split into fixed chunks on derived streams; the result does not depend on
// the thread count.
std::vector<double> sample_many(const std::function<double(RngStream&)>& draw, std::size_t n,
                                const RngStream& rng, unsigned threads = 0);

McReport verify_moments(const catalog::CatalogEntry& entry, const std::vector<double>& s_list,
                        std::size_t n, const RngStream& rng, std::size_t steps = kDefaultSteps,
                        double allowance = 0.0);
// Histogram estimate at each grid point with Freedman-Diaconis bin width.
McReport verify_density(const catalog::CatalogEntry& entry, const std::vector<double>& grid,
                        std::size_t n, const RngStream& rng, std::size_t steps = kDefaultSteps);
// Both sides of the double Laplace identity for the Brownian supremum area, by quadrature.
McReport verify_double_laplace(double alpha, const std::vector<double>& lambdas,
                               double rel_tol = 1e-6);

// Kolmogorov-Smirnov distance between a sample and a CDF.
double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf);

}  // namespace gammatype::sampler
