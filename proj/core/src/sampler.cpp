#include "gammatype/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include <json.hpp>

#include "gammatype/density.hpp"
#include "gammatype/error.hpp"
#include "gammatype/quadrature.hpp"

namespace gammatype::sampler {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;
constexpr std::size_t kChunks = 64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe mean_se(const std::vector<double>& v) {
  const std::size_t n = v.size();
  if (n == 0) return {};
  const double mean = pairwise_sum(v.data(), n) / n;
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) sq[i] = (v[i] - mean) * (v[i] - mean);
  const double var = n > 1 ? pairwise_sum(sq.data(), n) / (n - 1) : 0.0;
  return {mean, std::sqrt(var / n)};
}

double param(const catalog::SamplerTag& tag, std::size_t i) {
  if (i >= tag.params.size()) throw DomainError("sampler: missing parameter for " + tag.kind);
  return tag.params[i];
}

double predicted_density(const catalog::CatalogEntry& entry, double x) {
  if (auto v = catalog::oracle_density(entry, x)) return *v;
  return density::density(entry.rep, x, density::DensityMethod::mellin);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

void RngStream::refill() {
  std::uint32_t c0 = static_cast<std::uint32_t>(counter_);
  std::uint32_t c1 = static_cast<std::uint32_t>(counter_ >> 32);
  std::uint32_t c2 = static_cast<std::uint32_t>(stream_);
  std::uint32_t c3 = static_cast<std::uint32_t>(stream_ >> 32);
  std::uint32_t k0 = static_cast<std::uint32_t>(seed_);
  std::uint32_t k1 = static_cast<std::uint32_t>(seed_ >> 32);
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t{kPhiloxM0} * c0;
    const std::uint64_t p1 = std::uint64_t{kPhiloxM1} * c2;
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
    c0 = hi1 ^ c1 ^ k0;
    c1 = lo1;
    c2 = hi0 ^ c3 ^ k1;
    c3 = lo0;
    k0 += kPhiloxW0;
    k1 += kPhiloxW1;
  }
  block_ = {c0, c1, c2, c3};
  ++counter_;
  used_ = 0;
}

RngStream::result_type RngStream::operator()() {
  if (used_ == 4) refill();
  return block_[used_++];
}

RngStream RngStream::split(std::uint64_t index) const {
  return RngStream(seed_, splitmix64(stream_ ^ splitmix64(index + 1)));
}

double RngStream::uniform() {
  const std::uint64_t hi = (*this)();
  const std::uint64_t lo = (*this)();
  const std::uint64_t bits = ((hi << 32) | lo) >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double RngStream::exponential() { return -std::log(uniform()); }

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double theta = 2.0 * kPi * uniform();
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

double RngStream::gamma(double shape) {
  if (!(shape > 0.0)) throw DomainError("gamma draw: shape must be positive");
  std::gamma_distribution<double> dist(shape, 1.0);
  return dist(*this);
}

bool McStatistic::pass(double z_limit) const {
  return std::isfinite(empirical) &&
         std::fabs(empirical - predicted) <= z_limit * standard_error + allowance;
}

bool McReport::passed(double z_limit) const {
  return std::all_of(statistics.begin(), statistics.end(),
                     [z_limit](const McStatistic& s) { return s.pass(z_limit); });
}

std::string McReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["label"] = label;
  j["samples"] = samples;
  j["discretization"] = discretization;
  j["passed"] = passed();
  auto& stats = j["statistics"] = nlohmann::ordered_json::array();
  for (const auto& s : statistics) {
    stats.push_back({{"name", s.name},
                     {"empirical", s.empirical},
                     {"predicted", s.predicted},
                     {"standard_error", s.standard_error},
                     {"z_score", s.z_score},
                     {"allowance", s.allowance},
                     {"pass", s.pass()}});
  }
  return j.dump(indent);
}

McStatistic make_statistic(std::string name, double empirical, double predicted, double se,
                           double allowance) {
  McStatistic s;
  s.name = std::move(name);
  s.empirical = empirical;
  s.predicted = predicted;
  s.standard_error = se;
  s.z_score = se > 0.0 ? (empirical - predicted) / se : 0.0;
  s.allowance = allowance;
  return s;
}

double brownian_sup_area_from_increments(std::span<const double> increments, double T) {
  if (increments.size() < 2) throw DomainError("brownian_sup_area: nsteps must be at least 2");
  const double dt = T / increments.size();
  double b = 0.0, sup = 0.0, area = 0.0;
  for (double inc : increments) {
    b += inc;
    const double next = std::max(sup, b);
    area += 0.5 * (sup + next);
    sup = next;
  }
  return area * dt;
}

double sample_brownian_sup_area(std::size_t nsteps, RngStream& rng, double T) {
  if (nsteps < 2) throw DomainError("brownian_sup_area: nsteps must be at least 2");
  const double dt = T / nsteps;
  const double sd = std::sqrt(dt);
  double b = 0.0, sup = 0.0, area = 0.0;
  for (std::size_t k = 0; k < nsteps; ++k) {
    const double step = sd * rng.normal();
    // Maximum of the Brownian bridge between consecutive grid points.
    const double bridge =
        b + 0.5 * (step + std::sqrt(step * step - 2.0 * dt * std::log(rng.uniform())));
    b += step;
    const double next = std::max(sup, bridge);
    area += 0.5 * (sup + next);
    sup = next;
  }
  return area * dt;
}

double sample_stable(double alpha, RngStream& rng) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("stable: alpha must lie in (0, 1]");
  if (alpha == 1.0) return 1.0;
  // Kanter: S = (A(U) / E)^{(1-alpha)/alpha}.
  const double u = kPi * rng.uniform();
  const double e = rng.exponential();
  const double log_a = alpha / (1.0 - alpha) * std::log(std::sin(alpha * u)) +
                       std::log(std::sin((1.0 - alpha) * u)) -
                       std::log(std::sin(u)) / (1.0 - alpha);
  return std::exp((1.0 - alpha) / alpha * (log_a - std::log(e)));
}

double sample_mittag_leffler(double alpha, RngStream& rng) {
  if (alpha == 1.0) return 1.0;
  return std::pow(sample_stable(alpha, rng), -alpha);
}

double sample_pillai(double alpha, RngStream& rng) {
  const double t = rng.exponential();
  if (alpha == 1.0) return t;
  return std::pow(t, 1.0 / alpha) * sample_stable(alpha, rng);
}

double sample_hashing_M(RngStream& rng, std::size_t nsteps) {
  const double area = sample_brownian_sup_area(nsteps, rng);
  const double t = rng.exponential();
  return std::cbrt(t * t / (area * area));
}

std::pair<double, double> sample_urn(double a, double b, double c, double d, double b0, double w0,
                                     std::size_t n_draws, RngStream& rng) {
  if (a < 0.0 || b < 0.0 || c < 0.0 || d < 0.0)
    throw DomainError("urn: replacement entries must be nonnegative");
  if (b0 < 0.0 || w0 < 0.0 || b0 + w0 <= 0.0) throw DomainError("urn: empty initial urn");
  double black = b0, white = w0;
  for (std::size_t k = 0; k < n_draws; ++k) {
    if (rng.uniform() * (black + white) < black) {
      black += a;
      white += b;
    } else {
      black += c;
      white += d;
    }
  }
  return {black, white};
}

std::optional<double> sample_rep(const GammaTypeRep& rep, RngStream& rng) {
  const GammaTypeRep n = normalize(rep);
  if (!n.denominator().empty() || n.sign() != 1) return std::nullopt;
  double log_norm = n.log_c();
  for (const auto& f : n.numerator()) {
    if (!(f.b > 0.0)) return std::nullopt;
    log_norm += std::lgamma(f.b);
  }
  if (std::fabs(log_norm) > 1e-10) return std::nullopt;
  double log_x = n.d();
  for (const auto& f : n.numerator()) log_x += f.a * std::log(rng.gamma(f.b));
  return std::exp(log_x);
}

bool has_sampler(const catalog::CatalogEntry& entry) { return !entry.sampler.kind.empty(); }

double sample_entry(const catalog::CatalogEntry& entry, RngStream& rng, std::size_t steps) {
  const auto& tag = entry.sampler;
  const std::string& k = tag.kind;
  if (k == "constant") return param(tag, 0);
  if (k == "gamma") return rng.gamma(param(tag, 0));
  if (k == "gamma_power")
    return param(tag, 2) * std::pow(rng.gamma(param(tag, 0)), param(tag, 1));
  if (k == "uniform") return rng.uniform();
  if (k == "beta") {
    const double x = rng.gamma(param(tag, 0));
    return x / (x + rng.gamma(param(tag, 1)));
  }
  if (k == "fisher_f") {
    const double m = param(tag, 0), n = param(tag, 1);
    return (2.0 * rng.gamma(m / 2) / m) / (2.0 * rng.gamma(n / 2) / n);
  }
  if (k == "abs_t") {
    const double n = param(tag, 0);
    return std::fabs(rng.normal()) / std::sqrt(2.0 * rng.gamma(n / 2) / n);
  }
  if (k == "stable") return sample_stable(param(tag, 0), rng);
  if (k == "mittag_leffler") return sample_mittag_leffler(param(tag, 0), rng);
  if (k == "pillai") return sample_pillai(param(tag, 0), rng);
  if (k == "pareto") return std::pow(rng.uniform(), -1.0 / param(tag, 0));
  if (k == "shifted_pareto") return rng.exponential() / rng.gamma(param(tag, 0));
  if (k == "gumbel_exp") return 1.0 / rng.exponential();
  if (k == "gamma_exp") return std::exp(rng.gamma(param(tag, 0)));
  if (k == "levy_area_exp") return std::pow(std::tan(0.5 * kPi * rng.uniform()), 2.0 / kPi);
  if (k == "brownian_sup_area") return sample_brownian_sup_area(steps, rng);
  if (k == "hashing_M") return sample_hashing_M(rng, steps);
  if (k == "urn") {
    const double a = param(tag, 0), d = param(tag, 3);
    const auto [black, white] =
        sample_urn(a, param(tag, 1), param(tag, 2), d, param(tag, 4), param(tag, 5), steps, rng);
    (void)black;
    return white / std::pow(static_cast<double>(steps), d / a);
  }
  if (k == "urn_diagonal_swapped") {
    const double a = param(tag, 0), d = param(tag, 1);
    const auto [black, white] = sample_urn(a, 0.0, 0.0, d, param(tag, 2), param(tag, 3), steps, rng);
    (void)white;
    return d / a * black / std::pow(static_cast<double>(steps), a / d);
  }
  if (k == "uniform_atom_mixture") return rng.uniform() < 0.5 ? 1.0 : rng.uniform();
  if (k == "exp_over_uniform") return rng.exponential() / rng.uniform();
  throw UnsupportedParameter("sampler: no generator for '" + entry.name + "'");
}

std::vector<double> sample_many(const std::function<double(RngStream&)>& draw, std::size_t n,
                                const RngStream& rng, unsigned threads) {
  std::vector<double> out(n);
  const std::size_t chunks = std::min(kChunks, std::max<std::size_t>(n, 1));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      RngStream local = rng.split(c);
      const std::size_t lo = c * n / chunks, hi = (c + 1) * n / chunks;
      for (std::size_t i = lo; i < hi; ++i) out[i] = draw(local);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

McReport verify_moments(const catalog::CatalogEntry& entry, const std::vector<double>& s_list,
                        std::size_t n, const RngStream& rng, std::size_t steps, double allowance) {
  const auto draws = sample_many([&](RngStream& r) { return sample_entry(entry, r, steps); }, n, rng);
  McReport report;
  report.label = entry.name + " moments";
  report.samples = n;
  report.discretization["steps"] = static_cast<double>(steps);
  for (double s : s_list) {
    std::vector<double> v(draws.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::pow(draws[i], s);
    const MeanSe m = mean_se(v);
    report.statistics.push_back(make_statistic("E X^" + nlohmann::json(s).dump(), m.mean,
                                               evaluate(entry.rep, s), m.se, allowance));
  }
  return report;
}

McReport verify_density(const catalog::CatalogEntry& entry, const std::vector<double>& grid,
                        std::size_t n, const RngStream& rng, std::size_t steps) {
  auto draws = sample_many([&](RngStream& r) { return sample_entry(entry, r, steps); }, n, rng);
  std::sort(draws.begin(), draws.end());
  McReport report;
  report.label = entry.name + " density";
  report.samples = n;
  report.discretization["steps"] = static_cast<double>(steps);
  if (draws.empty()) return report;
  const double iqr = draws[3 * n / 4] - draws[n / 4];
  const double h = 2.0 * iqr * std::cbrt(1.0 / static_cast<double>(n));
  report.discretization["bin_width"] = h;
  // Atoms are removed so the histogram estimates the absolutely continuous part.
  std::vector<double> continuous;
  continuous.reserve(draws.size());
  const std::size_t atom_run = std::max<std::size_t>(10, n / 1000);
  for (std::size_t i = 0; i < draws.size();) {
    std::size_t j = i;
    while (j < draws.size() && draws[j] == draws[i]) ++j;
    if (j - i < atom_run) continuous.insert(continuous.end(), draws.begin() + i, draws.begin() + j);
    i = j;
  }
  report.discretization["atom_draws"] = static_cast<double>(draws.size() - continuous.size());
  for (double x : grid) {
    const double lo = x - 0.5 * h, hi = x + 0.5 * h;
    const auto count = std::lower_bound(continuous.begin(), continuous.end(), hi) -
                       std::lower_bound(continuous.begin(), continuous.end(), lo);
    const double a = std::max(lo, 0.0);
    const double mass =
        hi > a ? quadrature::adaptive([&](double t) { return predicted_density(entry, t); }, a, hi,
                                      1e-9)
                     .value
               : 0.0;
    const double scale = 1.0 / (static_cast<double>(n) * h);
    const double se = std::sqrt(std::max<double>(count, 1.0)) * scale;
    report.statistics.push_back(make_statistic("f(" + nlohmann::json(x).dump() + ")",
                                               count * scale, mass / h, se));
  }
  return report;
}

McReport verify_double_laplace(double alpha, const std::vector<double>& lambdas, double rel_tol) {
  // Inner transform over x = u^3, where the density is smooth in u.
  constexpr double kUMax = 2.1;
  constexpr int kPanels = 420;
  std::vector<double> edges(kPanels + 1);
  for (int i = 0; i <= kPanels; ++i) edges[i] = kUMax * i / kPanels;
  std::vector<double> nodes, weights;
  quadrature::composite_gauss_legendre(edges, nodes, weights);
  std::vector<double> xs(nodes.size()), ws(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double u = nodes[i];
    xs[i] = u * u * u;
    ws[i] = weights[i] * 3.0 * u * u * catalog::brownian_sup_area_density(xs[i]);
  }
  auto psi = [&](double s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) acc += ws[i] * std::exp(-s * xs[i]);
    return acc;
  };
  McReport report;
  report.label = "double Laplace identity";
  report.discretization["inner_panels"] = kPanels;
  report.discretization["alpha"] = alpha;
  for (double lambda : lambdas) {
    if (!(lambda > 0.0 && alpha > 0.0)) throw DomainError("double Laplace: needs alpha, lambda > 0");
    // t = v^2 removes the t^{1/2} behaviour of psi(alpha t^{3/2}) at 0.
    const double lhs =
        quadrature::semi_infinite(
            [&](double v) { return 2.0 * v * psi(alpha * v * v * v) * std::exp(-lambda * v * v); },
            0.0, 1e-10)
            .value;
    const double k = 3.0 * alpha / std::sqrt(8.0 * lambda);
    const double rhs =
        quadrature::semi_infinite(
            [&](double t) { return std::pow(1.0 + k * t, -2.0 / 3.0) * std::exp(-lambda * t); }, 0.0,
            1e-12)
            .value;
    report.statistics.push_back(make_statistic("lambda=" + nlohmann::json(lambda).dump(), lhs, rhs,
                                               0.0, rel_tol * std::fabs(rhs)));
  }
  return report;
}

double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max({d, f - i / n, (i + 1) / n - f});
  }
  return d;
}

}  // namespace gammatype::sampler
