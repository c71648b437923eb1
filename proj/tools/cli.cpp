#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <system_error>

#include <CLI11.hpp>
#include <json.hpp>

#include "gammatype/analysis.hpp"
#include "gammatype/catalog.hpp"
#include "gammatype/density.hpp"
#include "gammatype/error.hpp"
#include "gammatype/rep_json.hpp"
#include "gammatype/sampler.hpp"

namespace gammatype::cli {
namespace {

using nlohmann::ordered_json;

struct Options {
  std::string target;
  std::string rep_path;
  std::vector<double> params;
  std::string grid = "0.1:5:50";
  std::string method = "mellin";
  std::string side = "left";
  std::string window = "-5:5";
  std::optional<double> sigma;
  int order = 1;
  std::uint64_t seed = 20240601;
  std::size_t samples = 20000;
  std::size_t steps = sampler::kDefaultSteps;
  bool json = false;
  bool draws = false;
};

struct Grid {
  double lo, hi;
  std::size_t n;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("malformed number '" + s + "'");
  return v;
}

Grid parse_grid(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3) throw DomainError("grid must be lo:hi:n");
  Grid g{parse_double(parts[0]), parse_double(parts[1]), 0};
  const double n = parse_double(parts[2]);
  if (!(n >= 1.0) || n != std::floor(n)) throw DomainError("grid count must be a positive integer");
  g.n = static_cast<std::size_t>(n);
  if (!(g.lo <= g.hi)) throw DomainError("grid must satisfy lo <= hi");
  return g;
}

std::vector<double> grid_points(const Grid& g) {
  std::vector<double> xs(g.n);
  for (std::size_t i = 0; i < g.n; ++i)
    xs[i] = g.n == 1 ? g.lo : g.lo + (g.hi - g.lo) * double(i) / double(g.n - 1);
  return xs;
}

std::pair<double, double> parse_window(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw DomainError("window must be lo:hi");
  const double lo = parse_double(parts[0]), hi = parse_double(parts[1]);
  if (!(lo < hi)) throw DomainError("window must satisfy lo < hi");
  return {lo, hi};
}

ordered_json number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return x;
}

catalog::CatalogEntry resolve(const Options& o) {
  const bool has_name = !o.target.empty();
  const bool has_file = !o.rep_path.empty();
  if (has_name == has_file) throw DomainError("give exactly one of a catalog name or --rep FILE");
  if (has_name) return catalog::make(o.target, o.params);
  std::ifstream in(o.rep_path);
  if (!in) throw DomainError("cannot read rep file '" + o.rep_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  catalog::CatalogEntry e;
  e.name = o.rep_path;
  e.rep = rep_from_json(buf.str());
  e.expected = analysis::params(e.rep);
  e.source = "user-supplied rep";
  return e;
}

ordered_json params_json(const InvariantParams& p) {
  return {{"gamma", number(p.gamma)},         {"gamma_prime", number(p.gamma_prime)},
          {"delta", number(p.delta)},         {"kappa", number(p.kappa)},
          {"C1", number(p.C1)},               {"rho_minus", number(p.rho_minus)},
          {"rho_plus", number(p.rho_plus)}};
}

std::string side_regime(const GammaTypeRep& rep, int dir) {
  try {
    const double x = 1.0;
    const auto s = dir < 0 ? density::density_series_from_left(rep, x)
                           : density::density_series_from_right(rep, x);
    return to_string(s.regime);
  } catch (const Error&) {
    return "unavailable";
  }
}

std::string summary(const InvariantParams& p) {
  std::ostringstream s;
  if (p.gamma > 0.0)
    s << "gamma > 0: density exists and is analytic on (0, inf)";
  else if (p.gamma == 0.0)
    s << "gamma = 0: F need not decay on vertical lines; Mellin inversion does not apply";
  else
    s << "gamma < 0: not the moment function of an absolutely continuous law";
  if (p.gamma_prime > 0.0)
    s << "; residue series in powers of x converges";
  else if (p.gamma_prime < 0.0)
    s << "; residue series in powers of 1/x converges";
  else
    s << "; series validity is split at x = e^kappa";
  return s.str();
}

int cmd_describe(const Options& o, std::ostream& out) {
  const auto e = resolve(o);
  const InvariantParams p = analysis::params(e.rep);
  const auto [wlo, whi] = parse_window(o.window);
  const auto spec = analysis::spectrum(e.rep, wlo, whi);
  const auto boundary = density::boundary_classification(e.rep);
  if (o.json) {
    ordered_json j;
    j["name"] = e.name;
    j["rep"] = ordered_json::parse(rep_to_json(e.rep));
    j["params"] = params_json(p);
    j["strip"] = {number(p.rho_minus), number(p.rho_plus)};
    auto& sj = j["spectrum"] = ordered_json::array();
    for (const auto& s : spec) sj.push_back({{"location", s.location}, {"order", s.order}});
    j["boundary"] = to_string(boundary.kind);
    if (boundary.kind == density::BoundaryKind::finite_jump) j["boundary_value"] = boundary.value;
    j["left_series"] = side_regime(e.rep, -1);
    j["right_series"] = side_regime(e.rep, 1);
    j["summary"] = summary(p);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "name=" << e.name << "\n";
  out << "gamma=" << format_double(p.gamma) << "\n";
  out << "gamma_prime=" << format_double(p.gamma_prime) << "\n";
  out << "delta=" << format_double(p.delta) << "\n";
  out << "kappa=" << format_double(p.kappa) << "\n";
  out << "C1=" << format_double(p.C1) << "\n";
  out << "rho_minus=" << format_double(p.rho_minus) << "\n";
  out << "rho_plus=" << format_double(p.rho_plus) << "\n";
  out << "strip=(" << format_double(p.rho_minus) << ", " << format_double(p.rho_plus) << ")\n";
  out << "spectrum[" << format_double(wlo) << ", " << format_double(whi) << "]=";
  for (std::size_t i = 0; i < spec.size(); ++i)
    out << (i ? " " : "") << format_double(spec[i].location) << ":" << spec[i].order;
  out << "\n";
  out << "boundary=" << to_string(boundary.kind);
  if (boundary.kind == density::BoundaryKind::finite_jump)
    out << " f(0+)=" << format_double(boundary.value);
  out << "\n";
  out << "left_series=" << side_regime(e.rep, -1) << "\n";
  out << "right_series=" << side_regime(e.rep, 1) << "\n";
  out << "summary=" << summary(p) << "\n";
  return kExitOk;
}

SeriesEvaluation series_at(const GammaTypeRep& rep, double x, int dir) {
  return dir < 0 ? density::density_series_from_left(rep, x)
                 : density::density_series_from_right(rep, x);
}

// Convergent side first, then an asymptotic side; refused when neither applies.
SeriesEvaluation best_series(const GammaTypeRep& rep, double x) {
  const auto left = series_at(rep, x, -1);
  if (left.regime == SeriesRegime::convergent) return left;
  const auto right = series_at(rep, x, 1);
  if (right.regime == SeriesRegime::convergent) return right;
  if (left.regime == SeriesRegime::asymptotic_truncated) return left;
  return right;
}

int cmd_density(const Options& o, std::ostream& out) {
  const auto e = resolve(o);
  const auto xs = grid_points(parse_grid(o.grid));
  std::ostringstream body;
  body << "x,f,regime\n";
  for (double x : xs) {
    double f = 0.0;
    std::string regime;
    if (o.method == "mellin") {
      f = density::density_mellin(e.rep, x, o.sigma);
      regime = "mellin";
    } else if (o.method == "series" || o.method == "series_left" || o.method == "series_right") {
      const auto s = o.method == "series"        ? best_series(e.rep, x)
                     : o.method == "series_left" ? series_at(e.rep, x, -1)
                                                 : series_at(e.rep, x, 1);
      if (s.regime == SeriesRegime::refused)
        throw UnsupportedRegime("series refused at x = " + format_double(x));
      f = s.value;
      regime = to_string(s.regime);
    } else if (o.method == "oracle") {
      const auto v = catalog::oracle_density(e, x);
      if (!v) throw UnsupportedRegime("no closed-form density at x = " + format_double(x));
      f = *v;
      regime = "oracle";
    } else {
      throw DomainError("unknown method '" + o.method + "'");
    }
    body << format_double(x) << "," << format_double(f) << "," << regime << "\n";
  }
  out << body.str();
  return kExitOk;
}

ordered_json tail_json(const density::TailLaw& law) {
  ordered_json j;
  j["at"] = law.at_zero ? "zero" : "infinity";
  if (law.kind == density::TailKind::stretched_exponential) {
    j["kind"] = "stretched_exponential";
    j["gamma"] = number(law.gamma);
    j["c1"] = number(law.c1);
    j[law.at_zero ? "c3" : "c2"] = number(law.c23);
    j[law.at_zero ? "C3" : "C2"] = number(law.C23);
  } else {
    j["kind"] = "power_log";
    auto& poles = j["poles"] = ordered_json::array();
    for (const auto& L : law.poles) {
      ordered_json c = ordered_json::array();
      for (std::size_t l = 1; l <= L.coefficients.size(); ++l) c.push_back(number(L.coefficient(l)));
      poles.push_back({{"location", L.location}, {"laurent", c}});
    }
  }
  return j;
}

int cmd_tails(const Options& o, std::ostream& out) {
  const auto e = resolve(o);
  ordered_json j;
  j["name"] = e.name;
  auto add = [&](const char* key, auto&& make) {
    try {
      j[key] = tail_json(make());
    } catch (const Error& ex) {
      j[key] = {{"unavailable", ex.what()}};
    }
  };
  add("infinity", [&] { return density::tail_law_at_infinity(e.rep, std::max(o.order, 1)); });
  add("zero", [&] { return density::tail_law_at_zero(e.rep, std::max(o.order, 1)); });
  if (o.json) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const char* key : {"infinity", "zero"}) {
    const auto& t = j[key];
    if (t.contains("unavailable")) {
      out << key << ": unavailable (" << t["unavailable"].get<std::string>() << ")\n";
      continue;
    }
    out << key << ": " << t["kind"].get<std::string>() << "\n";
    for (const auto& [k, v] : t.items()) {
      if (k == "at" || k == "kind") continue;
      out << "  " << k << "=" << v.dump() << "\n";
    }
  }
  return kExitOk;
}

int cmd_series(const Options& o, std::ostream& out) {
  const auto e = resolve(o);
  if (o.side != "left" && o.side != "right") throw DomainError("side must be left or right");
  const int dir = o.side == "left" ? -1 : 1;
  std::ostringstream body;
  body << "x,value,regime,terms,last_term\n";
  for (double x : grid_points(parse_grid(o.grid))) {
    const auto s = series_at(e.rep, x, dir);
    body << format_double(x) << "," << format_double(s.value) << "," << to_string(s.regime) << ","
         << s.terms_used << "," << format_double(s.last_term) << "\n";
  }
  out << body.str();
  return kExitOk;
}

ordered_json entry_json(const catalog::CatalogEntry& e) {
  const InvariantParams p = analysis::params(e.rep);
  ordered_json j;
  j["name"] = e.name;
  j["parameters"] = e.parameters;
  j["rep"] = ordered_json::parse(rep_to_json(e.rep));
  j["params"] = params_json(p);
  j["strip"] = {number(p.rho_minus), number(p.rho_plus)};
  j["source"] = e.source;
  j["log_variable"] = e.log_variable;
  j["has_oracle"] = static_cast<bool>(e.oracle);
  j["sampler"] = e.sampler.kind.empty() ? ordered_json(nullptr) : ordered_json(e.sampler.kind);
  return j;
}

int cmd_catalog(const std::string& action, const Options& o, std::ostream& out) {
  if (action == "list") {
    for (const auto& n : catalog::names()) out << n << "\n";
    return kExitOk;
  }
  if (action == "show") {
    if (o.target.empty()) throw DomainError("catalog show needs a name");
    out << entry_json(catalog::make(o.target, o.params)).dump(2) << "\n";
    return kExitOk;
  }
  throw DomainError("catalog action must be list or show");
}

std::vector<double> moment_orders(const InvariantParams& p) {
  std::vector<double> s;
  for (double v : {0.5, 1.0})
    if (v > p.rho_minus && 2.0 * v < p.rho_plus) s.push_back(v);
  if (s.empty() && p.rho_plus > 0.0) s.push_back(0.25 * std::min(p.rho_plus, 1.0));
  return s;
}

bool discretized(const catalog::CatalogEntry& e) {
  const auto& k = e.sampler.kind;
  return k == "brownian_sup_area" || k == "hashing_M" || k == "urn" || k == "urn_diagonal_swapped";
}

double bias_allowance(const catalog::CatalogEntry& e, std::size_t steps) {
  return discretized(e) ? 3.0 / std::sqrt(static_cast<double>(steps)) : 0.0;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const auto e = resolve(o);
  if (!sampler::has_sampler(e)) throw UnsupportedParameter("no sampler for '" + e.name + "'");
  const sampler::RngStream rng(o.seed, 0);
  if (o.draws) {
    const auto v = sampler::sample_many(
        [&](sampler::RngStream& r) { return sampler::sample_entry(e, r, o.steps); }, o.samples, rng);
    std::ostringstream body;
    body << "x\n";
    for (double x : v) body << format_double(x) << "\n";
    out << body.str();
    return kExitOk;
  }
  const auto report = sampler::verify_moments(e, moment_orders(analysis::params(e.rep)), o.samples,
                                              rng, o.steps, bias_allowance(e, o.steps));
  out << report.to_json() << "\n";
  return kExitOk;
}

// Points for the cross-path comparison, scaled to the law.
std::vector<double> cross_points(const catalog::CatalogEntry& e) {
  const double scale = std::exp(analysis::params(e.rep).kappa);
  return {0.3 * scale, 0.7 * scale, 1.3 * scale, 2.1 * scale};
}

std::vector<sampler::McStatistic> cross_path(const catalog::CatalogEntry& e) {
  std::vector<sampler::McStatistic> stats;
  const InvariantParams p = analysis::params(e.rep);
  for (double x : cross_points(e)) {
    std::optional<double> reference;
    std::string ref_name;
    if (p.gamma > 0.0) {
      reference = density::density_mellin(e.rep, x);
      ref_name = "mellin";
    } else if (auto v = catalog::oracle_density(e, x)) {
      reference = v;
      ref_name = "oracle";
    }
    if (!reference) continue;
    const double tol = 1e-8 * (1.0 + std::fabs(*reference));
    if (ref_name == "mellin") {
      if (auto v = catalog::oracle_density(e, x))
        stats.push_back(sampler::make_statistic("oracle vs mellin at " + format_double(x), *v,
                                                *reference, 0.0, tol));
    }
    for (int dir : {-1, 1}) {
      const auto s = series_at(e.rep, x, dir);
      if (s.regime != SeriesRegime::convergent) continue;
      stats.push_back(sampler::make_statistic(
          std::string(dir < 0 ? "left" : "right") + " series vs " + ref_name + " at " +
              format_double(x),
          s.value, *reference, 0.0, tol));
    }
  }
  return stats;
}

// Quantile points of a pilot sample, skipping atoms.
std::vector<double> histogram_points(const catalog::CatalogEntry& e, const Options& o) {
  auto pilot = sampler::sample_many(
      [&](sampler::RngStream& r) { return sampler::sample_entry(e, r, o.steps); },
      std::min<std::size_t>(o.samples, 2000), sampler::RngStream(o.seed, 7));
  std::sort(pilot.begin(), pilot.end());
  std::vector<double> pts;
  for (double q : {0.25, 0.5, 0.75}) {
    const double x = pilot[static_cast<std::size_t>(q * (pilot.size() - 1))];
    const auto ties = std::equal_range(pilot.begin(), pilot.end(), x);
    if (ties.second - ties.first > 1) continue;
    pts.push_back(x);
  }
  return pts;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto e = resolve(o);
  const InvariantParams p = analysis::params(e.rep);
  std::vector<sampler::McReport> reports;
  sampler::McReport cross;
  cross.label = e.name + " cross-path";
  cross.statistics = cross_path(e);
  reports.push_back(cross);
  if (sampler::has_sampler(e)) {
    const double allowance = bias_allowance(e, o.steps);
    reports.push_back(sampler::verify_moments(e, moment_orders(p), o.samples,
                                              sampler::RngStream(o.seed, 1), o.steps, allowance));
    const bool has_density = p.gamma > 0.0 || static_cast<bool>(e.oracle);
    if (has_density) {
      auto dens = sampler::verify_density(e, histogram_points(e, o), o.samples,
                                          sampler::RngStream(o.seed, 2), o.steps);
      for (auto& s : dens.statistics) s.allowance = allowance * std::fabs(s.predicted);
      reports.push_back(dens);
    }
  }
  bool ok = true;
  ordered_json j = ordered_json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    j.push_back(ordered_json::parse(r.to_json()));
  }
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << r.label << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.statistics.size()
          << " statistics)\n";
      for (const auto& s : r.statistics)
        out << "  " << (s.pass() ? "ok   " : "FAIL ") << s.name << " empirical="
            << format_double(s.empirical) << " predicted=" << format_double(s.predicted)
            << " se=" << format_double(s.standard_error) << "\n";
    }
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moment functions of Gamma type: analysis, densities and simulation"};
  app.require_subcommand(1);
  Options o;
  std::string catalog_action;

  auto add_target = [&](CLI::App* sub) {
    sub->add_option("target", o.target, "catalog name");
    sub->add_option("--rep", o.rep_path, "JSON rep file");
    sub->add_option("--param", o.params, "catalog parameters, in order");
    sub->add_flag("--json", o.json, "machine-readable output");
  };
  auto* describe = app.add_subcommand("describe", "parameters, strip, spectrum and boundary");
  add_target(describe);
  describe->add_option("--window", o.window, "spectrum window lo:hi");

  auto* dens = app.add_subcommand("density", "density on a grid as CSV");
  add_target(dens);
  dens->add_option("--grid", o.grid, "lo:hi:n");
  dens->add_option("--method", o.method, "mellin|series|series_left|series_right|oracle");
  dens->add_option("--sigma", o.sigma, "inversion abscissa");

  auto* tails = app.add_subcommand("tails", "tail laws at 0 and infinity");
  add_target(tails);
  tails->add_option("--order", o.order, "number of poles kept");

  auto* series = app.add_subcommand("series", "residue series with diagnostics as CSV");
  add_target(series);
  series->add_option("--grid", o.grid, "lo:hi:n");
  series->add_option("--side", o.side, "left|right");

  auto* cat = app.add_subcommand("catalog", "list or show catalog entries");
  cat->add_option("action", catalog_action, "list|show")->required();
  cat->add_option("target", o.target, "entry name");
  cat->add_option("--param", o.params, "catalog parameters, in order");

  auto* sample = app.add_subcommand("sample", "Monte-Carlo moments, or raw draws");
  add_target(sample);
  auto* verify = app.add_subcommand("verify", "Monte-Carlo and cross-path checks");
  add_target(verify);
  for (auto* sub : {sample, verify}) {
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--samples", o.samples, "number of draws");
    sub->add_option("--steps", o.steps, "path or urn resolution");
  }
  sample->add_flag("--draws", o.draws, "print draws instead of a report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }

  try {
    if (describe->parsed()) return cmd_describe(o, out);
    if (dens->parsed()) return cmd_density(o, out);
    if (tails->parsed()) return cmd_tails(o, out);
    if (series->parsed()) return cmd_series(o, out);
    if (cat->parsed()) return cmd_catalog(catalog_action, o, out);
    if (sample->parsed()) return cmd_sample(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const UnsupportedRegime& ex) {
    err << "unsupported-regime: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gammatype::cli
