#include "gammatype/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>

namespace gammatype::quadrature {

Result adaptive(const std::function<double(double)>& f, double a, double b, double rel_tol,
                unsigned max_depth) {
  Result r;
  double l1 = 0.0;
  r.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, max_depth,
                                                                          rel_tol, &r.error, &l1);
  return r;
}

Result semi_infinite(const std::function<double(double)>& f, double a, double rel_tol) {
  thread_local boost::math::quadrature::exp_sinh<double> integrator;
  Result r;
  double l1 = 0.0;
  r.value = integrator.integrate(f, a, std::numeric_limits<double>::infinity(), rel_tol, &r.error,
                                 &l1);
  return r;
}

void composite_gauss_legendre(const std::vector<double>& edges, std::vector<double>& nodes,
                              std::vector<double>& weights) {
  using rule = boost::math::quadrature::gauss<double, 20>;
  const auto& abscissa = rule::abscissa();
  const auto& weight = rule::weights();
  nodes.clear();
  weights.clear();
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double mid = 0.5 * (edges[p] + edges[p + 1]);
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    // Boost stores the non-negative half of a symmetric rule.
    for (std::size_t k = 0; k < abscissa.size(); ++k) {
      if (abscissa[k] == 0.0) {
        nodes.push_back(mid);
        weights.push_back(half * weight[k]);
        continue;
      }
      nodes.push_back(mid - half * abscissa[k]);
      weights.push_back(half * weight[k]);
      nodes.push_back(mid + half * abscissa[k]);
      weights.push_back(half * weight[k]);
    }
  }
}

}  // namespace gammatype::quadrature
