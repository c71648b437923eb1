#pragma once

#include <cstddef>
#include <functional>
#include <vector>

// Thin wrappers over Boost.Math quadrature used across the library.
namespace gammatype::quadrature {

struct Result {
  double value = 0.0;
  double error = 0.0;
};

// Adaptive Gauss-Kronrod (31 point) on a finite interval.
Result adaptive(const std::function<double(double)>& f, double a, double b,
                double rel_tol = 1e-12, unsigned max_depth = 15);

// Double-exponential rule on [a, infinity).
Result semi_infinite(const std::function<double(double)>& f, double a, double rel_tol = 1e-12);

// Composite 20-point Gauss-Legendre nodes and weights over the given panel edges.
void composite_gauss_legendre(const std::vector<double>& edges, std::vector<double>& nodes,
                              std::vector<double>& weights);

}  // namespace gammatype::quadrature
