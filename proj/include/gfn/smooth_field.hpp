#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gfn/multi_index.hpp"
#include "gfn/taylor.hpp"

namespace gfn {

// A smooth scalar field with closed-form partial derivatives up to
// max_jet_order. The jet callback receives the evaluation point and a
// multi-index of per-axis derivative counts.
struct SmoothField {
  int dimension = 0;
  int max_jet_order = 0;
  std::function<double(std::span<const double>, std::span<const int>)> jet;
  std::string label;

  double operator()(std::span<const double> p) const;
  double operator()(std::span<const double> p, std::span<const int> alpha) const;
};

SmoothField constant_field(int dim, double value);
SmoothField coordinate_field(int dim, int axis);

// sum of terms c * x^alpha with exact derivatives
SmoothField polynomial_field(int dim, std::vector<std::pair<MultiIndex, double>> terms,
                             std::string label = "polynomial");

// g(x_axis) for a univariate g supplied as a Taylor-series evaluator:
// series(x0, order) returns the expansion of g around x0.
SmoothField univariate_field(int dim, int axis, std::function<Taylor(double, int)> series,
                             int max_jet_order, std::string label);

SmoothField sin_field(int dim, int axis);
SmoothField sin_squared_field(int dim, int axis);
// smooth compactly supported bump exp(-1/(1 - ((x-center)/radius)^2))
SmoothField bump_field(int dim, int axis, double center, double radius);

SmoothField field_sum(const SmoothField& a, const SmoothField& b);
SmoothField field_scale(double s, const SmoothField& a);

}  // namespace gfn
