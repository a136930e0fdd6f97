#include "gfn/smooth_field.hpp"

#include <cmath>
#include <stdexcept>

namespace gfn {

double SmoothField::operator()(std::span<const double> p) const {
  MultiIndex a(dimension, 0);
  return jet(p, a);
}

double SmoothField::operator()(std::span<const double> p, std::span<const int> alpha) const {
  return jet(p, alpha);
}

SmoothField constant_field(int dim, double value) {
  return SmoothField{dim, 100,
                     [value](std::span<const double>, std::span<const int> alpha) {
                       return total_order(alpha) == 0 ? value : 0.0;
                     },
                     "const(" + std::to_string(value) + ")"};
}

SmoothField coordinate_field(int dim, int axis) {
  return SmoothField{dim, 100,
                     [axis](std::span<const double> p, std::span<const int> alpha) {
                       int t = total_order(alpha);
                       if (t == 0) return p[axis];
                       if (t == 1 && alpha[axis] == 1) return 1.0;
                       return 0.0;
                     },
                     "x_" + std::to_string(axis)};
}

SmoothField polynomial_field(int dim, std::vector<std::pair<MultiIndex, double>> terms,
                             std::string label) {
  for (const auto& [a, c] : terms) {
    (void)c;
    if (static_cast<int>(a.size()) != dim)
      throw std::invalid_argument("polynomial_field: term dimension mismatch");
  }
  auto eval = [dim, terms = std::move(terms)](std::span<const double> p,
                                              std::span<const int> alpha) {
    double sum = 0.0;
    for (const auto& [exps, c] : terms) {
      double term = c;
      for (int i = 0; i < dim && term != 0.0; ++i) {
        int e = exps[i], d = alpha[i];
        if (d > e) {
          term = 0.0;
          break;
        }
        for (int j = 0; j < d; ++j) term *= (e - j);
        term *= std::pow(p[i], e - d);
      }
      sum += term;
    }
    return sum;
  };
  return SmoothField{dim, 100, std::move(eval), std::move(label)};
}

SmoothField univariate_field(int dim, int axis, std::function<Taylor(double, int)> series,
                             int max_jet_order, std::string label) {
  auto eval = [axis, series = std::move(series)](std::span<const double> p,
                                                 std::span<const int> alpha) {
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (static_cast<int>(i) != axis && alpha[i] > 0) return 0.0;
    Taylor t = series(p[axis], alpha[axis]);
    return t.derivative(alpha[axis]);
  };
  return SmoothField{dim, max_jet_order, std::move(eval), std::move(label)};
}

SmoothField sin_field(int dim, int axis) {
  return univariate_field(
      dim, axis, [](double x0, int order) { return sin(Taylor::variable(x0, order)); }, 100,
      "sin(x_" + std::to_string(axis) + ")");
}

SmoothField sin_squared_field(int dim, int axis) {
  return univariate_field(
      dim, axis,
      [](double x0, int order) {
        Taylor s = sin(Taylor::variable(x0, order));
        return s * s;
      },
      100, "sin^2(x_" + std::to_string(axis) + ")");
}

SmoothField bump_field(int dim, int axis, double center, double radius) {
  auto series = [center, radius](double x0, int order) {
    double u0 = (x0 - center) / radius;
    if (std::abs(u0) >= 1.0) return Taylor::constant(0.0, order);
    Taylor u = (1.0 / radius) * (Taylor::variable(x0, order) - Taylor::constant(center, order));
    Taylor w = 1.0 - u * u;
    return exp(Taylor::constant(-1.0, order) / w);
  };
  return univariate_field(dim, axis, series, 12, "bump(x_" + std::to_string(axis) + ")");
}

SmoothField field_sum(const SmoothField& a, const SmoothField& b) {
  if (a.dimension != b.dimension) throw std::invalid_argument("field_sum: dimension mismatch");
  return SmoothField{a.dimension, std::min(a.max_jet_order, b.max_jet_order),
                     [fa = a.jet, fb = b.jet](std::span<const double> p, std::span<const int> al) {
                       return fa(p, al) + fb(p, al);
                     },
                     a.label + "+" + b.label};
}

SmoothField field_scale(double s, const SmoothField& a) {
  return SmoothField{a.dimension, a.max_jet_order,
                     [s, fa = a.jet](std::span<const double> p, std::span<const int> al) {
                       return s * fa(p, al);
                     },
                     std::to_string(s) + "*" + a.label};
}

}  // namespace gfn
