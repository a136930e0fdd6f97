#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gfn {

// Axis-aligned compact box; the compact sets over which sup-norms,
// admissibility infima and association limits are measured.
struct CompactBox {
  std::vector<double> lower, upper;

  int dimension() const { return static_cast<int>(lower.size()); }
  double width(int axis) const { return upper[axis] - lower[axis]; }
  bool contains(std::span<const double> p, double tol = 0.0) const;
  void validate() const;  // throws unless lower[i] < upper[i] for all axes

  static CompactBox interval(double lo, double hi);
  static CompactBox cube(int dim, double lo, double hi);
  static CompactBox of(std::vector<double> lo, std::vector<double> hi);
};

// Hyperplane {x_axis = position} along which an eps-scale feature
// (shock layer, mollifier peak) must be resolved when sampling.
struct FeaturePlane {
  int axis = 0;
  double position = 0.0;
};

// Tensor-grid sampling: coarse spacing over the box, refined to
// feature_spacing*eps within feature_window*eps of each feature plane.
struct SamplingPlan {
  int base_divisions = 0;  // 0 -> default for the dimension
  double feature_window = 2.0;
  double feature_spacing = 0.25;
  std::vector<FeaturePlane> features;

  static int default_divisions(int dim);
};

// Per-axis sorted sample coordinates for the plan at the given eps.
std::vector<std::vector<double>> sample_axes(const CompactBox& box, const SamplingPlan& plan,
                                             double eps);

std::size_t grid_size(const std::vector<std::vector<double>>& axes);

// Visit every tensor-grid point; `point` is reused between calls.
template <typename F>
void for_each_grid_point(const std::vector<std::vector<double>>& axes, F&& visit) {
  int dim = static_cast<int>(axes.size());
  std::vector<std::size_t> it(dim, 0);
  std::vector<double> point(dim);
  while (true) {
    for (int i = 0; i < dim; ++i) point[i] = axes[i][it[i]];
    visit(static_cast<const std::vector<double>&>(point));
    int i = 0;
    for (; i < dim; ++i) {
      if (++it[i] < axes[i].size()) break;
      it[i] = 0;
    }
    if (i == dim) break;
  }
}

// Deterministic uniform samples in the box (for identity spot checks).
std::vector<std::vector<double>> random_points(const CompactBox& box, int count,
                                               std::uint64_t seed);

}  // namespace gfn
