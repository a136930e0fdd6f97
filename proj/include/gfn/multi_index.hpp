#pragma once

#include <span>
#include <string>
#include <vector>

namespace gfn {

// Multi-index of partial-derivative orders, one entry per coordinate axis.
// Mixed partials are stored as per-axis counts, so index symmetry is
// structural rather than something to be checked per evaluation.
using MultiIndex = std::vector<int>;

int total_order(std::span<const int> alpha);
bool component_leq(std::span<const int> a, std::span<const int> b);

double binomial(int n, int k);
// prod_i binom(a_i, b_i); the coefficient in the multivariate Leibniz rule.
double multi_binomial(std::span<const int> a, std::span<const int> b);

MultiIndex zero_index(int dim);
MultiIndex unit_index(int dim, int axis);
MultiIndex add_index(std::span<const int> a, std::span<const int> b);
MultiIndex sub_index(std::span<const int> a, std::span<const int> b);
std::string index_to_string(std::span<const int> alpha);

// All multi-indices over `dim` axes with total order <= max_order,
// listed by increasing total order.
std::vector<MultiIndex> multi_indices_up_to(int dim, int max_order);

// Visit every beta with 0 <= beta <= alpha componentwise (odometer order).
template <typename F>
void for_each_sub_index(std::span<const int> alpha, F&& visit) {
  MultiIndex beta(alpha.size(), 0);
  while (true) {
    visit(static_cast<const MultiIndex&>(beta));
    std::size_t i = 0;
    for (; i < beta.size(); ++i) {
      if (beta[i] < alpha[i]) {
        ++beta[i];
        break;
      }
      beta[i] = 0;
    }
    if (i == beta.size()) break;
  }
}

// Dense lookup table for multi-indices up to a fixed total order.
class JetIndexer {
 public:
  JetIndexer(int dim, int max_order);

  int dim() const { return dim_; }
  int max_order() const { return max_order_; }
  int size() const { return static_cast<int>(alphas_.size()); }
  const MultiIndex& alpha(int id) const { return alphas_[id]; }
  int id(std::span<const int> alpha) const;  // -1 if out of range
  int id_plus_axis(int id, int axis) const;  // id of alpha + e_axis, -1 if above order

  const std::vector<MultiIndex>& alphas() const { return alphas_; }

 private:
  int dim_;
  int max_order_;
  std::vector<MultiIndex> alphas_;
  std::vector<int> lookup_;  // mixed-radix keyed
  std::vector<int> shifted_;  // [id * dim + axis]
  int key(std::span<const int> alpha) const;
};

}  // namespace gfn
