#include "gfn/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfn {

int total_order(std::span<const int> alpha) {
  int s = 0;
  for (int a : alpha) s += a;
  return s;
}

bool component_leq(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double multi_binomial(std::span<const int> a, std::span<const int> b) {
  double r = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) r *= binomial(a[i], b[i]);
  return r;
}

MultiIndex zero_index(int dim) { return MultiIndex(dim, 0); }

MultiIndex unit_index(int dim, int axis) {
  MultiIndex a(dim, 0);
  a.at(axis) = 1;
  return a;
}

MultiIndex add_index(std::span<const int> a, std::span<const int> b) {
  MultiIndex r(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

MultiIndex sub_index(std::span<const int> a, std::span<const int> b) {
  MultiIndex r(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) {
    r[i] -= b[i];
    if (r[i] < 0) throw std::invalid_argument("sub_index: negative entry");
  }
  return r;
}

std::string index_to_string(std::span<const int> alpha) {
  std::string s = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(alpha[i]);
  }
  s += ")";
  return s;
}

std::vector<MultiIndex> multi_indices_up_to(int dim, int max_order) {
  std::vector<MultiIndex> out;
  MultiIndex cap(dim, max_order);
  for_each_sub_index(cap, [&](const MultiIndex& a) {
    if (total_order(a) <= max_order) out.push_back(a);
  });
  std::stable_sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return total_order(a) < total_order(b);
  });
  return out;
}

JetIndexer::JetIndexer(int dim, int max_order) : dim_(dim), max_order_(max_order) {
  alphas_ = multi_indices_up_to(dim, max_order);
  int span = max_order + 1;
  int keys = 1;
  for (int i = 0; i < dim; ++i) keys *= span;
  lookup_.assign(keys, -1);
  for (int id = 0; id < size(); ++id) lookup_[key(alphas_[id])] = id;
  shifted_.assign(static_cast<std::size_t>(size()) * dim, -1);
  for (int id = 0; id < size(); ++id) {
    for (int ax = 0; ax < dim; ++ax) {
      MultiIndex a = alphas_[id];
      a[ax] += 1;
      if (total_order(a) <= max_order) shifted_[id * dim + ax] = lookup_[key(a)];
    }
  }
}

int JetIndexer::key(std::span<const int> alpha) const {
  int span = max_order_ + 1;
  int k = 0;
  for (int i = 0; i < dim_; ++i) k = k * span + alpha[i];
  return k;
}

int JetIndexer::id(std::span<const int> alpha) const {
  if (static_cast<int>(alpha.size()) != dim_) return -1;
  for (int a : alpha)
    if (a < 0 || a > max_order_) return -1;
  if (total_order(alpha) > max_order_) return -1;
  return lookup_[key(alpha)];
}

int JetIndexer::id_plus_axis(int id, int axis) const { return shifted_[id * dim_ + axis]; }

}  // namespace gfn
