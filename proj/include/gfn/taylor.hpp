#pragma once

#include <vector>

namespace gfn {

// Truncated univariate Taylor series around a base point. coeff(k) is the
// k-th Taylor coefficient, i.e. f^(k)/k!. Arithmetic on these gives exact
// (to roundoff) higher derivatives of composed closed-form expressions,
// which is what the profile evaluators use instead of finite differences.
class Taylor {
 public:
  Taylor() = default;
  Taylor(int order, double c0);

  static Taylor variable(double x0, int order);
  static Taylor constant(double c, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double coeff(int k) const { return c_[k]; }
  double& coeff(int k) { return c_[k]; }
  double derivative(int k) const;  // k! * coeff(k)

  Taylor& operator+=(const Taylor& o);
  Taylor& operator-=(const Taylor& o);
  Taylor& operator*=(double s);

 private:
  std::vector<double> c_;
};

Taylor operator+(Taylor a, const Taylor& b);
Taylor operator-(Taylor a, const Taylor& b);
Taylor operator-(Taylor a);
Taylor operator*(double s, Taylor a);
Taylor operator+(Taylor a, double s);
Taylor operator-(double s, Taylor a);
Taylor operator*(const Taylor& a, const Taylor& b);
Taylor operator/(const Taylor& a, const Taylor& b);
Taylor exp(const Taylor& a);
Taylor sin(const Taylor& a);
Taylor cos(const Taylor& a);
Taylor sqrt(const Taylor& a);
Taylor pow_int(const Taylor& a, int n);

}  // namespace gfn
