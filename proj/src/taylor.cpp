#include "gfn/taylor.hpp"

#include <cmath>
#include <stdexcept>

namespace gfn {

namespace {
void check_same_order(const Taylor& a, const Taylor& b) {
  if (a.order() != b.order()) throw std::invalid_argument("Taylor: order mismatch");
}
}  // namespace

Taylor::Taylor(int order, double c0) : c_(order + 1, 0.0) { c_[0] = c0; }

Taylor Taylor::variable(double x0, int order) {
  Taylor t(order, x0);
  if (order >= 1) t.c_[1] = 1.0;
  return t;
}

Taylor Taylor::constant(double c, int order) { return Taylor(order, c); }

double Taylor::derivative(int k) const {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f * c_[k];
}

Taylor& Taylor::operator+=(const Taylor& o) {
  check_same_order(*this, o);
  for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
  return *this;
}

Taylor& Taylor::operator-=(const Taylor& o) {
  check_same_order(*this, o);
  for (int k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Taylor& Taylor::operator*=(double s) {
  for (int k = 0; k <= order(); ++k) c_[k] *= s;
  return *this;
}

Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }

Taylor operator-(Taylor a) {
  a *= -1.0;
  return a;
}

Taylor operator*(double s, Taylor a) {
  a *= s;
  return a;
}

Taylor operator+(Taylor a, double s) {
  a.coeff(0) += s;
  return a;
}

Taylor operator-(double s, Taylor a) {
  a *= -1.0;
  a.coeff(0) += s;
  return a;
}

Taylor operator*(const Taylor& a, const Taylor& b) {
  check_same_order(a, b);
  int n = a.order();
  Taylor r(n, 0.0);
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += a.coeff(j) * b.coeff(k - j);
    r.coeff(k) = s;
  }
  return r;
}

Taylor operator/(const Taylor& a, const Taylor& b) {
  check_same_order(a, b);
  if (b.coeff(0) == 0.0) throw std::domain_error("Taylor: division by series with zero constant term");
  int n = a.order();
  Taylor r(n, 0.0);
  for (int k = 0; k <= n; ++k) {
    double s = a.coeff(k);
    for (int j = 1; j <= k; ++j) s -= b.coeff(j) * r.coeff(k - j);
    r.coeff(k) = s / b.coeff(0);
  }
  return r;
}

Taylor exp(const Taylor& a) {
  int n = a.order();
  Taylor r(n, std::exp(a.coeff(0)));
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * a.coeff(j) * r.coeff(k - j);
    r.coeff(k) = s / k;
  }
  return r;
}

Taylor sin(const Taylor& a) {
  int n = a.order();
  Taylor s(n, std::sin(a.coeff(0)));
  Taylor c(n, std::cos(a.coeff(0)));
  for (int k = 1; k <= n; ++k) {
    double sv = 0.0, cv = 0.0;
    for (int j = 1; j <= k; ++j) {
      sv += j * a.coeff(j) * c.coeff(k - j);
      cv += j * a.coeff(j) * s.coeff(k - j);
    }
    s.coeff(k) = sv / k;
    c.coeff(k) = -cv / k;
  }
  return s;
}

Taylor cos(const Taylor& a) {
  int n = a.order();
  Taylor s(n, std::sin(a.coeff(0)));
  Taylor c(n, std::cos(a.coeff(0)));
  for (int k = 1; k <= n; ++k) {
    double sv = 0.0, cv = 0.0;
    for (int j = 1; j <= k; ++j) {
      sv += j * a.coeff(j) * c.coeff(k - j);
      cv += j * a.coeff(j) * s.coeff(k - j);
    }
    s.coeff(k) = sv / k;
    c.coeff(k) = -cv / k;
  }
  return c;
}

Taylor sqrt(const Taylor& a) {
  if (a.coeff(0) <= 0.0) throw std::domain_error("Taylor: sqrt needs positive constant term");
  int n = a.order();
  Taylor r(n, std::sqrt(a.coeff(0)));
  for (int k = 1; k <= n; ++k) {
    double s = a.coeff(k);
    for (int j = 1; j < k; ++j) s -= r.coeff(j) * r.coeff(k - j);
    r.coeff(k) = s / (2.0 * r.coeff(0));
  }
  return r;
}

Taylor pow_int(const Taylor& a, int n) {
  if (n < 0) throw std::invalid_argument("pow_int: negative exponent");
  Taylor r = Taylor::constant(1.0, a.order());
  Taylor base = a;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

}  // namespace gfn
