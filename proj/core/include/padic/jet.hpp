#pragma once

// Truncated Taylor series in alpha: value plus derivatives up to a fixed order.

#include <complex>
#include <vector>

namespace padic {

class Jet {
 public:
  using cplx = std::complex<double>;

  /// Constant jet of the given order.
  explicit Jet(int order = 0, cplx value = 0.0);

  /// The jet of alpha itself at alpha0.
  static Jet variable(int order, cplx alpha0);
  /// The jet of value * e^{rate (alpha - alpha0)}, i.e. coefficients
  /// value * rate^k / k!. p^{c alpha + d} is exp_linear(order, p^{c alpha0 + d}, c ln p).
  static Jet exp_linear(int order, cplx value, cplx rate);

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  cplx value() const noexcept { return c_[0]; }
  /// k-th Taylor coefficient.
  cplx coeff(int k) const { return c_.at(static_cast<std::size_t>(k)); }
  /// d^k/dalpha^k.
  cplx derivative(int k) const;
  /// Multiplies derivative k by s^k (s = 1/ln p puts one log_p e on each
  /// derivative).
  Jet rescaled(cplx s) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  /// Throws InvalidArgument when o has zero constant term.
  Jet& operator/=(const Jet& o);
  Jet& operator*=(cplx s);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  friend Jet operator*(Jet a, cplx s) { return a *= s; }
  friend Jet operator*(cplx s, Jet a) { return a *= s; }
  friend Jet operator+(Jet a, cplx s) { a.c_[0] += s; return a; }
  friend Jet operator+(cplx s, Jet a) { a.c_[0] += s; return a; }
  friend Jet operator-(cplx s, Jet a) { a *= -1.0; a.c_[0] += s; return a; }
  friend Jet operator-(Jet a, cplx s) { a.c_[0] -= s; return a; }

 private:
  std::vector<cplx> c_;
};

}  // namespace padic
