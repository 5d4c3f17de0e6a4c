#pragma once

// Integer combinations of roots of unity with an exact zero test.

#include <complex>
#include <map>

#include "padic/qp.hpp"

namespace padic {

/// sum_j c_j e^{2 pi i q_j}, c_j integers, q_j rational angles.
class CyclotomicSum {
 public:
  void add(const Rational& angle, const BigInt& count = 1);

  /// Exact: reduces sum c_j x^{n q_j} modulo the n-th cyclotomic polynomial,
  /// n = lcm of the angle denominators. Falls back to a 1e-10 relative
  /// floating test if n exceeds 2^14.
  bool is_zero() const;

  std::complex<double> value() const;
  bool empty() const noexcept { return terms_.empty(); }

 private:
  std::map<Rational, BigInt> terms_;
};

}  // namespace padic
