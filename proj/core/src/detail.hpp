#pragma once

// Integer and floating helpers shared by the evaluation kernels.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "padic/qp.hpp"

namespace padic::detail {

using cplx = std::complex<double>;
__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

/// Inverse of a modulo n; gcd(a, n) must be 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t n);

/// e^{2 pi i num/den}, reduced in long double before the trig call.
cplx unit_circle(std::uint64_t num, std::uint64_t den);

/// p^z = exp(z ln p).
inline cplx pow_p(const Prime& p, cplx z) { return std::exp(z * p.ln()); }

/// p^e as a double (exact while representable).
inline double pow_p(const Prime& p, std::int64_t e) {
  return std::pow(static_cast<double>(p.value()), static_cast<double>(e));
}

/// base^e with 0^0 = 1, the convention for log^0 |x|_p.
inline double ipow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

inline Rational ipow(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// A nonzero point written as t = unit * p^{-M} (so |t|_p = p^M), with the
/// unit reduced modulo p^{precision}.
struct ScaledUnit {
  std::int64_t M = 0;
  std::int64_t precision = 0;
  std::uint64_t unit = 1;  // unit mod p^precision

  /// Unit residue modulo p^k, k <= precision.
  std::uint64_t unit_mod(const Prime& p, std::int64_t k) const;
};

ScaledUnit scaled_unit(const PadicPoint& t, const Prime& p, std::int64_t precision);

}  // namespace padic::detail
