#pragma once

// Evaluation points of Q_p as exact rationals, their valuation, norm and
// fractional part, and canonical coset representatives of balls and spheres.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace padic {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Valuation of zero.
inline constexpr std::int64_t kInfiniteValuation = std::numeric_limits<std::int64_t>::max();

class Prime {
 public:
  /// Throws InvalidArgument unless p is prime (trial division).
  explicit Prime(std::int64_t p);

  std::int64_t value() const noexcept { return p_; }
  std::uint64_t uvalue() const noexcept { return static_cast<std::uint64_t>(p_); }
  double ln() const noexcept { return ln_; }

  friend bool operator==(const Prime& a, const Prime& b) noexcept { return a.p_ == b.p_; }

 private:
  std::int64_t p_;
  double ln_;
};

/// A point of Q_p represented by an exact rational (always canonicalized).
class PadicPoint {
 public:
  PadicPoint() = default;
  PadicPoint(long value);  // NOLINT(google-explicit-constructor)
  PadicPoint(long num, long den);
  explicit PadicPoint(Rational value);

  /// Accepts "a", "-a", "a/b".
  static PadicPoint parse(std::string_view text);

  const Rational& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  std::string to_string() const { return value_.get_str(); }

  friend PadicPoint operator+(const PadicPoint& a, const PadicPoint& b);
  friend PadicPoint operator-(const PadicPoint& a, const PadicPoint& b);
  friend PadicPoint operator*(const PadicPoint& a, const PadicPoint& b);
  friend PadicPoint operator/(const PadicPoint& a, const PadicPoint& b);
  friend PadicPoint operator-(const PadicPoint& a);
  friend bool operator==(const PadicPoint& a, const PadicPoint& b) { return a.value_ == b.value_; }

 private:
  Rational value_{0};
};

/// Exact p^e for any integer e.
Rational power(const Prime& p, std::int64_t e);

/// Largest gamma with p^gamma dividing the integer; n != 0.
std::int64_t valuation(const BigInt& n, const Prime& p);

/// gamma with x = p^gamma * (m/n), m, n coprime to p; kInfiniteValuation for 0.
std::int64_t valuation(const PadicPoint& x, const Prime& p);

/// |x|_p = p^{-valuation}; 0 for x = 0.
Rational norm(const PadicPoint& x, const Prime& p);

/// True when the reduced denominator of x is a power of p.
bool has_padic_denominator(const PadicPoint& x, const Prime& p);

/// {x}_p: the sum of the negative-power digits of x. Throws NonPadicDenominator
/// unless the denominator of x is a power of p.
Rational fractional_part(const PadicPoint& x, const Prime& p);

/// u = x * |x|_p, the unit part of a nonzero point. Throws ZeroArgument.
Rational unit_part(const PadicPoint& x, const Prime& p);

/// Residue modulo p^k of a rational lying in Z_p (valuation >= 0), in
/// [0, p^k). Throws InvalidArgument if z is not a p-adic integer or p^k does
/// not fit in 62 bits.
std::uint64_t residue(const Rational& z, const Prime& p, std::int64_t k);

/// p^e as an unsigned integer; throws BadWindow if e < 0 or the result
/// exceeds 2^62.
std::uint64_t upow(const Prime& p, std::int64_t e);

/// B_gamma(center) = {x : |x - center|_p <= p^gamma}.
struct Ball {
  PadicPoint center;
  std::int64_t gamma = 0;

  bool contains(const PadicPoint& x, const Prime& p) const;
  Rational measure(const Prime& p) const { return power(p, gamma); }
};

/// S_gamma(center) = B_gamma(center) \ B_{gamma-1}(center).
struct Sphere {
  PadicPoint center;
  std::int64_t gamma = 0;

  bool contains(const PadicPoint& x, const Prime& p) const;
  Rational measure(const Prime& p) const;
};

/// One representative per coset of B_l in B_N: x = D * p^{-N} for
/// D = 0, 1, ..., p^{N-l} - 1 (zero first). Throws BadWindow if l > N.
std::vector<PadicPoint> enumerate_cosets(const Prime& p, std::int64_t N, std::int64_t l);

/// One representative per coset of B_l covering S_gamma exactly once:
/// x = D * p^{-gamma} for 0 < D < p^{gamma-l}, p not dividing D.
/// Throws BadWindow if l >= gamma.
std::vector<PadicPoint> enumerate_sphere_cosets(const Prime& p, std::int64_t gamma, std::int64_t l);

}  // namespace padic
