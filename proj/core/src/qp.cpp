#include "padic/qp.hpp"

#include <cmath>
#include <string>

#include "detail.hpp"
#include "padic/error.hpp"

namespace padic {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;
constexpr std::uint64_t kMaxCosets = std::uint64_t{1} << 26;

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

BigInt strip_prime(BigInt n, const Prime& p) {
  const BigInt bp = static_cast<long>(p.value());
  mpz_remove(n.get_mpz_t(), n.get_mpz_t(), bp.get_mpz_t());
  return n;
}

std::uint64_t coset_count(const Prime& p, std::int64_t exponent) {
  const std::uint64_t n = upow(p, exponent);
  if (n > kMaxCosets) {
    throw Error(ErrorKind::BadWindow,
                "window of " + std::to_string(p.value()) + "^" + std::to_string(exponent) +
                    " cosets is too large to enumerate");
  }
  return n;
}

}  // namespace

Prime::Prime(std::int64_t p) : p_(p), ln_(std::log(static_cast<double>(p))) {
  if (p > (std::int64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidArgument, "p = " + std::to_string(p) + " is not a supported prime");
  }
}

PadicPoint::PadicPoint(long value) : value_(value) {}

PadicPoint::PadicPoint(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  value_ = Rational(num, den);
  value_.canonicalize();
}

PadicPoint::PadicPoint(Rational value) : value_(std::move(value)) { value_.canonicalize(); }

PadicPoint PadicPoint::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw Error(ErrorKind::InvalidArgument, "cannot parse rational '" + std::string(text) + "'");
  }
  if (sgn(q.get_den()) == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + s + "'");
  return PadicPoint(q);
}

PadicPoint operator+(const PadicPoint& a, const PadicPoint& b) { return PadicPoint(Rational(a.value_ + b.value_)); }
PadicPoint operator-(const PadicPoint& a, const PadicPoint& b) { return PadicPoint(Rational(a.value_ - b.value_)); }
PadicPoint operator*(const PadicPoint& a, const PadicPoint& b) { return PadicPoint(Rational(a.value_ * b.value_)); }
PadicPoint operator/(const PadicPoint& a, const PadicPoint& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroArgument, "division by zero point");
  return PadicPoint(Rational(a.value_ / b.value_));
}
PadicPoint operator-(const PadicPoint& a) { return PadicPoint(Rational(-a.value_)); }

Rational power(const Prime& p, std::int64_t e) {
  BigInt n;
  const std::uint64_t mag = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  mpz_ui_pow_ui(n.get_mpz_t(), p.uvalue(), mag);
  if (e >= 0) return Rational(n);
  Rational q(BigInt(1), n);
  q.canonicalize();
  return q;
}

std::int64_t valuation(const BigInt& n, const Prime& p) {
  if (sgn(n) == 0) return kInfiniteValuation;
  BigInt rest;
  const BigInt bp = static_cast<long>(p.value());
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), bp.get_mpz_t()));
}

std::int64_t valuation(const PadicPoint& x, const Prime& p) {
  if (x.is_zero()) return kInfiniteValuation;
  return valuation(x.value().get_num(), p) - valuation(x.value().get_den(), p);
}

Rational norm(const PadicPoint& x, const Prime& p) {
  if (x.is_zero()) return Rational(0);
  return power(p, -valuation(x, p));
}

bool has_padic_denominator(const PadicPoint& x, const Prime& p) {
  return strip_prime(x.value().get_den(), p) == 1;
}

Rational fractional_part(const PadicPoint& x, const Prime& p) {
  if (!has_padic_denominator(x, p)) {
    throw Error(ErrorKind::NonPadicDenominator,
                "denominator of " + x.to_string() + " is not a power of " + std::to_string(p.value()));
  }
  const BigInt& den = x.value().get_den();
  BigInt rem;
  mpz_fdiv_r(rem.get_mpz_t(), x.value().get_num_mpz_t(), den.get_mpz_t());
  Rational q(rem, den);
  q.canonicalize();
  return q;
}

Rational unit_part(const PadicPoint& x, const Prime& p) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroArgument, "unit part of 0");
  Rational u = x.value() * power(p, -valuation(x, p));
  u.canonicalize();
  return u;
}

std::uint64_t upow(const Prime& p, std::int64_t e) {
  if (e < 0) throw Error(ErrorKind::BadWindow, "negative exponent " + std::to_string(e));
  std::uint64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (r > kMaxModulus / p.uvalue()) {
      throw Error(ErrorKind::BadWindow,
                  std::to_string(p.value()) + "^" + std::to_string(e) + " exceeds the 62-bit modulus limit");
    }
    r *= p.uvalue();
  }
  return r;
}

std::uint64_t residue(const Rational& z, const Prime& p, std::int64_t k) {
  if (k <= 0) return 0;
  if (valuation(z.get_den(), p) != 0) {
    throw Error(ErrorKind::InvalidArgument, z.get_str() + " is not a p-adic integer");
  }
  const std::uint64_t mod = upow(p, k);
  const BigInt bmod = static_cast<unsigned long>(mod);
  BigInt a;
  BigInt b;
  mpz_fdiv_r(a.get_mpz_t(), z.get_num_mpz_t(), bmod.get_mpz_t());
  mpz_fdiv_r(b.get_mpz_t(), z.get_den_mpz_t(), bmod.get_mpz_t());
  const std::uint64_t ai = a.get_ui();
  const std::uint64_t bi = b.get_ui();
  return detail::mulmod(ai, detail::invmod(bi, mod), mod);
}

bool Ball::contains(const PadicPoint& x, const Prime& p) const {
  const std::int64_t v = valuation(x - center, p);
  return v == kInfiniteValuation || v >= -gamma;
}

bool Sphere::contains(const PadicPoint& x, const Prime& p) const {
  return valuation(x - center, p) == -gamma;
}

Rational Sphere::measure(const Prime& p) const {
  Rational m = power(p, gamma) * Rational(p.value() - 1, p.value());
  m.canonicalize();
  return m;
}

std::vector<PadicPoint> enumerate_cosets(const Prime& p, std::int64_t N, std::int64_t l) {
  if (l > N) {
    throw Error(ErrorKind::BadWindow, "constancy exponent l = " + std::to_string(l) +
                                          " exceeds support exponent N = " + std::to_string(N));
  }
  const std::uint64_t n = coset_count(p, N - l);
  const Rational step = power(p, -N);
  std::vector<PadicPoint> out;
  out.reserve(n);
  for (std::uint64_t d = 0; d < n; ++d) {
    out.emplace_back(Rational(Rational(BigInt(static_cast<unsigned long>(d))) * step));
  }
  return out;
}

std::vector<PadicPoint> enumerate_sphere_cosets(const Prime& p, std::int64_t gamma, std::int64_t l) {
  if (l >= gamma) {
    throw Error(ErrorKind::BadWindow, "sphere S_" + std::to_string(gamma) + " is not a union of B_" +
                                          std::to_string(l) + "-cosets");
  }
  const std::uint64_t n = coset_count(p, gamma - l);
  const Rational step = power(p, -gamma);
  std::vector<PadicPoint> out;
  out.reserve(n - n / p.uvalue());
  for (std::uint64_t d = 1; d < n; ++d) {
    if (d % p.uvalue() == 0) continue;
    out.emplace_back(Rational(Rational(BigInt(static_cast<unsigned long>(d))) * step));
  }
  return out;
}

namespace detail {

std::uint64_t invmod(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 0;
  detail::i128 t = 0;
  detail::i128 new_t = 1;
  detail::i128 r = n;
  detail::i128 new_r = a % n;
  while (new_r != 0) {
    const detail::i128 q = r / new_r;
    const detail::i128 tt = t - q * new_t;
    t = new_t;
    new_t = tt;
    const detail::i128 rr = r - q * new_r;
    r = new_r;
    new_r = rr;
  }
  if (r != 1) throw Error(ErrorKind::InvalidArgument, "residue is not invertible");
  if (t < 0) t += n;
  return static_cast<std::uint64_t>(t);
}

cplx unit_circle(std::uint64_t num, std::uint64_t den) {
  if (den == 0 || num % den == 0) return {1.0, 0.0};
  num %= den;
  if (4 * static_cast<u128>(num) % den == 0) {
    static constexpr cplx quarter[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return quarter[static_cast<std::size_t>(4 * static_cast<u128>(num) / den)];
  }
  // Fold to [0, 1/2] so the argument stays small and symmetric.
  const long double q = static_cast<long double>(num) / static_cast<long double>(den);
  const bool upper = q > 0.5L;
  const long double a = 2.0L * std::numbers::pi_v<long double> * (upper ? 1.0L - q : q);
  const double c = static_cast<double>(std::cos(a));
  const double s = static_cast<double>(std::sin(a));
  return {c, upper ? -s : s};
}

std::uint64_t ScaledUnit::unit_mod(const Prime& p, std::int64_t k) const {
  if (k <= 0) return 0;
  if (k > precision) throw Error(ErrorKind::InvalidArgument, "unit residue requested beyond precision");
  return unit % upow(p, k);
}

ScaledUnit scaled_unit(const PadicPoint& t, const Prime& p, std::int64_t precision) {
  if (t.is_zero()) throw Error(ErrorKind::ZeroArgument, "t = 0 has no unit part");
  ScaledUnit s;
  s.M = -valuation(t, p);
  s.precision = precision < 0 ? 0 : precision;
  s.unit = residue(unit_part(t, p), p, s.precision);
  return s;
}

}  // namespace detail

}  // namespace padic
