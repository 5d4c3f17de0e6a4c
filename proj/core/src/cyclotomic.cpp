#include "padic/cyclotomic.hpp"

#include <cstdint>
#include <vector>

#include "detail.hpp"

namespace padic {

namespace {

constexpr unsigned long kMaxOrder = 1UL << 14;

int mobius(unsigned long n) {
  int mu = 1;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

using Poly = std::vector<BigInt>;  // coefficient i is x^i

// poly * (x^d - 1)
Poly times_binomial(const Poly& a, unsigned long d) {
  Poly r(a.size() + d, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i + d] += a[i];
    r[i] -= a[i];
  }
  return r;
}

// poly / (x^d - 1), exact.
Poly over_binomial(const Poly& a, unsigned long d) {
  Poly q(a.size() - d, BigInt(0));
  Poly rem = a;
  for (std::size_t i = a.size(); i-- > d;) {
    const BigInt c = rem[i];
    if (sgn(c) == 0) continue;
    q[i - d] = c;
    rem[i] -= c;
    rem[i - d] += c;
  }
  return q;
}

Poly cyclotomic(unsigned long n) {
  Poly num{BigInt(1)};
  std::vector<unsigned long> denominators;
  for (unsigned long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 1) num = times_binomial(num, d);
    if (mu == -1) denominators.push_back(d);
  }
  for (unsigned long d : denominators) num = over_binomial(num, d);
  return num;
}

}  // namespace

void CyclotomicSum::add(const Rational& angle, const BigInt& count) {
  if (sgn(count) == 0) return;
  Rational q = angle;
  q.canonicalize();
  BigInt rem;
  mpz_fdiv_r(rem.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational key(rem, q.get_den());
  key.canonicalize();
  auto [it, inserted] = terms_.try_emplace(key, count);
  if (!inserted) {
    it->second += count;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::complex<double> CyclotomicSum::value() const {
  std::complex<double> s = 0;
  for (const auto& [q, c] : terms_) {
    const double a = 2.0 * std::numbers::pi * q.get_d();
    s += c.get_d() * std::complex<double>(std::cos(a), std::sin(a));
  }
  return s;
}

bool CyclotomicSum::is_zero() const {
  if (terms_.empty()) return true;
  BigInt n = 1;
  for (const auto& [q, c] : terms_) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), q.get_den_mpz_t());
  if (n > kMaxOrder) {
    double scale = 0;
    for (const auto& [q, c] : terms_) scale += std::abs(c.get_d());
    return std::abs(value()) <= 1e-10 * scale;
  }
  const unsigned long order = n.get_ui();
  Poly poly(order, BigInt(0));
  for (const auto& [q, c] : terms_) {
    const Rational e = q * Rational(n);
    poly[BigInt(e.get_num() / e.get_den()).get_ui()] += c;
  }
  const Poly phi = cyclotomic(order);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    const BigInt c = poly[i];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) {
      if (sgn(phi[j]) != 0) poly[i - deg + j] -= c * phi[j];
    }
  }
  for (std::size_t i = 0; i < deg && i < poly.size(); ++i) {
    if (sgn(poly[i]) != 0) return false;
  }
  return true;
}

}  // namespace padic
