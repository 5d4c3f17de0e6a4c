#include "padic/gamma.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <vector>

#include "detail.hpp"
#include "padic/cyclotomic.hpp"
#include "padic/error.hpp"

namespace padic {

namespace {

using detail::cplx;

std::string fmt_alpha(cplx a) {
  return "alpha = " + std::to_string(a.real()) + (a.imag() < 0 ? "" : "+") + std::to_string(a.imag()) + "i";
}

Jet one_minus_p_pow(const Prime& p, cplx alpha, int order, double c, double d) {
  // 1 - p^{c alpha + d}
  const cplx v = detail::pow_p(p, c * alpha + d);
  return 1.0 - Jet::exp_linear(order, v, c * p.ln());
}

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_memo{Rational(1)};

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Jet gamma_p(const Prime& p, cplx alpha, int order, double pole_tolerance) {
  const Jet den = one_minus_p_pow(p, alpha, order, -1.0, 0.0);
  if (std::abs(den.value()) <= pole_tolerance) {
    throw Error(ErrorKind::PoleProximity,
                "Gamma_p pole: |1 - p^{-alpha}| <= tolerance at p = " + std::to_string(p.value()) + ", " +
                    fmt_alpha(alpha));
  }
  return one_minus_p_pow(p, alpha, order, 1.0, -1.0) / den;
}

cplx shell_integral(const NormedMultChar& chr, std::int64_t gamma) {
  const Prime& p = chr.prime();
  const std::int64_t k0 = chr.rank();
  if (k0 == 0) {
    // Trivial pi_1: the sphere integral of chi_p.
    if (gamma <= 0) return detail::pow_p(p, gamma) * (1.0 - 1.0 / static_cast<double>(p.value()));
    if (gamma == 1) return -1.0;
    return 0.0;
  }
  // For gamma > k0 each p^{k0}-class of units carries a full period of chi,
  // so the cell sums cancel identically.
  if (gamma > k0) return 0.0;
  const std::uint64_t n = chr.modulus();
  const std::uint64_t pg = gamma > 0 ? upow(p, gamma) : 1;
  CyclotomicSum sum;
  const BigInt den(static_cast<unsigned long>(chr.denominator()));
  for (std::uint64_t D = 1; D < n; ++D) {
    if (D % p.uvalue() == 0) continue;
    Rational a(BigInt(static_cast<unsigned long>(chr.table()[D])), den);
    if (gamma > 0) a += Rational(BigInt(static_cast<unsigned long>(D % pg)), BigInt(static_cast<unsigned long>(pg)));
    sum.add(a);
  }
  if (sum.is_zero()) return 0.0;
  // Cells have level gamma - k0.
  return detail::pow_p(p, gamma - k0) * sum.value();
}

Jet gamma_pi(const MultChar& chr, int order, std::optional<std::int64_t> max_shell) {
  const NormedMultChar& pi1 = chr.pi1;
  const Prime& p = pi1.prime();
  if (pi1.is_trivial()) return gamma_p(p, chr.alpha, order);
  const std::int64_t k0 = pi1.rank();
  const std::int64_t K = max_shell.value_or(k0 + 4);
  if (K < k0 + 2) {
    throw Error(ErrorKind::InvalidArgument,
                "max_shell K = " + std::to_string(K) + " must be at least k0 + 2 = " + std::to_string(k0 + 2));
  }
  // partial[r] is the sum over |gamma| <= r.
  std::vector<Jet> partial;
  Jet acc(order, 0.0);
  for (std::int64_t r = 0; r <= K; ++r) {
    for (std::int64_t g : {r, -r}) {
      if (r == 0 && g < 0) continue;
      const cplx G = shell_integral(pi1, g);
      if (G == 0.0) continue;
      const cplx v = detail::pow_p(p, static_cast<double>(g) * (chr.alpha - 1.0)) * G;
      acc += Jet::exp_linear(order, v, static_cast<double>(g) * p.ln());
    }
    partial.push_back(acc);
  }
  const Jet& s = partial[K];
  for (int k = 0; k <= order; ++k) {
    const double scale = 1.0 + std::abs(s.coeff(k));
    const double d1 = std::abs(partial[K].coeff(k) - partial[K - 1].coeff(k));
    const double d2 = std::abs(partial[K - 1].coeff(k) - partial[K - 2].coeff(k));
    if (d1 > 1e-13 * scale || d2 > 1e-13 * scale) {
      throw Error(ErrorKind::NotStabilized, "Gamma_p(pi_alpha) sphere sum not stable by K = " + std::to_string(K) +
                                                " at " + fmt_alpha(chr.alpha));
    }
  }
  return s;
}

Jet i0(const Prime& p, const NormedMultChar& chr, cplx alpha, int order) {
  if (!chr.is_trivial()) return Jet(order, 0.0);
  const Jet den = one_minus_p_pow(p, alpha, order, -1.0, 0.0);
  if (std::abs(den.value()) <= kPoleTolerance) {
    throw Error(ErrorKind::PoleProximity, "I_0 pole: |1 - p^{-alpha}| <= tolerance at p = " +
                                              std::to_string(p.value()) + ", " + fmt_alpha(alpha));
  }
  const Jet num(order, 1.0 - 1.0 / static_cast<double>(p.value()));
  return (num / den).rescaled(1.0 / p.ln());
}

Rational bernoulli(int r) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "bernoulli index " + std::to_string(r) + " < 0");
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  // sum_{j=0}^{g-1} C(g, j) B_j = 0 with g = n + 1 gives B_n.
  while (static_cast<int>(bernoulli_memo.size()) <= r) {
    const int n = static_cast<int>(bernoulli_memo.size());
    Rational s = 0;
    for (int j = 0; j < n; ++j) s += Rational(binomial(n + 1, j)) * bernoulli_memo[j];
    Rational b = -s / Rational(n + 1);
    b.canonicalize();
    bernoulli_memo.push_back(b);
  }
  return bernoulli_memo[r];
}

Rational faulhaber_sum(int s, std::int64_t gamma0) {
  if (s < 0) throw Error(ErrorKind::InvalidArgument, "faulhaber power " + std::to_string(s) + " < 0");
  const Rational g(BigInt(static_cast<long>(gamma0)));
  Rational sum = 0;
  for (int r = 0; r <= s; ++r) {
    Rational b = bernoulli(r);
    if (r == 1) b = -b;
    sum += Rational(binomial(s + 1, r)) * b * detail::ipow(g, s + 1 - r);
  }
  sum /= Rational(s + 1);
  sum.canonicalize();
  return sum;
}

}  // namespace padic
