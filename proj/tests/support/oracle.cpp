#include "oracle.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace oracle {

namespace {

long ipow(long p, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

cplx turns(const mpq_class& a) {
  // reduce to [0, 1) first so the double argument is small
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  const long double x = mpq_class(r, a.get_den()).get_d();
  const long double th = 2.0L * std::numbers::pi_v<long double> * x;
  return {static_cast<double>(std::cos(th)), static_cast<double>(std::sin(th))};
}

int valuation(const mpq_class& q, long p) {
  if (q == 0) throw std::invalid_argument("valuation of 0");
  int v = 0;
  mpz_class n = q.get_num(), d = q.get_den();
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

cplx cpow_real(double base, cplx e) { return std::exp(e * std::log(base)); }

cplx ipow_c(cplx z, int n) {
  cplx r = 1.0;
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

double binom(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

mpq_class frac_p(const mpq_class& q, long p) {
  mpz_class d = q.get_den();
  mpz_class pe = 1;
  while (d % p == 0) {
    d /= p;
    pe *= p;
  }
  if (d != 1) throw std::invalid_argument("denominator not a power of p");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), q.get_num_mpz_t(), pe.get_mpz_t());
  return mpq_class(r, pe);
}

cplx chi_p(const mpq_class& x, long p) { return turns(frac_p(x, p)); }

int legendre(std::uint64_t u, long p) {
  unsigned long long r = 1, b = u % p, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

Char Char::trivial(long p) { return {p, 0, [](std::uint64_t) { return cplx(1.0); }}; }

Char Char::quadratic(long p) {
  return {p, 1, [p](std::uint64_t u) { return cplx(legendre(u, p)); }};
}

Char Char::table(long p, int k0, const std::vector<std::pair<std::uint64_t, mpq_class>>& angles) {
  std::map<std::uint64_t, cplx> v;
  for (const auto& [u, a] : angles) v[u] = turns(a);
  const auto mod = static_cast<std::uint64_t>(ipow(p, k0));
  return {p, k0, [v, mod](std::uint64_t u) { return v.at(u % mod); }};
}

cplx weighted_geometric(int m, cplx z) {
  if (m == 0) return 1.0 / (1.0 - z);
  cplx a = 0.0;  // Eulerian polynomial A_m(z)
  for (int k = 0; k < m; ++k) {
    double e = 0;
    for (int j = 0; j <= k; ++j) e += ((j % 2) ? -1.0 : 1.0) * binom(m + 1, j) * std::pow(k + 1 - j, m);
    a += e * ipow_c(z, k);
  }
  return z * a / ipow_c(1.0 - z, m + 1);
}

cplx gamma(const Char& c, cplx alpha, int k) {
  const double p = static_cast<double>(c.p);
  const double lp = std::log(p);
  if (c.k0 == 0) {
    const cplx z = cpow_real(p, -alpha);
    return (1.0 - 1.0 / p) * std::pow(-lp, k) * weighted_geometric(k, z) - std::pow(lp, k) * cpow_real(p, alpha - 1.0);
  }
  cplx s = 0.0;
  for (int g = 1; g <= c.k0 + 2; ++g) {
    const int c_lvl = std::min(g - c.k0, 0);
    const long n = ipow(c.p, g - c_lvl);
    cplx G = 0.0;
    for (long u = 1; u < n; ++u) {
      if (u % c.p == 0) continue;
      G += c.value(static_cast<std::uint64_t>(u)) * chi_p(mpq_class(u, ipow(c.p, g)), c.p);
    }
    G *= std::pow(p, c_lvl);
    s += std::pow(g * lp, k) * cpow_real(p, static_cast<double>(g) * (alpha - 1.0)) * G;
  }
  return s;
}

cplx singular(const Dist& f, const padic::TestFunction& phi, const mpq_class& t) {
  const long p = phi.prime().value();
  const double pd = static_cast<double>(p);
  const cplx phi0 = phi.at_zero();
  if (f.family == Family::Delta) return phi0;
  const int M = -valuation(t, p);
  const int l = static_cast<int>(phi.l());
  const int N = static_cast<int>(phi.N());
  const int k0 = f.family == Family::PiAlphaLog ? f.pi1.k0 : 0;
  const int g_lo = std::min({l, -M, 0});
  cplx J = 0.0;
  for (int g = g_lo + 1; g <= std::max(N, 0); ++g) {
    const int c = std::min({l, g - k0, g - 1});
    const bool chi_survives = c + M <= 0;
    const double cell = std::pow(pd, c);
    const long n = ipow(p, g - c);
    const mpq_class scale = g >= 0 ? mpq_class(1, ipow(p, g)) : mpq_class(ipow(p, -g));
    cplx dens;
    if (f.family == Family::PiAlphaLog) {
      dens = cpow_real(pd, static_cast<double>(g) * (f.alpha - 1.0)) * std::pow(static_cast<double>(g), f.m);
    } else {
      dens = std::pow(pd, -g) * std::pow(static_cast<double>(g), f.m - 1);
    }
    cplx sphere = 0.0;
    for (long u = 1; u < n; ++u) {
      if (u % p == 0) continue;
      const mpq_class x = mpq_class(u) * scale;
      const cplx pi1 = f.family == Family::PiAlphaLog ? f.pi1.value(static_cast<std::uint64_t>(u)) : cplx(1.0);
      const cplx phix = g <= N ? phi.at(padic::PadicPoint(x)) : cplx(0.0);
      const cplx chi_int = chi_survives ? chi_p(x * t, p) * cell : cplx(0.0);
      cplx v = phix * chi_int;
      if (g <= 0) v -= phi0 * cell;
      sphere += pi1 * v;
    }
    J += dens * sphere;
  }
  if (f.family == Family::PiAlphaLog && k0 == 0) {
    const cplx z = cpow_real(pd, -f.alpha);
    J += phi0 * (1.0 - 1.0 / pd) * ((f.m % 2) ? -1.0 : 1.0) * weighted_geometric(f.m, z);
  }
  return J;
}

mpq_class bernoulli(int n) {
  mpq_class b = 0;
  for (int k = 0; k <= n; ++k) {
    mpz_class inner = 0;
    mpz_class ck = 1;  // C(k, j)
    for (int j = 0; j <= k; ++j) {
      mpz_class jn;
      mpz_ui_pow_ui(jn.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
      inner += (j % 2 ? -1 : 1) * ck * jn;
      ck = ck * (k - j) / (j + 1);
    }
    b += mpq_class(inner, k + 1);
  }
  b.canonicalize();
  return b;
}

cplx finite_difference(const std::function<cplx(cplx)>& g, cplx a, int k, double h) {
  const cplx m2 = g(a - 2 * h), m1 = g(a - h), p1 = g(a + h), p2 = g(a + 2 * h);
  switch (k) {
    case 0:
      return g(a);
    case 1:
      return (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12 * h);
    case 2:
      return (-p2 + 16.0 * p1 - 30.0 * g(a) + 16.0 * m1 - m2) / (12 * h * h);
    case 3:
      return (p2 - 2.0 * p1 + 2.0 * m1 - m2) / (2 * h * h * h);
    default:
      throw std::invalid_argument("finite_difference: k <= 3");
  }
}

}  // namespace oracle
