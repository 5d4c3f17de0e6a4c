#include "padic/singular.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "detail.hpp"
#include "padic/error.hpp"
#include "padic/gamma.hpp"
#include "sphere_sum.hpp"

namespace padic {

namespace {

using detail::cplx;
using Kind = QahDistribution::Kind;

void check_t(const PadicPoint& t, const Prime& p) {
  if (t.is_zero()) throw Error(ErrorKind::ZeroArgument, "t = 0");
  if (!has_padic_denominator(t, p)) {
    throw Error(ErrorKind::NonPadicDenominator, "t = " + t.to_string() + " has a denominator prime to p");
  }
}

void check_prime(const SingularIntegralRequest& req) {
  if (!(req.f.prime() == req.phi.prime())) {
    throw Error(ErrorKind::InvalidArgument, "distribution and test function use different primes");
  }
}

// Unit part of t to as many p-digits as fit in 62 bits, capped at `want`.
detail::ScaledUnit unit_of(const PadicPoint& t, const Prime& p, std::int64_t want) {
  std::int64_t e = 0;
  std::uint64_t pw = 1;
  while (e < want && pw <= (std::uint64_t{1} << 62) / p.uvalue()) {
    pw *= p.uvalue();
    ++e;
  }
  return detail::scaled_unit(t, p, e);
}

std::int64_t cell_level(std::int64_t l, std::int64_t gamma, std::int64_t k0) {
  return std::min(l, gamma - std::max<std::int64_t>(k0, 1));
}

}  // namespace

cplx j0_closed_form(const QahDistribution& f, std::int64_t l0, const PadicPoint& t) {
  const Prime& p = f.prime();
  check_t(t, p);
  const std::int64_t M = -valuation(t, p);
  const double inv_p = 1.0 / static_cast<double>(p.value());

  switch (f.kind()) {
    case Kind::DiracDelta:
      return 1.0;

    case Kind::PLog: {
      // Sphere integrals of chi_t: p^g(1-1/p) for g <= -M, -p^{g-1} at g = 1-M,
      // 0 above; the B_0 subtraction telescopes into power sums.
      const int n = f.m() - 1;
      const Rational one_minus = Rational(p.value() - 1, p.value());
      if (M <= -l0) return Rational(one_minus * faulhaber_sum(n, l0)).get_d();
      Rational r = one_minus * faulhaber_sum(n, -M) -
                   Rational(1, p.value()) * detail::ipow(Rational(BigInt(static_cast<long>(1 - M))), n);
      return r.get_d();
    }

    case Kind::PiAlphaLog: {
      const int m = f.m();
      const cplx alpha = f.alpha();
      if (f.pi1().is_trivial()) {
        Jet j(m);
        if (M <= -l0) {
          // int_{B_{l0}} |x|^{alpha-1} dx
          const Jet num = Jet::exp_linear(m, detail::pow_p(p, static_cast<double>(l0) * alpha) * (1.0 - inv_p),
                                          static_cast<double>(l0) * p.ln());
          const Jet den = 1.0 - Jet::exp_linear(m, detail::pow_p(p, -alpha), -p.ln());
          if (std::abs(den.value()) <= kPoleTolerance) {
            throw Error(ErrorKind::PoleProximity, "|1 - p^{-alpha}| <= tolerance in J0");
          }
          j = num / den;
        } else {
          j = gamma_p(p, alpha, m) *
              Jet::exp_linear(m, detail::pow_p(p, -static_cast<double>(M) * alpha), -static_cast<double>(M) * p.ln());
        }
        return j.rescaled(1.0 / p.ln()).derivative(m);
      }
      // Ramified: int_{S_g} pi_1 chi_t vanishes unless 1 - M <= g <= k0 - M.
      const std::int64_t k0 = f.rank();
      const detail::ScaledUnit su = unit_of(t, p, k0);
      detail::SphereIntegrand in;
      in.p = &p;
      in.pi1 = &f.pi1();
      in.t = &su;
      cplx s = 0.0;
      for (std::int64_t g = 1 - M; g <= std::min(l0, k0 - M); ++g) {
        s += f.sphere_weight(g) * detail::sphere_integral(in, g, g - k0);
      }
      return s;
    }
  }
  return 0.0;
}

SingularParts decompose(const SingularIntegralRequest& req) {
  check_prime(req);
  const QahDistribution& f = req.f;
  const TestFunction& phi = req.phi;
  const Prime& p = f.prime();
  check_t(req.t, p);
  const std::int64_t l = phi.l();
  const std::int64_t N = phi.N();
  const std::int64_t l0 = req.split_level.value_or(l);
  if (l0 > N) {
    throw Error(ErrorKind::BadWindow, "split level l0 = " + std::to_string(l0) + " exceeds N = " + std::to_string(N));
  }

  SingularParts parts;
  parts.split_level = l0;
  parts.phi0 = phi.at_zero();
  parts.j0 = j0_closed_form(f, l0, req.t);
  if (f.kind() == Kind::DiracDelta) return parts;

  const std::int64_t M = -valuation(req.t, p);
  const std::int64_t k0 = f.rank();
  const detail::ScaledUnit su = unit_of(req.t, p, N + M);
  detail::SphereIntegrand in;
  in.p = &p;
  in.pi1 = &f.pi1();
  in.phi = &phi;
  in.t = &su;

  in.mode = detail::PhiMode::MinusZero;
  for (std::int64_t g = l + 1; g <= l0; ++g) {
    parts.j1 += f.sphere_weight(g) * detail::sphere_integral(in, g, cell_level(l, g, k0));
  }
  in.mode = detail::PhiMode::Value;
  for (std::int64_t g = l0 + 1; g <= N; ++g) {
    parts.j2 += f.sphere_weight(g) * detail::sphere_integral(in, g, cell_level(l, g, k0));
  }
  return parts;
}

cplx singular_fourier(const SingularIntegralRequest& req) { return decompose(req).total(); }

cplx brute_force_oracle(const SingularIntegralRequest& req, int refine) {
  check_prime(req);
  if (refine < 0) throw Error(ErrorKind::InvalidArgument, "refine < 0");
  const QahDistribution& f = req.f;
  const TestFunction& phi = req.phi;
  const Prime& p = f.prime();
  check_t(req.t, p);
  const cplx phi0 = phi.at_zero();
  if (f.kind() == Kind::DiracDelta) return phi0;

  const std::int64_t M = -valuation(req.t, p);
  const std::int64_t l = phi.l();
  const std::int64_t N = phi.N();
  const std::int64_t k0 = f.rank();
  const std::int64_t gstar = std::min({-M, l, std::int64_t{0}}) - refine;
  const MultChar pa{f.alpha(), f.pi1()};

  cplx sum = 0.0;
  for (std::int64_t g = gstar + 1; g <= N; ++g) {
    const std::int64_t c = std::min({l, -M, g - k0, g - 1}) - refine;
    const double cell = detail::to_double(power(p, c));
    cplx s = 0.0;
    for (const PadicPoint& x : enumerate_sphere_cosets(p, g, c)) {
      const cplx psi = phi.at(x) * chi(x * req.t, p).to_complex();
      if (psi == 0.0) continue;
      const double log_abs = -static_cast<double>(valuation(x, p));
      cplx w;
      if (f.kind() == Kind::PiAlphaLog) {
        w = eval_pi_alpha(pa, x) * detail::ipow(log_abs, f.m());
      } else {
        w = detail::ipow(log_abs, f.m() - 1) / detail::to_double(norm(x, p));
      }
      s += w * psi;
    }
    sum += s * cell;
  }

  const double one_minus = 1.0 - 1.0 / static_cast<double>(p.value());
  if (f.kind() == Kind::PLog) {
    double reg = 0.0;
    for (std::int64_t g = gstar + 1; g <= 0; ++g) reg += detail::ipow(static_cast<double>(g), f.m() - 1);
    return sum - phi0 * one_minus * reg;
  }
  if (!f.pi1().is_trivial()) return sum;
  // int_{B_{gstar}} |x|^{alpha-1} log_p^m|x| dx, continued in alpha.
  const int m = f.m();
  const cplx alpha = f.alpha();
  const Jet num = Jet::exp_linear(m, detail::pow_p(p, static_cast<double>(gstar) * alpha) * one_minus,
                                  static_cast<double>(gstar) * p.ln());
  const Jet den = 1.0 - Jet::exp_linear(m, detail::pow_p(p, -alpha), -p.ln());
  if (std::abs(den.value()) <= kPoleTolerance) throw Error(ErrorKind::PoleProximity, "|1 - p^{-alpha}| <= tolerance");
  return sum + phi0 * (num / den).rescaled(1.0 / p.ln()).derivative(m);
}

cplx direct_integral(const QahDistribution& f, const TestFunction& phi, const PadicPoint& t) {
  if (f.kind() != Kind::PiAlphaLog || f.alpha().real() <= 0.0) {
    throw Error(ErrorKind::BadAlpha, "direct integral needs pi-alpha-log with Re alpha > 0, got " + f.describe());
  }
  if (!(f.prime() == phi.prime())) throw Error(ErrorKind::InvalidArgument, "prime mismatch");
  const Prime& p = f.prime();
  const std::int64_t l = phi.l();
  const std::int64_t N = phi.N();
  const std::int64_t k0 = f.rank();

  detail::SphereIntegrand in;
  in.p = &p;
  in.pi1 = &f.pi1();
  in.phi = &phi;
  in.mode = detail::PhiMode::Value;
  detail::ScaledUnit su;
  std::int64_t gstar = l;
  if (!t.is_zero()) {
    if (!has_padic_denominator(t, p)) throw Error(ErrorKind::NonPadicDenominator, "t has a denominator prime to p");
    const std::int64_t M = -valuation(t, p);
    su = unit_of(t, p, N + M);
    in.t = &su;
    gstar = std::min(l, -M);
  }

  cplx sum = 0.0;
  for (std::int64_t g = gstar + 1; g <= N; ++g) {
    std::int64_t c = std::min(l, g - std::max<std::int64_t>(k0, 1));
    if (in.t) c = std::min(c, -su.M);
    sum += f.sphere_weight(g) * detail::sphere_integral(in, g, c);
  }
  if (!f.pi1().is_trivial()) return sum;

  // phi(0) (1 - 1/p) sum_{g <= gstar} p^{g alpha} g^m, summed until it settles.
  const double one_minus = 1.0 - 1.0 / static_cast<double>(p.value());
  cplx tail = 0.0;
  int quiet = 0;
  for (std::int64_t g = gstar, i = 0; i < 10'000'000; --g, ++i) {
    const cplx term =
        detail::pow_p(p, static_cast<double>(g) * f.alpha()) * detail::ipow(static_cast<double>(g), f.m());
    tail += term;
    quiet = std::abs(term) <= 1e-18 * std::abs(tail) ? quiet + 1 : 0;
    if (quiet >= 8 || (tail == 0.0 && term == 0.0 && g < -64)) break;
  }
  return sum + phi.at_zero() * one_minus * tail;
}

}  // namespace padic
