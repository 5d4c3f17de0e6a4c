#include "padic/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detail.hpp"
#include "padic/error.hpp"
#include "padic/gamma.hpp"
#include "padic/singular.hpp"
#include "parallel.hpp"
#include "sphere_sum.hpp"

namespace padic {

namespace {

using detail::cplx;
using Kind = QahDistribution::Kind;

PadicPoint make_t(const Prime& p, std::uint64_t u, std::int64_t M) {
  return PadicPoint(Rational(Rational(BigInt(static_cast<unsigned long>(u))) * power(p, -M)));
}

// (1/p)(-1)^{n+1}(M-1)^n + (1-1/p)/(n+1) [ (-1)^{n+1} M^{n+1}
//   - (-1)^n C(n+1,1) B_1 (M^n - 0^n) + sum_{r=2}^{n} (-1)^{n+1-r} C(n+1,r) B_r M^{n+1-r} ]
Rational plog_rhs(const Prime& p, int n, std::int64_t M) {
  const Rational Mq(BigInt(static_cast<long>(M)));
  const auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
  Rational first = Rational(sign(n + 1), p.value()) * detail::ipow(Rational(Mq - 1), n);
  Rational bracket = sign(n + 1) * detail::ipow(Mq, n + 1);
  const Rational zero_n = n == 0 ? Rational(1) : Rational(0);
  bracket -= Rational(sign(n)) * Rational(binomial(n + 1, 1)) * bernoulli(1) * (detail::ipow(Mq, n) - zero_n);
  for (int r = 2; r <= n; ++r) {
    bracket += Rational(sign(n + 1 - r)) * Rational(binomial(n + 1, r)) * bernoulli(r) * detail::ipow(Mq, n + 1 - r);
  }
  Rational out = first + Rational(p.value() - 1, p.value()) * bracket / Rational(n + 1);
  out.canonicalize();
  return out;
}

Jet gamma_jet(const QahDistribution& f) {
  if (f.pi1().is_trivial()) return gamma_p(f.prime(), f.alpha(), f.m());
  return gamma_pi(MultChar{f.alpha(), f.pi1()}, f.m());
}

std::optional<std::int64_t> empirical_s(const std::vector<StabilizationRow>& rows, std::int64_t M_min) {
  if (rows.empty()) return std::nullopt;
  std::int64_t top = rows.front().M;
  for (const auto& r : rows) top = std::max(top, r.M);
  std::int64_t s = M_min - 1;
  for (const auto& r : rows) {
    if (r.stabilized) continue;
    if (r.M == top) return std::nullopt;
    s = std::max(s, r.M);
  }
  return s;
}

void check_grid(std::int64_t M_min, std::int64_t M_max, int units) {
  if (M_min > M_max) throw Error(ErrorKind::InvalidArgument, "empty M range");
  if (units < 1) throw Error(ErrorKind::InvalidArgument, "units_per_sphere must be >= 1");
}

}  // namespace

std::string_view to_string(Theorem th) noexcept {
  switch (th) {
    case Theorem::Th2_1a:
      return "2-1a";
    case Theorem::Th2_1b:
      return "2-1b";
    case Theorem::Th2_2:
      return "2-2";
    case Theorem::Th3:
      return "3";
    case Theorem::Delta:
      return "delta";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view s) {
  if (s == "2-1a") return Theorem::Th2_1a;
  if (s == "2-1b") return Theorem::Th2_1b;
  if (s == "2-2") return Theorem::Th2_2;
  if (s == "3") return Theorem::Th3;
  if (s == "delta") return Theorem::Delta;
  return std::nullopt;
}

Theorem theorem_for(const QahDistribution& f) {
  switch (f.kind()) {
    case Kind::DiracDelta:
      return Theorem::Delta;
    case Kind::PLog:
      return Theorem::Th2_2;
    case Kind::PiAlphaLog:
      if (!f.pi1().is_trivial()) return Theorem::Th3;
      return f.m() == 0 ? Theorem::Th2_1a : Theorem::Th2_1b;
  }
  return Theorem::Delta;
}

std::int64_t s_pred_exponent(const QahDistribution& f, std::int64_t l) { return -l + f.rank(); }

AsymptoticPrediction predict(const QahDistribution& f, std::int64_t l) {
  AsymptoticPrediction a;
  a.theorem = theorem_for(f);
  a.s_pred_exponent = s_pred_exponent(f, l);
  switch (f.kind()) {
    case Kind::DiracDelta:
      a.coefficients = {1.0};
      a.scales = "{1}";
      break;
    case Kind::PLog:
      for (int r = 0; r < f.m(); ++r) a.coefficients.push_back(bernoulli(r).get_d());
      a.scales = "{log_p^k|t|_p, k = 0.." + std::to_string(f.m()) + "}";
      break;
    case Kind::PiAlphaLog: {
      const Jet g = gamma_jet(f);
      for (int k = 0; k <= f.m(); ++k) a.coefficients.push_back(g.derivative(k));
      a.scales = f.pi1().is_trivial() ? "{|t|_p^{-alpha} log_p^{m-k}|t|_p}"
                                      : "{|t|_p^{-alpha} pi_1^{-1}(t) log_p^{m-k}|t|_p}";
      break;
    }
  }
  return a;
}

cplx rhs_predict(const QahDistribution& f, cplx phi0, std::int64_t /*l*/, const PadicPoint& t) {
  const Prime& p = f.prime();
  if (t.is_zero()) throw Error(ErrorKind::ZeroArgument, "rhs at t = 0");
  const std::int64_t M = -valuation(t, p);
  switch (f.kind()) {
    case Kind::DiracDelta:
      return phi0;
    case Kind::PLog:
      return phi0 * plog_rhs(p, f.m() - 1, M).get_d();
    case Kind::PiAlphaLog: {
      // d^m/dalpha^m [Gamma |t|^{-alpha}] / ln^m p: |t|^{-alpha} differentiates
      // to (-M ln p)^{m-k} |t|^{-alpha}.
      const int m = f.m();
      const Jet g = gamma_jet(f);
      cplx s = 0.0;
      for (int k = 0; k <= m; ++k) {
        s += binomial(m, k).get_d() * detail::ipow(1.0 / p.ln(), k) * g.derivative(k) *
             detail::ipow(-static_cast<double>(M), m - k);
      }
      s *= detail::pow_p(p, -static_cast<double>(M) * f.alpha());
      if (!f.pi1().is_trivial()) s *= eval_pi1(f.pi1(), t).inverse().to_complex();
      return phi0 * s;
    }
  }
  return 0.0;
}

bool StabilizationReport::passed() const {
  for (const auto& r : rows) {
    if (r.asserted && !r.stabilized) return false;
    if (r.oracle && std::abs(*r.oracle - r.J) >= tolerance * (1.0 + std::abs(r.J))) return false;
  }
  return true;
}

std::vector<std::uint64_t> sample_units(const Prime& p, int n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t u = 1; static_cast<int>(out.size()) < n; ++u) {
    if (u % p.uvalue() != 0) out.push_back(u);
  }
  return out;
}

StabilizationReport verify_stabilization(const QahDistribution& f, const TestFunction& phi, std::int64_t M_min,
                                         std::int64_t M_max, int units_per_sphere, const VerifyOptions& options) {
  check_grid(M_min, M_max, units_per_sphere);
  const Prime& p = f.prime();
  StabilizationReport rep;
  rep.theorem = theorem_for(f);
  rep.description = f.describe();
  rep.prime = p.value();
  rep.l = phi.l();
  rep.N = phi.N();
  rep.s_pred_exponent = s_pred_exponent(f, phi.l());
  rep.tolerance = options.tolerance;

  const auto units = sample_units(p, units_per_sphere);
  for (std::int64_t M = M_min; M <= M_max; ++M) {
    for (auto u : units) {
      StabilizationRow r;
      r.M = M;
      r.t_unit = u;
      r.asserted = M > rep.s_pred_exponent;
      rep.rows.push_back(r);
    }
  }
  const cplx phi0 = phi.at_zero();
  detail::parallel_for(rep.rows.size(), [&](std::size_t i) {
    StabilizationRow& r = rep.rows[i];
    const PadicPoint t = make_t(p, r.t_unit, r.M);
    SingularIntegralRequest req{f, phi, t, options.split_level};
    r.J = singular_fourier(req);
    r.rhs = rhs_predict(f, phi0, phi.l(), t);
    r.abs_err = std::abs(r.J - r.rhs);
    r.stabilized = r.abs_err < options.tolerance * (1.0 + std::abs(r.rhs));
    if (options.oracle_cross_check) r.oracle = brute_force_oracle(req, options.oracle_refine);
  });
  rep.s_emp_exponent = empirical_s(rep.rows, M_min);
  if (rep.theorem == Theorem::Th3) {
    for (const auto& r : rep.rows) {
      if (r.M > -phi.l() && r.M <= rep.s_pred_exponent && !r.stabilized) rep.below_threshold_violation = true;
    }
  }
  return rep;
}

StabilizationReport erdelyi_check(const QahDistribution& f, const TestFunction& phi, std::int64_t M_min,
                                  std::int64_t M_max, int units_per_sphere, double tolerance) {
  if (f.kind() != Kind::PiAlphaLog || f.alpha().real() <= 0.0) {
    throw Error(ErrorKind::BadAlpha, "Erdelyi check needs Re alpha > 0, got " + f.describe());
  }
  check_grid(M_min, M_max, units_per_sphere);
  const Prime& p = f.prime();
  StabilizationReport rep;
  rep.theorem = theorem_for(f);
  rep.description = "erdelyi " + f.describe();
  rep.prime = p.value();
  rep.l = phi.l();
  rep.N = phi.N();
  rep.s_pred_exponent = s_pred_exponent(f, phi.l());
  rep.tolerance = tolerance;
  for (std::int64_t M = M_min; M <= M_max; ++M) {
    for (auto u : sample_units(p, units_per_sphere)) {
      StabilizationRow r;
      r.M = M;
      r.t_unit = u;
      r.asserted = M > rep.s_pred_exponent;
      rep.rows.push_back(r);
    }
  }
  const cplx phi0 = phi.at_zero();
  detail::parallel_for(rep.rows.size(), [&](std::size_t i) {
    StabilizationRow& r = rep.rows[i];
    const PadicPoint t = make_t(p, r.t_unit, r.M);
    r.J = direct_integral(f, phi, t);
    r.rhs = rhs_predict(f, phi0, phi.l(), t);
    r.abs_err = std::abs(r.J - r.rhs);
    r.stabilized = r.abs_err < tolerance * (1.0 + std::abs(r.rhs));
  });
  rep.s_emp_exponent = empirical_s(rep.rows, M_min);
  return rep;
}

PairingValues log_fourier_pairing(const TestFunction& phi) {
  const Prime& p = phi.prime();
  const TestFunction F = fourier(phi);
  const double pd = static_cast<double>(p.value());
  const double one_minus = 1.0 - 1.0 / pd;

  detail::SphereIntegrand in;
  in.p = &p;
  in.phi = &F;
  in.mode = detail::PhiMode::Value;
  // F is constant on B_{l'}, l' = F.l(): spheres below contribute
  // F(0) sum_{g <= l'} g p^g (1 - 1/p) = F(0) p^{l'} (l' - 1/(p-1)).
  const std::int64_t lf = F.l();
  cplx s = F.at_zero() * detail::pow_p(p, lf) * (static_cast<double>(lf) - 1.0 / (pd - 1.0));
  for (std::int64_t g = lf + 1; g <= F.N(); ++g) {
    s += static_cast<double>(g) * detail::sphere_integral(in, g, std::min(lf, g - 1));
  }
  PairingValues v;
  v.lhs = one_minus * s;
  v.rhs = -apply(QahDistribution::p_log(p, 1), phi) - phi.at_zero() / pd;
  return v;
}

bool scales_strictly_ordered(cplx alpha, int m, const Prime& p, std::int64_t M) {
  const double base = std::pow(static_cast<double>(p.value()), -alpha.real() * static_cast<double>(M));
  double prev = 0.0;
  for (int k = 0; k <= m; ++k) {
    const double v = base * std::abs(detail::ipow(static_cast<double>(M), m - k));
    if (k > 0 && !(v < prev)) return false;
    prev = v;
  }
  return true;
}

}  // namespace padic
