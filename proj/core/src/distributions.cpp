#include "padic/distributions.hpp"

#include <algorithm>
#include <sstream>

#include "detail.hpp"
#include "padic/error.hpp"
#include "padic/gamma.hpp"
#include "sphere_sum.hpp"

namespace padic {

namespace {

using detail::cplx;

void check_prime(const QahDistribution& f, const TestFunction& phi) {
  if (!(f.prime() == phi.prime())) {
    throw Error(ErrorKind::InvalidArgument, "distribution over p = " + std::to_string(f.prime().value()) +
                                                " paired with a test function over p = " +
                                                std::to_string(phi.prime().value()));
  }
}

// [a^j] S_n(a): S_n(a) = (1/(n+1)) sum_r C(n+1, r) B+_r a^{n+1-r}.
Rational faulhaber_coeff(int n, int j) {
  const int r = n + 1 - j;
  if (r < 0 || r > n) return 0;
  Rational b = bernoulli(r);
  if (r == 1) b = -b;
  Rational c = Rational(binomial(n + 1, r)) * b / Rational(n + 1);
  c.canonicalize();
  return c;
}

}  // namespace

QahDistribution QahDistribution::pi_alpha_log(cplx alpha, const NormedMultChar& pi1, int m) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "m = " + std::to_string(m) + " < 0");
  if (alpha == 0.0 && pi1.is_trivial()) {
    throw Error(ErrorKind::InvalidArgument, "pi_alpha = pi_0 (alpha = 0, trivial pi_1); use p-log or delta");
  }
  return QahDistribution(Kind::PiAlphaLog, alpha, pi1, m);
}

QahDistribution QahDistribution::p_log(const Prime& p, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "p-log needs m >= 1, got " + std::to_string(m));
  return QahDistribution(Kind::PLog, 0.0, NormedMultChar::trivial(p), m);
}

QahDistribution QahDistribution::dirac(const Prime& p) {
  return QahDistribution(Kind::DiracDelta, 0.0, NormedMultChar::trivial(p), 0);
}

cplx QahDistribution::sphere_weight(std::int64_t gamma) const {
  const Prime& p = prime();
  const auto g = static_cast<double>(gamma);
  switch (kind_) {
    case Kind::PiAlphaLog:
      return detail::pow_p(p, g * (alpha_ - 1.0)) * detail::ipow(g, m_);
    case Kind::PLog:
      return detail::pow_p(p, -gamma) * detail::ipow(g, m_ - 1);
    case Kind::DiracDelta:
      return 0.0;
  }
  return 0.0;
}

std::string QahDistribution::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::PiAlphaLog:
      os << "pi-alpha-log(p=" << prime().value() << ", alpha=" << alpha_.real() << (alpha_.imag() < 0 ? "" : "+")
         << alpha_.imag() << "i, k0=" << rank() << ", m=" << m_ << ")";
      break;
    case Kind::PLog:
      os << "p-log(p=" << prime().value() << ", m=" << m_ << ", P(log^" << m_ - 1 << "|x|/|x|))";
      break;
    case Kind::DiracDelta:
      os << "delta(p=" << prime().value() << ")";
      break;
  }
  return os.str();
}

cplx apply(const QahDistribution& f, const TestFunction& phi) {
  check_prime(f, phi);
  const cplx phi0 = phi.at_zero();
  if (f.kind() == QahDistribution::Kind::DiracDelta) return phi0;

  const Prime& p = f.prime();
  const std::int64_t k0 = f.rank();
  detail::SphereIntegrand in;
  in.p = &p;
  in.pi1 = &f.pi1();
  in.phi = &phi;
  const auto level = [&](std::int64_t g) { return std::min({phi.l(), g - k0, g - 1}); };

  cplx sum = 0.0;
  // Inside B_0: phi - phi(0), which vanishes on B_l.
  in.mode = detail::PhiMode::MinusZero;
  for (std::int64_t g = phi.l() + 1; g <= 0; ++g) sum += f.sphere_weight(g) * detail::sphere_integral(in, g, level(g));
  in.mode = detail::PhiMode::Value;
  for (std::int64_t g = 1; g <= phi.N(); ++g) sum += f.sphere_weight(g) * detail::sphere_integral(in, g, level(g));

  if (f.kind() == QahDistribution::Kind::PiAlphaLog) {
    sum += phi0 * i0(p, f.pi1(), f.alpha(), f.m()).derivative(f.m());
  }
  return sum;
}

std::vector<CompanionTerm> companions(const QahDistribution& f, int j) {
  std::vector<CompanionTerm> out;
  if (j < 0) return out;
  const int m = f.m();
  switch (f.kind()) {
    case QahDistribution::Kind::DiracDelta:
      if (j == 0) out.push_back({1.0, f});
      break;
    case QahDistribution::Kind::PiAlphaLog:
      if (j <= m) {
        out.push_back({binomial(m, j).get_d(), QahDistribution::pi_alpha_log(f.alpha(), f.pi1(), m - j)});
      }
      break;
    case QahDistribution::Kind::PLog: {
      // Rescaling x moves the regularization ball B_0, which leaves a
      // phi(0) (1 - 1/p) S_{m-1}(log_p|t|) term behind.
      const int n = m - 1;
      if (j <= n) out.push_back({binomial(n, j).get_d(), QahDistribution::p_log(f.prime(), m - j)});
      const Rational c = faulhaber_coeff(n, j) * Rational(f.prime().value() - 1, f.prime().value());
      if (sgn(c) != 0) out.push_back({c.get_d(), QahDistribution::dirac(f.prime())});
      break;
    }
  }
  return out;
}

cplx homogeneity_defect(const QahDistribution& f, const TestFunction& phi, const PadicPoint& t) {
  if (t.is_zero()) throw Error(ErrorKind::ZeroArgument, "homogeneity defect at t = 0");
  check_prime(f, phi);
  const Prime& p = f.prime();
  const std::int64_t a = -valuation(t, p);
  // pi_alpha(t)|t|_p = |t|^alpha pi_1(t); 1 in degree pi_0.
  cplx scale = 1.0;
  if (f.kind() == QahDistribution::Kind::PiAlphaLog) {
    scale = detail::pow_p(p, static_cast<double>(a) * f.alpha()) * eval_pi1(f.pi1(), t).to_complex();
  }
  cplx d = apply(f, dilate(phi, t));
  const int top = f.kind() == QahDistribution::Kind::DiracDelta ? 0 : f.m();
  for (int j = 0; j <= top; ++j) {
    const double lj = detail::ipow(static_cast<double>(a), j);
    for (const auto& c : companions(f, j)) d -= scale * lj * c.coefficient * apply(c.f, phi);
  }
  return d;
}

}  // namespace padic
