#include <cmath>

#include "oracle.hpp"
#include "padic/padic.hpp"
#include "test_util.hpp"

using namespace padic;
using cplx = std::complex<double>;

namespace {

PadicPoint t_of(long p, long unit, int M) {
  // |t|_p = p^M
  return PadicPoint(unit) * PadicPoint(power(Prime(p), -M));
}

cplx J(const QahDistribution& f, const TestFunction& phi, const PadicPoint& t,
       std::optional<std::int64_t> l0 = std::nullopt) {
  return singular_fourier({f, phi, t, l0});
}

}  // namespace

TEST(Singular, PinnedValues) {
  const Prime p2(2), p3(3);
  const auto f = QahDistribution::pi_alpha_log(2.0, NormedMultChar::trivial(p2), 0);
  const SingularIntegralRequest r{f, delta_indicator(p2, 0), PadicPoint(1, 2), std::nullopt};
  EXPECT_CNEAR(singular_fourier(r), -1.0 / 3.0, 1e-12);
  for (int refine : {0, 1, 2}) EXPECT_CNEAR(brute_force_oracle(r, refine), -1.0 / 3.0, 1e-12);
  EXPECT_CNEAR(direct_integral(f, delta_indicator(p2, 0), PadicPoint(1, 2)), -1.0 / 3.0, 1e-12);

  const SingularIntegralRequest r2{QahDistribution::p_log(p3, 1), delta_indicator(p3, 0), PadicPoint(1, 3),
                                   std::nullopt};
  EXPECT_CNEAR(singular_fourier(r2), -1.0, 1e-12);
  EXPECT_CNEAR(brute_force_oracle(r2, 0), -1.0, 1e-12);
}

TEST(Singular, AlphaOneIsFourierOfIndicator) {
  for (long pv : {2L, 3L, 5L}) {
    const auto f = QahDistribution::pi_alpha_log(1.0, NormedMultChar::trivial(Prime(pv)), 0);
    const auto d0 = delta_indicator(Prime(pv), 0);
    for (int M = -3; M <= 3; ++M) EXPECT_CNEAR(J(f, d0, t_of(pv, 1, M)), M <= 0 ? 1.0 : 0.0, 1e-12);
  }
}

TEST(Singular, Errors) {
  const Prime p(3);
  const auto f = QahDistribution::p_log(p, 1);
  const auto phi = delta_indicator(p, 0);
  EXPECT_PADIC_ERROR(J(f, phi, PadicPoint(0)), ErrorKind::ZeroArgument);
  EXPECT_PADIC_ERROR(J(f, phi, PadicPoint(1, 2)), ErrorKind::NonPadicDenominator);
  EXPECT_PADIC_ERROR(J(f, phi, PadicPoint(1), 1), ErrorKind::BadWindow);
  EXPECT_PADIC_ERROR(J(QahDistribution::p_log(Prime(2), 1), phi, PadicPoint(1)), ErrorKind::InvalidArgument);
}

TEST(Singular, MatchesIndependentOracle) {
  struct Case {
    QahDistribution f;
    oracle::Dist ref;
  };
  const Prime p2(2), p3(3), p5(5);
  std::vector<Case> cases = {
      {QahDistribution::pi_alpha_log(2.0, NormedMultChar::trivial(p2), 0),
       {oracle::Family::PiAlphaLog, 2.0, oracle::Char::trivial(2), 0}},
      {QahDistribution::pi_alpha_log(cplx(-0.7, 0.3), NormedMultChar::trivial(p3), 2),
       {oracle::Family::PiAlphaLog, cplx(-0.7, 0.3), oracle::Char::trivial(3), 2}},
      {QahDistribution::pi_alpha_log(cplx(1.3, -1.1), NormedMultChar::trivial(p5), 3),
       {oracle::Family::PiAlphaLog, cplx(1.3, -1.1), oracle::Char::trivial(5), 3}},
      {QahDistribution::pi_alpha_log(1.5, NormedMultChar::quadratic(p3), 1),
       {oracle::Family::PiAlphaLog, 1.5, oracle::Char::quadratic(3), 1}},
      {QahDistribution::pi_alpha_log(cplx(-0.4, 0.2), NormedMultChar::quadratic(p5), 2),
       {oracle::Family::PiAlphaLog, cplx(-0.4, 0.2), oracle::Char::quadratic(5), 2}},
      {QahDistribution::p_log(p2, 1), {oracle::Family::PLog, 0.0, oracle::Char::trivial(2), 1}},
      {QahDistribution::p_log(p3, 4), {oracle::Family::PLog, 0.0, oracle::Char::trivial(3), 4}},
      {QahDistribution::dirac(p3), {oracle::Family::Delta, 0.0, oracle::Char::trivial(3), 0}},
  };
  for (const auto& c : cases) {
    const long pv = c.f.prime().value();
    for (auto [N, l] : {std::pair{0, 0}, std::pair{1, -1}, std::pair{-1, -2}}) {
      const auto phi = random_testfn(c.f.prime(), N, l, 7 + N);
      for (int M = -2; M <= 4; ++M) {
        for (long u : {1L, pv - 1}) {
          const PadicPoint t = t_of(pv, u, M);
          const cplx want = oracle::singular(c.ref, phi, t.value());
          const cplx got = J(c.f, phi, t);
          EXPECT_LE(std::abs(got - want), 1e-10 * (1 + std::abs(want)))
              << c.f.describe() << " N=" << N << " l=" << l << " M=" << M << " u=" << u;
        }
      }
    }
  }
}

TEST(Singular, OracleRefineInvariance) {
  const Prime p(3);
  const auto f = QahDistribution::pi_alpha_log(1.5, NormedMultChar::quadratic(p), 1);
  const auto phi = random_testfn(p, 1, -1, 12);
  for (int M : {0, 1, 2, 3}) {
    const SingularIntegralRequest r{f, phi, t_of(3, 2, M), std::nullopt};
    const cplx j = singular_fourier(r);
    EXPECT_CNEAR(brute_force_oracle(r, 0), j, 1e-10);
    EXPECT_CNEAR(brute_force_oracle(r, 3), brute_force_oracle(r, 0), 1e-10);
  }
}

TEST(Singular, SplitLevelIndependence) {
  const Prime p(2);
  const auto f = QahDistribution::pi_alpha_log(cplx(0.6, -0.9), NormedMultChar::trivial(p), 2);
  const auto phi = random_testfn(p, 2, -1, 3);
  for (int M = -2; M <= 4; ++M) {
    const PadicPoint t = t_of(2, 1, M);
    const cplx ref = J(f, phi, t);
    for (int l0 = -3; l0 <= 1; ++l0) EXPECT_CNEAR(J(f, phi, t, l0), ref, 1e-10);
  }
}

TEST(Singular, DecomposeSumsAndVanishingParts) {
  const Prime p(3);
  const auto f = QahDistribution::pi_alpha_log(cplx(2.0, 0.5), NormedMultChar::trivial(p), 1);
  // phi = Delta_0 is constant on B_0 and supported there: J1 = J2 = 0
  const SingularParts parts = decompose({f, delta_indicator(p, 0), t_of(3, 1, 2), std::nullopt});
  EXPECT_EQ(parts.split_level, 0);
  EXPECT_LT(std::abs(parts.j1), 1e-12);
  EXPECT_LT(std::abs(parts.j2), 1e-12);
  EXPECT_CNEAR(parts.total(), parts.j0, 1e-15);
  const auto phi = random_testfn(p, 1, -1, 2);
  const SingularParts q = decompose({f, phi, t_of(3, 1, 3), std::nullopt});
  EXPECT_CNEAR(q.total(), J(f, phi, t_of(3, 1, 3)), 1e-14);
  EXPECT_EQ(q.phi0, phi.at_zero());
}

TEST(J0, ClosedFormBranches) {
  for (long pv : {2L, 3L}) {
    const Prime p(pv);
    const double pd = static_cast<double>(pv);
    for (cplx a : {cplx(2.0), cplx(-0.7, 0.3)}) {
      const auto f = QahDistribution::pi_alpha_log(a, NormedMultChar::trivial(p), 0);
      const cplx g = gamma_p(p, a, 0).value();
      for (int l = -2; l <= 1; ++l) {
        for (int M = -3; M <= 3; ++M) {
          const cplx v = j0_closed_form(f, l, t_of(pv, 1, M));
          const cplx want = M <= -l ? (1.0 - 1.0 / pd) / (1.0 - std::pow(pd, -a)) * std::pow(pd, a * double(l))
                                    : g * std::pow(pd, -a * double(M));
          EXPECT_CNEAR(v, want, 1e-12 * (1 + std::abs(want))) << "l=" << l << " M=" << M;
        }
      }
    }
  }
  EXPECT_CNEAR(j0_closed_form(QahDistribution::p_log(Prime(3), 1), 0, PadicPoint(1, 3)), -1.0, 1e-14);
}

TEST(DirectIntegral, Errors) {
  const Prime p(3);
  EXPECT_PADIC_ERROR(direct_integral(QahDistribution::pi_alpha_log(-0.5, NormedMultChar::trivial(p), 0),
                                     delta_indicator(p, 0), PadicPoint(1, 3)),
                     ErrorKind::BadAlpha);
  EXPECT_PADIC_ERROR(direct_integral(QahDistribution::p_log(p, 1), delta_indicator(p, 0), PadicPoint(1, 3)),
                     ErrorKind::BadAlpha);
}
