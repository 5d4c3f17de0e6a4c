#pragma once

// The singular Fourier integral J(t) = <f(x) chi_p(xt), phi(x)>.

#include <complex>
#include <cstdint>
#include <optional>

#include "padic/distributions.hpp"
#include "padic/testfn.hpp"

namespace padic {

struct SingularIntegralRequest {
  QahDistribution f;
  TestFunction phi;
  PadicPoint t;
  /// l0 in J = J1 + J2 + phi(0) J0; defaults to phi.l(). Must be <= phi.N().
  std::optional<std::int64_t> split_level;
};

struct SingularParts {
  std::complex<double> j1;  // B_{l0}, phi - phi(0)
  std::complex<double> j2;  // outside B_{l0}, phi
  std::complex<double> j0;  // <f, Delta_{l0} chi_t>
  std::complex<double> phi0;
  std::int64_t split_level = 0;

  std::complex<double> total() const { return j1 + j2 + phi0 * j0; }
};

/// Throws ZeroArgument for t = 0, BadWindow for l0 > N, NonPadicDenominator
/// if t has a denominator prime to p.
SingularParts decompose(const SingularIntegralRequest& req);

std::complex<double> singular_fourier(const SingularIntegralRequest& req);

/// <f, Delta_{l0}(x) chi_p(xt)>.
std::complex<double> j0_closed_form(const QahDistribution& f, std::int64_t l0, const PadicPoint& t);

/// J(t) by pointwise cell sums through the public point API: cells of level
/// min(l, -M, gamma - k0, gamma - 1) - refine on every sphere above
/// gamma* = min(-M, l, 0) - refine, plus the integral of f over B_{gamma*}.
std::complex<double> brute_force_oracle(const SingularIntegralRequest& req, int refine);

/// The plain integral of f(x) phi(x) chi_p(xt) for Re alpha > 0 (pi-alpha-log
/// only), no regularization; t = 0 is allowed. Throws BadAlpha.
std::complex<double> direct_integral(const QahDistribution& f, const TestFunction& phi, const PadicPoint& t);

}  // namespace padic
