#pragma once

// p-adic Gamma functions with alpha-derivatives, the regularizing constant
// I_0, Bernoulli numbers and Faulhaber power sums.

#include <complex>
#include <cstdint>
#include <optional>

#include "padic/characters.hpp"
#include "padic/jet.hpp"
#include "padic/qp.hpp"

namespace padic {

inline constexpr double kPoleTolerance = 1e-12;

/// Jet of Gamma_p(alpha) = (1 - p^{alpha-1}) / (1 - p^{-alpha}).
/// Throws PoleProximity if |1 - p^{-alpha}| <= pole_tolerance.
Jet gamma_p(const Prime& p, std::complex<double> alpha, int order, double pole_tolerance = kPoleTolerance);

/// Gamma_p(pi_alpha) = F[pi_alpha](1) as the sphere sum
/// sum_{|gamma| <= K} p^{gamma(alpha-1)} G_gamma, G_gamma the Haar integral of
/// pi_1 chi_p over S_gamma. Trivial pi_1 delegates to gamma_p. Default K is
/// k0 + 4; K < k0 + 2 is rejected. Throws NotStabilized if the last two
/// increments exceed 1e-13.
Jet gamma_pi(const MultChar& chr, int order, std::optional<std::int64_t> max_shell = std::nullopt);

/// G_gamma = int_{S_gamma} pi_1(x) chi_p(x) dx, with exact zero detection.
std::complex<double> shell_integral(const NormedMultChar& chr, std::int64_t gamma);

/// Entry k is log_p^k e * d^k I_0 / dalpha^k, I_0 = (1 - 1/p)/(1 - p^{-alpha})
/// for trivial pi_1 and 0 otherwise.
Jet i0(const Prime& p, const NormedMultChar& chr, std::complex<double> alpha, int order);

/// B_r with B_1 = -1/2. Memoized, thread safe.
Rational bernoulli(int r);

/// The power-sum polynomial S_s at any integer gamma0: sum_{1..gamma0} g^s for
/// gamma0 >= 1, and -sum_{gamma0+1..0} g^s for gamma0 <= -1.
Rational faulhaber_sum(int s, std::int64_t gamma0);

/// Binomial coefficient C(n, k) as an exact integer.
BigInt binomial(int n, int k);

}  // namespace padic
