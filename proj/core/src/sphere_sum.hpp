#pragma once

// Haar integrals over a single sphere S_gamma, summed over cells of a fixed
// level on which every factor of the integrand is constant.

#include <cstdint>

#include "detail.hpp"
#include "padic/characters.hpp"
#include "padic/testfn.hpp"

namespace padic::detail {

enum class PhiMode { None, Value, MinusZero };

struct SphereIntegrand {
  const Prime* p = nullptr;
  const NormedMultChar* pi1 = nullptr;  // null: pi_1 = 1
  const TestFunction* phi = nullptr;    // required unless mode is None
  PhiMode mode = PhiMode::None;
  const ScaledUnit* t = nullptr;        // null: no chi(xt) factor
};

/// int_{S_gamma} pi_1(x) phi~(x) chi(xt) dx over cells a + B_c, where phi~ is
/// 1, phi, or phi - phi(0). Needs c <= gamma - max(k0, 1) and, with phi,
/// c <= l. chi is integrated exactly per cell, so c need not be <= -M: the
/// whole sphere vanishes when |t| > p^{-c}.
cplx sphere_integral(const SphereIntegrand& f, std::int64_t gamma, std::int64_t c);

/// Largest precision of the unit part of t that sphere_integral can ask for
/// on spheres up to gamma_max.
inline std::int64_t unit_precision(std::int64_t gamma_max, std::int64_t M) {
  return gamma_max + M > 0 ? gamma_max + M : 0;
}

}  // namespace padic::detail
