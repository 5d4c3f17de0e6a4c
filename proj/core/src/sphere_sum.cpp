#include "sphere_sum.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "padic/error.hpp"

namespace padic::detail {

namespace {

constexpr std::uint64_t kRootTable = std::uint64_t{1} << 20;
constexpr std::uint64_t kMaxSphereCells = std::uint64_t{1} << 30;

}  // namespace

cplx sphere_integral(const SphereIntegrand& f, std::int64_t gamma, std::int64_t c) {
  const Prime& p = *f.p;
  const std::int64_t k0 = f.pi1 ? f.pi1->rank() : 0;
  if (c > gamma - std::max<std::int64_t>(k0, 1)) {
    throw Error(ErrorKind::InvalidArgument, "cell level " + std::to_string(c) + " too coarse for sphere " +
                                                std::to_string(gamma));
  }
  const bool use_phi = f.mode != PhiMode::None;
  if (use_phi && c > f.phi->l()) {
    throw Error(ErrorKind::InvalidArgument, "cell level above the constancy parameter");
  }
  if (f.t && f.t->M > -c) return 0.0;

  cplx phi0 = 0.0;
  bool outside = false;  // S_gamma outside supp phi
  if (use_phi) {
    phi0 = f.phi->at_zero();
    outside = gamma > f.phi->N();
    if (outside && f.mode == PhiMode::Value) return 0.0;
  }

  const std::uint64_t pu = p.uvalue();
  const std::uint64_t n = upow(p, gamma - c);
  if (n > kMaxSphereCells) throw Error(ErrorKind::BadWindow, "sphere has too many cells");

  // pi_1 on residues mod p^k0.
  std::vector<cplx> pi_vals;
  std::uint64_t pi_mod = 1;
  if (k0 > 0) {
    pi_mod = f.pi1->modulus();
    pi_vals.resize(pi_mod);
    for (std::uint64_t r = 0; r < pi_mod; ++r) pi_vals[r] = unit_circle(f.pi1->table()[r], f.pi1->denominator());
  }

  // chi(D u p^{-(gamma+M)}).
  std::int64_t e = 0;
  std::uint64_t chi_mod = 1;
  std::uint64_t u = 0;
  std::vector<cplx> roots;
  if (f.t) {
    e = gamma + f.t->M;
    if (e > 0) {
      chi_mod = upow(p, e);
      u = f.t->unit_mod(p, e);
      if (chi_mod <= kRootTable) {
        roots.resize(chi_mod);
        for (std::uint64_t k = 0; k < chi_mod; ++k) roots[k] = unit_circle(k, chi_mod);
      }
    }
  }

  // phi index of D p^{-gamma}: (D mod p^{gamma-l}) p^{N-gamma}.
  std::uint64_t phi_mod = 1;
  std::uint64_t phi_stride = 0;
  if (use_phi && !outside && gamma > f.phi->l()) {
    phi_mod = upow(p, gamma - f.phi->l());
    phi_stride = upow(p, f.phi->N() - gamma);
  }
  const std::vector<cplx>* vals = use_phi ? &f.phi->values() : nullptr;

  cplx sum = 0.0;
  for (std::uint64_t D = 1; D < n; ++D) {
    if (D % pu == 0) continue;
    cplx term = k0 > 0 ? pi_vals[D % pi_mod] : cplx(1.0);
    if (use_phi) {
      const cplx v = outside ? cplx(0.0) : phi_stride ? (*vals)[(D % phi_mod) * phi_stride] : phi0;
      const cplx g = f.mode == PhiMode::MinusZero ? v - phi0 : v;
      if (g == 0.0) continue;
      term *= g;
    }
    if (chi_mod > 1) {
      const std::uint64_t k = mulmod(D % chi_mod, u, chi_mod);
      term *= roots.empty() ? unit_circle(k, chi_mod) : roots[k];
    }
    sum += term;
  }
  return sum * pow_p(p, c);
}

}  // namespace padic::detail
