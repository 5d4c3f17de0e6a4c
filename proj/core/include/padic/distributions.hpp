#pragma once

// Quasi associated homogeneous distributions and their regularized pairings
// with test functions.

#include <complex>
#include <string>
#include <vector>

#include "padic/characters.hpp"
#include "padic/testfn.hpp"

namespace padic {

class QahDistribution {
 public:
  using cplx = std::complex<double>;
  enum class Kind { PiAlphaLog, PLog, DiracDelta };

  /// pi_alpha(x) log_p^m |x|_p. Rejects pi_alpha = pi_0 (alpha = 0, trivial pi_1).
  static QahDistribution pi_alpha_log(cplx alpha, const NormedMultChar& pi1, int m);
  /// P(log_p^{m-1}|x|_p / |x|_p), m >= 1.
  static QahDistribution p_log(const Prime& p, int m);
  static QahDistribution dirac(const Prime& p);

  Kind kind() const noexcept { return kind_; }
  const Prime& prime() const noexcept { return pi1_.prime(); }
  /// Degree parameter; 0 for PLog and the delta function.
  cplx alpha() const noexcept { return alpha_; }
  const NormedMultChar& pi1() const noexcept { return pi1_; }
  int m() const noexcept { return m_; }
  std::int64_t rank() const noexcept { return pi1_.rank(); }

  /// Density on S_gamma divided by pi_1: p^{gamma(alpha-1)} gamma^m, or
  /// p^{-gamma} gamma^{m-1} for PLog (0^0 = 1). Zero for the delta function.
  cplx sphere_weight(std::int64_t gamma) const;

  std::string describe() const;

 private:
  QahDistribution(Kind kind, cplx alpha, NormedMultChar pi1, int m)
      : kind_(kind), alpha_(alpha), pi1_(std::move(pi1)), m_(m) {}

  Kind kind_;
  cplx alpha_;
  NormedMultChar pi1_;
  int m_;
};

/// <f, phi>, with the B_0-regularization of f at the origin.
std::complex<double> apply(const QahDistribution& f, const TestFunction& phi);

struct CompanionTerm {
  std::complex<double> coefficient;
  QahDistribution f;
};

/// The distribution multiplying pi_alpha(t)|t|_p log_p^j|t|_p in the scaling
/// law of f, as a linear combination; j = 0 gives f itself.
std::vector<CompanionTerm> companions(const QahDistribution& f, int j);

/// <f, phi(x/t)> - sum_{j=0}^{m} pi_alpha(t)|t|_p log_p^j|t|_p <f_{m-j}, phi>.
std::complex<double> homogeneity_defect(const QahDistribution& f, const TestFunction& phi, const PadicPoint& t);

}  // namespace padic
