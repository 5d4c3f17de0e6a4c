#pragma once

// Right-hand sides of the stabilized asymptotic formulas and a verifier that
// compares them with exact J(t) over a grid of t.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padic/distributions.hpp"
#include "padic/testfn.hpp"

namespace padic {

/// Which formula applies: 2-1(a) trivial pi_1 and m = 0, 2-1(b) trivial and
/// m >= 1, 2-2 the P(log^{m-1}/|x|) family, 3 ramified pi_1, Delta for the
/// delta function (J = phi(0)).
enum class Theorem { Th2_1a, Th2_1b, Th2_2, Th3, Delta };

std::string_view to_string(Theorem th) noexcept;
/// "2-1a", "2-1b", "2-2", "3", "delta"; nullopt otherwise.
std::optional<Theorem> parse_theorem(std::string_view s);
Theorem theorem_for(const QahDistribution& f);

/// log_p of the stabilization parameter: -l, or -l + k0 when ramified.
std::int64_t s_pred_exponent(const QahDistribution& f, std::int64_t l);

struct AsymptoticPrediction {
  Theorem theorem = Theorem::Delta;
  /// d^k Gamma / dalpha^k, k = 0..m for pi-alpha-log, B_0..B_{m-1}
  /// for p-log, {1} for delta.
  std::vector<std::complex<double>> coefficients;
  std::int64_t s_pred_exponent = 0;
  std::string scales;
};

AsymptoticPrediction predict(const QahDistribution& f, std::int64_t l);

/// The formula's value at t (not restricted to |t| > s_pred).
std::complex<double> rhs_predict(const QahDistribution& f, std::complex<double> phi0, std::int64_t l,
                                 const PadicPoint& t);

struct StabilizationRow {
  std::int64_t M = 0;            // |t|_p = p^M
  std::uint64_t t_unit = 1;      // t = t_unit * p^{-M}
  std::complex<double> J;
  std::complex<double> rhs;
  double abs_err = 0.0;
  bool stabilized = false;       // |J - rhs| < tol (1 + |rhs|)
  bool asserted = false;         // M > s_pred exponent
  std::optional<std::complex<double>> oracle;

  friend bool operator==(const StabilizationRow&, const StabilizationRow&) = default;
};

struct StabilizationReport {
  Theorem theorem = Theorem::Delta;
  std::string description;
  std::int64_t prime = 0;
  std::int64_t l = 0;
  std::int64_t N = 0;
  std::int64_t s_pred_exponent = 0;
  /// Smallest s with every row at M > s stabilized; nullopt if the top row fails.
  std::optional<std::int64_t> s_emp_exponent;
  double tolerance = 1e-9;
  /// Ramified only: some row with -l < M <= -l + k0 is not stabilized.
  bool below_threshold_violation = false;
  std::vector<StabilizationRow> rows;

  /// Every asserted row stabilized and, where an oracle value exists, it
  /// agrees with J within tolerance.
  bool passed() const;

  friend bool operator==(const StabilizationReport&, const StabilizationReport&) = default;
};

struct VerifyOptions {
  double tolerance = 1e-9;
  std::optional<std::int64_t> split_level;
  bool oracle_cross_check = false;
  int oracle_refine = 0;
};

/// The first n positive integers prime to p (always starting at 1).
std::vector<std::uint64_t> sample_units(const Prime& p, int n);

StabilizationReport verify_stabilization(const QahDistribution& f, const TestFunction& phi, std::int64_t M_min,
                                         std::int64_t M_max, int units_per_sphere, const VerifyOptions& options = {});

/// Left side by the unregularized direct integral, right side as in
/// rhs_predict; asserted for |t| > p^{-l+k0}. Throws BadAlpha unless f is
/// pi-alpha-log with Re alpha > 0.
StabilizationReport erdelyi_check(const QahDistribution& f, const TestFunction& phi, std::int64_t M_min,
                                  std::int64_t M_max, int units_per_sphere, double tolerance = 1e-9);

struct PairingValues {
  std::complex<double> lhs;
  std::complex<double> rhs;
};

/// <(1 - 1/p) log_p|x|_p, F[phi]> against <-P(1/|t|) - delta/p, phi>.
PairingValues log_fourier_pairing(const TestFunction& phi);

/// |t|^{-Re alpha} log^{m-k}|t|, k = 0..m, strictly decreasing at |t| = p^M.
bool scales_strictly_ordered(std::complex<double> alpha, int m, const Prime& p, std::int64_t M);

}  // namespace padic
