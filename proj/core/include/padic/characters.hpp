#pragma once

// Additive character chi_p and normed multiplicative characters pi_1, pi_alpha.

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "padic/qp.hpp"

namespace padic {

/// e^{2 pi i angle}, angle kept exact in [0, 1).
class RootOfUnity {
 public:
  RootOfUnity() = default;
  explicit RootOfUnity(Rational angle);

  const Rational& angle() const noexcept { return angle_; }
  bool is_one() const noexcept { return sgn(angle_) == 0; }
  std::complex<double> to_complex() const;
  RootOfUnity inverse() const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) { return a.angle_ == b.angle_; }

 private:
  Rational angle_{0};
};

/// chi_p(x) = e^{2 pi i {x}_p}. Throws NonPadicDenominator.
RootOfUnity chi(const PadicPoint& x, const Prime& p);

/// How to build a normed character. For Table, `values` maps every unit
/// residue mod p^k0 to its angle.
struct CharacterSpec {
  enum class Kind { Trivial, Quadratic, Table };
  Kind kind = Kind::Trivial;
  std::int64_t k0 = 0;
  std::map<std::uint64_t, Rational> values;

  static CharacterSpec trivial() { return {}; }
  static CharacterSpec quadratic() { return {Kind::Quadratic, 1, {}}; }
  static CharacterSpec table(std::int64_t k0, std::map<std::uint64_t, Rational> values) {
    return {Kind::Table, k0, std::move(values)};
  }
};

/// pi_1: a character of Q_p^* that only sees the unit part, given by its
/// values on (Z/p^k0)^*. Validated on construction.
class NormedMultChar {
 public:
  static NormedMultChar trivial(const Prime& p);
  /// Legendre symbol mod p; p odd.
  static NormedMultChar quadratic(const Prime& p);
  /// Throws BadTable, NotMultiplicative or RankNotMinimal.
  static NormedMultChar from_table(const Prime& p, std::int64_t k0, const std::map<std::uint64_t, Rational>& values);

  const Prime& prime() const noexcept { return p_; }
  std::int64_t rank() const noexcept { return k0_; }
  bool is_trivial() const noexcept { return k0_ == 0; }
  /// p^k0.
  std::uint64_t modulus() const noexcept { return modulus_; }

  /// Value on a unit residue mod p^k0.
  RootOfUnity value(std::uint64_t unit_residue) const;

  /// Dense table: angle of residue r is table()[r] / denominator(); entries
  /// at non-units are 0.
  const std::vector<std::uint64_t>& table() const noexcept { return numerators_; }
  std::uint64_t denominator() const noexcept { return denominator_; }

  friend bool operator==(const NormedMultChar& a, const NormedMultChar& b) {
    return a.p_ == b.p_ && a.k0_ == b.k0_ && a.denominator_ == b.denominator_ && a.numerators_ == b.numerators_;
  }

 private:
  NormedMultChar(const Prime& p, std::int64_t k0, std::vector<std::uint64_t> numerators, std::uint64_t denominator);

  Prime p_;
  std::int64_t k0_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> numerators_;
  std::uint64_t denominator_;
};

NormedMultChar make_character(const Prime& p, const CharacterSpec& spec);

/// pi_1(x), x != 0. Throws ZeroArgument.
RootOfUnity eval_pi1(const NormedMultChar& chr, const PadicPoint& x);

/// pi_alpha(x) = |x|_p^{alpha-1} pi_1(x).
struct MultChar {
  std::complex<double> alpha;
  NormedMultChar pi1;
};

std::complex<double> eval_pi_alpha(const MultChar& chr, const PadicPoint& x);

inline std::int64_t rank(const NormedMultChar& chr) { return chr.rank(); }

}  // namespace padic
