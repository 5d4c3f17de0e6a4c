#include "padic/characters.hpp"

#include <numeric>
#include <string>

#include "detail.hpp"
#include "padic/error.hpp"

namespace padic {

namespace {

constexpr std::uint64_t kMaxTableModulus = std::uint64_t{1} << 12;

Rational reduce_angle(Rational q) {
  q.canonicalize();
  BigInt rem;
  mpz_fdiv_r(rem.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r(rem, q.get_den());
  r.canonicalize();
  return r;
}

bool is_unit(std::uint64_t r, const Prime& p) { return r % p.uvalue() != 0; }

}  // namespace

RootOfUnity::RootOfUnity(Rational angle) : angle_(reduce_angle(std::move(angle))) {}

std::complex<double> RootOfUnity::to_complex() const {
  if (angle_.get_den().fits_ulong_p()) {
    return detail::unit_circle(angle_.get_num().get_ui(), angle_.get_den().get_ui());
  }
  const double a = 2.0 * std::numbers::pi * angle_.get_d();
  return {std::cos(a), std::sin(a)};
}

RootOfUnity RootOfUnity::inverse() const { return RootOfUnity(Rational(-angle_)); }

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  return RootOfUnity(Rational(a.angle_ + b.angle_));
}

RootOfUnity chi(const PadicPoint& x, const Prime& p) { return RootOfUnity(fractional_part(x, p)); }

NormedMultChar::NormedMultChar(const Prime& p, std::int64_t k0, std::vector<std::uint64_t> numerators,
                               std::uint64_t denominator)
    : p_(p),
      k0_(k0),
      modulus_(upow(p, k0)),
      numerators_(std::move(numerators)),
      denominator_(denominator) {}

NormedMultChar NormedMultChar::trivial(const Prime& p) { return NormedMultChar(p, 0, {0}, 1); }

NormedMultChar NormedMultChar::quadratic(const Prime& p) {
  if (p.value() == 2) throw Error(ErrorKind::BadTable, "quadratic character needs an odd prime, got p = 2");
  const std::uint64_t n = p.uvalue();
  std::vector<std::uint64_t> num(n, 0);
  for (std::uint64_t u = 1; u < n; ++u) {
    // Euler's criterion.
    std::uint64_t r = 1;
    std::uint64_t b = u;
    for (std::uint64_t e = (n - 1) / 2; e > 0; e >>= 1) {
      if (e & 1) r = detail::mulmod(r, b, n);
      b = detail::mulmod(b, b, n);
    }
    num[u] = r == 1 ? 0 : 1;
  }
  return NormedMultChar(p, 1, std::move(num), 2);
}

NormedMultChar NormedMultChar::from_table(const Prime& p, std::int64_t k0,
                                          const std::map<std::uint64_t, Rational>& values) {
  if (k0 < 0) throw Error(ErrorKind::BadTable, "negative rank " + std::to_string(k0));
  if (k0 == 0) {
    for (const auto& [u, a] : values) {
      if (u != 0 || sgn(reduce_angle(a)) != 0) {
        throw Error(ErrorKind::BadTable, "rank 0 character must be trivial");
      }
    }
    return trivial(p);
  }
  if (upow(p, k0) > kMaxTableModulus) {
    throw Error(ErrorKind::BadTable, "table modulus " + std::to_string(p.value()) + "^" + std::to_string(k0) +
                                         " is too large");
  }
  const std::uint64_t n = upow(p, k0);
  std::uint64_t units = 0;
  for (std::uint64_t u = 1; u < n; ++u) units += is_unit(u, p) ? 1 : 0;

  std::vector<Rational> angle(n, Rational(0));
  std::vector<bool> seen(n, false);
  BigInt den = 1;
  for (const auto& [u, a] : values) {
    if (u >= n || !is_unit(u, p)) {
      throw Error(ErrorKind::BadTable, "key " + std::to_string(u) + " is not a unit residue mod " + std::to_string(n));
    }
    angle[u] = reduce_angle(a);
    seen[u] = true;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), angle[u].get_den_mpz_t());
  }
  if (values.size() != units) {
    throw Error(ErrorKind::BadTable, "table has " + std::to_string(values.size()) + " entries, expected " +
                                         std::to_string(units) + " units mod " + std::to_string(n));
  }
  if (!den.fits_ulong_p() || den > BigInt(1) << 40) {
    throw Error(ErrorKind::BadTable, "angle denominators are too large");
  }
  const std::uint64_t D = den.get_ui();
  std::vector<std::uint64_t> num(n, 0);
  for (std::uint64_t u = 1; u < n; ++u) {
    if (!seen[u]) continue;
    const Rational scaled = angle[u] * Rational(den);
    num[u] = BigInt(scaled.get_num() / scaled.get_den()).get_ui();
  }

  for (std::uint64_t u = 1; u < n; ++u) {
    if (!is_unit(u, p)) continue;
    for (std::uint64_t v = u; v < n; ++v) {
      if (!is_unit(v, p)) continue;
      const std::uint64_t uv = detail::mulmod(u, v, n);
      if ((num[u] + num[v]) % D != num[uv]) {
        throw Error(ErrorKind::NotMultiplicative, "pi(" + std::to_string(u) + ")pi(" + std::to_string(v) +
                                                      ") != pi(" + std::to_string(uv) + ") mod " + std::to_string(n));
      }
    }
  }

  // Minimal rank: nontrivial somewhere on 1 + p^{k0-1} Z_p.
  const std::uint64_t step = upow(p, k0 - 1);
  bool nontrivial = false;
  for (std::uint64_t u = 1; u < n; u += step) {
    if (num[u] != 0) nontrivial = true;
  }
  if (!nontrivial) {
    throw Error(ErrorKind::RankNotMinimal,
                "character mod " + std::to_string(n) + " is trivial on 1 + p^" + std::to_string(k0 - 1) + " Z_p");
  }
  return NormedMultChar(p, k0, std::move(num), D);
}

RootOfUnity NormedMultChar::value(std::uint64_t unit_residue) const {
  if (k0_ == 0) return RootOfUnity();
  const std::uint64_t r = unit_residue % modulus_;
  if (!is_unit(r, p_)) throw Error(ErrorKind::InvalidArgument, std::to_string(unit_residue) + " is not a unit");
  return RootOfUnity(Rational(BigInt(static_cast<unsigned long>(numerators_[r])),
                              BigInt(static_cast<unsigned long>(denominator_))));
}

NormedMultChar make_character(const Prime& p, const CharacterSpec& spec) {
  switch (spec.kind) {
    case CharacterSpec::Kind::Trivial:
      return NormedMultChar::trivial(p);
    case CharacterSpec::Kind::Quadratic:
      return NormedMultChar::quadratic(p);
    case CharacterSpec::Kind::Table:
      return NormedMultChar::from_table(p, spec.k0, spec.values);
  }
  throw Error(ErrorKind::BadTable, "unknown character kind");
}

RootOfUnity eval_pi1(const NormedMultChar& chr, const PadicPoint& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroArgument, "pi_1(0) is undefined");
  if (chr.is_trivial()) return RootOfUnity();
  return chr.value(residue(unit_part(x, chr.prime()), chr.prime(), chr.rank()));
}

std::complex<double> eval_pi_alpha(const MultChar& chr, const PadicPoint& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroArgument, "pi_alpha(0) is undefined");
  const Prime& p = chr.pi1.prime();
  const auto gamma = static_cast<double>(-valuation(x, p));
  return std::exp((chr.alpha - 1.0) * (gamma * p.ln())) * eval_pi1(chr.pi1, x).to_complex();
}

}  // namespace padic
