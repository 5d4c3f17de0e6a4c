#include "padic/testfn.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "detail.hpp"
#include "padic/error.hpp"

namespace padic {

namespace {

using detail::cplx;

constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 24;

std::uint64_t window_size(const Prime& p, std::int64_t N, std::int64_t l) {
  if (l > N) {
    throw Error(ErrorKind::BadWindow, "window D^" + std::to_string(l) + "_" + std::to_string(N) + " has l > N");
  }
  const std::uint64_t n = upow(p, N - l);
  if (n > kMaxCells) throw Error(ErrorKind::BadWindow, "window of " + std::to_string(n) + " cosets is too large");
  return n;
}

void same_prime(const TestFunction& a, const TestFunction& b) {
  if (!(a.prime() == b.prime())) throw Error(ErrorKind::InvalidArgument, "test functions over different primes");
}

double uniform01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

}  // namespace

TestFunction::TestFunction(const Prime& p, std::int64_t N, std::int64_t l, std::vector<cplx> values)
    : p_(p), N_(N), l_(l), values_(std::move(values)) {
  const std::uint64_t n = window_size(p, N, l);
  if (values_.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "D^" + std::to_string(l) + "_" + std::to_string(N) + " needs " +
                                                std::to_string(n) + " values, got " + std::to_string(values_.size()));
  }
}

cplx TestFunction::at(const PadicPoint& x) const {
  if (x.is_zero()) return values_[0];
  if (valuation(x, p_) < -N_) return 0.0;
  // x p^N lies in Z_p; its residue mod p^{N-l} is the coset index.
  const Rational y = x.value() * power(p_, N_);
  return values_[residue(y, p_, N_ - l_)];
}

TestFunction TestFunction::rewindow(std::int64_t N, std::int64_t l) const {
  if (N < N_ || l > l_) throw Error(ErrorKind::BadWindow, "rewindow must enlarge the window");
  const std::uint64_t n = window_size(p_, N, l);
  std::vector<cplx> v(n, 0.0);
  const std::uint64_t shift = upow(p_, N - N_);
  const std::uint64_t inner = upow(p_, N_ - l_);
  // x = D p^{-N} is in B_{N_} iff p^{N-N_} | D; then its old index is
  // (D / p^{N-N_}) mod p^{N_-l_}.
  for (std::uint64_t D = 0; D < n; D += shift) v[D] = values_[(D / shift) % inner];
  return TestFunction(p_, N, l, std::move(v));
}

TestFunction& TestFunction::operator+=(const TestFunction& o) {
  same_prime(*this, o);
  const std::int64_t N = std::max(N_, o.N_);
  const std::int64_t l = std::min(l_, o.l_);
  TestFunction a = rewindow(N, l);
  const TestFunction b = o.rewindow(N, l);
  for (std::size_t i = 0; i < a.values_.size(); ++i) a.values_[i] += b.values_[i];
  *this = std::move(a);
  return *this;
}

TestFunction& TestFunction::operator*=(cplx s) {
  for (auto& v : values_) v *= s;
  return *this;
}

TestFunction delta_indicator(const Prime& p, std::int64_t k) { return TestFunction(p, k, k, {1.0}); }

TestFunction fourier(const TestFunction& phi) {
  const Prime& p = phi.prime();
  const std::uint64_t n = phi.size();
  // xi_E = E p^{l}, x_D = D p^{-N}: {xi x} = (E D mod n) / n.
  std::vector<cplx> roots(n);
  for (std::uint64_t k = 0; k < n; ++k) roots[k] = detail::unit_circle(k, n);
  const double scale = detail::pow_p(p, phi.l());
  std::vector<cplx> out(n, 0.0);
  const auto& v = phi.values();
  for (std::uint64_t E = 0; E < n; ++E) {
    cplx s = 0.0;
    std::uint64_t idx = 0;
    for (std::uint64_t D = 0; D < n; ++D) {
      s += v[D] * roots[idx];
      idx += E;
      if (idx >= n) idx -= n;
    }
    out[E] = s * scale;
  }
  return TestFunction(p, -phi.l(), -phi.N(), std::move(out));
}

TestFunction convolve(const TestFunction& phi, const TestFunction& psi) {
  same_prime(phi, psi);
  const Prime& p = phi.prime();
  const std::int64_t N = std::max(phi.N(), psi.N());
  const std::int64_t l = std::max(phi.l(), psi.l());
  const std::int64_t lc = std::min(phi.l(), psi.l());
  const std::uint64_t n_out = window_size(p, N, l);
  const std::uint64_t n_cells = window_size(p, phi.N(), lc);
  const double w = detail::pow_p(p, lc);

  std::vector<PadicPoint> cells;
  std::vector<cplx> phi_vals;
  cells.reserve(n_cells);
  for (const auto& xi : enumerate_cosets(p, phi.N(), lc)) {
    const cplx v = phi.at(xi);
    if (v == 0.0) continue;
    cells.push_back(xi);
    phi_vals.push_back(v);
  }
  std::vector<cplx> out(n_out, 0.0);
  const auto reps = enumerate_cosets(p, N, l);
  for (std::uint64_t E = 0; E < n_out; ++E) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < cells.size(); ++j) s += phi_vals[j] * psi.at(reps[E] - cells[j]);
    out[E] = s * w;
  }
  return TestFunction(p, N, l, std::move(out));
}

TestFunction dilate(const TestFunction& phi, const PadicPoint& t) {
  if (t.is_zero()) throw Error(ErrorKind::ZeroArgument, "dilation by t = 0");
  const Prime& p = phi.prime();
  const std::int64_t a = -valuation(t, p);
  const std::int64_t N = phi.N() + a;
  const std::int64_t l = phi.l() + a;
  const auto reps = enumerate_cosets(p, N, l);
  std::vector<cplx> out(reps.size());
  for (std::size_t E = 0; E < reps.size(); ++E) out[E] = phi.at(reps[E] / t);
  return TestFunction(p, N, l, std::move(out));
}

TestFunction random_testfn(const Prime& p, std::int64_t N, std::int64_t l, std::uint64_t seed) {
  const std::uint64_t n = window_size(p, N, l);
  std::mt19937_64 gen(seed);
  std::vector<cplx> v(n);
  for (auto& z : v) {
    const double r = std::sqrt(uniform01(gen));
    const double th = 2.0 * std::numbers::pi * uniform01(gen);
    z = std::polar(r, th);
  }
  return TestFunction(p, N, l, std::move(v));
}

}  // namespace padic
