#pragma once

// Test functions in D^l_N(Q_p): supported in B_N, constant on cosets of B_l.

#include <complex>
#include <cstdint>
#include <vector>

#include "padic/qp.hpp"

namespace padic {

class TestFunction {
 public:
  using cplx = std::complex<double>;

  /// values[D] is the value on D p^{-N} + B_l, D in [0, p^{N-l}).
  /// Throws BadWindow if l > N, InvalidArgument on a size mismatch.
  TestFunction(const Prime& p, std::int64_t N, std::int64_t l, std::vector<cplx> values);

  const Prime& prime() const noexcept { return p_; }
  std::int64_t N() const noexcept { return N_; }
  std::int64_t l() const noexcept { return l_; }
  const std::vector<cplx>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  cplx at(const PadicPoint& x) const;
  cplx at_zero() const noexcept { return values_[0]; }

  /// Same function, declared on the larger window D^{l'}_{N'}, N' >= N, l' <= l.
  TestFunction rewindow(std::int64_t N, std::int64_t l) const;

  TestFunction& operator+=(const TestFunction& o);
  TestFunction& operator*=(cplx s);

 private:
  Prime p_;
  std::int64_t N_;
  std::int64_t l_;
  std::vector<cplx> values_;
};

/// Indicator of B_k, in D^k_k.
TestFunction delta_indicator(const Prime& p, std::int64_t k);

/// Exact Fourier transform; the result lives in D^{-N}_{-l}.
TestFunction fourier(const TestFunction& phi);

/// (phi * psi)(x), in D^{max l}_{max N}.
TestFunction convolve(const TestFunction& phi, const TestFunction& psi);

/// x -> phi(x / t); with |t|_p = p^a the result is in D^{l+a}_{N+a}.
TestFunction dilate(const TestFunction& phi, const PadicPoint& t);

/// Values uniform in the unit disc, reproducible from the seed.
TestFunction random_testfn(const Prime& p, std::int64_t N, std::int64_t l, std::uint64_t seed);

}  // namespace padic
