#include <random>

#include "padic/padic.hpp"
#include "test_util.hpp"

using namespace padic;
using cplx = std::complex<double>;

namespace {

/// Values of phi at every coset representative of the window (N, l).
std::vector<cplx> sample(const TestFunction& phi, std::int64_t N, std::int64_t l) {
  std::vector<cplx> v;
  for (const auto& x : enumerate_cosets(phi.prime(), N, l)) v.push_back(phi.at(x));
  return v;
}

}  // namespace

TEST(DeltaIndicator, Examples) {
  const auto d0 = delta_indicator(Prime(2), 0);
  EXPECT_EQ(d0.N(), 0);
  EXPECT_EQ(d0.l(), 0);
  EXPECT_EQ(d0.values(), std::vector<cplx>{1.0});
  EXPECT_EQ(d0.at(PadicPoint(5)), cplx(1.0));
  EXPECT_EQ(d0.at(PadicPoint(1, 2)), cplx(0.0));

  const auto d2 = delta_indicator(Prime(3), 2);
  EXPECT_EQ(d2.at(PadicPoint(1, 9)), cplx(1.0));
  EXPECT_EQ(d2.at(PadicPoint(1, 27)), cplx(0.0));

  const auto dm1 = delta_indicator(Prime(2), -1);
  EXPECT_EQ(dm1.at(PadicPoint(1, 2)), cplx(0.0));
  EXPECT_EQ(dm1.at(PadicPoint(1)), cplx(0.0));
  EXPECT_EQ(dm1.at(PadicPoint(2)), cplx(1.0));
  EXPECT_EQ(dm1.at(PadicPoint(0)), cplx(1.0));
}

TEST(TestFunction, WindowValidation) {
  EXPECT_PADIC_ERROR(TestFunction(Prime(2), 0, 1, {1.0}), ErrorKind::BadWindow);
  EXPECT_PADIC_ERROR(TestFunction(Prime(2), 1, 0, {1.0}), ErrorKind::InvalidArgument);
  EXPECT_PADIC_ERROR(random_testfn(Prime(2), -1, 0, 1), ErrorKind::BadWindow);
}

TEST(TestFunction, ConstancyAndSupport) {
  const Prime p(3);
  const auto phi = random_testfn(p, 1, -1, 4);
  for (const auto& x : enumerate_cosets(p, 1, -1)) {
    EXPECT_EQ(phi.at(x), phi.at(x + PadicPoint(-6)));
    EXPECT_EQ(phi.at(x), phi.at(x + PadicPoint(3)));
  }
  EXPECT_EQ(phi.at(PadicPoint(1, 9)), cplx(0.0));
  EXPECT_EQ(phi.at_zero(), phi.values()[0]);
}

TEST(RandomTestfn, Reproducible) {
  const auto a = random_testfn(Prime(5), 1, -1, 1);
  const auto b = random_testfn(Prime(5), 1, -1, 1);
  const auto c = random_testfn(Prime(5), 1, -1, 2);
  EXPECT_EQ(a.values(), b.values());
  EXPECT_NE(a.values(), c.values());
  for (const auto& v : a.values()) EXPECT_LE(std::abs(v), 1.0);
}

TEST(Rewindow, SameFunction) {
  const Prime p(2);
  const auto phi = random_testfn(p, 1, -1, 9);
  const auto wide = phi.rewindow(3, -3);
  EXPECT_EQ(sample(phi, 3, -3), sample(wide, 3, -3));
  EXPECT_PADIC_ERROR(phi.rewindow(0, -3), ErrorKind::BadWindow);
}

TEST(Fourier, Examples) {
  for (long p : {2L, 3L, 5L}) {
    const Prime P(p);
    const auto F0 = fourier(delta_indicator(P, 0));
    EXPECT_EQ(F0.N(), 0);
    EXPECT_EQ(F0.l(), 0);
    EXPECT_CNEAR(F0.values()[0], 1.0, 1e-15);
    for (int l = -2; l <= 2; ++l) {
      const auto F = fourier(delta_indicator(P, l));
      const auto expect = delta_indicator(P, -l);
      const double scale = std::pow(static_cast<double>(p), l);
      const auto got = sample(F, 3, -3);
      const auto want = sample(expect, 3, -3);
      for (std::size_t i = 0; i < got.size(); ++i) EXPECT_CNEAR(got[i], scale * want[i], 1e-12);
    }
  }
}

TEST(Fourier, InvolutionAndSupportSwap) {
  for (long p : {2L, 3L}) {
    const Prime P(p);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      const auto phi = random_testfn(P, 2, -1, seed);
      const auto F = fourier(phi);
      EXPECT_EQ(F.N(), 1);
      EXPECT_EQ(F.l(), -2);
      const auto FF = fourier(F);
      for (const auto& x : enumerate_cosets(P, 2, -1)) EXPECT_CNEAR(FF.at(x), phi.at(-x), 1e-12);
    }
  }
}

TEST(Fourier, Linear) {
  const Prime p(3);
  auto a = random_testfn(p, 1, -1, 1), b = random_testfn(p, 1, -1, 2);
  const auto Fa = fourier(a), Fb = fourier(b);
  a *= cplx(0.5, 2.0);
  a += b;
  const auto Fs = fourier(a);
  for (std::size_t i = 0; i < Fs.size(); ++i) {
    EXPECT_CNEAR(Fs.values()[i], cplx(0.5, 2.0) * Fa.values()[i] + Fb.values()[i], 1e-12);
  }
}

TEST(Convolve, Examples) {
  const Prime p(2);
  const auto d0 = delta_indicator(p, 0);
  const auto c = convolve(d0, d0);
  EXPECT_EQ(sample(c, 2, -2), sample(d0, 2, -2));
  auto zero = random_testfn(p, 1, -1, 3);
  zero *= 0.0;
  const auto z = convolve(random_testfn(p, 1, -1, 4), zero);
  for (const auto& v : z.values()) EXPECT_EQ(v, cplx(0.0));
}

TEST(Convolve, FourierOfConvolutionIsProduct) {
  const Prime p(3);
  const auto phi = random_testfn(p, 1, -1, 21);
  const auto psi = random_testfn(p, 0, -2, 22);
  const auto lhs = fourier(convolve(phi, psi));
  const auto Fphi = fourier(phi), Fpsi = fourier(psi);
  for (const auto& x : enumerate_cosets(p, 3, -2)) EXPECT_CNEAR(lhs.at(x), Fphi.at(x) * Fpsi.at(x), 1e-12);
  const auto smooth = convolve(phi, delta_indicator(p, 2));
  for (const auto& x : enumerate_cosets(p, 2, 0)) EXPECT_CNEAR(smooth.at(x), smooth.at_zero(), 1e-12);
}

TEST(Dilate, Examples) {
  const Prime p(3);
  const auto d1 = dilate(delta_indicator(p, 0), PadicPoint(1, 3));
  EXPECT_EQ(d1.N(), 1);
  EXPECT_EQ(d1.l(), 1);
  EXPECT_EQ(sample(d1, 2, -1), sample(delta_indicator(p, 1), 2, -1));
  const auto phi = random_testfn(p, 1, -1, 5);
  EXPECT_EQ(dilate(phi, PadicPoint(1)).values(), phi.values());
  const PadicPoint t(2, 9);
  const auto back = dilate(dilate(phi, t), PadicPoint(9, 2));
  EXPECT_EQ(sample(back, 2, -2), sample(phi, 2, -2));
  for (const auto& x : enumerate_cosets(p, 2, -2)) EXPECT_EQ(dilate(phi, t).at(x), phi.at(x / t));
  EXPECT_PADIC_ERROR(dilate(phi, PadicPoint(0)), ErrorKind::ZeroArgument);
}
