#include "padic/jet.hpp"

#include <algorithm>

#include "padic/error.hpp"

namespace padic {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void check_order(int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative jet order " + std::to_string(order));
}

}  // namespace

Jet::Jet(int order, cplx value) {
  check_order(order);
  c_.assign(static_cast<std::size_t>(order) + 1, 0.0);
  c_[0] = value;
}

Jet Jet::variable(int order, cplx alpha0) {
  Jet j(order, alpha0);
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

Jet Jet::exp_linear(int order, cplx value, cplx rate) {
  Jet j(order, value);
  for (int k = 1; k <= order; ++k) j.c_[k] = j.c_[k - 1] * rate / static_cast<double>(k);
  return j;
}

Jet::cplx Jet::derivative(int k) const { return coeff(k) * factorial(k); }

Jet Jet::rescaled(cplx s) const {
  Jet r = *this;
  cplx f = 1.0;
  for (auto& c : r.c_) {
    c *= f;
    f *= s;
  }
  return r;
}

Jet& Jet::operator+=(const Jet& o) {
  if (o.order() != order()) throw Error(ErrorKind::InvalidArgument, "jet orders differ");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  if (o.order() != order()) throw Error(ErrorKind::InvalidArgument, "jet orders differ");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet& Jet::operator*=(const Jet& o) {
  if (o.order() != order()) throw Error(ErrorKind::InvalidArgument, "jet orders differ");
  std::vector<cplx> r(c_.size(), 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; i + j < c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  return *this;
}

Jet& Jet::operator/=(const Jet& o) {
  if (o.order() != order()) throw Error(ErrorKind::InvalidArgument, "jet orders differ");
  if (o.c_[0] == 0.0) throw Error(ErrorKind::InvalidArgument, "jet division by a zero constant term");
  // Solve q * o = a term by term.
  std::vector<cplx> q(c_.size(), 0.0);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    cplx s = c_[k];
    for (std::size_t j = 1; j <= k; ++j) s -= q[k - j] * o.c_[j];
    q[k] = s / o.c_[0];
  }
  c_ = std::move(q);
  return *this;
}

Jet& Jet::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  return *this;
}

}  // namespace padic
