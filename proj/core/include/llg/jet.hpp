#pragma once

// Order-2 forward-mode jets. A Jet2 carries a value together with its full
// gradient and (symmetric) Hessian with respect to up to kMaxJetDim seeded
// chart coordinates. Arithmetic follows the product/quotient/chain rules to
// second order, so every first and second partial derivative of a framing
// entry is exact up to roundoff.

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "llg/error.hpp"

namespace llg {

inline constexpr int kMaxJetDim = 8;

class Jet2 {
 public:
  static constexpr int kHessSize = kMaxJetDim * (kMaxJetDim + 1) / 2;

  Jet2() = default;
  // Implicit on purpose: plain reals act as constants in mixed arithmetic.
  Jet2(double value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static Jet2 constant(double value, int dim) {
    check_dim(dim);
    Jet2 j(value);
    j.dim_ = dim;
    return j;
  }

  static Jet2 variable(double value, int seed, int dim) {
    check_dim(dim);
    if (seed < 0 || seed >= dim) {
      throw InvalidArgument("jet seed " + std::to_string(seed) + " out of range for dimension " +
                            std::to_string(dim));
    }
    Jet2 j(value);
    j.dim_ = dim;
    j.grad_[seed] = 1.0;
    return j;
  }

  double value() const noexcept { return value_; }
  int dim() const noexcept { return dim_; }
  double grad(int k) const noexcept { return grad_[k]; }
  double hess(int a, int b) const noexcept { return hess_[hess_index(a, b)]; }

  double& value_ref() noexcept { return value_; }
  double& grad_ref(int k) noexcept { return grad_[k]; }
  double& hess_ref(int a, int b) noexcept { return hess_[hess_index(a, b)]; }

  // True when every derivative slot is zero.
  bool is_constant() const noexcept {
    for (int k = 0; k < dim_; ++k) {
      if (grad_[k] != 0.0) return false;
    }
    for (int i = 0; i < dim_ * (dim_ + 1) / 2; ++i) {
      if (hess_[i] != 0.0) return false;
    }
    return true;
  }

  static constexpr int hess_index(int a, int b) noexcept {
    return a <= b ? b * (b + 1) / 2 + a : a * (a + 1) / 2 + b;
  }

  Jet2 operator-() const noexcept {
    Jet2 r = *this;
    r.value_ = -r.value_;
    for (auto& g : r.grad_) g = -g;
    for (auto& h : r.hess_) h = -h;
    return r;
  }

  friend Jet2 operator+(const Jet2& a, const Jet2& b) noexcept {
    Jet2 r;
    r.dim_ = a.dim_ > b.dim_ ? a.dim_ : b.dim_;
    r.value_ = a.value_ + b.value_;
    for (int k = 0; k < r.dim_; ++k) r.grad_[k] = a.grad_[k] + b.grad_[k];
    for (int i = 0; i < r.packed(); ++i) r.hess_[i] = a.hess_[i] + b.hess_[i];
    return r;
  }

  friend Jet2 operator-(const Jet2& a, const Jet2& b) noexcept {
    Jet2 r;
    r.dim_ = a.dim_ > b.dim_ ? a.dim_ : b.dim_;
    r.value_ = a.value_ - b.value_;
    for (int k = 0; k < r.dim_; ++k) r.grad_[k] = a.grad_[k] - b.grad_[k];
    for (int i = 0; i < r.packed(); ++i) r.hess_[i] = a.hess_[i] - b.hess_[i];
    return r;
  }

  friend Jet2 operator*(const Jet2& a, const Jet2& b) noexcept {
    Jet2 r;
    r.dim_ = a.dim_ > b.dim_ ? a.dim_ : b.dim_;
    r.value_ = a.value_ * b.value_;
    for (int k = 0; k < r.dim_; ++k) r.grad_[k] = a.value_ * b.grad_[k] + b.value_ * a.grad_[k];
    for (int q = 0; q < r.dim_; ++q) {
      for (int p = 0; p <= q; ++p) {
        const int i = hess_index(p, q);
        r.hess_[i] = a.value_ * b.hess_[i] + b.value_ * a.hess_[i] + a.grad_[p] * b.grad_[q] +
                     a.grad_[q] * b.grad_[p];
      }
    }
    return r;
  }

  // Quotient rule; throws DivisionByZero when the divisor's value is zero.
  friend Jet2 operator/(const Jet2& a, const Jet2& b) {
    if (b.value_ == 0.0) throw DivisionByZero("division by zero");
    Jet2 r;
    r.dim_ = a.dim_ > b.dim_ ? a.dim_ : b.dim_;
    const double q = a.value_ / b.value_;
    r.value_ = q;
    for (int k = 0; k < r.dim_; ++k) r.grad_[k] = (a.grad_[k] - q * b.grad_[k]) / b.value_;
    for (int t = 0; t < r.dim_; ++t) {
      for (int p = 0; p <= t; ++p) {
        const int i = hess_index(p, t);
        r.hess_[i] = (a.hess_[i] - q * b.hess_[i] - r.grad_[p] * b.grad_[t] - r.grad_[t] * b.grad_[p]) /
                     b.value_;
      }
    }
    return r;
  }

  Jet2& operator+=(const Jet2& o) noexcept { return *this = *this + o; }
  Jet2& operator-=(const Jet2& o) noexcept { return *this = *this - o; }
  Jet2& operator*=(const Jet2& o) noexcept { return *this = *this * o; }

  // f(a) given f(a.value), f'(a.value), f''(a.value).
  Jet2 chain(double f0, double f1, double f2) const noexcept {
    Jet2 r;
    r.dim_ = dim_;
    r.value_ = f0;
    for (int k = 0; k < dim_; ++k) r.grad_[k] = f1 * grad_[k];
    for (int q = 0; q < dim_; ++q) {
      for (int p = 0; p <= q; ++p) {
        const int i = hess_index(p, q);
        r.hess_[i] = f2 * grad_[p] * grad_[q] + f1 * hess_[i];
      }
    }
    return r;
  }

 private:
  static void check_dim(int dim) {
    if (dim < 0 || dim > kMaxJetDim) {
      throw InvalidArgument("jet dimension " + std::to_string(dim) + " outside [0, " +
                            std::to_string(kMaxJetDim) + "]");
    }
  }
  int packed() const noexcept { return dim_ * (dim_ + 1) / 2; }

  int dim_ = 0;
  double value_ = 0.0;
  std::array<double, kMaxJetDim> grad_{};
  std::array<double, kHessSize> hess_{};
};

// Lifts a real into the jet algebra: a constant when seed is empty, otherwise
// the coordinate function x^seed.
inline Jet2 jet_lift(double value, std::optional<int> seed, int dim) {
  return seed ? Jet2::variable(value, *seed, dim) : Jet2::constant(value, dim);
}

// First-order truncation, used for quantities that are themselves first
// derivatives of a Jet2 (connection coefficients, Christoffel symbols).
struct Jet1 {
  int dim = 0;
  double value = 0.0;
  std::array<double, kMaxJetDim> grad{};

  friend Jet1 operator+(const Jet1& a, const Jet1& b) noexcept {
    Jet1 r{a.dim > b.dim ? a.dim : b.dim, a.value + b.value, {}};
    for (int k = 0; k < r.dim; ++k) r.grad[k] = a.grad[k] + b.grad[k];
    return r;
  }
  friend Jet1 operator-(const Jet1& a, const Jet1& b) noexcept {
    Jet1 r{a.dim > b.dim ? a.dim : b.dim, a.value - b.value, {}};
    for (int k = 0; k < r.dim; ++k) r.grad[k] = a.grad[k] - b.grad[k];
    return r;
  }
  friend Jet1 operator*(const Jet1& a, const Jet1& b) noexcept {
    Jet1 r{a.dim > b.dim ? a.dim : b.dim, a.value * b.value, {}};
    for (int k = 0; k < r.dim; ++k) r.grad[k] = a.value * b.grad[k] + b.value * a.grad[k];
    return r;
  }
  friend Jet1 operator*(double s, const Jet1& a) noexcept {
    Jet1 r{a.dim, s * a.value, {}};
    for (int k = 0; k < r.dim; ++k) r.grad[k] = s * a.grad[k];
    return r;
  }
  Jet1& operator+=(const Jet1& o) noexcept { return *this = *this + o; }
  Jet1& operator-=(const Jet1& o) noexcept { return *this = *this - o; }
};

inline Jet1 truncate(const Jet2& j) noexcept {
  Jet1 r{j.dim(), j.value(), {}};
  for (int k = 0; k < j.dim(); ++k) r.grad[k] = j.grad(k);
  return r;
}

// d/dx^k of a Jet2, carried to first order.
inline Jet1 partial(const Jet2& j, int k) noexcept {
  Jet1 r{j.dim(), j.grad(k), {}};
  for (int a = 0; a < j.dim(); ++a) r.grad[a] = j.hess(k, a);
  return r;
}

enum class ElemFn { kSin, kCos, kTan, kExp, kLog, kSqrt, kSinh, kCosh, kTanh, kAtan };

std::string_view elem_fn_name(ElemFn fn) noexcept;
std::optional<ElemFn> elem_fn_from_name(std::string_view name) noexcept;

// Elementary functions over reals and jets. Both overloads share the value
// computation, so the jet's value part matches the real result bit for bit.
double apply(ElemFn fn, double x);
Jet2 apply(ElemFn fn, const Jet2& x);

inline double checked_div(double a, double b) {
  if (b == 0.0) throw DivisionByZero("division by zero");
  return a / b;
}
inline Jet2 checked_div(const Jet2& a, const Jet2& b) { return a / b; }

// Integer power by repeated multiplication; negative exponents divide.
template <class Scalar>
Scalar powi(const Scalar& base, int exponent) {
  const int n = exponent < 0 ? -exponent : exponent;
  if (n == 0) return Scalar(1.0);
  Scalar r = base;
  for (int i = 1; i < n; ++i) r = r * base;
  if (exponent < 0) return checked_div(Scalar(1.0), r);
  return r;
}

// base^exponent via exp(exponent * log(base)); requires base > 0.
double powr(double base, double exponent);
Jet2 powr(const Jet2& base, const Jet2& exponent);

inline double value_of(double x) noexcept { return x; }
inline double value_of(const Jet2& x) noexcept { return x.value(); }

}  // namespace llg
