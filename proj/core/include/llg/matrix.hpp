#pragma once

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "llg/error.hpp"
#include "llg/jet.hpp"

namespace llg {

inline constexpr double kPivotThreshold = 1e-12;

// Dense row-major n x n matrix over a scalar ring (double or Jet2).
template <class Scalar>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, Scalar(0.0)) {}

  static SquareMatrix identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1.0);
    return m;
  }

  int size() const noexcept { return n_; }
  Scalar& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const Scalar& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) throw ShapeMismatch("matrix product of mismatched sizes");
    SquareMatrix r(a.n_);
    for (int i = 0; i < a.n_; ++i) {
      for (int j = 0; j < a.n_; ++j) {
        Scalar s(0.0);
        for (int k = 0; k < a.n_; ++k) s = s + a(i, k) * b(k, j);
        r(i, j) = s;
      }
    }
    return r;
  }

  SquareMatrix transpose() const {
    SquareMatrix r(n_);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) r(i, j) = (*this)(j, i);
    }
    return r;
  }

 private:
  int n_ = 0;
  std::vector<Scalar> data_;
};

using RealMatrix = SquareMatrix<double>;
using JetMatrix = SquareMatrix<Jet2>;

inline bool factor_is_constant(double) noexcept { return true; }
inline bool factor_is_constant(const Jet2& j) noexcept { return j.is_constant(); }

// Gauss-Jordan elimination over the scalar ring with partial pivoting on the
// value magnitude. For jets this propagates dZ = -Z dW Z (and the second-order
// analogue) automatically. Throws SingularFraming when a pivot falls below
// kPivotThreshold; `where` is appended to the message.
template <class Scalar>
SquareMatrix<Scalar> inverse(const SquareMatrix<Scalar>& m, const std::string& where = {}) {
  const int n = m.size();
  SquareMatrix<Scalar> a = m;
  SquareMatrix<Scalar> inv = SquareMatrix<Scalar>::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(value_of(a(col, col)));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(value_of(a(r, col)));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (!(best > kPivotThreshold)) {
      throw SingularFraming("singular matrix" + (where.empty() ? std::string{} : " at " + where));
    }
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Scalar p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) = a(col, j) / p;
      inv(col, j) = inv(col, j) / p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Scalar factor = a(r, col);
      if (value_of(factor) == 0.0 && factor_is_constant(factor)) continue;
      for (int j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - factor * a(col, j);
        inv(r, j) = inv(r, j) - factor * inv(col, j);
      }
    }
  }
  return inv;
}

// Determinant by elimination with partial pivoting (real matrices only).
double determinant(const RealMatrix& m);

// Value part of a jet matrix.
RealMatrix values(const JetMatrix& m);

// Largest entrywise |a - b|.
double max_abs_diff(const RealMatrix& a, const RealMatrix& b);

}  // namespace llg
