#include "llg/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace llg {

double determinant(const RealMatrix& m) {
  const int n = m.size();
  RealMatrix a = m;
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    }
    if (a(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

RealMatrix values(const JetMatrix& m) {
  RealMatrix r(m.size());
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) r(i, j) = m(i, j).value();
  }
  return r;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  double d = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  }
  return d;
}

}  // namespace llg
