#include "llg/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace llg {
namespace {

std::size_t ipow(int n, int r) {
  std::size_t v = 1;
  for (int i = 0; i < r; ++i) v *= static_cast<std::size_t>(n);
  return v;
}

}  // namespace

Tensor::Tensor(int dim, int upper, int lower) : dim_(dim), upper_(upper), lower_(lower) {
  if (dim < 1 || dim > kMaxTensorDim) {
    throw ShapeMismatch("tensor dimension " + std::to_string(dim) + " outside [1, 16]");
  }
  if (upper < 0 || lower < 0 || upper + lower > kMaxTensorRank) {
    throw ShapeMismatch("tensor rank (" + std::to_string(upper) + "," + std::to_string(lower) +
                        ") exceeds 4");
  }
  data_.assign(ipow(dim, upper + lower), 0.0);
}

Tensor Tensor::identity(int dim) {
  Tensor t(dim, 1, 1);
  for (int i = 0; i < dim; ++i) t({i, i}) = 1.0;
  return t;
}

Tensor Tensor::from_matrix(const RealMatrix& m, int upper, int lower) {
  if (upper + lower != 2) throw ShapeMismatch("from_matrix needs a rank-2 shape");
  Tensor t(m.size(), upper, lower);
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) t({i, j}) = m(i, j);
  }
  return t;
}

std::array<int, kMaxTensorRank> Tensor::unflatten(std::size_t flat) const noexcept {
  std::array<int, kMaxTensorRank> idx{};
  for (int s = rank() - 1; s >= 0; --s) {
    idx[s] = static_cast<int>(flat % static_cast<std::size_t>(dim_));
    flat /= static_cast<std::size_t>(dim_);
  }
  return idx;
}

std::size_t Tensor::flatten(std::span<const int> idx) const noexcept {
  std::size_t off = 0;
  for (int s = 0; s < rank(); ++s) off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(idx[s]);
  return off;
}

std::size_t Tensor::offset(std::initializer_list<int> idx) const {
  if (static_cast<int>(idx.size()) != rank()) {
    throw ShapeMismatch("index arity " + std::to_string(idx.size()) + " does not match rank " +
                        std::to_string(rank()));
  }
  std::size_t off = 0;
  for (int i : idx) {
    if (i < 0 || i >= dim_) throw ShapeMismatch("tensor index out of range");
    off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return off;
}

RealMatrix Tensor::to_matrix() const {
  if (rank() != 2) throw ShapeMismatch("to_matrix needs a rank-2 tensor");
  RealMatrix m(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) m(i, j) = (*this)({i, j});
  }
  return m;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (!same_shape(o)) throw ShapeMismatch("tensor sum of different shapes");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (!same_shape(o)) throw ShapeMismatch("tensor difference of different shapes");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor& Tensor::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

Tensor contract(const Tensor& a, const Tensor& b, std::span<const std::pair<int, int>> pairs) {
  if (a.dim() != b.dim()) throw ShapeMismatch("contraction across different dimensions");
  std::array<bool, kMaxTensorRank> a_used{};
  std::array<bool, kMaxTensorRank> b_used{};
  for (const auto& [sa, sb] : pairs) {
    if (sa < 0 || sa >= a.rank() || sb < 0 || sb >= b.rank()) {
      throw ShapeMismatch("contraction slot out of range");
    }
    if (a_used[sa] || b_used[sb]) throw ShapeMismatch("contraction slot used twice");
    if (a.is_upper_slot(sa) == b.is_upper_slot(sb)) {
      throw ShapeMismatch("contraction must pair an upper with a lower slot");
    }
    a_used[sa] = true;
    b_used[sb] = true;
  }

  // Result slot sources: (which tensor, slot).
  std::vector<std::pair<int, int>> upper_src;
  std::vector<std::pair<int, int>> lower_src;
  for (int s = 0; s < a.rank(); ++s) {
    if (!a_used[s]) (a.is_upper_slot(s) ? upper_src : lower_src).emplace_back(0, s);
  }
  for (int s = 0; s < b.rank(); ++s) {
    if (!b_used[s]) (b.is_upper_slot(s) ? upper_src : lower_src).emplace_back(1, s);
  }

  const int ru = static_cast<int>(upper_src.size());
  const int rl = static_cast<int>(lower_src.size());
  Tensor out(a.dim(), ru, rl);
  std::vector<std::pair<int, int>> src = upper_src;
  src.insert(src.end(), lower_src.begin(), lower_src.end());

  const std::size_t na = a.data().size();
  const std::size_t nb = b.data().size();
  std::array<int, kMaxTensorRank> oidx{};
  for (std::size_t fa = 0; fa < na; ++fa) {
    const double va = a.at_flat(fa);
    const auto ia = a.unflatten(fa);
    for (std::size_t fb = 0; fb < nb; ++fb) {
      const double vb = b.at_flat(fb);
      const auto ib = b.unflatten(fb);
      bool match = true;
      for (const auto& [sa, sb] : pairs) match = match && ia[sa] == ib[sb];
      if (!match) continue;
      for (std::size_t r = 0; r < src.size(); ++r) oidx[r] = src[r].first == 0 ? ia[src[r].second] : ib[src[r].second];
      out.at_flat(out.flatten(std::span<const int>(oidx.data(), src.size()))) += va * vb;
    }
  }
  return out;
}

Tensor contract(const Tensor& a, const Tensor& b, std::initializer_list<std::pair<int, int>> pairs) {
  return contract(a, b, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

Tensor transpose_slots(const Tensor& a, int slot1, int slot2) {
  if (slot1 < 0 || slot2 < 0 || slot1 >= a.rank() || slot2 >= a.rank()) {
    throw ShapeMismatch("slot out of range");
  }
  if (a.is_upper_slot(slot1) != a.is_upper_slot(slot2)) {
    throw ShapeMismatch("cannot swap slots of different variance");
  }
  Tensor out(a.dim(), a.upper(), a.lower());
  for (std::size_t f = 0; f < a.data().size(); ++f) {
    auto idx = a.unflatten(f);
    std::swap(idx[slot1], idx[slot2]);
    out.at_flat(a.flatten(std::span<const int>(idx.data(), a.rank()))) = a.at_flat(f);
  }
  return out;
}

Tensor antisymmetrize_pair(const Tensor& a, int slot1, int slot2) {
  if (slot1 == slot2) throw ShapeMismatch("antisymmetrization needs two distinct slots");
  return a - transpose_slots(a, slot1, slot2);
}

double max_abs(const Tensor& a) noexcept {
  double m = 0.0;
  for (double v : a.data()) {
    if (std::isnan(v)) return std::numeric_limits<double>::quiet_NaN();
    m = std::max(m, std::abs(v));
  }
  return m;
}

Tensor tensor_sub(const Tensor& a, const Tensor& b) { return a - b; }

}  // namespace llg
