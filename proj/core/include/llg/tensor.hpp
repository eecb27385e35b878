#pragma once

// Dense (r,s)-tensors at a point. Storage is row-major with the r
// contravariant slots first: T^i_{jk} lives at data[(i*n + j)*n + k]. Frame
// (model-space) and chart indices share this type; which convention a tensor
// uses is documented by the function that produces it.

#include <array>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "llg/matrix.hpp"

namespace llg {

inline constexpr int kMaxTensorRank = 4;
inline constexpr int kMaxTensorDim = 16;

class Tensor {
 public:
  Tensor() = default;
  Tensor(int dim, int upper, int lower);

  // Kronecker delta as a (1,1) tensor.
  static Tensor identity(int dim);
  // Rank-2 tensor from a matrix; (upper, lower) must sum to 2.
  static Tensor from_matrix(const RealMatrix& m, int upper, int lower);

  int dim() const noexcept { return dim_; }
  int upper() const noexcept { return upper_; }
  int lower() const noexcept { return lower_; }
  int rank() const noexcept { return upper_ + lower_; }
  bool is_upper_slot(int slot) const noexcept { return slot < upper_; }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  double& operator()(std::initializer_list<int> idx) { return data_[offset(idx)]; }
  double operator()(std::initializer_list<int> idx) const { return data_[offset(idx)]; }
  double& at_flat(std::size_t i) { return data_[i]; }
  double at_flat(std::size_t i) const { return data_[i]; }

  // Multi-index of a flat offset.
  std::array<int, kMaxTensorRank> unflatten(std::size_t flat) const noexcept;
  std::size_t flatten(std::span<const int> idx) const noexcept;

  bool same_shape(const Tensor& o) const noexcept {
    return dim_ == o.dim_ && upper_ == o.upper_ && lower_ == o.lower_;
  }

  RealMatrix to_matrix() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(double s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(double s, Tensor a) { return a *= s; }

 private:
  std::size_t offset(std::initializer_list<int> idx) const;

  int dim_ = 0;
  int upper_ = 0;
  int lower_ = 0;
  std::vector<double> data_;
};

// Einstein summation over each (slot in a, slot in b) pair. Each pair must
// join an upper with a lower slot. Surviving upper slots come first (a's then
// b's), followed by surviving lower slots (a's then b's); relative order
// within each group is preserved.
Tensor contract(const Tensor& a, const Tensor& b, std::span<const std::pair<int, int>> pairs);
Tensor contract(const Tensor& a, const Tensor& b, std::initializer_list<std::pair<int, int>> pairs);

// out[..j..k..] = a[..j..k..] - a[..k..j..]; no 1/2 factor.
Tensor antisymmetrize_pair(const Tensor& a, int slot1, int slot2);

// Swap two slots of the same variance.
Tensor transpose_slots(const Tensor& a, int slot1, int slot2);

double max_abs(const Tensor& a) noexcept;
Tensor tensor_sub(const Tensor& a, const Tensor& b);

}  // namespace llg
