#pragma once

// A tiny closed-form expression language for framing entries:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' factor)?          right-associative
//   atom   := number | var | fn '(' expr ')' | '(' expr ')'
//
// Variables are x1..xn (1-based). Functions are the ElemFn set. Evaluation is
// generic over the scalar so reals and jets share one code path.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "llg/error.hpp"
#include "llg/jet.hpp"

namespace llg {

class Expr {
 public:
  enum class Kind { kNumber, kVariable, kAdd, kSub, kMul, kDiv, kPow, kNeg, kCall };

  struct Node {
    Kind kind = Kind::kNumber;
    double number = 0.0;
    int variable = 0;  // 0-based
    ElemFn fn = ElemFn::kExp;
    // Set for kPow when the exponent is a variable-free integer with |n| <= 15.
    std::optional<int> int_exponent;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  Expr() = default;
  Expr(std::shared_ptr<const Node> root, int dim) : root_(std::move(root)), dim_(dim) {}

  const Node& root() const { return *root_; }
  int dim() const noexcept { return dim_; }
  bool empty() const noexcept { return root_ == nullptr; }

 private:
  std::shared_ptr<const Node> root_;
  int dim_ = 0;
};

inline constexpr int kMaxIntExponent = 15;

Expr parse(std::string_view source, int dim);

// Canonical text with minimal parentheses; parse(to_string(e)) reproduces e.
std::string to_string(const Expr& e);

namespace detail {

template <class Scalar>
Scalar eval_node(const Expr::Node& n, std::span<const Scalar> x) {
  using K = Expr::Kind;
  switch (n.kind) {
    case K::kNumber: return Scalar(n.number);
    case K::kVariable: return x[n.variable];
    case K::kAdd: return eval_node(*n.lhs, x) + eval_node(*n.rhs, x);
    case K::kSub: return eval_node(*n.lhs, x) - eval_node(*n.rhs, x);
    case K::kMul: return eval_node(*n.lhs, x) * eval_node(*n.rhs, x);
    case K::kDiv: return checked_div(eval_node(*n.lhs, x), eval_node(*n.rhs, x));
    case K::kNeg: return -eval_node(*n.lhs, x);
    case K::kCall: return apply(n.fn, eval_node(*n.lhs, x));
    case K::kPow:
      if (n.int_exponent) return powi(eval_node(*n.lhs, x), *n.int_exponent);
      return powr(eval_node(*n.lhs, x), eval_node(*n.rhs, x));
  }
  throw InvalidArgument("corrupt expression node");
}

}  // namespace detail

template <class Scalar>
Scalar evaluate(const Expr& e, std::span<const Scalar> point) {
  if (static_cast<int>(point.size()) != e.dim()) {
    throw InvalidArgument("point has " + std::to_string(point.size()) + " coordinates, expression expects " +
                          std::to_string(e.dim()));
  }
  return detail::eval_node<Scalar>(e.root(), point);
}

}  // namespace llg
