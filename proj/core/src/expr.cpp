#include "llg/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <vector>

namespace llg {
namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;
using Kind = Expr::Kind;

NodePtr make(Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

bool has_variables(const Node& n) {
  if (n.kind == Kind::kVariable) return true;
  if (n.lhs && has_variables(*n.lhs)) return true;
  if (n.rhs && has_variables(*n.rhs)) return true;
  return false;
}

std::optional<int> integral_exponent(const Node& exponent) {
  if (has_variables(exponent)) return std::nullopt;
  double v = 0.0;
  try {
    v = detail::eval_node<double>(exponent, std::span<const double>{});
  } catch (const Error&) {
    return std::nullopt;
  }
  if (std::trunc(v) != v || std::abs(v) > kMaxIntExponent) return std::nullopt;
  return static_cast<int>(v);
}

class Parser {
 public:
  Parser(std::string_view src, int dim) : src_(src), dim_(dim) {}

  NodePtr parse_all() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError(pos_, "end of input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw SyntaxError(pos_, std::string("'") + c + "'");
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Kind::kAdd, lhs, term());
      } else if (accept('-')) {
        lhs = make(Kind::kSub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = make(Kind::kMul, lhs, factor());
      } else if (accept('/')) {
        lhs = make(Kind::kDiv, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  NodePtr factor() {
    if (accept('-')) return make(Kind::kNeg, factor());
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!accept('^')) return base;
    NodePtr exponent = factor();
    auto n = std::make_shared<Node>();
    n->kind = Kind::kPow;
    n->int_exponent = integral_exponent(*exponent);
    n->lhs = std::move(base);
    n->rhs = std::move(exponent);
    return n;
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw SyntaxError(pos_, "number, variable, function or '('");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw SyntaxError(pos_, "number, variable, function or '('");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) throw SyntaxError(start, "digits");
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) throw SyntaxError(pos_, "exponent digits");
    }
    double v = 0.0;
    const auto text = src_.substr(start, pos_ - start);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) throw SyntaxError(start, "number");
    auto n = std::make_shared<Node>();
    n->kind = Kind::kNumber;
    n->number = v;
    return n;
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string name(src_.substr(start, pos_ - start));

    if (auto fn = elem_fn_from_name(name)) {
      skip_ws();
      if (!accept('(')) throw SyntaxError(pos_, "'(' after function name " + name);
      std::vector<NodePtr> args;
      skip_ws();
      if (!accept(')')) {
        args.push_back(expr());
        while (accept(',')) args.push_back(expr());
        expect(')');
      }
      if (args.size() != 1) {
        throw ArityError(name + " takes 1 argument, got " + std::to_string(args.size()));
      }
      auto n = std::make_shared<Node>();
      n->kind = Kind::kCall;
      n->fn = *fn;
      n->lhs = std::move(args.front());
      return n;
    }

    if (name.size() >= 2 && name[0] == 'x') {
      bool all_digits = true;
      for (std::size_t i = 1; i < name.size(); ++i) {
        all_digits = all_digits && std::isdigit(static_cast<unsigned char>(name[i]));
      }
      if (all_digits && name[1] != '0') {
        int index = 0;
        const auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), index);
        if (ec != std::errc() || index > dim_) throw VariableOutOfRange(name, dim_);
        auto n = std::make_shared<Node>();
        n->kind = Kind::kVariable;
        n->variable = index - 1;
        return n;
      }
      if (all_digits) throw VariableOutOfRange(name, dim_);
    }
    throw UnknownIdentifier(name);
  }

  std::string_view src_;
  int dim_;
  std::size_t pos_ = 0;
};

// Precedence levels used by the printer.
constexpr int kSum = 1;
constexpr int kProduct = 2;
constexpr int kUnary = 3;
constexpr int kAtom = 5;

int level(const Node& n) {
  switch (n.kind) {
    case Kind::kAdd:
    case Kind::kSub: return kSum;
    case Kind::kMul:
    case Kind::kDiv: return kProduct;
    case Kind::kNeg: return kUnary;
    case Kind::kPow: return 4;
    default: return kAtom;
  }
}

void print(const Node& n, std::string& out);

void print_at(const Node& n, int min_level, std::string& out) {
  if (level(n) < min_level) {
    out += '(';
    print(n, out);
    out += ')';
  } else {
    print(n, out);
  }
}

void print(const Node& n, std::string& out) {
  switch (n.kind) {
    case Kind::kNumber: {
      char buf[64];
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, n.number);
      out.append(buf, ptr);
      return;
    }
    case Kind::kVariable: out += "x" + std::to_string(n.variable + 1); return;
    case Kind::kAdd:
    case Kind::kSub:
      print_at(*n.lhs, kSum, out);
      out += n.kind == Kind::kAdd ? " + " : " - ";
      print_at(*n.rhs, kProduct, out);
      return;
    case Kind::kMul:
    case Kind::kDiv:
      print_at(*n.lhs, kProduct, out);
      out += n.kind == Kind::kMul ? "*" : "/";
      print_at(*n.rhs, kUnary, out);
      return;
    case Kind::kNeg:
      out += '-';
      print_at(*n.lhs, kUnary, out);
      return;
    case Kind::kPow:
      print_at(*n.lhs, kAtom, out);
      out += '^';
      print_at(*n.rhs, kUnary, out);
      return;
    case Kind::kCall:
      out += elem_fn_name(n.fn);
      out += '(';
      print(*n.lhs, out);
      out += ')';
      return;
  }
}

}  // namespace

Expr parse(std::string_view source, int dim) {
  if (dim < 1) throw InvalidArgument("expression dimension must be >= 1");
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (static_cast<unsigned char>(source[i]) > 127) throw SyntaxError(i, "ASCII character");
  }
  Parser p(source, dim);
  return Expr(p.parse_all(), dim);
}

std::string to_string(const Expr& e) {
  std::string out;
  if (!e.empty()) print(e.root(), out);
  return out;
}

}  // namespace llg
