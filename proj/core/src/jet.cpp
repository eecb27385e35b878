#include "llg/jet.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

namespace llg {
namespace {

constexpr std::array<std::pair<ElemFn, std::string_view>, 10> kNames{{
    {ElemFn::kSin, "sin"},
    {ElemFn::kCos, "cos"},
    {ElemFn::kTan, "tan"},
    {ElemFn::kExp, "exp"},
    {ElemFn::kLog, "log"},
    {ElemFn::kSqrt, "sqrt"},
    {ElemFn::kSinh, "sinh"},
    {ElemFn::kCosh, "cosh"},
    {ElemFn::kTanh, "tanh"},
    {ElemFn::kAtan, "atan"},
}};

[[noreturn]] void domain_error(ElemFn fn, double x) {
  std::ostringstream os;
  os.precision(17);
  os << elem_fn_name(fn) << " undefined at " << x;
  throw DomainError(os.str());
}

double value_checked(ElemFn fn, double x) {
  switch (fn) {
    case ElemFn::kSin: return std::sin(x);
    case ElemFn::kCos: return std::cos(x);
    case ElemFn::kTan: return std::tan(x);
    case ElemFn::kExp: return std::exp(x);
    case ElemFn::kLog:
      if (!(x > 0.0)) domain_error(fn, x);
      return std::log(x);
    case ElemFn::kSqrt:
      if (!(x >= 0.0)) domain_error(fn, x);
      return std::sqrt(x);
    case ElemFn::kSinh: return std::sinh(x);
    case ElemFn::kCosh: return std::cosh(x);
    case ElemFn::kTanh: return std::tanh(x);
    case ElemFn::kAtan: return std::atan(x);
  }
  domain_error(fn, x);
}

}  // namespace

std::string_view elem_fn_name(ElemFn fn) noexcept {
  for (const auto& [f, name] : kNames) {
    if (f == fn) return name;
  }
  return "?";
}

std::optional<ElemFn> elem_fn_from_name(std::string_view name) noexcept {
  for (const auto& [f, n] : kNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

double apply(ElemFn fn, double x) { return value_checked(fn, x); }

Jet2 apply(ElemFn fn, const Jet2& a) {
  const double x = a.value();
  const double f = value_checked(fn, x);
  switch (fn) {
    case ElemFn::kSin: return a.chain(f, std::cos(x), -f);
    case ElemFn::kCos: return a.chain(f, -std::sin(x), -f);
    case ElemFn::kTan: {
      const double s = 1.0 + f * f;
      return a.chain(f, s, 2.0 * f * s);
    }
    case ElemFn::kExp: return a.chain(f, f, f);
    case ElemFn::kLog: return a.chain(f, 1.0 / x, -1.0 / (x * x));
    case ElemFn::kSqrt:
      // The derivative blows up at zero; only a constant argument may sit there.
      if (f == 0.0) {
        if (!a.is_constant()) domain_error(fn, x);
        return a.chain(f, 0.0, 0.0);
      }
      return a.chain(f, 0.5 / f, -0.25 / (f * f * f));
    case ElemFn::kSinh: return a.chain(f, std::cosh(x), f);
    case ElemFn::kCosh: return a.chain(f, std::sinh(x), f);
    case ElemFn::kTanh: {
      const double s = 1.0 - f * f;
      return a.chain(f, s, -2.0 * f * s);
    }
    case ElemFn::kAtan: {
      const double s = 1.0 / (1.0 + x * x);
      return a.chain(f, s, -2.0 * x * s * s);
    }
  }
  domain_error(fn, x);
}

double powr(double base, double exponent) {
  if (!(base > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "non-integer power of non-positive base " << base;
    throw DomainError(os.str());
  }
  return std::exp(exponent * std::log(base));
}

Jet2 powr(const Jet2& base, const Jet2& exponent) {
  if (!(base.value() > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "non-integer power of non-positive base " << base.value();
    throw DomainError(os.str());
  }
  return apply(ElemFn::kExp, exponent * apply(ElemFn::kLog, base));
}

}  // namespace llg
