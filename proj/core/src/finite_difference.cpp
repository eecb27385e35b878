#include "llg/finite_difference.hpp"

#include <cmath>
#include <string>

#include "llg/error.hpp"

namespace llg {
namespace {

double eval_at(const ScalarField& f, Point& p, const Box* domain) {
  if (domain != nullptr && !domain->contains(p)) {
    throw DomainBoundary("finite-difference stencil leaves the domain");
  }
  return f(p);
}

void check_index(std::span<const double> x, int k) {
  if (k < 0 || k >= static_cast<int>(x.size())) {
    throw InvalidArgument("coordinate index " + std::to_string(k) + " out of range");
  }
}

}  // namespace

double default_fd_step(double xk) noexcept { return 1e-4 * (1.0 + std::abs(xk)); }

double central_difference(const ScalarField& f, std::span<const double> x, int k, double h,
                          const Box* domain) {
  check_index(x, k);
  Point p(x.begin(), x.end());
  p[k] = x[k] + h;
  const double fp = eval_at(f, p, domain);
  p[k] = x[k] - h;
  const double fm = eval_at(f, p, domain);
  return (fp - fm) / (2.0 * h);
}

double central_second_difference(const ScalarField& f, std::span<const double> x, int k, int l,
                                 double hk, double hl, const Box* domain) {
  check_index(x, k);
  check_index(x, l);
  Point p(x.begin(), x.end());
  if (k == l) {
    const double f0 = eval_at(f, p, domain);
    p[k] = x[k] + hk;
    const double fp = eval_at(f, p, domain);
    p[k] = x[k] - hk;
    const double fm = eval_at(f, p, domain);
    return (fp - 2.0 * f0 + fm) / (hk * hk);
  }
  double acc = 0.0;
  for (int sk : {1, -1}) {
    for (int sl : {1, -1}) {
      p[k] = x[k] + sk * hk;
      p[l] = x[l] + sl * hl;
      acc += sk * sl * eval_at(f, p, domain);
    }
  }
  return acc / (4.0 * hk * hl);
}

}  // namespace llg
