#pragma once

// Central finite differences: the independent oracle for jet derivatives.

#include <functional>
#include <span>

#include "llg/box.hpp"

namespace llg {

using ScalarField = std::function<double(std::span<const double>)>;

// h = 1e-4 * (1 + |x_k|).
double default_fd_step(double xk) noexcept;

// (f(x + h e_k) - f(x - h e_k)) / 2h. Throws DomainBoundary when a stencil
// point falls outside `domain` (if given).
double central_difference(const ScalarField& f, std::span<const double> x, int k, double h,
                          const Box* domain = nullptr);

// Second partial d^2 f / dx^k dx^l. Uses the three-point stencil when k == l
// and the four-point cross stencil otherwise.
double central_second_difference(const ScalarField& f, std::span<const double> x, int k, int l,
                                 double hk, double hl, const Box* domain = nullptr);

}  // namespace llg
