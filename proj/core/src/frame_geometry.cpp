#include "llg/frame_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace llg {
namespace {

// Largest |x|, NaN-sticky.
void track(double& acc, double v) {
  if (std::isnan(v) || std::isnan(acc)) {
    acc = std::numeric_limits<double>::quiet_NaN();
    return;
  }
  acc = std::max(acc, std::abs(v));
}

// Applies m to one slot: upper slots as m^i_a S^a, lower slots as S_b m^b_j.
Tensor apply_to_slot(const Tensor& s, int slot, const RealMatrix& m) {
  Tensor out(s.dim(), s.upper(), s.lower());
  const int n = s.dim();
  const bool upper = s.is_upper_slot(slot);
  for (std::size_t f = 0; f < out.data().size(); ++f) {
    auto idx = out.unflatten(f);
    const int target = idx[slot];
    double acc = 0.0;
    for (int a = 0; a < n; ++a) {
      idx[slot] = a;
      const double coeff = upper ? m(target, a) : m(a, target);
      acc += coeff * s.at_flat(s.flatten(std::span<const int>(idx.data(), s.rank())));
    }
    out.at_flat(f) = acc;
  }
  return out;
}

Tensor apply_frames(const Tensor& s, const RealMatrix& upper_map, const RealMatrix& lower_map) {
  Tensor out = s;
  for (int slot = 0; slot < s.rank(); ++slot) {
    out = apply_to_slot(out, slot, s.is_upper_slot(slot) ? upper_map : lower_map);
  }
  return out;
}

std::vector<Jet1> gamma_jets(const FrameJets& f) {
  const int n = f.dim();
  std::vector<Jet1> g(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Jet1 acc{n, 0.0, {}};
        for (int a = 0; a < n; ++a) acc += truncate(f.z(a, j)) * partial(f.w(i, a), k);
        g[(static_cast<std::size_t>(i) * n + j) * n + k] = acc;
      }
    }
  }
  return g;
}

TensorJet rank3_jet(const std::vector<Jet1>& entries, int n) {
  TensorJet t{Tensor(n, 1, 2), Tensor(n, 1, 3)};
  for (std::size_t f = 0; f < entries.size(); ++f) {
    t.value.at_flat(f) = entries[f].value;
    for (int r = 0; r < n; ++r) t.derivative.at_flat(f * n + r) = entries[f].grad[r];
  }
  return t;
}

}  // namespace

Tensor frame_w(const FrameJets& f) { return Tensor::from_matrix(values(f.w), 1, 1); }
Tensor frame_z(const FrameJets& f) { return Tensor::from_matrix(values(f.z), 1, 1); }

double frame_inverse_defect(const FrameJets& f) {
  const int n = f.dim();
  double defect = 0.0;
  for (const JetMatrix& p : {f.w * f.z, f.z * f.w}) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Jet2& e = p(i, j);
        track(defect, e.value() - (i == j ? 1.0 : 0.0));
        for (int a = 0; a < n; ++a) {
          track(defect, e.grad(a));
          for (int b = 0; b <= a; ++b) track(defect, e.hess(a, b));
        }
      }
    }
  }
  return defect;
}

Tensor epsilon(const Framing& f, std::span<const double> x, std::span<const double> y) {
  if (!f.domain().contains(x) || !f.domain().contains(y)) {
    throw DomainBoundary("epsilon endpoint outside domain");
  }
  return Tensor::from_matrix(f.w_at(y) * f.z_at(x), 1, 1);
}

Tensor gamma(const FrameJets& f) { return gamma_jet(f).value; }
Tensor gamma(const Framing& f, std::span<const double> x) { return gamma(f.eval_frames(x)); }

Tensor gamma_second_form(const FrameJets& f) {
  const int n = f.dim();
  Tensor g(n, 1, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int a = 0; a < n; ++a) acc -= f.z(a, j).grad(k) * f.w(i, a).value();
        g({i, j, k}) = acc;
      }
    }
  }
  return g;
}

TensorJet gamma_jet(const FrameJets& f) { return rank3_jet(gamma_jets(f), f.dim()); }

Tensor torsion(const FrameJets& f) { return antisymmetrize_pair(gamma(f), 1, 2); }
Tensor torsion(const Framing& f, std::span<const double> x) { return torsion(f.eval_frames(x)); }

TensorJet torsion_jet(const FrameJets& f) {
  const TensorJet g = gamma_jet(f);
  return TensorJet{antisymmetrize_pair(g.value, 1, 2), antisymmetrize_pair(g.derivative, 1, 2)};
}

TensorJet matrix_jet(const JetMatrix& m, int upper, int lower) {
  const int n = m.size();
  TensorJet t{Tensor(n, upper, lower), Tensor(n, upper, lower + 1)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t.value({i, j}) = m(i, j).value();
      for (int r = 0; r < n; ++r) t.derivative({i, j, r}) = m(i, j).grad(r);
    }
  }
  return t;
}

Tensor covariant_derivative(const TensorJet& s, const Tensor& gamma) {
  const Tensor& v = s.value;
  if (v.rank() >= kMaxTensorRank) throw ShapeMismatch("covariant derivative needs rank <= 3");
  if (gamma.dim() != v.dim() || gamma.upper() != 1 || gamma.lower() != 2) {
    throw ShapeMismatch("connection must be a (1,2) tensor of matching dimension");
  }
  if (s.derivative.dim() != v.dim() || s.derivative.upper() != v.upper() ||
      s.derivative.lower() != v.lower() + 1) {
    throw ShapeMismatch("derivative part has the wrong shape");
  }
  const int n = v.dim();
  const int rank = v.rank();
  Tensor out(n, v.upper(), v.lower() + 1);
  for (std::size_t f = 0; f < out.data().size(); ++f) {
    auto idx = out.unflatten(f);
    const int r = idx[rank];
    double acc = s.derivative.at_flat(f);
    std::array<int, kMaxTensorRank> sidx{};
    for (int slot = 0; slot < rank; ++slot) {
      std::copy(idx.begin(), idx.begin() + rank, sidx.begin());
      const int orig = idx[slot];
      for (int a = 0; a < n; ++a) {
        sidx[slot] = a;
        const double sv = v.at_flat(v.flatten(std::span<const int>(sidx.data(), rank)));
        if (v.is_upper_slot(slot)) {
          acc -= gamma({orig, a, r}) * sv;
        } else {
          acc += gamma({a, orig, r}) * sv;
        }
      }
    }
    out.at_flat(f) = acc;
  }
  return out;
}

double parallel_frames_defect(const FrameJets& f) {
  const int n = f.dim();
  const Tensor g = gamma(f);
  double defect = 0.0;
  for (int c = 0; c < n; ++c) {
    TensorJet wcol{Tensor(n, 1, 0), Tensor(n, 1, 1)};
    TensorJet zrow{Tensor(n, 0, 1), Tensor(n, 0, 2)};
    for (int i = 0; i < n; ++i) {
      wcol.value({i}) = f.w(i, c).value();
      zrow.value({i}) = f.z(c, i).value();
      for (int r = 0; r < n; ++r) {
        wcol.derivative({i, r}) = f.w(i, c).grad(r);
        zrow.derivative({i, r}) = f.z(c, i).grad(r);
      }
    }
    track(defect, max_abs(covariant_derivative(wcol, g)));
    track(defect, max_abs(covariant_derivative(zrow, g)));
  }
  return defect;
}

Tensor linear_curvature(const FrameJets& f) {
  const TensorJet t = torsion_jet(f);
  return covariant_derivative(t, gamma(f));
}

Tensor linear_curvature(const Framing& f, std::span<const double> x) {
  return linear_curvature(f.eval_frames(x));
}

StructureConstants structure_constants(const FrameJets& f) {
  return StructureConstants{push_to_origin(f, torsion(f))};
}

StructureConstants structure_constants(const Framing& f, std::span<const double> x) {
  return structure_constants(f.eval_frames(x));
}

Tensor frame_bracket(const FrameJets& f) {
  const int n = f.dim();
  Tensor a(n, 1, 2);
  std::vector<double> br(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      for (int m = 0; m < n; ++m) {
        double acc = 0.0;
        for (int p = 0; p < n; ++p) {
          acc += f.w(p, j).value() * f.w(m, k).grad(p) - f.w(p, k).value() * f.w(m, j).grad(p);
        }
        br[m] = acc;
      }
      for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int m = 0; m < n; ++m) acc += f.z(i, m).value() * br[m];
        a({i, j, k}) = acc;
      }
    }
  }
  return a;
}

Tensor frame_bracket(const Framing& f, std::span<const double> x) { return frame_bracket(f.eval_frames(x)); }

double jacobi_defect(const StructureConstants& sc) {
  const Tensor& c = sc.c;
  const int n = c.dim();
  double defect = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          double acc = 0.0;
          for (int m = 0; m < n; ++m) {
            acc += c({m, j, k}) * c({i, m, l}) + c({m, k, l}) * c({i, m, j}) + c({m, l, j}) * c({i, m, k});
          }
          track(defect, acc);
        }
      }
    }
  }
  return defect;
}

Tensor transport(const Tensor& s, const Tensor& eps_xy, const Tensor& eps_yx) {
  return apply_frames(s, eps_xy.to_matrix(), eps_yx.to_matrix());
}

double invariance_defect(const Framing& f, const TensorField& field, std::span<const double> x,
                         std::span<const double> y) {
  const Tensor moved = transport(field(f, x), epsilon(f, x, y), epsilon(f, y, x));
  return max_abs(moved - field(f, y));
}

Tensor push_to_origin(const FrameJets& f, const Tensor& s) {
  if (s.dim() != f.dim()) throw ShapeMismatch("tensor dimension differs from framing dimension");
  return apply_frames(s, values(f.z), values(f.w));
}

Tensor push_to_origin(const Framing& f, const Tensor& s, std::span<const double> x) {
  return push_to_origin(f.eval_frames(x), s);
}

Tensor pull_from_origin(const FrameJets& f, const Tensor& s) {
  if (s.dim() != f.dim()) throw ShapeMismatch("tensor dimension differs from framing dimension");
  return apply_frames(s, values(f.w), values(f.z));
}

double component_spread(std::span<const Tensor> tensors) {
  if (tensors.empty()) return 0.0;
  double spread = 0.0;
  const std::size_t size = tensors.front().data().size();
  for (std::size_t e = 0; e < size; ++e) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Tensor& t : tensors) {
      if (!t.same_shape(tensors.front())) throw ShapeMismatch("spread over tensors of different shapes");
      const double v = t.at_flat(e);
      if (std::isnan(v)) return std::numeric_limits<double>::quiet_NaN();
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    spread = std::max(spread, hi - lo);
  }
  return spread;
}

FlatnessCertificate certify_flat(const Framing& f, const std::vector<Point>& points, double tol) {
  if (points.size() < 2) throw InvalidArgument("flatness certification needs at least 2 points");
  FlatnessCertificate cert;
  cert.points = points;
  cert.tol = tol;
  std::vector<Tensor> constants;
  constants.reserve(points.size());
  for (const Point& p : points) {
    const FrameJets fj = f.eval_frames(p);
    track(cert.max_curvature, max_abs(linear_curvature(fj)));
    constants.push_back(structure_constants(fj).c);
  }
  cert.max_c_spread = component_spread(constants);
  cert.flat = cert.max_curvature <= tol && cert.max_c_spread <= tol;
  return cert;
}

Point develop(const Framing& f, std::span<const double> x0, std::span<const double> y0,
              const std::vector<Point>& path, const DevelopOptions& opts) {
  const int n = f.dim();
  if (static_cast<int>(x0.size()) != n || static_cast<int>(y0.size()) != n) {
    throw InvalidArgument("develop endpoints have the wrong dimension");
  }
  if (!f.domain().contains(x0)) throw DomainBoundary("path start " + point_to_string(x0) + " outside domain");
  if (!f.domain().contains(y0)) throw DomainEscape("initial value " + point_to_string(y0) + " outside domain");
  for (const Point& p : path) {
    if (!f.domain().contains(p)) throw DomainBoundary("path vertex " + point_to_string(p) + " outside domain");
  }
  if (opts.require_flat) {
    std::vector<Point> probes{Point(x0.begin(), x0.end()), Point(y0.begin(), y0.end())};
    probes.insert(probes.end(), path.begin(), path.end());
    const FlatnessCertificate cert = certify_flat(f, probes, opts.flat_tol);
    if (!cert.flat) throw NotFlat("framing " + f.name() + " is not flat along the development path");
  }

  Point y(y0.begin(), y0.end());
  Point a(x0.begin(), x0.end());

  // dy/dt = W(y) Z(x(t)) (b - a)
  auto rhs = [&](const Point& x, const Point& yy, const Point& dx) {
    if (!f.domain().contains(yy)) throw DomainEscape("development left the domain at " + point_to_string(yy));
    const RealMatrix eps = f.w_at(yy) * f.z_at(x);
    Point out(n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) out[i] += eps(i, j) * dx[j];
    }
    return out;
  };

  for (const Point& b : path) {
    Point dx(n);
    double len2 = 0.0;
    for (int i = 0; i < n; ++i) {
      dx[i] = b[i] - a[i];
      len2 += dx[i] * dx[i];
    }
    const int steps = std::max(1, static_cast<int>(std::ceil(opts.steps_per_unit * std::sqrt(len2))));
    const double h = 1.0 / steps;
    auto x_at = [&](double t) {
      Point x(n);
      for (int i = 0; i < n; ++i) x[i] = a[i] + t * dx[i];
      return x;
    };
    auto axpy = [&](const Point& base, const Point& k, double s) {
      Point r(n);
      for (int i = 0; i < n; ++i) r[i] = base[i] + s * k[i];
      return r;
    };
    for (int s = 0; s < steps; ++s) {
      const double t = s * h;
      const Point k1 = rhs(x_at(t), y, dx);
      const Point k2 = rhs(x_at(t + 0.5 * h), axpy(y, k1, 0.5 * h), dx);
      const Point k3 = rhs(x_at(t + 0.5 * h), axpy(y, k2, 0.5 * h), dx);
      const Point k4 = rhs(x_at(t + h), axpy(y, k3, h), dx);
      for (int i = 0; i < n; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    if (!f.domain().contains(y)) throw DomainEscape("development left the domain at " + point_to_string(y));
    a = b;
  }
  return y;
}

}  // namespace llg
