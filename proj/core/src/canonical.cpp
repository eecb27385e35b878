#include "llg/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace llg {
namespace {

void require_even(int dim) {
  if (dim % 2 != 0) throw OddDimension("dimension " + std::to_string(dim) + " is odd");
}

JetMatrix constant_jets(const Tensor& t) {
  JetMatrix m(t.dim());
  for (int i = 0; i < t.dim(); ++i) {
    for (int j = 0; j < t.dim(); ++j) m(i, j) = Jet2(t({i, j}));
  }
  return m;
}

JetMatrix j_jets(const FrameJets& f, const ModelConvention& conv) {
  require_even(f.dim());
  return f.w * constant_jets(model_j(f.dim(), conv.j)) * f.z;
}

JetMatrix omega_jets(const FrameJets& f, const ModelConvention& conv) {
  require_even(f.dim());
  return f.z.transpose() * constant_jets(model_omega(f.dim(), conv.omega)) * f.z;
}

JetMatrix g_jets(const FrameJets& f) { return f.z.transpose() * f.z; }

Tensor values_of(const JetMatrix& m, int upper, int lower) { return Tensor::from_matrix(values(m), upper, lower); }

// Shared body of the two torsion forms of N(J); `sign` multiplies the final
// T^i_jk term.
Tensor nijenhuis_from(const Tensor& t, const Tensor& j, double sign) {
  const int n = t.dim();
  Tensor out(n, 1, 2);
  for (int i = 0; i < n; ++i) {
    for (int jj = 0; jj < n; ++jj) {
      for (int k = 0; k < n; ++k) {
        double acc = sign * t({i, jj, k});
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            acc += t({i, a, b}) * j({a, k}) * j({b, jj});
            acc += j({i, a}) * t({a, b, k}) * j({b, jj});
            acc -= j({i, a}) * t({a, b, jj}) * j({b, k});
          }
        }
        out({i, jj, k}) = acc;
      }
    }
  }
  return out;
}

// T^a_ki w_ja - T^a_kj w_ia - T^a_ji w_ka at [k][i][j].
Tensor domega_torsion_form(const Tensor& t, const Tensor& w) {
  const int n = t.dim();
  Tensor out(n, 0, 3);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int a = 0; a < n; ++a) {
          acc += t({a, k, i}) * w({j, a}) - t({a, k, j}) * w({i, a}) - t({a, j, i}) * w({k, a});
        }
        out({k, i, j}) = acc;
      }
    }
  }
  return out;
}

double max_diff(const RealMatrix& a, const RealMatrix& b) {
  double d = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      const double v = std::abs(a(i, j) - b(i, j));
      if (std::isnan(v)) return std::numeric_limits<double>::quiet_NaN();
      d = std::max(d, v);
    }
  }
  return d;
}

CompatibilityEntry compatibility_for(const FrameJets& f, const ModelConvention& conv, std::string label) {
  const RealMatrix j = values(j_jets(f, conv));
  const RealMatrix w = values(omega_jets(f, conv));
  const RealMatrix g = values(g_jets(f));
  return CompatibilityEntry{std::move(label), max_diff(j.transpose() * g * j, g), max_diff(w, g * j)};
}

}  // namespace

std::string_view pairing_name(Pairing p) noexcept {
  return p == Pairing::kInterleaved ? "interleaved" : "split";
}

Tensor model_j(int dim, Pairing p) {
  require_even(dim);
  Tensor t(dim, 1, 1);
  const int m = dim / 2;
  for (int b = 0; b < m; ++b) {
    if (p == Pairing::kInterleaved) {
      t({2 * b, 2 * b + 1}) = 1.0;
      t({2 * b + 1, 2 * b}) = -1.0;
    } else {
      t({b, m + b}) = 1.0;
      t({m + b, b}) = -1.0;
    }
  }
  return t;
}

Tensor model_omega(int dim, Pairing p) {
  const Tensor j = model_j(dim, p);
  Tensor t(dim, 0, 2);
  for (std::size_t e = 0; e < t.data().size(); ++e) t.at_flat(e) = j.at_flat(e);
  return t;
}

Tensor model_g(int dim) {
  Tensor t(dim, 0, 2);
  for (int i = 0; i < dim; ++i) t({i, i}) = 1.0;
  return t;
}

Tensor canonical_J(const FrameJets& f, const ModelConvention& conv) { return values_of(j_jets(f, conv), 1, 1); }
Tensor canonical_J(const Framing& f, std::span<const double> x, const ModelConvention& conv) {
  return canonical_J(f.eval_frames(x), conv);
}

Tensor canonical_omega(const FrameJets& f, const ModelConvention& conv) {
  return values_of(omega_jets(f, conv), 0, 2);
}
Tensor canonical_omega(const Framing& f, std::span<const double> x, const ModelConvention& conv) {
  return canonical_omega(f.eval_frames(x), conv);
}

Tensor canonical_metric(const FrameJets& f) { return values_of(g_jets(f), 0, 2); }
Tensor canonical_metric(const Framing& f, std::span<const double> x) { return canonical_metric(f.eval_frames(x)); }

TensorJet canonical_J_jet(const FrameJets& f, const ModelConvention& conv) {
  return matrix_jet(j_jets(f, conv), 1, 1);
}
TensorJet canonical_omega_jet(const FrameJets& f, const ModelConvention& conv) {
  return matrix_jet(omega_jets(f, conv), 0, 2);
}
TensorJet canonical_metric_jet(const FrameJets& f) { return matrix_jet(g_jets(f), 0, 2); }

Tensor nijenhuis_direct(const FrameJets& f, const ModelConvention& conv) {
  const JetMatrix j = j_jets(f, conv);
  const int n = f.dim();
  Tensor out(n, 1, 2);
  for (int i = 0; i < n; ++i) {
    for (int jj = 0; jj < n; ++jj) {
      for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int a = 0; a < n; ++a) {
          acc += j(a, jj).value() * j(i, k).grad(a) + j(i, a).value() * j(a, jj).grad(k) -
                 j(a, k).value() * j(i, jj).grad(a) - j(i, a).value() * j(a, k).grad(jj);
        }
        out({i, jj, k}) = acc;
      }
    }
  }
  return out;
}
Tensor nijenhuis_direct(const Framing& f, std::span<const double> x, const ModelConvention& conv) {
  return nijenhuis_direct(f.eval_frames(x), conv);
}

Tensor nijenhuis_via_torsion(const FrameJets& f, const ModelConvention& conv) {
  return nijenhuis_from(torsion(f), canonical_J(f, conv), 1.0);
}
Tensor nijenhuis_via_torsion(const Framing& f, std::span<const double> x, const ModelConvention& conv) {
  return nijenhuis_via_torsion(f.eval_frames(x), conv);
}
Tensor nijenhuis_via_torsion_verbatim(const FrameJets& f, const ModelConvention& conv) {
  return nijenhuis_from(torsion(f), canonical_J(f, conv), -1.0);
}

Tensor nijenhuis_constants_formula(const StructureConstants& c, const Tensor& jhat) {
  return nijenhuis_from(c.c, jhat, 1.0);
}
Tensor nijenhuis_constants_formula_verbatim(const StructureConstants& c, const Tensor& jhat) {
  return nijenhuis_from(c.c, jhat, -1.0);
}

Tensor nijenhuis_constants(const FrameJets& f, ConstantsMode mode, const ModelConvention& conv) {
  require_even(f.dim());
  if (mode == ConstantsMode::kDefinition) return push_to_origin(f, nijenhuis_direct(f, conv));
  return nijenhuis_constants_formula(structure_constants(f), model_j(f.dim(), conv.j));
}
Tensor nijenhuis_constants(const Framing& f, std::span<const double> x, ConstantsMode mode,
                           const ModelConvention& conv) {
  return nijenhuis_constants(f.eval_frames(x), mode, conv);
}

double trace_check(const FrameJets& f, const ModelConvention& conv) {
  const Tensor n = nijenhuis_direct(f, conv);
  const Tensor t = torsion(f);
  double worst = 0.0;
  for (int k = 0; k < f.dim(); ++k) {
    double acc = 0.0;
    for (int a = 0; a < f.dim(); ++a) acc += n({a, a, k}) + 2.0 * t({a, a, k});
    if (std::isnan(acc)) return acc;
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}
double trace_check(const Framing& f, std::span<const double> x, const ModelConvention& conv) {
  return trace_check(f.eval_frames(x), conv);
}

double nijenhuis_trace(const FrameJets& f, const ModelConvention& conv) {
  const Tensor n = nijenhuis_direct(f, conv);
  double worst = 0.0;
  for (int k = 0; k < f.dim(); ++k) {
    double acc = 0.0;
    for (int a = 0; a < f.dim(); ++a) acc += n({a, a, k});
    if (std::isnan(acc)) return acc;
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

Tensor domega(const FrameJets& f, DOmegaMode mode, const ModelConvention& conv) {
  const int n = f.dim();
  if (mode == DOmegaMode::kTorsion) {
    return -1.0 * domega_torsion_form(torsion(f), canonical_omega(f, conv));
  }
  const JetMatrix w = omega_jets(f, conv);
  Tensor out(n, 0, 3);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        out({k, i, j}) = w(i, j).grad(k) - w(k, j).grad(i) - w(i, k).grad(j);
      }
    }
  }
  return out;
}
Tensor domega(const Framing& f, std::span<const double> x, DOmegaMode mode, const ModelConvention& conv) {
  return domega(f.eval_frames(x), mode, conv);
}
Tensor domega_torsion_verbatim(const FrameJets& f, const ModelConvention& conv) {
  return domega_torsion_form(torsion(f), canonical_omega(f, conv));
}

Tensor domega_constants_formula(const StructureConstants& c, const Tensor& omega_hat) {
  return -1.0 * domega_torsion_form(c.c, omega_hat);
}
Tensor domega_constants_formula_verbatim(const StructureConstants& c, const Tensor& omega_hat) {
  return domega_torsion_form(c.c, omega_hat);
}

Tensor domega_constants(const FrameJets& f, ConstantsMode mode, const ModelConvention& conv) {
  require_even(f.dim());
  if (mode == ConstantsMode::kDefinition) return push_to_origin(f, domega(f, DOmegaMode::kDirect, conv));
  return domega_constants_formula(structure_constants(f), model_omega(f.dim(), conv.omega));
}
Tensor domega_constants(const Framing& f, std::span<const double> x, ConstantsMode mode,
                        const ModelConvention& conv) {
  return domega_constants(f.eval_frames(x), mode, conv);
}

MetricCurvature metric_curvature(const FrameJets& f) {
  const int n = f.dim();
  const JetMatrix g = g_jets(f);
  const JetMatrix ginv = inverse(g, "metric");

  // Christoffel symbols of the second kind, to first order.
  std::vector<Jet1> chris(static_cast<std::size_t>(n) * n * n);
  auto cidx = [n](int i, int j, int k) { return (static_cast<std::size_t>(i) * n + j) * n + k; };
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      std::vector<Jet1> first(n);
      for (int m = 0; m < n; ++m) {
        first[m] = 0.5 * (partial(g(m, k), j) + partial(g(m, j), k) - partial(g(j, k), m));
      }
      for (int i = 0; i < n; ++i) {
        Jet1 acc{n, 0.0, {}};
        for (int m = 0; m < n; ++m) acc += truncate(ginv(i, m)) * first[m];
        chris[cidx(i, j, k)] = acc;
      }
    }
  }

  MetricCurvature out{Tensor(n, 1, 3), Tensor(n, 0, 2), 0.0};
  for (int m = 0; m < n; ++m) {
    for (int l = 0; l < n; ++l) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          double r = chris[cidx(m, j, l)].grad[i] - chris[cidx(m, i, l)].grad[j];
          for (int p = 0; p < n; ++p) {
            r += chris[cidx(m, i, p)].value * chris[cidx(p, j, l)].value -
                 chris[cidx(m, j, p)].value * chris[cidx(p, i, l)].value;
          }
          out.riemann({m, l, i, j}) = r;
        }
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += out.riemann({i, l, i, j});
      out.ricci({j, l}) = acc;
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) out.scalar += ginv(j, l).value() * out.ricci({j, l});
  }
  return out;
}

MetricCurvature metric_curvature(const Framing& f, std::span<const double> x) {
  return metric_curvature(f.eval_frames(x));
}

double scalar_curvature_from_constants(const StructureConstants& sc) {
  const int n = sc.dim();
  // Bracket constants [e_i, e_j] = a^k_ij e_k, lowered with the identity.
  auto a = [&](int i, int j, int k) { return -sc.c({k, i, j}); };
  // <nabla_{e_i} e_j, e_k>
  std::vector<double> conn(static_cast<std::size_t>(n) * n * n);
  auto cidx = [n](int i, int j, int k) { return (static_cast<std::size_t>(i) * n + j) * n + k; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) conn[cidx(i, j, k)] = 0.5 * (a(i, j, k) - a(j, k, i) + a(k, i, j));
    }
  }
  double scalar = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // <R(e_i, e_j) e_j, e_i>
      double r = 0.0;
      for (int m = 0; m < n; ++m) {
        r += conn[cidx(j, j, m)] * conn[cidx(i, m, i)] - conn[cidx(i, j, m)] * conn[cidx(j, m, i)];
        r -= a(i, j, m) * conn[cidx(m, j, i)];
      }
      scalar += r;
    }
  }
  return scalar;
}

std::vector<CompatibilityEntry> compatibility_report(const FrameJets& f, const ModelConvention& conv) {
  require_even(f.dim());
  std::vector<CompatibilityEntry> out;
  out.push_back(compatibility_for(
      f, conv, std::string("configured (J ") + std::string(pairing_name(conv.j)) + ", omega " +
                   std::string(pairing_name(conv.omega)) + ")"));
  out.push_back(compatibility_for(f, ModelConvention::uniform(Pairing::kInterleaved), "uniform interleaved"));
  out.push_back(compatibility_for(f, ModelConvention::uniform(Pairing::kSplit), "uniform split"));
  return out;
}

std::vector<CompatibilityEntry> compatibility_report(const Framing& f, std::span<const double> x,
                                                     const ModelConvention& conv) {
  return compatibility_report(f.eval_frames(x), conv);
}

}  // namespace llg
