#pragma once

// Canonical almost complex, almost symplectic and Riemannian structures of a
// framing, obtained by carrying constant model tensors along w:
//
//   J^i_j   = W^i_a Jhat^a_b Z^b_j
//   w_ij    = omegaHat_ab Z^a_i Z^b_j
//   g_ij    = Z^a_i Z^a_j
//
// together with their first and second order differential invariants, each
// computed two ways (direct differentiation and a torsion/constants formula).
//
// Corrected formulas. Derivation from the definitions gives
//
//   N^i_jk   = T^i_ab J^a_k J^b_j + J^i_a T^a_bk J^b_j - J^i_a T^a_bj J^b_k + T^i_jk
//   (dw)_kij = -(T^a_ki w_ja - T^a_kj w_ia - T^a_ji w_ka)
//
// The variants suffixed `_verbatim` keep the frequently quoted forms with
// -T^i_jk and without the leading minus; they differ from the direct results
// by -2T and by a global sign respectively, and are kept for reporting.

#include <span>
#include <string>
#include <vector>

#include "llg/frame_geometry.hpp"

namespace llg {

// interleaved: m diagonal blocks [[0,1],[-1,0]]; split: [[0,I],[-I,0]].
enum class Pairing { kInterleaved, kSplit };

std::string_view pairing_name(Pairing p) noexcept;

// Which pairing each model tensor uses. The default is the literal one:
// Jhat interleaved, omegaHat split. These are not compatible for dim >= 4.
struct ModelConvention {
  Pairing j = Pairing::kInterleaved;
  Pairing omega = Pairing::kSplit;

  static ModelConvention uniform(Pairing p) { return ModelConvention{p, p}; }
};

Tensor model_j(int dim, Pairing p);      // (1,1)
Tensor model_omega(int dim, Pairing p);  // (0,2)
Tensor model_g(int dim);                 // (0,2), identity

Tensor canonical_J(const FrameJets& f, const ModelConvention& conv = {});
Tensor canonical_J(const Framing& f, std::span<const double> x, const ModelConvention& conv = {});
Tensor canonical_omega(const FrameJets& f, const ModelConvention& conv = {});
Tensor canonical_omega(const Framing& f, std::span<const double> x, const ModelConvention& conv = {});
Tensor canonical_metric(const FrameJets& f);
Tensor canonical_metric(const Framing& f, std::span<const double> x);

// Value + first partials of J, w and g (for covariant derivatives).
TensorJet canonical_J_jet(const FrameJets& f, const ModelConvention& conv = {});
TensorJet canonical_omega_jet(const FrameJets& f, const ModelConvention& conv = {});
TensorJet canonical_metric_jet(const FrameJets& f);

// Nijenhuis tensor from jet derivatives of J; the ground-truth path.
Tensor nijenhuis_direct(const FrameJets& f, const ModelConvention& conv = {});
Tensor nijenhuis_direct(const Framing& f, std::span<const double> x, const ModelConvention& conv = {});
// Nijenhuis tensor from T and J; valid on any framing, flat or not.
Tensor nijenhuis_via_torsion(const FrameJets& f, const ModelConvention& conv = {});
Tensor nijenhuis_via_torsion(const Framing& f, std::span<const double> x, const ModelConvention& conv = {});
Tensor nijenhuis_via_torsion_verbatim(const FrameJets& f, const ModelConvention& conv = {});

enum class ConstantsMode { kDefinition, kFormula };

// Model-space constants of N(J). Definition pushes the direct N(J) to the
// origin; formula contracts C with Jhat.
Tensor nijenhuis_constants(const FrameJets& f, ConstantsMode mode, const ModelConvention& conv = {});
Tensor nijenhuis_constants(const Framing& f, std::span<const double> x, ConstantsMode mode,
                           const ModelConvention& conv = {});
Tensor nijenhuis_constants_formula(const StructureConstants& c, const Tensor& jhat);
Tensor nijenhuis_constants_formula_verbatim(const StructureConstants& c, const Tensor& jhat);

// max_k |N^a_ak + 2 T^a_ak| with N from nijenhuis_direct.
double trace_check(const FrameJets& f, const ModelConvention& conv = {});
double trace_check(const Framing& f, std::span<const double> x, const ModelConvention& conv = {});
// max_k |N^a_ak|; the Nijenhuis tensor of any J is trace-free.
double nijenhuis_trace(const FrameJets& f, const ModelConvention& conv = {});

enum class DOmegaMode { kDirect, kTorsion };

// (dw)_kij stored at [k][i][j]; no 1/3 factor.
Tensor domega(const FrameJets& f, DOmegaMode mode, const ModelConvention& conv = {});
Tensor domega(const Framing& f, std::span<const double> x, DOmegaMode mode, const ModelConvention& conv = {});
Tensor domega_torsion_verbatim(const FrameJets& f, const ModelConvention& conv = {});

Tensor domega_constants(const FrameJets& f, ConstantsMode mode, const ModelConvention& conv = {});
Tensor domega_constants(const Framing& f, std::span<const double> x, ConstantsMode mode,
                        const ModelConvention& conv = {});
Tensor domega_constants_formula(const StructureConstants& c, const Tensor& omega_hat);
Tensor domega_constants_formula_verbatim(const StructureConstants& c, const Tensor& omega_hat);

// Levi-Civita curvature of g. riemann[m][l][i][j] is the d_m component of
// R(d_i, d_j) d_l with R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y];
// ricci_jl = riemann[i][l][i][j]; scalar = g^jl ricci_jl.
struct MetricCurvature {
  Tensor riemann;
  Tensor ricci;
  double scalar = 0.0;
};

MetricCurvature metric_curvature(const FrameJets& f);
MetricCurvature metric_curvature(const Framing& f, std::span<const double> x);

// Scalar curvature of the metric making the frame orthonormal, computed only
// from the structure constants (Koszul formula in the constant frame).
double scalar_curvature_from_constants(const StructureConstants& c);

struct CompatibilityEntry {
  std::string label;
  double j_orthogonality = 0.0;      // max |J^T g J - g|
  double omega_compatibility = 0.0;  // max |w_ij - g_ia J^a_j|
};

// Entries for the given convention and for both uniform pairings.
std::vector<CompatibilityEntry> compatibility_report(const FrameJets& f, const ModelConvention& conv = {});
std::vector<CompatibilityEntry> compatibility_report(const Framing& f, std::span<const double> x,
                                                     const ModelConvention& conv = {});

}  // namespace llg
