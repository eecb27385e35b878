#pragma once

// Differential invariants of a framing w on a chart:
//
//   eps(x,y)^i_j   = W(y)^i_a Z(x)^a_j                 groupoid 1-arrows
//   Gamma^i_jk     = Z^a_j dW^i_a/dx^k                  = -dZ^a_j/dx^k W^i_a
//   T^i_jk         = Gamma^i_jk - Gamma^i_kj
//   R^i_jk,r       = (nabla~_r T)^i_jk                  linear curvature
//   C^(i)_(j)(k)   = Z^i_a T^a_bc W^b_j W^c_k           structure constants
//
// Chart indices are plain, frame (model-space) indices are the ones produced
// by push_to_origin / structure_constants / frame_bracket.

#include <functional>
#include <span>
#include <vector>

#include "llg/framing.hpp"
#include "llg/tensor.hpp"

namespace llg {

// A tensor field at a point with its first partials. `derivative` has one
// extra trailing lower slot r holding d/dx^r.
struct TensorJet {
  Tensor value;
  Tensor derivative;
};

struct StructureConstants {
  Tensor c;  // (1,2), model-space indices
  int dim() const noexcept { return c.dim(); }
};

struct FlatnessCertificate {
  std::vector<Point> points;
  double max_curvature = 0.0;
  double max_c_spread = 0.0;
  double tol = 0.0;
  bool flat = false;
};

using TensorField = std::function<Tensor(const Framing&, std::span<const double>)>;

// W and Z as (1,1) tensors, W^i_(j) and Z^(i)_j.
Tensor frame_w(const FrameJets& f);
Tensor frame_z(const FrameJets& f);

// Max deviation of W Z and Z W from the identity over the whole jet
// (value, gradient and Hessian parts).
double frame_inverse_defect(const FrameJets& f);

Tensor epsilon(const Framing& f, std::span<const double> x, std::span<const double> y);

Tensor gamma(const FrameJets& f);
Tensor gamma(const Framing& f, std::span<const double> x);
// The -dZ W form of the connection, computed independently.
Tensor gamma_second_form(const FrameJets& f);
TensorJet gamma_jet(const FrameJets& f);

Tensor torsion(const FrameJets& f);
Tensor torsion(const Framing& f, std::span<const double> x);
TensorJet torsion_jet(const FrameJets& f);

// Rank-2 jet matrix (value + gradient) as a tensor jet of the given variance.
TensorJet matrix_jet(const JetMatrix& m, int upper, int lower);

// nabla~_r S for S of any shape with rank <= 3. Upper slots pick up
// -Gamma^i_{a r} S^a, lower slots +Gamma^a_{j r} S_a; this is the unique
// sign choice with nabla~W = nabla~Z = 0.
Tensor covariant_derivative(const TensorJet& s, const Tensor& gamma);

// Max |nabla~ w_(j)| and |nabla~ z^(i)| over all frame fields.
double parallel_frames_defect(const FrameJets& f);

Tensor linear_curvature(const FrameJets& f);
Tensor linear_curvature(const Framing& f, std::span<const double> x);

StructureConstants structure_constants(const FrameJets& f);
StructureConstants structure_constants(const Framing& f, std::span<const double> x);

// a^(i)_(j)(k) = Z^i_m [w_(j), w_(k)]^m with [u,v]^m = u^a d_a v^m - v^a d_a u^m.
// Satisfies a = -C.
Tensor frame_bracket(const FrameJets& f);
Tensor frame_bracket(const Framing& f, std::span<const double> x);

double jacobi_defect(const StructureConstants& c);

// Moves every upper slot with eps_xy and every lower slot with eps_yx.
Tensor transport(const Tensor& s, const Tensor& eps_xy, const Tensor& eps_yx);

// max |transported S(x) - S(y)|.
double invariance_defect(const Framing& f, const TensorField& field, std::span<const double> x,
                         std::span<const double> y);

// Upper slots contracted with Z, lower slots with W: chart -> model space.
Tensor push_to_origin(const FrameJets& f, const Tensor& s);
Tensor push_to_origin(const Framing& f, const Tensor& s, std::span<const double> x);
// The inverse map: model space -> chart at x.
Tensor pull_from_origin(const FrameJets& f, const Tensor& s);

// Max over components of (max - min) across the given tensors.
double component_spread(std::span<const Tensor> tensors);

FlatnessCertificate certify_flat(const Framing& f, const std::vector<Point>& points, double tol);

struct DevelopOptions {
  int steps_per_unit = 512;
  bool require_flat = true;
  double flat_tol = 1e-8;
};

// Integrates dy/dt = eps(x(t), y) dx/dt with classical RK4 along the polyline
// x0 -> path[0] -> path[1] -> ..., starting from y0. Throws NotFlat (when
// required) and DomainEscape if y leaves the box.
Point develop(const Framing& f, std::span<const double> x0, std::span<const double> y0,
              const std::vector<Point>& path, const DevelopOptions& opts = {});

}  // namespace llg
