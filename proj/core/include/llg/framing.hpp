#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "llg/box.hpp"
#include "llg/expr.hpp"
#include "llg/matrix.hpp"

namespace llg {

// Uncompiled framing description: w[i][j] is the expression text for the
// i-th chart component of the j-th frame field w_(j).
struct FramingSpec {
  std::string name;
  int dim = 0;
  Box domain;
  std::vector<std::vector<std::string>> w;
};

// W(x) and Z(x) = W(x)^-1 over jets seeded in every chart coordinate.
struct FrameJets {
  JetMatrix w;
  JetMatrix z;
  int dim() const noexcept { return w.size(); }
};

// A compiled framing on a coordinate box. Immutable after construction.
class Framing {
 public:
  explicit Framing(FramingSpec spec);

  const std::string& name() const noexcept { return spec_.name; }
  int dim() const noexcept { return spec_.dim; }
  const Box& domain() const noexcept { return spec_.domain; }
  const FramingSpec& spec() const noexcept { return spec_; }
  const Expr& entry(int i, int j) const { return exprs_[static_cast<std::size_t>(i) * spec_.dim + j]; }

  // Throws DomainBoundary outside the box and SingularFraming when W(x) is
  // not invertible.
  FrameJets eval_frames(std::span<const double> x) const;

  // Value-only W(x) and Z(x); no domain check.
  RealMatrix w_at(std::span<const double> x) const;
  RealMatrix z_at(std::span<const double> x) const;

 private:
  FramingSpec spec_;
  std::vector<Expr> exprs_;
};

std::string point_to_string(std::span<const double> x);

// Framing file (JSON):
//   {"dim": 2, "domain": {"x1": [0.1, 10], "x2": [-10, 10]}, "w": [["x1","0"],["0","x1"]]}
// Unknown keys are rejected with InvalidArgument.
FramingSpec framing_from_json(const std::string& text, const std::string& name);
std::string framing_to_json(const FramingSpec& spec);
FramingSpec load_framing_file(const std::filesystem::path& path);

}  // namespace llg
