#pragma once

// The identity suite behind `llg verify` / `llg constants` / `llg eval`, and
// the deterministic text/JSON renderings of its reports.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "llg/canonical.hpp"
#include "llg/frame_geometry.hpp"

namespace llg {

enum class OutputFormat { kText, kJson };

struct RunConfig {
  std::string source;  // "example:<name>" or a framing file path
  int points = 64;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  bool fd_check = false;
  std::optional<Pairing> pairing;  // empty: literal convention per structure
  OutputFormat format = OutputFormat::kText;

  ModelConvention convention() const {
    return pairing ? ModelConvention::uniform(*pairing) : ModelConvention{};
  }
  // Throws InvalidArgument unless points >= 2 and tol > 0.
  void validate() const;
};

struct CheckResult {
  std::string name;
  double max_defect = 0.0;
  double tol = 0.0;
  bool pass = false;
  bool informational = false;  // reported, never gates the verdict
};

struct ConstantsSection {
  Tensor c;
  std::optional<Tensor> nijenhuis_definition;
  std::optional<Tensor> nijenhuis_formula;
  std::optional<Tensor> domega_definition;
  std::optional<Tensor> domega_formula;
  double scalar_curvature = 0.0;
  double scalar_from_constants = 0.0;
  double c_spread = 0.0;
  double nijenhuis_spread = 0.0;
  double domega_spread = 0.0;
  double scalar_spread = 0.0;
};

struct VerificationReport {
  std::string framing;
  RunConfig config;
  std::vector<CheckResult> checks;
  FlatnessCertificate flatness;  // points omitted
  std::optional<ConstantsSection> constants;

  // Every non-informational check passed.
  bool passed() const;
};

// "example:<name>" resolves through the catalog, anything else is a file.
Framing load_source(const std::string& source);

// Full identity suite; `report.passed()` decides the exit code.
VerificationReport run_verify(const Framing& f, const RunConfig& config);

// Flatness certificate plus constants (null when the framing is not flat).
VerificationReport run_constants(const Framing& f, const RunConfig& config);

std::string render_json(const VerificationReport& r);
std::string render_text(const VerificationReport& r);

// Tensors accepted by `llg eval`.
const std::vector<std::string>& eval_tensor_names();
// Throws UnknownTensor, OddDimension, DomainBoundary, InvalidArgument.
Tensor eval_tensor(const Framing& f, const std::string& name, std::span<const double> at,
                   std::optional<Point> to, const ModelConvention& conv);

std::string render_tensor_json(const std::string& name, std::span<const double> at, const Tensor& t);
std::string render_tensor_text(const std::string& name, std::span<const double> at, const Tensor& t);

// Worst relative disagreement |jet - FD| / (1 + |jet|) between jet
// derivatives and central finite differences over every entry expression.
struct FdSweepResult {
  double gradient = 0.0;
  double hessian = 0.0;
};
FdSweepResult fd_cross_check(const Framing& f, const std::vector<Point>& points);

// "{:.17g}" for finite values, "null" otherwise.
std::string format_number(double v);

}  // namespace llg
