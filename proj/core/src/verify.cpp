#include "llg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <fmt/format.h>

#include "llg/catalog.hpp"
#include "llg/finite_difference.hpp"
#include "llg/sampling.hpp"

namespace llg {
namespace {

// Tolerance multipliers relative to RunConfig::tol.
constexpr double kScalarTolFactor = 10.0;
constexpr double kDevelopTolFactor = 1000.0;
constexpr double kFdGradientTol = 1e-5;
constexpr double kFdHessianTol = 1e-4;

void worst(double& acc, double v) {
  if (std::isnan(v) || std::isnan(acc)) {
    acc = std::numeric_limits<double>::quiet_NaN();
  } else {
    acc = std::max(acc, v);
  }
}

class JsonWriter {
 public:
  JsonWriter& begin_object() {
    sep();
    out_ += '{';
    first_ = true;
    return *this;
  }
  JsonWriter& end_object() {
    out_ += '}';
    first_ = false;
    return *this;
  }
  JsonWriter& begin_array() {
    sep();
    out_ += '[';
    first_ = true;
    return *this;
  }
  JsonWriter& end_array() {
    out_ += ']';
    first_ = false;
    return *this;
  }
  JsonWriter& key(std::string_view k) {
    sep();
    string_literal(k);
    out_ += ':';
    first_ = true;
    return *this;
  }
  JsonWriter& value(double v) {
    sep();
    out_ += format_number(v);
    return *this;
  }
  JsonWriter& value(std::uint64_t v) {
    sep();
    out_ += std::to_string(v);
    return *this;
  }
  JsonWriter& value(int v) {
    sep();
    out_ += std::to_string(v);
    return *this;
  }
  JsonWriter& value(bool v) {
    sep();
    out_ += v ? "true" : "false";
    return *this;
  }
  JsonWriter& value(std::string_view v) {
    sep();
    string_literal(v);
    return *this;
  }
  JsonWriter& null() {
    sep();
    out_ += "null";
    return *this;
  }
  JsonWriter& tensor(const Tensor& t) {
    nested(t, 0, 0);
    return *this;
  }
  JsonWriter& point(std::span<const double> x) {
    begin_array();
    for (double v : x) value(v);
    return end_array();
  }

  std::string str() const { return out_; }

 private:
  void sep() {
    if (!first_) out_ += ',';
    first_ = false;
  }

  void string_literal(std::string_view s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            out_ += fmt::format("\\u{:04x}", static_cast<int>(c));
          } else {
            out_ += c;
          }
      }
    }
    out_ += '"';
  }

  void nested(const Tensor& t, int slot, std::size_t offset) {
    if (slot == t.rank()) {
      value(t.at_flat(offset));
      return;
    }
    begin_array();
    for (int i = 0; i < t.dim(); ++i) nested(t, slot + 1, offset * t.dim() + i);
    end_array();
  }

  std::string out_;
  bool first_ = true;
};

std::string nested_text(const Tensor& t, int slot = 0, std::size_t offset = 0) {
  if (slot == t.rank()) return format_number(t.at_flat(offset));
  std::string s = "[";
  for (int i = 0; i < t.dim(); ++i) {
    if (i) s += ", ";
    s += nested_text(t, slot + 1, offset * t.dim() + i);
  }
  return s + "]";
}

// Nonzero entries as "C^(i)_(j)(k) = v" lines with 1-based indices.
std::string nonzero_entries(const std::string& label, const Tensor& t, double floor) {
  std::string s;
  for (std::size_t f = 0; f < t.data().size(); ++f) {
    const double v = t.at_flat(f);
    if (!(std::abs(v) > floor)) continue;
    const auto idx = t.unflatten(f);
    std::string up;
    std::string down;
    for (int slot = 0; slot < t.rank(); ++slot) {
      (t.is_upper_slot(slot) ? up : down) += fmt::format("({})", idx[slot] + 1);
    }
    s += fmt::format("  {}{}{} = {}\n", label, up.empty() ? "" : "^" + up, down.empty() ? "" : "_" + down,
                     format_number(v));
  }
  if (s.empty()) s = fmt::format("  {} = 0\n", label);
  return s;
}

class CheckList {
 public:
  explicit CheckList(std::vector<CheckResult>& out) : out_(out) {}

  void add(std::string name, double defect, double tol, bool informational = false) {
    out_.push_back(CheckResult{std::move(name), defect, tol, defect <= tol, informational});
  }

 private:
  std::vector<CheckResult>& out_;
};

// Per-point quantities the suite needs, each computed once.
struct PointData {
  FrameJets frames;
  Tensor c;
  double scalar = 0.0;
  std::optional<Tensor> nj_definition;
  std::optional<Tensor> nj_formula;
  std::optional<Tensor> dw_definition;
  std::optional<Tensor> dw_formula;
};

FlatnessCertificate strip_points(FlatnessCertificate c) {
  c.points.clear();
  return c;
}

ConstantsSection constants_from(const std::vector<PointData>& data) {
  ConstantsSection s;
  const PointData& p0 = data.front();
  s.c = p0.c;
  s.nijenhuis_definition = p0.nj_definition;
  s.nijenhuis_formula = p0.nj_formula;
  s.domega_definition = p0.dw_definition;
  s.domega_formula = p0.dw_formula;
  s.scalar_curvature = p0.scalar;
  s.scalar_from_constants = scalar_curvature_from_constants(StructureConstants{p0.c});

  std::vector<Tensor> cs;
  std::vector<Tensor> njs;
  std::vector<Tensor> dws;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const PointData& p : data) {
    cs.push_back(p.c);
    if (p.nj_definition) njs.push_back(*p.nj_definition);
    if (p.dw_definition) dws.push_back(*p.dw_definition);
    lo = std::min(lo, p.scalar);
    hi = std::max(hi, p.scalar);
  }
  s.c_spread = component_spread(cs);
  s.nijenhuis_spread = component_spread(njs);
  s.domega_spread = component_spread(dws);
  s.scalar_spread = hi - lo;
  return s;
}

std::vector<PointData> collect(const Framing& f, const std::vector<Point>& points, const ModelConvention& conv) {
  const bool even = f.dim() % 2 == 0;
  std::vector<PointData> out;
  out.reserve(points.size());
  for (const Point& p : points) {
    PointData d{f.eval_frames(p), {}, 0.0, {}, {}, {}, {}};
    d.c = structure_constants(d.frames).c;
    d.scalar = metric_curvature(d.frames).scalar;
    if (even) {
      d.nj_definition = nijenhuis_constants(d.frames, ConstantsMode::kDefinition, conv);
      d.nj_formula = nijenhuis_constants(d.frames, ConstantsMode::kFormula, conv);
      d.dw_definition = domega_constants(d.frames, ConstantsMode::kDefinition, conv);
      d.dw_formula = domega_constants(d.frames, ConstantsMode::kFormula, conv);
    }
    out.push_back(std::move(d));
  }
  return out;
}

double antisymmetry_defect(const Tensor& d) {
  return std::max({max_abs(d + transpose_slots(d, 0, 1)), max_abs(d + transpose_slots(d, 1, 2)),
                   max_abs(d + transpose_slots(d, 0, 2))});
}

// Closed rectangle in the first two coordinates around the box center.
double loop_closure_defect(const Framing& f, const std::vector<Point>& points) {
  const Box& box = f.domain();
  const int n = f.dim();
  Point x0(n);
  Point y0(n);
  for (int i = 0; i < n; ++i) {
    x0[i] = 0.5 * (box.bounds[i].first + box.bounds[i].second);
    y0[i] = 0.5 * (x0[i] + points.front()[i]);
  }
  std::vector<Point> loop;
  auto corner = [&](double s0, double s1) {
    Point p = x0;
    p[0] += s0 * 0.1 * (box.bounds[0].second - box.bounds[0].first);
    if (n > 1) p[1] += s1 * 0.1 * (box.bounds[1].second - box.bounds[1].first);
    return p;
  };
  loop.push_back(corner(1, 0));
  loop.push_back(corner(1, 1));
  loop.push_back(corner(0, 1));
  loop.push_back(x0);
  const Point y = develop(f, x0, y0, loop);
  double d = 0.0;
  for (int i = 0; i < n; ++i) worst(d, std::abs(y[i] - y0[i]));
  return d;
}

}  // namespace

void RunConfig::validate() const {
  if (points < 2) throw InvalidArgument("--points must be >= 2");
  if (!(tol > 0.0)) throw InvalidArgument("--tol must be > 0");
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.informational || c.pass; });
}

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  return fmt::format("{:.17g}", v);
}

Framing load_source(const std::string& source) {
  constexpr std::string_view kPrefix = "example:";
  if (source.rfind(kPrefix, 0) == 0) return Framing(get_example(source.substr(kPrefix.size())).spec);
  return Framing(load_framing_file(source));
}

FdSweepResult fd_cross_check(const Framing& f, const std::vector<Point>& points) {
  const int n = f.dim();
  FdSweepResult r;
  for (const Point& x : points) {
    std::vector<Jet2> seeds;
    for (int k = 0; k < n; ++k) seeds.push_back(Jet2::variable(x[k], k, n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Expr& e = f.entry(i, j);
        const Jet2 jet = evaluate<Jet2>(e, seeds);
        const ScalarField field = [&e](std::span<const double> p) { return evaluate<double>(e, p); };
        for (int k = 0; k < n; ++k) {
          const double hk = default_fd_step(x[k]);
          const double fd = central_difference(field, x, k, hk, &f.domain());
          worst(r.gradient, std::abs(jet.grad(k) - fd) / (1.0 + std::abs(jet.grad(k))));
          for (int l = 0; l <= k; ++l) {
            const double fd2 = central_second_difference(field, x, k, l, hk, default_fd_step(x[l]), &f.domain());
            worst(r.hessian, std::abs(jet.hess(k, l) - fd2) / (1.0 + std::abs(jet.hess(k, l))));
          }
        }
      }
    }
  }
  return r;
}

VerificationReport run_verify(const Framing& f, const RunConfig& config) {
  config.validate();
  VerificationReport report;
  report.framing = f.name();
  report.config = config;
  CheckList checks(report.checks);
  const double tol = config.tol;
  const ModelConvention conv = config.convention();
  const bool even = f.dim() % 2 == 0;

  const std::vector<Point> points = sample_points(f.domain(), config.points, config.seed);
  const std::vector<PointData> data = collect(f, points, conv);

  double inverse_defect = 0.0;
  double gamma_defect = 0.0;
  double frames_parallel = 0.0;
  double bracket_defect = 0.0;
  double structures_parallel = 0.0;
  double push_defect = 0.0;
  double j_square = 0.0;
  double nj_paths = 0.0;
  double nj_verbatim = 0.0;
  double nj_trace = 0.0;
  double trace_stated = 0.0;
  double dw_paths = 0.0;
  double dw_verbatim = 0.0;
  double dw_antisym = 0.0;
  for (const PointData& d : data) {
    const FrameJets& fj = d.frames;
    const Tensor g = gamma(fj);
    worst(inverse_defect, frame_inverse_defect(fj));
    worst(gamma_defect, max_abs(g - gamma_second_form(fj)));
    worst(frames_parallel, parallel_frames_defect(fj));
    worst(bracket_defect, max_abs(frame_bracket(fj) + d.c));

    worst(structures_parallel, max_abs(covariant_derivative(canonical_metric_jet(fj), g)));
    worst(push_defect, max_abs(push_to_origin(fj, canonical_metric(fj)) - model_g(f.dim())));
    if (!even) continue;

    worst(structures_parallel, max_abs(covariant_derivative(canonical_J_jet(fj, conv), g)));
    worst(structures_parallel, max_abs(covariant_derivative(canonical_omega_jet(fj, conv), g)));
    const Tensor j = canonical_J(fj, conv);
    worst(push_defect, max_abs(push_to_origin(fj, j) - model_j(f.dim(), conv.j)));
    worst(push_defect, max_abs(push_to_origin(fj, canonical_omega(fj, conv)) - model_omega(f.dim(), conv.omega)));
    const RealMatrix jm = j.to_matrix();
    RealMatrix minus_id = RealMatrix::identity(f.dim());
    for (int i = 0; i < f.dim(); ++i) minus_id(i, i) = -1.0;
    worst(j_square, max_abs_diff(jm * jm, minus_id));

    const Tensor nd = nijenhuis_direct(fj, conv);
    worst(nj_paths, max_abs(nd - nijenhuis_via_torsion(fj, conv)));
    worst(nj_verbatim, max_abs(nd - nijenhuis_via_torsion_verbatim(fj, conv)));
    worst(nj_trace, nijenhuis_trace(fj, conv));
    worst(trace_stated, trace_check(fj, conv));

    const Tensor dd = domega(fj, DOmegaMode::kDirect, conv);
    worst(dw_paths, max_abs(dd - domega(fj, DOmegaMode::kTorsion, conv)));
    worst(dw_verbatim, max_abs(dd - domega_torsion_verbatim(fj, conv)));
    worst(dw_antisym, antisymmetry_defect(dd));
  }

  checks.add("frame_inverse", inverse_defect, tol);
  checks.add("connection_two_forms", gamma_defect, tol);
  checks.add("frames_parallel", frames_parallel, tol);

  report.flatness = strip_points(certify_flat(f, points, tol));
  const bool flat = report.flatness.flat;
  checks.add("flatness", std::max(report.flatness.max_curvature, report.flatness.max_c_spread), tol);

  // Invariance under consecutive sample pairs.
  double inv_t = 0.0;
  double inv_j = 0.0;
  double inv_w = 0.0;
  double inv_g = 0.0;
  const TensorField metric_field = [](const Framing& fr, std::span<const double> x) { return canonical_metric(fr, x); };
  const TensorField j_field = [conv](const Framing& fr, std::span<const double> x) { return canonical_J(fr, x, conv); };
  const TensorField w_field = [conv](const Framing& fr, std::span<const double> x) {
    return canonical_omega(fr, x, conv);
  };
  const TensorField t_field = [](const Framing& fr, std::span<const double> x) { return torsion(fr, x); };
  for (std::size_t p = 0; p + 1 < points.size(); ++p) {
    const Point& x = points[p];
    const Point& y = points[p + 1];
    worst(inv_g, invariance_defect(f, metric_field, x, y));
    if (flat) worst(inv_t, invariance_defect(f, t_field, x, y));
    if (even) {
      worst(inv_j, invariance_defect(f, j_field, x, y));
      worst(inv_w, invariance_defect(f, w_field, x, y));
    }
  }
  if (flat) {
    double jac = 0.0;
    for (const PointData& d : data) worst(jac, jacobi_defect(StructureConstants{d.c}));
    checks.add("jacobi", jac, tol);
  }
  checks.add("bracket_equals_minus_C", bracket_defect, tol);
  if (flat) checks.add("invariance_torsion", inv_t, tol);
  if (even) {
    checks.add("invariance_J", inv_j, tol);
    checks.add("invariance_omega", inv_w, tol);
  }
  checks.add("invariance_metric", inv_g, tol);
  checks.add("structures_parallel", structures_parallel, tol);
  checks.add("push_model_tensors", push_defect, tol);

  if (even) {
    checks.add("almost_complex", j_square, tol);
    checks.add("nijenhuis_two_paths", nj_paths, tol);
    checks.add("nijenhuis_verbatim_minus_T_form", nj_verbatim, tol, true);
    checks.add("nijenhuis_trace_free", nj_trace, tol);
    checks.add("trace_identity_stated", trace_stated, tol, true);
    checks.add("domega_antisymmetric", dw_antisym, tol);
    checks.add("domega_two_paths", dw_paths, tol);
    checks.add("domega_verbatim_sign_form", dw_verbatim, tol, true);
  }

  if (flat) {
    ConstantsSection cs = constants_from(data);
    if (even) {
      double nj_modes = 0.0;
      double dw_modes = 0.0;
      for (const PointData& d : data) {
        worst(nj_modes, max_abs(*d.nj_definition - *d.nj_formula));
        worst(dw_modes, max_abs(*d.dw_definition - *d.dw_formula));
      }
      checks.add("nijenhuis_constants_modes", nj_modes, tol);
      checks.add("domega_constants_modes", dw_modes, tol);
      checks.add("nijenhuis_constants_spread", cs.nijenhuis_spread, tol);
      checks.add("domega_constants_spread", cs.domega_spread, tol);
    }
    checks.add("scalar_curvature_constant", cs.scalar_spread, kScalarTolFactor * tol);
    double prop = 0.0;
    for (const PointData& d : data) {
      worst(prop, std::abs(d.scalar - scalar_curvature_from_constants(StructureConstants{d.c})));
    }
    checks.add("scalar_curvature_from_constants", prop, kScalarTolFactor * tol);
    checks.add("develop_loop_closure", loop_closure_defect(f, points), kDevelopTolFactor * tol);
    report.constants = std::move(cs);
  }

  if (config.fd_check) {
    const FdSweepResult fd = fd_cross_check(f, sample_points(f.domain().shrunk(1e-3), config.points, config.seed));
    checks.add("fd_gradient", fd.gradient, kFdGradientTol);
    checks.add("fd_hessian", fd.hessian, kFdHessianTol);
  }
  return report;
}

VerificationReport run_constants(const Framing& f, const RunConfig& config) {
  config.validate();
  VerificationReport report;
  report.framing = f.name();
  report.config = config;
  CheckList checks(report.checks);
  const std::vector<Point> points = sample_points(f.domain(), config.points, config.seed);
  report.flatness = strip_points(certify_flat(f, points, config.tol));
  checks.add("flatness", std::max(report.flatness.max_curvature, report.flatness.max_c_spread), config.tol);
  if (!report.flatness.flat) return report;

  const std::vector<PointData> data = collect(f, points, config.convention());
  ConstantsSection cs = constants_from(data);
  if (cs.nijenhuis_definition) {
    checks.add("nijenhuis_constants_modes", max_abs(*cs.nijenhuis_definition - *cs.nijenhuis_formula), config.tol);
    checks.add("domega_constants_modes", max_abs(*cs.domega_definition - *cs.domega_formula), config.tol);
    checks.add("nijenhuis_constants_spread", cs.nijenhuis_spread, config.tol);
    checks.add("domega_constants_spread", cs.domega_spread, config.tol);
  }
  checks.add("scalar_curvature_constant", cs.scalar_spread, kScalarTolFactor * config.tol);
  checks.add("scalar_curvature_from_constants", std::abs(cs.scalar_curvature - cs.scalar_from_constants),
             kScalarTolFactor * config.tol);
  report.constants = std::move(cs);
  return report;
}

std::string render_json(const VerificationReport& r) {
  JsonWriter w;
  w.begin_object();
  w.key("framing").value(r.framing);
  w.key("seed").value(r.config.seed);
  w.key("points").value(r.config.points);
  w.key("tol").value(r.config.tol);
  w.key("pairing").value(r.config.pairing ? pairing_name(*r.config.pairing) : std::string_view("literal"));
  w.key("checks").begin_array();
  for (const CheckResult& c : r.checks) {
    w.begin_object();
    w.key("name").value(c.name);
    w.key("max_defect").value(c.max_defect);
    w.key("tol").value(c.tol);
    w.key("pass").value(c.pass);
    w.key("informational").value(c.informational);
    w.end_object();
  }
  w.end_array();
  w.key("flatness").begin_object();
  w.key("max_curvature").value(r.flatness.max_curvature);
  w.key("max_c_spread").value(r.flatness.max_c_spread);
  w.key("tol").value(r.flatness.tol);
  w.end_object();
  w.key("constants");
  if (r.constants) {
    const ConstantsSection& c = *r.constants;
    w.begin_object();
    w.key("C").tensor(c.c);
    w.key("C_spread").value(c.c_spread);
    if (c.nijenhuis_definition) {
      w.key("NJhat").begin_object();
      w.key("definition").tensor(*c.nijenhuis_definition);
      w.key("formula").tensor(*c.nijenhuis_formula);
      w.key("modes_defect").value(max_abs(*c.nijenhuis_definition - *c.nijenhuis_formula));
      w.key("spread").value(c.nijenhuis_spread);
      w.end_object();
      w.key("dOmegaHat").begin_object();
      w.key("definition").tensor(*c.domega_definition);
      w.key("formula").tensor(*c.domega_formula);
      w.key("modes_defect").value(max_abs(*c.domega_definition - *c.domega_formula));
      w.key("spread").value(c.domega_spread);
      w.end_object();
    } else {
      w.key("NJhat").null();
      w.key("dOmegaHat").null();
    }
    w.key("scalar_curvature").begin_object();
    w.key("numeric").value(c.scalar_curvature);
    w.key("from_constants").value(c.scalar_from_constants);
    w.key("spread").value(c.scalar_spread);
    w.end_object();
    w.end_object();
  } else {
    w.null();
  }
  w.key("flat").value(r.flatness.flat);
  w.key("pass").value(r.passed());
  w.end_object();
  return w.str() + "\n";
}

std::string render_text(const VerificationReport& r) {
  std::string s;
  s += fmt::format("framing: {}\n", r.framing);
  s += fmt::format("seed: {}  points: {}  tol: {}  pairing: {}\n", r.config.seed, r.config.points,
                   format_number(r.config.tol),
                   r.config.pairing ? pairing_name(*r.config.pairing) : std::string_view("literal"));
  for (const CheckResult& c : r.checks) {
    const char* tag = c.informational ? "INFO" : (c.pass ? "PASS" : "FAIL");
    s += fmt::format("{} {:<34} max_defect={} tol={}\n", tag, c.name, format_number(c.max_defect),
                     format_number(c.tol));
  }
  s += fmt::format("flat: {}  (max |R| = {}, C spread = {})\n", r.flatness.flat ? "yes" : "no",
                   format_number(r.flatness.max_curvature), format_number(r.flatness.max_c_spread));
  if (r.constants) {
    const ConstantsSection& c = *r.constants;
    const double floor = 1e-12;
    s += "constants:\n";
    s += nonzero_entries("C", c.c, floor);
    if (c.nijenhuis_definition) {
      s += nonzero_entries("NJhat", *c.nijenhuis_definition, floor);
      s += nonzero_entries("dOmegaHat", *c.domega_definition, floor);
    }
    s += fmt::format("  scalar_curvature = {} (from constants {})\n", format_number(c.scalar_curvature),
                     format_number(c.scalar_from_constants));
  } else if (!r.flatness.flat) {
    s += "constants: not flat\n";
  }
  s += fmt::format("overall: {}\n", r.passed() ? "PASS" : "FAIL");
  return s;
}

const std::vector<std::string>& eval_tensor_names() {
  static const std::vector<std::string> names{"gamma", "torsion", "curvature", "J",      "omega",
                                              "metric", "nijenhuis", "domega", "epsilon"};
  return names;
}

Tensor eval_tensor(const Framing& f, const std::string& name, std::span<const double> at, std::optional<Point> to,
                   const ModelConvention& conv) {
  if (static_cast<int>(at.size()) != f.dim()) {
    throw InvalidArgument(fmt::format("--at needs {} coordinates", f.dim()));
  }
  if (name == "epsilon") {
    if (!to) throw InvalidArgument("--to is required for epsilon");
    if (static_cast<int>(to->size()) != f.dim()) throw InvalidArgument(fmt::format("--to needs {} coordinates", f.dim()));
    return epsilon(f, at, *to);
  }
  static const std::map<std::string, Tensor (*)(const FrameJets&, const ModelConvention&)> kTable{
      {"gamma", [](const FrameJets& fj, const ModelConvention&) { return gamma(fj); }},
      {"torsion", [](const FrameJets& fj, const ModelConvention&) { return torsion(fj); }},
      {"curvature", [](const FrameJets& fj, const ModelConvention&) { return linear_curvature(fj); }},
      {"J", [](const FrameJets& fj, const ModelConvention& c) { return canonical_J(fj, c); }},
      {"omega", [](const FrameJets& fj, const ModelConvention& c) { return canonical_omega(fj, c); }},
      {"metric", [](const FrameJets& fj, const ModelConvention&) { return canonical_metric(fj); }},
      {"nijenhuis", [](const FrameJets& fj, const ModelConvention& c) { return nijenhuis_direct(fj, c); }},
      {"domega", [](const FrameJets& fj, const ModelConvention& c) { return domega(fj, DOmegaMode::kDirect, c); }},
  };
  const auto it = kTable.find(name);
  if (it == kTable.end()) throw UnknownTensor("unknown tensor '" + name + "'");
  return it->second(f.eval_frames(at), conv);
}

std::string render_tensor_json(const std::string& name, std::span<const double> at, const Tensor& t) {
  JsonWriter w;
  w.begin_object();
  w.key("tensor").value(name);
  w.key("at").point(at);
  w.key("shape").begin_array().value(t.upper()).value(t.lower()).end_array();
  w.key("value").tensor(t);
  w.end_object();
  return w.str() + "\n";
}

std::string render_tensor_text(const std::string& name, std::span<const double> at, const Tensor& t) {
  std::string s = fmt::format("{} at {} shape ({},{})\n", name, point_to_string(at), t.upper(), t.lower());
  return s + nested_text(t) + "\n";
}

}  // namespace llg
