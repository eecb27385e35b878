// Acceptance criteria runner. Prints one PASS/FAIL line per criterion.
//
//   llg_acceptance [--criterion N] [--llg PATH]
//
// PATH is the llg executable, needed by criterion 10.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "llg/canonical.hpp"
#include "llg/catalog.hpp"
#include "llg/sampling.hpp"
#include "llg/verify.hpp"

namespace {

constexpr int kPoints = 100;
constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  // Records `what` with its measured value; fails unless value <= bound.
  void bound(const std::string& what, double value, double limit) {
    const bool ok = value <= limit;
    pass = pass && ok;
    if (!ok) notes.push_back(fmt::format("{} = {:.3g} > {:.0e}", what, value, limit));
  }
  void require(const std::string& what, bool ok) {
    pass = pass && ok;
    if (!ok) notes.push_back(what);
  }
};

llg::Framing framing(const std::string& name) { return llg::Framing(llg::get_example(name).spec); }

std::vector<llg::Point> points(const llg::Framing& f, int n = kPoints) {
  return llg::sample_points(f.domain(), n, kSeed);
}

bool even(const llg::Framing& f) { return f.dim() % 2 == 0; }

std::vector<std::string> even_names() {
  std::vector<std::string> out;
  for (const auto& e : llg::catalog()) {
    if (e.spec.dim % 2 == 0) out.push_back(e.spec.name);
  }
  return out;
}

std::vector<std::string> flat_names() {
  std::vector<std::string> out;
  for (const auto& e : llg::catalog()) {
    if (e.expect_flat) out.push_back(e.spec.name);
  }
  return out;
}

const std::vector<llg::ModelConvention> kConventions{llg::ModelConvention{},
                                                     llg::ModelConvention::uniform(llg::Pairing::kSplit)};

double max_over(const llg::Framing& f, const std::function<double(const llg::FrameJets&)>& defect,
                int n = kPoints) {
  double worst = 0.0;
  for (const llg::Point& p : points(f, n)) {
    const double d = defect(f.eval_frames(p));
    worst = std::isnan(d) ? d : std::max(worst, d);
    if (std::isnan(worst)) break;
  }
  return worst;
}

// 1. Identity floor.
Outcome identity_floor() {
  Outcome o;
  for (const std::string& name : llg::catalog_names()) {
    const llg::Framing f = framing(name);
    o.bound(name + " frame inverse", max_over(f, llg::frame_inverse_defect), 1e-10);
    o.bound(name + " connection forms",
            max_over(f, [](const auto& fj) { return llg::max_abs(llg::gamma(fj) - llg::gamma_second_form(fj)); }),
            1e-10);
    o.bound(name + " parallel frames", max_over(f, llg::parallel_frames_defect), 1e-10);
    o.bound(name + " push g", max_over(f, [&](const auto& fj) {
              return llg::max_abs(llg::push_to_origin(fj, llg::canonical_metric(fj)) - llg::model_g(f.dim()));
            }), 1e-10);
    o.bound(name + " pull/push T", max_over(f, [](const auto& fj) {
              const llg::Tensor t = llg::torsion(fj);
              return llg::max_abs(llg::pull_from_origin(fj, llg::push_to_origin(fj, t)) - t);
            }), 1e-10);
    if (!even(f)) continue;
    for (const auto& c : kConventions) {
      o.bound(name + " push J", max_over(f, [&](const auto& fj) {
                return llg::max_abs(llg::push_to_origin(fj, llg::canonical_J(fj, c)) - llg::model_j(f.dim(), c.j));
              }), 1e-10);
      o.bound(name + " push omega", max_over(f, [&](const auto& fj) {
                return llg::max_abs(llg::push_to_origin(fj, llg::canonical_omega(fj, c)) -
                                    llg::model_omega(f.dim(), c.omega));
              }), 1e-10);
    }
  }
  return o;
}

// 2. Nijenhuis tensor, direct vs torsion form, flat or not.
Outcome nijenhuis_two_paths() {
  Outcome o;
  for (const char* name : {"abelian4", "affine2", "heis3xR", "affine_product", "nonflat_demo4"}) {
    const llg::Framing f = framing(name);
    for (const auto& c : kConventions) {
      o.bound(fmt::format("{} ({})", name, llg::pairing_name(c.j)), max_over(f, [&](const auto& fj) {
                return llg::max_abs(llg::nijenhuis_direct(fj, c) - llg::nijenhuis_via_torsion(fj, c));
              }), 1e-9);
    }
  }
  return o;
}

// 3. Exterior derivative of omega, direct vs torsion form.
Outcome domega_two_paths() {
  Outcome o;
  for (const std::string& name : even_names()) {
    const llg::Framing f = framing(name);
    for (const auto& c : kConventions) {
      o.bound(fmt::format("{} ({})", name, llg::pairing_name(c.omega)), max_over(f, [&](const auto& fj) {
                return llg::max_abs(llg::domega(fj, llg::DOmegaMode::kDirect, c) -
                                    llg::domega(fj, llg::DOmegaMode::kTorsion, c));
              }), 1e-9);
      if (f.dim() == 2) {
        o.bound(name + " dw in dim 2",
                max_over(f, [&](const auto& fj) { return llg::max_abs(llg::domega(fj, llg::DOmegaMode::kDirect, c)); }),
                0.0);
      }
    }
  }
  return o;
}

// 4. |N^a_ak + 2 T^a_ak| over every even-dimensional entry.
Outcome trace_identity() {
  Outcome o;
  for (const std::string& name : even_names()) {
    const llg::Framing f = framing(name);
    o.bound(name, max_over(f, [](const auto& fj) { return llg::trace_check(fj); }), 1e-9);
  }
  return o;
}

// 5. Golden constants.
Outcome golden_constants() {
  Outcome o;
  const llg::Framing a = framing("affine2");
  const llg::Framing h = framing("heisenberg3");
  o.bound("affine2 |C^(2)_(1)(2) + 1|",
          max_over(a, [](const auto& fj) { return std::abs(llg::structure_constants(fj).c({1, 0, 1}) + 1.0); }), 1e-10);
  for (auto mode : {llg::ConstantsMode::kDefinition, llg::ConstantsMode::kFormula}) {
    const char* label = mode == llg::ConstantsMode::kDefinition ? "definition" : "formula";
    const double at_first = llg::nijenhuis_constants(a, points(a).front(), mode)({1, 0, 1});
    o.bound(fmt::format("affine2 |NJhat^(2)_(1)(2) - 2| ({} mode, computed {:.3g})", label, at_first),
            max_over(a, [&](const auto& fj) { return std::abs(llg::nijenhuis_constants(fj, mode)({1, 0, 1}) - 2.0); }),
            1e-9);
  }
  o.bound("affine2 |scalar + 2|",
          max_over(a, [](const auto& fj) { return std::abs(llg::metric_curvature(fj).scalar + 2.0); }), 1e-8);
  o.bound("heisenberg3 |C^(3)_(1)(2) + 1|",
          max_over(h, [](const auto& fj) { return std::abs(llg::structure_constants(fj).c({2, 0, 1}) + 1.0); }), 1e-10);
  o.bound("heisenberg3 |scalar + 0.5|",
          max_over(h, [](const auto& fj) { return std::abs(llg::metric_curvature(fj).scalar + 0.5); }), 1e-8);
  for (const std::string name : {"abelian2", "abelian4"}) {
    const llg::Framing f = framing(name);
    o.bound(name + " C", max_over(f, [](const auto& fj) { return llg::max_abs(llg::structure_constants(fj).c); }),
            1e-12);
    o.bound(name + " NJhat", max_over(f, [](const auto& fj) {
              return llg::max_abs(llg::nijenhuis_constants(fj, llg::ConstantsMode::kDefinition));
            }), 1e-12);
    o.bound(name + " dOmegaHat", max_over(f, [](const auto& fj) {
              return llg::max_abs(llg::domega_constants(fj, llg::ConstantsMode::kDefinition));
            }), 1e-12);
    o.bound(name + " scalar",
            max_over(f, [](const auto& fj) { return std::abs(llg::metric_curvature(fj).scalar); }), 1e-12);
  }
  return o;
}

// 6. Constancy of pushed invariants on flat entries, and its failure off them.
Outcome general_principle() {
  Outcome o;
  for (const std::string& name : flat_names()) {
    const llg::Framing f = framing(name);
    for (const auto& c : kConventions) {
      std::vector<llg::Tensor> cs;
      std::vector<llg::Tensor> ns;
      std::vector<llg::Tensor> ds;
      double lo = INFINITY;
      double hi = -INFINITY;
      for (const llg::Point& p : points(f)) {
        const llg::FrameJets fj = f.eval_frames(p);
        cs.push_back(llg::structure_constants(fj).c);
        if (even(f)) {
          ns.push_back(llg::nijenhuis_constants(fj, llg::ConstantsMode::kDefinition, c));
          ds.push_back(llg::domega_constants(fj, llg::ConstantsMode::kDefinition, c));
        }
        const double s = llg::metric_curvature(fj).scalar;
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
      o.bound(name + " C spread", llg::component_spread(cs), 1e-9);
      o.bound(name + " NJhat spread", llg::component_spread(ns), 1e-9);
      o.bound(name + " dOmegaHat spread", llg::component_spread(ds), 1e-9);
      o.bound(name + " scalar spread", hi - lo, 1e-9);
    }
  }
  const llg::Framing n = framing("nonflat_demo");
  const std::vector<llg::Tensor> two{llg::structure_constants(n, std::vector<double>{0.0, 0.0}).c,
                                     llg::structure_constants(n, std::vector<double>{1.0, 0.0}).c};
  const double spread = llg::component_spread(two);
  o.require(fmt::format("nonflat_demo C spread {:.3g} >= 0.4", spread), spread >= 0.4);
  return o;
}

// 7. Constants-only formulas against their definitional counterparts.
Outcome constants_formulas() {
  Outcome o;
  for (const std::string& name : flat_names()) {
    const llg::Framing f = framing(name);
    o.bound(name + " scalar from constants", max_over(f, [](const auto& fj) {
              return std::abs(llg::metric_curvature(fj).scalar -
                              llg::scalar_curvature_from_constants(llg::structure_constants(fj)));
            }), 1e-8);
    if (!even(f)) continue;
    for (const auto& c : kConventions) {
      o.bound(name + " NJhat modes", max_over(f, [&](const auto& fj) {
                return llg::max_abs(llg::nijenhuis_constants(fj, llg::ConstantsMode::kDefinition, c) -
                                    llg::nijenhuis_constants(fj, llg::ConstantsMode::kFormula, c));
              }), 1e-9);
      o.bound(name + " dOmegaHat modes", max_over(f, [&](const auto& fj) {
                return llg::max_abs(llg::domega_constants(fj, llg::ConstantsMode::kDefinition, c) -
                                    llg::domega_constants(fj, llg::ConstantsMode::kFormula, c));
              }), 1e-9);
    }
  }
  return o;
}

// Rectangle in the first two coordinates around the box center.
std::vector<llg::Point> rectangle(const llg::Framing& f, llg::Point& start) {
  const llg::Box& b = f.domain();
  start.assign(f.dim(), 0.0);
  for (int i = 0; i < f.dim(); ++i) start[i] = 0.5 * (b.bounds[i].first + b.bounds[i].second);
  const double dx = 0.1 * (b.bounds[0].second - b.bounds[0].first);
  const double dy = f.dim() > 1 ? 0.1 * (b.bounds[1].second - b.bounds[1].first) : 0.0;
  llg::Point p1 = start;
  p1[0] += dx;
  llg::Point p2 = p1;
  if (f.dim() > 1) p2[1] += dy;
  llg::Point p3 = start;
  if (f.dim() > 1) p3[1] += dy;
  return {p1, p2, p3, start};
}

// 8. Development of the groupoid into a pseudogroup element.
Outcome development() {
  Outcome o;
  const llg::Framing a = framing("affine2");
  const llg::Point y = llg::develop(a, std::vector<double>{1.0, 0.0}, std::vector<double>{3.0, 0.0}, {{2.0, 0.0}});
  o.bound("affine2 (1,0)->(2,0) from (3,0)", std::hypot(y[0] - 6.0, y[1]), 1e-6);

  for (const std::string& name : flat_names()) {
    const llg::Framing f = framing(name);
    llg::Point x0;
    const std::vector<llg::Point> loop = rectangle(f, x0);
    const llg::Point sample = points(f, 1).front();
    llg::Point y0(f.dim());
    for (int i = 0; i < f.dim(); ++i) y0[i] = 0.5 * (x0[i] + sample[i]);
    const llg::Point back = llg::develop(f, x0, y0, loop);
    double d = 0.0;
    for (int i = 0; i < f.dim(); ++i) d = std::max(d, std::abs(back[i] - y0[i]));
    o.bound(name + " loop closure", d, 1e-6);

    // phi: x -> develop(x0, y0, [x]). Its Jacobian must pull g(phi(x)) back to g(x).
    const llg::Point x1 = loop[1];
    auto phi = [&](const llg::Point& x) { return llg::develop(f, x0, y0, {x}); };
    const llg::Point y1 = phi(x1);
    llg::RealMatrix jac(f.dim());
    for (int k = 0; k < f.dim(); ++k) {
      const double h = 1e-4 * (1.0 + std::abs(x1[k]));
      llg::Point xp = x1;
      llg::Point xm = x1;
      xp[k] += h;
      xm[k] -= h;
      const llg::Point yp = phi(xp);
      const llg::Point ym = phi(xm);
      for (int i = 0; i < f.dim(); ++i) jac(i, k) = (yp[i] - ym[i]) / (2.0 * h);
    }
    const llg::RealMatrix gx = llg::canonical_metric(f, x1).to_matrix();
    const llg::RealMatrix gy = llg::canonical_metric(f, y1).to_matrix();
    o.bound(name + " developed map preserves g", llg::max_abs_diff(jac.transpose() * gy * jac, gx), 1e-6);
  }
  return o;
}

// 9. Jet derivatives against central differences.
Outcome ad_integrity() {
  Outcome o;
  for (const std::string& name : llg::catalog_names()) {
    const llg::Framing f = framing(name);
    const llg::FdSweepResult r = llg::fd_cross_check(f, llg::sample_points(f.domain().shrunk(1e-3), 50, kSeed));
    o.bound(name + " gradient", r.gradient, 1e-5);
    o.bound(name + " hessian", r.hessian, 1e-4);
  }
  return o;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  std::array<char, 4096> buf{};
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

// 10. Two identical CLI runs give byte-identical JSON.
Outcome determinism(const std::string& llg_path) {
  Outcome o;
  if (llg_path.empty()) {
    o.require("--llg PATH not given", false);
    return o;
  }
  const std::string cmd = "\"" + llg_path + "\" verify example:affine2 --format json --seed 42 --points 100";
  int s1 = 0;
  int s2 = 0;
  const std::string a = capture(cmd, s1);
  const std::string b = capture(cmd, s2);
  o.require(fmt::format("exit status {} / {}", s1, s2), s1 == 0 && s2 == 0);
  o.require("non-empty output", !a.empty());
  o.require("byte-identical output", a == b);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  std::string llg_path;
  app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  app.add_option("--llg", llg_path, "path to the llg executable");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"identity floor", identity_floor},
      {"Nijenhuis two paths", nijenhuis_two_paths},
      {"exterior derivative two paths", domega_two_paths},
      {"trace identity", trace_identity},
      {"golden constants", golden_constants},
      {"constancy of pushed invariants", general_principle},
      {"constants-only formulas", constants_formulas},
      {"development", development},
      {"jet vs finite differences", ad_integrity},
      {"determinism", [&] { return determinism(llg_path); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only != 0 && only != id) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(std::string("exception: ") + e.what(), false);
    }
    all = all && o.pass;
    std::cout << fmt::format("ACCEPTANCE {:>2} {}: {}\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first);
    constexpr std::size_t kMaxNotes = 6;
    for (std::size_t k = 0; k < o.notes.size() && k < kMaxNotes; ++k) std::cout << "    " << o.notes[k] << "\n";
    if (o.notes.size() > kMaxNotes) std::cout << fmt::format("    ... {} more\n", o.notes.size() - kMaxNotes);
  }
  return all ? 0 : 1;
}
