#include "llg/catalog.hpp"

#include <algorithm>

namespace llg {
namespace {

Box cube(int n, double lo, double hi) {
  Box b;
  b.bounds.assign(n, {lo, hi});
  return b;
}

std::vector<std::vector<std::string>> identity_w(int n) {
  std::vector<std::vector<std::string>> w(n, std::vector<std::string>(n, "0"));
  for (int i = 0; i < n; ++i) w[i][i] = "1";
  return w;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;

  for (int n : {2, 4}) {
    CatalogEntry e;
    e.spec = FramingSpec{"abelian" + std::to_string(n), n, cube(n, -10.0, 10.0), identity_w(n)};
    e.expected_scalar_curvature = 0.0;
    out.push_back(e);
  }

  {
    // w_(1) = x1 d1, w_(2) = x1 d2: the ax+b group, hyperbolic plane.
    CatalogEntry e;
    e.spec = FramingSpec{"affine2", 2, Box{{{0.1, 10.0}, {-10.0, 10.0}}}, {{"x1", "0"}, {"0", "x1"}}};
    e.expected_c = {{1, 1, 0, 1.0}, {1, 0, 1, -1.0}};
    e.expected_scalar_curvature = -2.0;
    out.push_back(e);
  }

  {
    // w_(1) = d1, w_(2) = d2 + x1 d3, w_(3) = d3.
    CatalogEntry e;
    e.spec = FramingSpec{"heisenberg3", 3, cube(3, -5.0, 5.0), {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "x1", "1"}}};
    e.expected_c = {{2, 0, 1, -1.0}, {2, 1, 0, 1.0}};
    e.expected_scalar_curvature = -0.5;
    out.push_back(e);
  }

  {
    CatalogEntry e;
    e.spec = FramingSpec{"heis3xR",
                         4,
                         cube(4, -5.0, 5.0),
                         {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "x1", "1", "0"}, {"0", "0", "0", "1"}}};
    e.expected_c = {{2, 0, 1, -1.0}, {2, 1, 0, 1.0}};
    e.expected_scalar_curvature = -0.5;
    out.push_back(e);
  }

  {
    CatalogEntry e;
    e.spec = FramingSpec{"affine_product",
                         4,
                         Box{{{0.1, 10.0}, {-10.0, 10.0}, {0.1, 10.0}, {-10.0, 10.0}}},
                         {{"x1", "0", "0", "0"}, {"0", "x1", "0", "0"}, {"0", "0", "x3", "0"}, {"0", "0", "0", "x3"}}};
    e.expected_c = {{1, 1, 0, 1.0}, {1, 0, 1, -1.0}, {3, 3, 2, 1.0}, {3, 2, 3, -1.0}};
    e.expected_scalar_curvature = -4.0;
    out.push_back(e);
  }

  {
    // Frame torsion component 2 x1 / (1 + x1^2) varies with x1.
    CatalogEntry e;
    e.spec = FramingSpec{"nonflat_demo", 2, cube(2, -2.0, 2.0), {{"1", "0"}, {"0", "1 + x1^2"}}};
    e.expect_flat = false;
    out.push_back(e);
  }

  {
    CatalogEntry e;
    e.spec = FramingSpec{"nonflat_demo4",
                         4,
                         cube(4, -2.0, 2.0),
                         {{"1", "0", "0", "0"}, {"0", "1 + x1^2", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}}};
    e.expect_flat = false;
    out.push_back(e);
  }

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.spec.name < b.spec.name; });
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog()) names.push_back(e.spec.name);
  return names;
}

const CatalogEntry& get_example(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.spec.name == name) return e;
  }
  throw UnknownExample("unknown example '" + name + "'");
}

Tensor expected_constants(const CatalogEntry& e) {
  Tensor c(e.spec.dim, 1, 2);
  for (const auto& [i, j, k, v] : e.expected_c) c({i, j, k}) = v;
  return c;
}

}  // namespace llg
