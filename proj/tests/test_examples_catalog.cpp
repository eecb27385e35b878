#include <algorithm>
#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "llg/canonical.hpp"
#include "llg/error.hpp"
#include "test_support.hpp"

TEST_CASE("catalog lookup") {
  const auto names = llg::catalog_names();
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(names.size() == 8);
  const llg::CatalogEntry& a = llg::get_example("abelian2");
  CHECK(a.spec.w[0][0] == "1");
  CHECK(a.spec.w[0][1] == "0");
  CHECK(a.expected_c.empty());
  REQUIRE(llg::get_example("affine2").expected_scalar_curvature.has_value());
  CHECK(*llg::get_example("affine2").expected_scalar_curvature == -2.0);
  CHECK_THROWS_AS(llg::get_example("nope"), llg::UnknownExample);
}

TEST_CASE("every entry behaves as declared") {
  for (const llg::CatalogEntry& e : llg::catalog()) {
    CAPTURE(e.spec.name);
    const llg::Framing f(e.spec);
    const auto pts = testing::samples(f, 30);
    const llg::FlatnessCertificate cert = llg::certify_flat(f, pts, 1e-9);
    CHECK(cert.flat == e.expect_flat);
    if (!e.expect_flat) continue;
    const llg::Tensor c = llg::expected_constants(e);
    for (const llg::Point& p : pts) CHECK(llg::max_abs(llg::structure_constants(f, p).c - c) < 1e-10);
    if (e.expected_scalar_curvature) {
      CHECK(std::abs(llg::metric_curvature(f, pts[0]).scalar - *e.expected_scalar_curvature) < 1e-8);
    }
  }
}

TEST_CASE("framing files round trip") {
  for (const llg::CatalogEntry& e : llg::catalog()) {
    CAPTURE(e.spec.name);
    const std::string text = llg::framing_to_json(e.spec);
    const llg::FramingSpec back = llg::framing_from_json(text, e.spec.name);
    CHECK(back.dim == e.spec.dim);
    CHECK(back.domain == e.spec.domain);
    CHECK(back.w == e.spec.w);
    const llg::Framing f0(e.spec);
    const llg::Framing f1(back);
    for (const llg::Point& p : testing::samples(f0, 5)) {
      CHECK(llg::max_abs(llg::torsion(f0, p) - llg::torsion(f1, p)) == 0.0);
    }
  }

  const auto path = std::filesystem::temp_directory_path() / "llg_roundtrip_affine2.json";
  {
    std::ofstream out(path);
    out << llg::framing_to_json(llg::get_example("affine2").spec);
  }
  const llg::FramingSpec loaded = llg::load_framing_file(path);
  CHECK(loaded.w == llg::get_example("affine2").spec.w);
  std::filesystem::remove(path);
}

TEST_CASE("framing file errors") {
  const char* ok = R"({"dim": 2, "domain": {"x1": [0.1, 10.0], "x2": [-10, 10]}, "w": [["x1","0"],["0","x1"]]})";
  CHECK(llg::framing_from_json(ok, "t").domain.bounds[0].first == 0.1);
  CHECK_THROWS_AS(llg::framing_from_json(R"({"dim": 2, "domain": {"x1": [0,1], "x2": [0,1]},
      "w": [["1","0"],["0","1"]], "extra": 1})", "t"), llg::InvalidArgument);
  CHECK_THROWS_AS(llg::framing_from_json(R"({"dim": 2, "domain": {"x1": [0,1], "x3": [0,1]},
      "w": [["1","0"],["0","1"]]})", "t"), llg::InvalidArgument);
  CHECK_THROWS_AS(llg::framing_from_json(R"({"dim": 2, "domain": {"x1": [0,1], "x2": [0,1]},
      "w": [["1","0"]]})", "t"), llg::InvalidArgument);
  CHECK_THROWS_AS(llg::framing_from_json("{not json", "t"), llg::InvalidArgument);
  CHECK_THROWS_AS(llg::load_framing_file("/nonexistent/framing.json"), llg::InvalidArgument);
  CHECK_THROWS_AS(llg::Framing(llg::framing_from_json(R"({"dim": 1, "domain": {"x1": [0,1]},
      "w": [["x2"]]})", "t")), llg::VariableOutOfRange);
}
