#include <cmath>

#include <doctest.h>

#include "llg/error.hpp"
#include "llg/frame_geometry.hpp"
#include "test_support.hpp"

using doctest::Approx;
using llg::Tensor;

TEST_CASE("eval_frames") {
  const std::vector<double> x2{2.0, 5.0};
  const llg::Framing ab = testing::example("abelian2");
  CHECK(llg::max_abs(llg::frame_w(ab.eval_frames(x2)) - Tensor::identity(2)) == 0.0);
  CHECK(llg::max_abs(llg::frame_z(ab.eval_frames(x2)) - Tensor::identity(2)) == 0.0);

  const llg::Framing af = testing::example("affine2");
  const llg::FrameJets fa = af.eval_frames(x2);
  CHECK(llg::max_abs(llg::frame_w(fa) - 2.0 * Tensor::identity(2)) == 0.0);
  CHECK(llg::max_abs(llg::frame_z(fa) - 0.5 * Tensor::identity(2)) == 0.0);
  CHECK(llg::frame_inverse_defect(fa) < 1e-12);

  const llg::Framing h = testing::example("heisenberg3");
  const std::vector<double> x3{1.0, 2.0, 3.0};
  const llg::FrameJets fh = h.eval_frames(x3);
  CHECK(llg::frame_w(fh)({2, 1}) == 1.0);
  CHECK(llg::frame_z(fh)({2, 1}) == -1.0);

  const std::vector<double> outside{0.0, 5.0};
  CHECK_THROWS_AS(af.eval_frames(outside), llg::DomainBoundary);
}

TEST_CASE("singular framings are rejected") {
  llg::FramingSpec s{"degenerate", 2, llg::Box{{{-1, 1}, {-1, 1}}}, {{"1", "2"}, {"2", "4"}}};
  CHECK_THROWS_AS(llg::Framing{s}, llg::SingularFraming);
  llg::FramingSpec t{"vanishing", 1, llg::Box{{{-1, 1}}}, {{"x1 + 0.5"}}};
  const llg::Framing f(t);
  const std::vector<double> x{-0.5};
  CHECK_THROWS_AS(f.eval_frames(x), llg::SingularFraming);
}

TEST_CASE("epsilon") {
  for (const std::string& name : llg::catalog_names()) {
    CAPTURE(name);
    const llg::Framing f = testing::example(name);
    for (const llg::Point& p : testing::samples(f, 5)) {
      CHECK(llg::max_abs(llg::epsilon(f, p, p) - Tensor::identity(f.dim())) < 1e-12);
    }
  }
  const llg::Framing af = testing::example("affine2");
  const std::vector<double> x{2.0, 5.0};
  const std::vector<double> y{4.0, 0.0};
  const std::vector<double> z{0.5, -3.0};
  CHECK(llg::max_abs(llg::epsilon(af, x, y) - 2.0 * Tensor::identity(2)) < 1e-15);
  const Tensor chain = llg::contract(llg::epsilon(af, y, z), llg::epsilon(af, x, y), {{1, 0}});
  CHECK(llg::max_abs(chain - llg::epsilon(af, x, z)) < 1e-12);
}

TEST_CASE("gamma and torsion by hand") {
  const llg::Framing ab = testing::example("abelian2");
  const std::vector<double> x{2.0, 5.0};
  CHECK(llg::max_abs(llg::gamma(ab, x)) == 0.0);
  CHECK(llg::max_abs(llg::torsion(ab, x)) == 0.0);

  const llg::Framing af = testing::example("affine2");
  Tensor g(2, 1, 2);
  g({0, 0, 0}) = 0.5;
  g({1, 1, 0}) = 0.5;
  CHECK(llg::max_abs(llg::gamma(af, x) - g) < 1e-15);
  const Tensor t = llg::torsion(af, x);
  CHECK(t({1, 1, 0}) == Approx(0.5));
  CHECK(t({1, 0, 1}) == Approx(-0.5));

  const llg::Framing h = testing::example("heisenberg3");
  const std::vector<double> x3{1.0, 2.0, 3.0};
  Tensor gh(3, 1, 2);
  gh({2, 1, 0}) = 1.0;
  CHECK(llg::max_abs(llg::gamma(h, x3) - gh) < 1e-15);

  const llg::Framing nf = testing::example("nonflat_demo");
  const std::vector<double> x1{1.0, 0.0};
  CHECK(llg::torsion(nf, x1)({1, 1, 0}) == Approx(1.0));
}

TEST_CASE("both connection forms and parallel frames on every framing") {
  for (const std::string& name : llg::catalog_names()) {
    CAPTURE(name);
    const llg::Framing f = testing::example(name);
    for (const llg::Point& p : testing::samples(f, 10)) {
      const llg::FrameJets fj = f.eval_frames(p);
      CHECK(llg::max_abs(llg::gamma(fj) - llg::gamma_second_form(fj)) < 1e-12);
      CHECK(llg::parallel_frames_defect(fj) < 1e-12);
      CHECK(llg::max_abs(llg::frame_bracket(fj) + llg::structure_constants(fj).c) < 1e-12);
      CHECK(llg::max_abs(llg::pull_from_origin(fj, llg::push_to_origin(fj, llg::torsion(fj))) -
                         llg::torsion(fj)) < 1e-12);
    }
  }
}

TEST_CASE("linear curvature") {
  const std::vector<double> x{2.0, 5.0};
  CHECK(llg::max_abs(llg::linear_curvature(testing::example("abelian2"), x)) == 0.0);
  CHECK(llg::max_abs(llg::linear_curvature(testing::example("affine2"), x)) < 1e-10);

  const llg::Framing nf = testing::example("nonflat_demo");
  const std::vector<double> x1{0.5, 0.0};
  const Tensor r = llg::linear_curvature(nf, x1);
  CHECK(llg::max_abs(r) > 0.1);
  // R^2_{21,1} = d/dx1 of 2 x1 / (1 + x1^2) at x1 = 0.5
  const double d = 2.0 * (1.0 - 0.25) / ((1.25) * (1.25));
  CHECK(std::abs(r({1, 1, 0, 0})) == Approx(d));
}

TEST_CASE("structure constants, bracket and jacobi") {
  const std::vector<double> x{2.0, 5.0};
  const llg::StructureConstants ca = llg::structure_constants(testing::example("affine2"), x);
  Tensor c(2, 1, 2);
  c({1, 1, 0}) = 1.0;
  c({1, 0, 1}) = -1.0;
  CHECK(llg::max_abs(ca.c - c) < 1e-15);
  CHECK(llg::frame_bracket(testing::example("affine2"), x)({1, 0, 1}) == Approx(1.0));
  CHECK(llg::jacobi_defect(ca) == 0.0);

  const std::vector<double> x3{1.0, -2.0, 3.0};
  const llg::Framing h = testing::example("heisenberg3");
  const llg::StructureConstants ch = llg::structure_constants(h, x3);
  Tensor c3(3, 1, 2);
  c3({2, 0, 1}) = -1.0;
  c3({2, 1, 0}) = 1.0;
  CHECK(llg::max_abs(ch.c - c3) < 1e-15);
  CHECK(llg::frame_bracket(h, x3)({2, 0, 1}) == Approx(1.0));
  CHECK(llg::jacobi_defect(ch) == 0.0);

  CHECK(llg::jacobi_defect(llg::structure_constants(testing::example("abelian4"), std::vector<double>(4))) == 0.0);

  // A bracket that is antisymmetric but violates Jacobi.
  Tensor bad(3, 1, 2);
  bad({0, 0, 1}) = 1.0;
  bad({0, 1, 0}) = -1.0;
  bad({1, 1, 2}) = 1.0;
  bad({1, 2, 1}) = -1.0;
  CHECK(llg::jacobi_defect(llg::StructureConstants{bad}) > 0.5);
}

TEST_CASE("invariance") {
  const llg::TensorField t_field = [](const llg::Framing& f, std::span<const double> x) { return llg::torsion(f, x); };
  const llg::Framing af = testing::example("affine2");
  const auto pts = testing::samples(af, 20);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    CHECK(llg::invariance_defect(af, t_field, pts[i], pts[i]) < 1e-14);
    CHECK(llg::invariance_defect(af, t_field, pts[i], pts[i + 1]) < 1e-10);
  }
  const llg::Framing nf = testing::example("nonflat_demo");
  const std::vector<double> x{0.0, 0.0};
  const std::vector<double> y{1.0, 0.0};
  CHECK(llg::invariance_defect(nf, t_field, x, y) > 0.1);
}

TEST_CASE("flatness certificates") {
  const llg::Framing ab = testing::example("abelian2");
  const llg::FlatnessCertificate c0 = llg::certify_flat(ab, testing::samples(ab, 100), 1e-10);
  CHECK(c0.flat);
  CHECK(c0.max_curvature == 0.0);
  CHECK(c0.max_c_spread == 0.0);

  const llg::Framing af = testing::example("affine2");
  const llg::FlatnessCertificate c1 = llg::certify_flat(af, testing::samples(af, 100), 1e-10);
  CHECK(c1.flat);
  CHECK(c1.max_curvature <= 1e-10);

  const llg::Framing nf = testing::example("nonflat_demo");
  const std::vector<llg::Point> pts{{0.0, 0.0}, {1.0, 0.0}};
  const llg::FlatnessCertificate c2 = llg::certify_flat(nf, pts, 1e-9);
  CHECK_FALSE(c2.flat);
  CHECK(c2.max_c_spread >= 0.4);
  CHECK(c2.max_c_spread == Approx(1.0));

  CHECK_THROWS_AS(llg::certify_flat(af, {pts[1]}, 1e-9), llg::InvalidArgument);
}

TEST_CASE("develop") {
  const llg::Framing af = testing::example("affine2");
  const std::vector<double> x0{1.0, 0.0};
  const std::vector<double> y0{3.0, 0.0};
  const llg::Point y = llg::develop(af, x0, y0, {{2.0, 0.0}});
  CHECK(std::abs(y[0] - 6.0) < 1e-6);
  CHECK(std::abs(y[1]) < 1e-6);

  const llg::Point same = llg::develop(af, x0, x0, {{2.0, 3.0}, {4.0, -1.0}});
  CHECK(std::abs(same[0] - 4.0) < 1e-9);
  CHECK(std::abs(same[1] + 1.0) < 1e-9);

  const llg::Framing h = testing::example("heisenberg3");
  const std::vector<double> h0{0.0, 0.0, 0.0};
  const std::vector<double> hy{0.5, -0.5, 1.0};
  const llg::Point back = llg::develop(h, h0, hy, {{1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 0}});
  for (int i = 0; i < 3; ++i) CHECK(std::abs(back[i] - hy[i]) < 1e-6);

  const llg::Framing nf = testing::example("nonflat_demo");
  const std::vector<double> n0{0.0, 0.0};
  CHECK_THROWS_AS(llg::develop(nf, n0, n0, {{1.0, 0.0}}), llg::NotFlat);
  // y = 3 x1 leaves x1 <= 10 when x1 goes to 5.
  CHECK_THROWS_AS(llg::develop(af, x0, y0, {{5.0, 0.0}}), llg::DomainEscape);
}
