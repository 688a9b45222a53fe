#include "doctest.h"

#include "seriate/matrices.hpp"
#include "seriate/models.hpp"

using namespace seriate;

namespace {

Graph path3() { return make_graph(3, {{0, 1}, {1, 2}}); }

Graph random_graph() {
  return sbm_generate(sbm_params(24, 2, 6.0, 0.4), 123).g;
}

}  // namespace

TEST_CASE("matrix kind names round-trip") {
  for (MatrixKind kind : kAllMatrixKinds)
    CHECK(matrix_kind_from_string(to_string(kind)) == kind);
  CHECK_THROWS(matrix_kind_from_string("nonsense"));
}

TEST_CASE("plain laplacian entries") {
  Eigen::MatrixXd l = build_matrix(path3(), {MatrixKind::Laplacian, {}, {}});
  Eigen::MatrixXd expect(3, 3);
  expect << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  CHECK((l - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("all kinds are exactly symmetric") {
  Graph g = random_graph();
  for (MatrixKind kind : kAllMatrixKinds) {
    MatrixOptions opts = resolve_defaults(g, {kind, {}, {}});
    Eigen::MatrixXd m = build_matrix(g, opts);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = i + 1; j < m.cols(); ++j) CHECK(m(i, j) == m(j, i));
  }
}

TEST_CASE("degree-normalized laplacian") {
  Eigen::MatrixXd ln = build_matrix(path3(), {MatrixKind::NormLaplacian, {}, {}});
  for (int i = 0; i < 3; ++i) CHECK(ln(i, i) == doctest::Approx(1.0));
  CHECK(ln(0, 1) == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(ln(0, 2) == 0.0);

  Graph iso = make_graph(3, {{0, 1}});
  CHECK_THROWS_WITH_AS(build_matrix(iso, {MatrixKind::NormLaplacian, {}, {}}),
                       doctest::Contains("2"), std::invalid_argument);
}

TEST_CASE("modularity matrix annihilates the constant vector") {
  Graph g = random_graph();
  Eigen::MatrixXd q = build_matrix(g, {MatrixKind::Modularity, {}, {}});
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(g.n);
  CHECK((q * ones).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS(build_matrix(make_graph(3, {}), {MatrixKind::Modularity, {}, {}}));
}

TEST_CASE("bethe hessian") {
  Graph g = random_graph();
  Eigen::MatrixXd b1 = build_matrix(g, {MatrixKind::BetheHessian, 1.0, {}});
  Eigen::MatrixXd l = build_matrix(g, {MatrixKind::Laplacian, {}, {}});
  // bitwise: D - 1*A assembles the same values as D - A
  CHECK((b1.array() == l.array()).all());

  CHECK_THROWS(build_matrix(g, {MatrixKind::BetheHessian, 0.0, {}}));
  CHECK_THROWS(build_matrix(g, {MatrixKind::BetheHessian, {}, {}}));  // r required

  // star on 4 vertices: degrees (3,1,1,1), sum d^2 = 12, sum d = 6
  Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(default_bethe_r(star) == 1.0);
}

TEST_CASE("regularized kinds") {
  Graph g = path3();
  const double tau = 1.0;

  SUBCASE("adjacency scaling") {
    Eigen::MatrixXd a = build_matrix(g, {MatrixKind::RegAdjacency, {}, tau});
    // entry (0,1): 1/sqrt((d0+tau)(d1+tau)) = 1/sqrt(2*3)
    CHECK(a(0, 1) == doctest::Approx(1.0 / std::sqrt(6.0)));
    CHECK(a(0, 0) == 0.0);
    CHECK(a(0, 2) == 0.0);
  }

  SUBCASE("tiny tau recovers the degree-normalized laplacian") {
    Graph h = random_graph();
    Eigen::MatrixXd reg = build_matrix(h, {MatrixKind::RegLaplacian, {}, 1e-8});
    Eigen::MatrixXd ln = build_matrix(h, {MatrixKind::NormLaplacian, {}, {}});
    Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(h.n, h.n) - ln;
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Identity(h.n, h.n) - reg;
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-6);
  }

  SUBCASE("regularized degree is exact") {
    // Row sums of the shifted adjacency must equal d_i + tau, because the
    // tau/n offset is applied to every entry including the diagonal.
    Graph h = random_graph();
    const double t = 3.7;
    Eigen::MatrixXd reg = build_matrix(h, {MatrixKind::RegLaplacian, {}, t});
    auto d = degrees(h);
    // Reconstruct (D+tI)^{1/2} (I - reg) (D+tI)^{1/2} row sums = d_i + t.
    Eigen::MatrixXd shifted = Eigen::MatrixXd::Identity(h.n, h.n) - reg;
    for (int i = 0; i < h.n; ++i) {
      double row = 0.0;
      for (int j = 0; j < h.n; ++j)
        row += shifted(i, j) * std::sqrt((d[i] + t) * (d[j] + t));
      CHECK(row == doctest::Approx(d[i] + t).epsilon(1e-12));
    }
  }

  SUBCASE("tau required") {
    CHECK_THROWS(build_matrix(g, {MatrixKind::RegLaplacian, {}, {}}));
    CHECK_THROWS(build_matrix(g, {MatrixKind::RegAdjacency, {}, {}}));
  }
}

TEST_CASE("default hyperparameters") {
  Graph g = path3();
  CHECK(default_reg_tau(g) == doctest::Approx(4.0 / 3.0));

  MatrixOptions opts = resolve_defaults(g, {MatrixKind::BetheHessian, {}, {}});
  CHECK(opts.r.has_value());
  CHECK(*opts.r == doctest::Approx(default_bethe_r(g)));
  CHECK_FALSE(opts.tau.has_value());

  opts = resolve_defaults(g, {MatrixKind::RegLaplacian, {}, {}});
  CHECK_FALSE(opts.r.has_value());
  CHECK(*opts.tau == doctest::Approx(4.0 / 3.0));

  // explicit values are kept
  opts = resolve_defaults(g, {MatrixKind::BetheHessian, 2.5, {}});
  CHECK(*opts.r == 2.5);

  // irrelevant hyperparameters are dropped
  opts = resolve_defaults(g, {MatrixKind::Laplacian, 2.5, 1.0});
  CHECK_FALSE(opts.r.has_value());
  CHECK_FALSE(opts.tau.has_value());
}
