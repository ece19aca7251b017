#include <doctest.h>

#include "oracles.hpp"
#include "tropreg/regression.hpp"

using namespace tropreg;
using oracle::NEG;

namespace {

TropMatrix V9() {
  return TropMatrix::from_rows({{-3, 0, 0, 1, 1, -1, 0, 0, -1}, {0, -3, 0, 0, -1, 1, 1, -1, 0}, {-1, -1, -4, -2, -1, -1, -2, 0, 0}});
}
TropMatrix U4() { return TropMatrix::from_rows({{-1, 0, 1, 0}, {0, -1, 0, 1}, {0, 0, -2, -2}}); }
TropMatrix V11() {
  return TropMatrix::from_rows(
      {{1, 1, 2, 0, 0, 0, -3, -1, 0, 0, -2}, {0, -2, 0, 1, 1, 2, 1, 0, 0, -3, 0}, {0, 0, -2, -2, -1, -2, 0, 2, 3, 1, 1}});
}
const Index kTypes{0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2};
const Index kSwapped{0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 2};

SolverConfig exact() {
  SolverConfig c;
  c.method = Method::exact;
  return c;
}

}  // namespace

TEST_CASE("inradius") {
  InradiusResult r = inradius(V9(), exact());
  CHECK(r.radius == 1);
  REQUIRE(r.center);
  CHECK(oracle::proj_equal(*r.center, {0, 0, -1}, 1e-9));
  CHECK(ball_in_column_space(V9(), *r.center, 1, 1e-9));
  CHECK(inradius(identity_matrix(3)).radius == kInf);
  CHECK(oracle::near(inradius(TropMatrix::from_rows({{0}, {0}, {0}})).radius, 0, 1e-9));
  InradiusResult d = inradius(TropMatrix::from_rows({{0, 1, NEG}, {1, 0, NEG}, {NEG, NEG, NEG}}), exact());
  CHECK(d.dropped_rows == Index{2});
  CHECK(d.dropped_cols == Index{2});
}

TEST_CASE("best hyperplane on the nine- and four-point goldens") {
  RegressionResult r = best_hyperplane(V9(), exact());
  CHECK(r.value == 1);
  CHECK(oracle::proj_equal(r.apex, {0, 0, 1}, 1e-12));
  CHECK(r.apex_verified);
  REQUIRE(r.witnesses);
  const Index& s = r.witnesses->sigma.sigma;
  CHECK((s[0] == 3 || s[0] == 4));
  CHECK((s[1] == 5 || s[1] == 6));
  CHECK((s[2] == 7 || s[2] == 8));
  CHECK(r.simplicial == Index{3, 5, 7});
  CHECK(configuration_distance(V9(), r.apex) == doctest::Approx(1));

  RegressionResult u = best_hyperplane(U4(), exact());
  CHECK(u.value == 1);
  CHECK(u.apex_verified);
  CHECK(configuration_distance(U4(), u.apex) == doctest::Approx(1));
  for (Vec b : {Vec{0, 0, 1}, Vec{0, 0, -1}, Vec{0, 0, NEG}}) CHECK(configuration_distance(U4(), b) == 1);
}

TEST_CASE("witness points and simplicial support") {
  WitnessReport w = witness_points(V9(), {0, 0, 1});
  CHECK(w.value == doctest::Approx(1));
  CHECK_THROWS_AS(witness_points(V9(), {0, 0, 0}), CertificateError);
  SimplicialSupport s = simplicial_support(V9(), {0, 0, 1}, -1);
  CHECK(s.columns == Index{3, 5, 7});
  CHECK(s.ball_verified);
  CHECK(inradius(V9().select_columns(s.columns), exact()).radius == 1);

  // a simplicial configuration: three generators, one per sector
  TropMatrix S = TropMatrix::from_rows({{0, -2, -2}, {-2, 0, -2}, {-2, -2, 0}});
  RegressionResult r = best_hyperplane(S, exact());
  REQUIRE(r.witnesses);
  Index cols = r.witnesses->columns;
  std::sort(cols.begin(), cols.end());
  CHECK(cols == Index{0, 1, 2});
}

TEST_CASE("random instances: witnesses, ball and weak duality") {
  std::mt19937_64 g(42);
  std::uniform_real_distribution<double> d(-4, 4);
  for (int t = 0; t < 80; ++t) {
    TropMatrix V = oracle::random_integer(g, 3, 5, -4, 4);
    RegressionResult r = best_hyperplane(V, exact());
    InradiusResult in = inradius(V, exact());
    CHECK(r.value == in.radius);
    CHECK(r.value == doctest::Approx(-oracle::rho(V)));
    CHECK(configuration_distance(V, r.apex) <= r.value + 1e-9);
    if (r.witnesses) {
      for (std::size_t i = 0; i < 3; ++i) {
        Vec x = V.column(r.witnesses->columns[i]);
        Index sec = sector_index(x, r.cert.eigenvector);
        CHECK(std::find(sec.begin(), sec.end(), static_cast<int>(i)) != sec.end());
        CHECK(hyperplane_distance(x, r.cert.eigenvector) == doctest::Approx(r.value));
      }
    }
    if (in.center) CHECK(ball_in_column_space(V, *in.center, in.radius, 1e-9));
    // weak duality against random hyperplanes
    Vec b{d(g), d(g), d(g)};
    CHECK(in.radius <= configuration_distance(V, b) + 1e-9);
    // tropical combinations are never farther than the worst generator
    Vec coeff(5);
    for (double& c : coeff) c = d(g);
    Vec comb = trop_matvec(V, coeff);
    CHECK(hyperplane_distance(comb, b) <= configuration_distance(V, b) + 1e-9);
  }
}

TEST_CASE("apex and ball center coincide") {
  std::mt19937_64 g(3);
  for (int t = 0; t < 40; ++t) {
    TropMatrix V = oracle::random_integer(g, 3, 6, -4, 4);
    RegressionResult r = best_hyperplane(V, exact());
    if (r.cert.eigenvector.empty() || r.value <= 0) continue;
    Vec center(3);
    for (int i = 0; i < 3; ++i) center[i] = -r.cert.eigenvector[i];
    CHECK(ball_in_column_space(V, center, r.value, 1e-9));
  }
}

TEST_CASE("degenerate configurations") {
  RegressionResult r = best_hyperplane(TropMatrix::from_rows({{0, 1}, {NEG, NEG}, {2, 0}}));
  CHECK(r.value == 0);
  CHECK(r.apex == Vec{NEG, 0, NEG});
  // points on H_0
  std::mt19937_64 g(1);
  std::vector<Vec> cols;
  for (int k = 0; k < 6; ++k) {
    Vec x{std::uniform_real_distribution<double>(-3, 3)(g), std::uniform_real_distribution<double>(-3, 3)(g),
          std::uniform_real_distribution<double>(-3, 3)(g)};
    cols.push_back(hyperplane_project(x, {0, 0, 0}));
  }
  TropMatrix P(3, 6);
  for (int k = 0; k < 6; ++k)
    for (int i = 0; i < 3; ++i) P.set(i, k, cols[k][i]);
  RegressionResult z = best_hyperplane(P);
  CHECK(oracle::near(z.value, 0, 1e-7));
}

TEST_CASE("signed regression") {
  TropMatrix two = TropMatrix::from_rows({{0, 0}, {0, 2}});
  SignedRegressionResult r = regress_signed(two, {{0}, {1}}, exact());
  CHECK(r.value == 1);
  CHECK(oracle::proj_equal(r.apex, {0, -1}, 1e-9));
  OneSidedResult o = one_sided_regression({{0}, {0}}, {{0}, {2}});
  CHECK(r.value == o.value);

  TropMatrix on = TropMatrix::from_rows({{0, 1, 2}, {0, 1, -1}, {-1, 0, 2}});
  SignedRegressionResult z = regress_signed(on, {{0}, {1, 2}}, exact());
  CHECK(z.value == 0);
  CHECK_THROWS(regress_signed(on, {{0}, {1}}));
}

TEST_CASE("signed regression against the apex grid") {
  std::mt19937_64 g(99);
  for (int t = 0; t < 15; ++t) {
    TropMatrix V = oracle::random_integer(g, 3, 6, -3, 3);
    SignedRegressionResult r = regress_signed(V, {{0, 1}, {2}}, exact());
    auto [W, Wp] = diameter_bounds(V);
    double grid = oracle::signed_grid(V, {0, 1}, 2 * W, 0.25);
    CHECK(r.value <= grid + 1e-9);
    CHECK(grid <= r.value + 3 * 0.25);
    CHECK(configuration_signed_distance(V, r.apex, {{0, 1}, {2}}) <= r.value + 1e-9);
    if (!r.interval_center.empty()) CHECK(r.interval_verified);
  }
}

TEST_CASE("typed regression") {
  RegressionResult r = regress_typed(V11(), kTypes, exact());
  CHECK(r.value == 2);
  CHECK(oracle::proj_equal(r.apex, {0, 0, -1}, 1e-12));
  for (double d : r.class_distances) CHECK(d <= 2 + 1e-12);
  RegressionResult s = regress_typed(V11(), kSwapped, exact());
  CHECK(s.value == 2.5);
  CHECK(oracle::proj_equal(s.apex, {0, 0.5, -1}, 1e-12));
  RegressionResult k = regress_typed(V11(), kTypes);
  CHECK(k.value == doctest::Approx(2).epsilon(1e-6));
  CHECK_THROWS(regress_typed(V11(), {0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1}));
  // each column on its own signed hyperplane H^i_0
  TropMatrix on = TropMatrix::from_rows({{0, 0, -2}, {0, 0, 0}, {-1, -1, 0}});
  CHECK(regress_typed(on, {0, 1, 2}, exact()).value == 0);
}

TEST_CASE("one sided regression") {
  OneSidedResult o = one_sided_regression({{0}, {0}}, {{0}, {2}});
  CHECK(o.A_bar[0][0] == 0);
  CHECK(o.delta == 2);
  CHECK(o.A_opt[0][0] == 1);
  CHECK(o.value == 1);
  std::vector<Vec> xs{{0, 1}, {2, -1}, {1, 1}};
  std::vector<Vec> A{{1, 2}, {0, -3}};
  std::vector<Vec> ys;
  for (const Vec& x : xs) ys.push_back({std::max(A[0][0] + x[0], A[0][1] + x[1]), std::max(A[1][0] + x[0], A[1][1] + x[1])});
  OneSidedResult c = one_sided_regression(xs, ys);
  CHECK(c.delta == 0);
  CHECK(c.A_opt == c.A_bar);
  ys[1][0] += 3;
  OneSidedResult e = one_sided_regression(xs, ys);
  double worst = 0;
  for (std::size_t k = 0; k < xs.size(); ++k)
    for (int i = 0; i < 2; ++i) {
      double ax = std::max(e.A_opt[i][0] + xs[k][0], e.A_opt[i][1] + xs[k][1]);
      worst = std::max(worst, std::abs(ys[k][i] - ax));
    }
  CHECK(worst == doctest::Approx(e.delta / 2));
  CHECK_THROWS(one_sided_regression({}, {}));
}
