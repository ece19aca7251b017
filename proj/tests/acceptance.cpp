// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are fixed
// here; the exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <sstream>

#include "oracles.hpp"
#include "tropreg/auction.hpp"
#include "tropreg/dominions.hpp"
#include "tropreg/regression.hpp"

using namespace tropreg;
using oracle::NEG;

namespace {

constexpr double kTolKm = 1e-6;         // criteria 3, 4
constexpr double kTolResidual = 1e-9;   // criterion 1
constexpr double kGridStep = 0.25;      // criterion 9
constexpr double kSlopeFactor = 1.5;    // criterion 6
constexpr double kDominionRes = 1e-6;   // criterion 7
constexpr long kDominionIter = 10000;   // criterion 7
constexpr double kAuctionExact = 1e-9;  // criterion 8
constexpr double kAuctionLog = 0.1;     // criterion 8
constexpr double kAuctionE = 0.05;      // criterion 8

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Check {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

int failures = 0;

void report(int id, const char* title, Check& c, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)%s%s\n", c.ok ? "PASS" : "FAIL", id, title, detail.c_str(),
              c.ok ? "" : " -- ", c.ok ? "" : c.why.str().c_str());
  if (!c.ok) ++failures;
}

TropMatrix V9() {
  return TropMatrix::from_rows({{-3, 0, 0, 1, 1, -1, 0, 0, -1}, {0, -3, 0, 0, -1, 1, 1, -1, 0}, {-1, -1, -4, -2, -1, -1, -2, 0, 0}});
}
TropMatrix U4() { return TropMatrix::from_rows({{-1, 0, 1, 0}, {0, -1, 0, 1}, {0, 0, -2, -2}}); }
TropMatrix V11() {
  return TropMatrix::from_rows(
      {{1, 1, 2, 0, 0, 0, -3, -1, 0, 0, -2}, {0, -2, 0, 1, 1, 2, 1, 0, 0, -3, 0}, {0, 0, -2, -2, -1, -2, 0, 2, 3, 1, 1}});
}

SolverConfig cfg_of(Method m) {
  SolverConfig c;
  c.method = m;
  return c;
}

bool in(int v, std::initializer_list<int> s) { return std::find(s.begin(), s.end(), v) != s.end(); }

void criterion1() {
  Check c;
  auto t0 = Clock::now();
  RegressionResult r = best_hyperplane(V9(), cfg_of(Method::exact));
  InradiusResult in_r = inradius(V9(), cfg_of(Method::exact));
  double dt = seconds_since(t0);
  PlainOperator T(V9());
  c.require(r.cert.rho_exact && *r.cert.rho_exact == Rational{-1, 1}, "rho is not exactly -1");
  c.require(in_r.radius == 1, "inradius != 1");
  c.require(r.apex_verified, "apex not verified");
  c.require(!r.cert.eigenvector.empty() && eigen_residual(T, r.cert.eigenvector) <= kTolResidual, "eigen residual");
  if (!r.cert.eigenvector.empty()) {
    Vec d = sub(T(r.cert.eigenvector), r.cert.eigenvector);
    c.require(top(d) == -1 && bot(d) == -1, "T(apex) != -1 + apex exactly");
  }
  c.require(r.witnesses.has_value(), "no witness policy");
  if (r.witnesses) {
    const Index& s = r.witnesses->sigma.sigma;
    c.require(in(s[0], {3, 4}) && in(s[1], {5, 6}) && in(s[2], {7, 8}), "witness policy outside the expected sets");
  }
  c.require(r.simplicial == Index{3, 5, 7}, "simplicial support != {4,6,8}");
  c.require(dt < 1.0, "runtime >= 1 s");
  std::ostringstream d;
  d << "rho=" << (r.cert.rho_exact ? r.cert.rho_exact->str() : "?") << " apex=" << format_vec(r.apex) << " t=" << dt << "s";
  report(1, "nine-point golden", c, d.str());
}

void criterion2() {
  Check c;
  PlainOperator T(U4());
  RegressionResult r = best_hyperplane(U4(), cfg_of(Method::exact));
  c.require(r.value == 1, "value != 1");
  c.require(verify_sub(T, r.apex, -1, 0), "returned apex fails T(b) >= -1 + b");
  for (Vec b : {Vec{0, 0, 1}, Vec{0, 0, -1}, Vec{0, 0, NEG}}) c.require(verify_sub(T, b, -1, 0), "listed apex fails " + format_vec(b));
  report(2, "four-point golden", c, "value=" + std::to_string(r.value) + " apex=" + format_vec(r.apex));
}

void criterion3() {
  Check c;
  const Index t1{0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2}, t2{0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 2};
  RegressionResult a = regress_typed(V11(), t1, cfg_of(Method::exact));
  RegressionResult b = regress_typed(V11(), t2, cfg_of(Method::exact));
  c.require(a.cert.rho_exact && *a.cert.rho_exact == Rational{-2, 1} && a.value == 2, "exact value != 2");
  c.require(oracle::proj_equal(a.apex, {0, 0, -1}, 0), "exact apex != (0,0,-1)");
  c.require(b.cert.rho_exact && *b.cert.rho_exact == Rational{-5, 2} && b.value == 2.5, "exact value != 5/2");
  c.require(oracle::proj_equal(b.apex, {0, 0.5, -1}, 0), "exact apex != (0,1/2,-1)");
  RegressionResult ka = regress_typed(V11(), t1, cfg_of(Method::km));
  RegressionResult kb = regress_typed(V11(), t2, cfg_of(Method::km));
  c.require(std::abs(ka.value - 2) <= kTolKm && oracle::proj_equal(ka.apex, {0, 0, -1}, kTolKm), "KM original types");
  c.require(std::abs(kb.value - 2.5) <= kTolKm && oracle::proj_equal(kb.apex, {0, 0.5, -1}, kTolKm), "KM swapped types");
  report(3, "typed goldens", c, "values " + std::to_string(a.value) + ", " + std::to_string(b.value));
}

void criterion4() {
  Check c;
  std::mt19937_64 g(42);
  auto t0 = Clock::now();
  double worst_km = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 2 + t % 3, p = 2 + (t / 3) % 5;
    TropMatrix V = oracle::random_integer(g, n, p, -5, 5);
    PlainOperator T(V);
    double bf = brute_force_rho(T);
    RegressionResult r = best_hyperplane(V, cfg_of(Method::exact));
    InradiusResult in_r = inradius(V, cfg_of(Method::exact));
    c.require(r.value == in_r.radius && r.value == -bf, "exact duality mismatch at instance " + std::to_string(t));
    RegressionResult k = best_hyperplane(V, cfg_of(Method::km));
    worst_km = std::max(worst_km, std::abs(k.value + bf));
    c.require(std::abs(k.value + bf) <= kTolKm, "KM mismatch at instance " + std::to_string(t));
  }
  double dt = seconds_since(t0);
  c.require(dt < 60, "runtime >= 60 s");
  std::ostringstream d;
  d << "200 instances, max KM error " << worst_km << ", t=" << dt << "s";
  report(4, "strong duality", c, d.str());
}

void criterion5() {
  Check c;
  std::mt19937_64 g(5);
  int used = 0;
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 2 + t % 4, p = 2 + t % 5;
    TropMatrix V = oracle::random_integer(g, n, p, -5, 5, t % 2 ? 0.25 : 0.0);
    DominionReport dr = dominion_report(V);
    if (dr.verdict != DominionVerdict::finite_eigenvector_guaranteed) continue;
    ++used;
    SolverConfig cfg;
    cfg.residual_log_limit = 100000;
    cfg.epsilon = 1e-10;
    SpectralCertificate km = km_solve(PlainOperator(V), cfg);
    const double kappa = 2 * km.W / std::sqrt(M_PI * cfg.gamma * (1 - cfg.gamma));
    for (auto [k, res] : km.residual_log)
      if (k >= 1) c.require(res <= kappa / std::sqrt(static_cast<double>(k)) + 1e-12, "KM envelope violated");
    double r = oracle::rho(V);
    for (long k : {1L, 10L, 100L, 1000L}) {
      SpectralCertificate vi = value_iterate(PlainOperator(V), k);
      c.require(vi.lower <= r + 1e-12 && r <= vi.upper + 1e-12, "VI bounds do not bracket rho");
    }
  }
  c.require(used >= 40, "too few instances passed the dominion check");
  report(5, "KM rate and VI bounds", c, std::to_string(used) + " instances");
}

void criterion6() {
  Check c;
  std::mt19937_64 g(6);
  for (int t = 0; t < 1000; ++t) {
    std::size_t n = 2 + g() % 6, p = 1 + g() % 8;
    TropMatrix V = oracle::random_valid(g, n, p, -5, 5, 0.4);
    Vec x(n);
    for (double& v : x) v = std::uniform_real_distribution<double>(-5, 5)(g);
    PlainOperator T(V);
    c.require(T(x) == oracle::plain(V, x), "fast != naive at instance " + std::to_string(t));
    c.require(T(x) == T.apply_naive(x), "fast != library naive at instance " + std::to_string(t));
  }
  std::vector<double> per_edge;
  for (std::size_t E : {100u, 1000u, 10000u}) {
    TropMatrix V = oracle::random_valid(g, 20, E / 10, -5, 5, 0.5);
    std::uint64_t ops = 0;
    PlainOperator(V).apply_counted(Vec(20, 0.0), ops);
    per_edge.push_back(static_cast<double>(ops) / static_cast<double>(V.nnz()));
  }
  double lo = *std::min_element(per_edge.begin(), per_edge.end()), hi = *std::max_element(per_edge.begin(), per_edge.end());
  c.require(hi / lo <= kSlopeFactor, "operation count not linear in |E|");
  std::ostringstream d;
  d << "ops/|E| = " << per_edge[0] << ", " << per_edge[1] << ", " << per_edge[2];
  report(6, "O(|E|) evaluation", c, d.str());
}

TropMatrix pattern(std::mt19937_64& g) {
  std::uniform_real_distribution<double> d(-3, 3);
  TropMatrix V(6, 4);
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 4; ++k)
      if (i < 3 || k >= 2) V.set(i, k, d(g));
  return V;
}

void criterion7() {
  Check c;
  std::mt19937_64 g(7);
  DominionReport r = detect_dominions(pattern(g));
  c.require(r.found && r.S == Index{0, 1, 2} && r.max_dominion == Index{3, 4, 5}, "pattern instance");
  int compared = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t p = 1; p <= 5; ++p)
      for (int t = 0; t < 150; ++t) {
        TropMatrix V = oracle::random_integer(g, n, p, 0, 0, 0.45);
        DominionReport d = dominion_report(V);
        if (d.verdict == DominionVerdict::invalid_input) continue;
        ++compared;
        c.require(d.found == oracle::dominions_exist(V), "exhaustive disagreement");
        if (d.found) c.require(is_dominion_witness(V, d.K), "unsound witness");
      }
  for (int t = 0; t < 50; ++t)
    c.require(!detect_dominions(oracle::random_integer(g, 2 + t % 4, 2 + t % 4, -5, 5)).found, "all-finite with dominions");
  for (int t = 0; t < 20; ++t) {
    SolverConfig cfg;
    cfg.epsilon = kDominionRes;
    cfg.max_iter = kDominionIter;
    SpectralCertificate km = km_solve(PlainOperator(pattern(g)), cfg);
    c.require(km.converged && km.residual <= kDominionRes, "KM did not converge on a pattern instance");
  }
  report(7, "dominions", c, std::to_string(compared) + " exhaustive comparisons");
}

void criterion8() {
  Check c;
  AuctionParams p;
  p.q = 100;
  p.delta = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    p.seed = seed;
    AuctionInstance s = simulate(p);
    InferenceReport r = infer(s.prices);
    c.require(std::abs(r.value) <= kAuctionExact, "delta=0 value != 0");
    for (std::size_t i = 0; i < 3; ++i) c.require(std::abs(r.f_reg[i] - s.f[i]) <= kAuctionExact, "delta=0 f not recovered");
    c.require(determine_winners(s.prices, r.f_reg) == *s.winners, "winner sets differ");
  }
  p.delta = 0.05;
  double worst_log = 0, worst_e = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    p.seed = 1000 + seed;
    AuctionInstance s = simulate(p);
    InferenceReport r = infer(s.prices);
    for (std::size_t i = 0; i < 3; ++i) worst_log = std::max(worst_log, std::abs(std::log(r.f_reg[i]) - std::log(s.f[i])));
    worst_e = std::max(worst_e, r.e);
  }
  c.require(worst_log <= kAuctionLog, "log-factor error too large");
  c.require(worst_e <= kAuctionE, "e too large");
  std::ostringstream d;
  d << "max |log f_reg - log f| = " << worst_log << ", max e = " << worst_e;
  report(8, "auction inference", c, d.str());
}

void criterion9() {
  Check c;
  std::mt19937_64 g(9);
  double worst = 0;
  for (int t = 0; t < 50; ++t) {
    TropMatrix V = oracle::random_integer(g, 3, 5, -3, 3);
    SignedRegressionResult r = regress_signed(V, {{0, 1}, {2}}, cfg_of(Method::exact));
    auto [W, Wp] = diameter_bounds(V);
    double grid = oracle::signed_grid(V, {0, 1}, 2 * W, kGridStep);
    worst = std::max(worst, std::abs(grid - r.value));
    c.require(std::abs(grid - r.value) <= 3 * kGridStep, "grid disagreement at instance " + std::to_string(t));
    c.require(!r.interval_center.empty() && r.interval_verified, "interval endpoints fail membership");
  }
  std::ostringstream d;
  d << "max |grid - solver| = " << worst;
  report(9, "signed regression oracle", c, d.str());
}

void criterion10() {
  Check c;
  std::mt19937_64 g(10);
  std::uniform_int_distribution<int> di(-3, 3);
  std::uniform_real_distribution<double> dr(-4, 4);
  long assertions = 0;
  for (int t = 0; t < 10000; ++t) {
    TropMatrix V = oracle::random_valid(g, 3, 4, -3, 3, 0.2);
    Vec x{dr(g), dr(g), dr(g)};
    Vec px = cone_project(V, x);
    Vec ppx = cone_project(V, px);
    bool dominated = true, idem = true;
    for (int i = 0; i < 3; ++i) {
      dominated = dominated && px[i] <= x[i] + 1e-12;
      idem = idem && std::abs(ppx[i] - px[i]) <= 1e-12;
    }
    c.require(dominated && idem, "cone projection");
    Vec xi{double(di(g)), double(di(g)), double(di(g))}, a{double(di(g)), double(di(g)), double(di(g))};
    double m = std::max({xi[0] + a[0], xi[1] + a[1], xi[2] + a[2]});
    int ties = (xi[0] + a[0] == m) + (xi[1] + a[1] == m) + (xi[2] + a[2] == m);
    c.require((hyperplane_distance(xi, a) == 0) == (ties >= 2), "zero-iff-tie");
    Vec as{dr(g), dr(g), dr(g)};
    SignedProjection sp = signed_project_and_distance(x, as, {{0}, {1, 2}});
    c.require(oracle::signed_distance(sp.point, as, {0}) <= 1e-12, "signed projection off the hyperplane");
    assertions += 3;
  }
  report(10, "geometry properties", c, std::to_string(assertions) + " assertions");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
