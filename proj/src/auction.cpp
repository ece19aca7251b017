#include "tropreg/auction.hpp"

#include <algorithm>
#include <cmath>

namespace tropreg {

namespace {

void check_prices(const std::vector<Vec>& prices) {
  if (prices.empty() || prices[0].empty()) throw std::invalid_argument("empty price table");
  for (const Vec& row : prices) {
    if (row.size() != prices[0].size()) throw DimensionError("ragged price table");
    for (double p : row)
      if (!(p > 0) || !std::isfinite(p)) throw std::invalid_argument("prices must be positive and finite");
  }
}

TropMatrix neg_log(const std::vector<Vec>& prices) {
  check_prices(prices);
  TropMatrix V(prices.size(), prices[0].size());
  for (std::size_t i = 0; i < V.rows(); ++i)
    for (std::size_t j = 0; j < V.cols(); ++j) V.set(i, j, -std::log(prices[i][j]));
  return V;
}

double log_uniform(std::mt19937_64& g, double lo, double hi) {
  const double a = std::log(lo), b = std::log(hi);
  return std::exp(a + unit_uniform(g) * (b - a));
}

}  // namespace

void AuctionParams::validate() const {
  if (n == 0 || q == 0) throw std::invalid_argument("need at least one firm and one tender");
  if (f.size() != n) throw DimensionError("one factor per firm is required");
  for (double x : f)
    if (!(x > 0) || !std::isfinite(x)) throw std::invalid_argument("factors must be positive");
  if (!reference_prices.empty()) {
    if (reference_prices.size() != q) throw DimensionError("one reference price per tender is required");
    for (double x : reference_prices)
      if (!(x > 0) || !std::isfinite(x)) throw std::invalid_argument("reference prices must be positive");
  }
  if (!(delta >= 0) || !std::isfinite(delta)) throw std::invalid_argument("delta must be >= 0");
  if (!(band >= 0 && band < 1)) throw std::invalid_argument("band must lie in [0, 1)");
}

TropMatrix AuctionInstance::valuation() const { return neg_log(prices); }

double unit_uniform(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

AuctionInstance simulate(const AuctionParams& params) {
  params.validate();
  const std::size_t n = params.n, q = params.q;
  std::mt19937_64 g(params.seed);
  AuctionInstance inst;
  inst.delta = params.delta;
  inst.seed = params.seed;
  const double fmax = *std::max_element(params.f.begin(), params.f.end());
  inst.f = params.f;
  for (double& x : inst.f) x /= fmax;
  inst.reference_prices = params.reference_prices;
  if (inst.reference_prices.empty()) {
    inst.reference_prices.resize(q);
    for (double& P : inst.reference_prices) P = log_uniform(g, 1.0, 100.0);
  }
  std::vector<Vec> B(n, Vec(q));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      const double c = inst.reference_prices[j] * inst.f[i];
      B[i][j] = -std::log(log_uniform(g, (1 - params.band) * c, (1 + params.band) * c));
    }
  Vec a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = std::log(inst.f[i]);
  // move each column onto H_a by lowering its (first) maximizing coordinate
  if (n >= 2)
    for (std::size_t j = 0; j < q; ++j) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (B[i][j] + a[i] > B[best][j] + a[best]) best = i;
      double second = kBot;
      for (std::size_t k = 0; k < n; ++k)
        if (k != best) second = std::max(second, B[k][j] + a[k]);
      B[best][j] = second - a[best];
    }
  inst.prices.assign(n, Vec(q));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      double d = params.delta > 0 ? params.delta * (2 * unit_uniform(g) - 1) : 0.0;
      inst.prices[i][j] = std::exp(-(B[i][j] + d));
    }
  inst.winners = determine_winners(inst);
  return inst;
}

Index determine_winners(const std::vector<Vec>& prices, const Vec& f, double tie_tol) {
  TropMatrix V = neg_log(prices);
  if (f.size() != V.rows()) throw DimensionError("one factor per firm is required");
  Index w(V.cols());
  for (std::size_t j = 0; j < V.cols(); ++j) {
    double m = kBot;
    for (std::size_t i = 0; i < V.rows(); ++i) m = std::max(m, V(i, j) + std::log(f[i]));
    for (std::size_t i = 0; i < V.rows(); ++i)
      if (V(i, j) + std::log(f[i]) >= m - tie_tol) {
        w[j] = static_cast<int>(i);
        break;
      }
  }
  return w;
}

Index determine_winners(const AuctionInstance& inst, double tie_tol) {
  return determine_winners(inst.prices, inst.f, tie_tol);
}

SolverConfig inference_config() {
  SolverConfig c;
  c.method = Method::km;
  c.epsilon = 1e-12;
  return c;
}

EquilibriumDistance distance_to_equilibrium(const std::vector<Vec>& prices, const Vec& b) {
  if (is_bot_vector(b)) throw std::invalid_argument("apex must not be BOT");
  TropMatrix V = neg_log(prices);
  if (b.size() != V.rows()) throw DimensionError("apex has the wrong size");
  EquilibriumDistance r;
  double denom = 0;
  for (std::size_t j = 0; j < V.cols(); ++j) {
    r.distance = std::max(r.distance, hyperplane_distance(V.column(j), b));
    double hi = 0, lo = kInf;
    for (const Vec& row : prices) hi = std::max(hi, row[j]), lo = std::min(lo, row[j]);
    if (hi > lo) denom = std::max(denom, std::abs(std::log(hi - lo)));
  }
  if (denom > 0) {
    r.e = r.distance / denom;
  } else {
    r.e = 0;
    r.e_defined = false;
  }
  return r;
}

InferenceReport infer(const std::vector<Vec>& prices, const std::optional<Index>& winners, const SolverConfig& cfg) {
  TropMatrix V = neg_log(prices);
  InferenceReport rep;
  RegressionResult r;
  if (winners) {
    if (winners->size() != V.cols()) throw DimensionError("one winner per tender is required");
    for (int w : *winners)
      if (w < 0 || static_cast<std::size_t>(w) >= V.rows()) throw std::invalid_argument("winner index out of range");
    r = regress_typed(V, *winners, cfg, true);
    rep.typed = true;
    RegressionResult u = best_hyperplane(V, cfg);
    rep.untyped_apex = u.apex;
    rep.untyped_value = u.value;
  } else {
    r = best_hyperplane(V, cfg);
  }
  rep.apex = r.apex;
  rep.value = r.value;
  rep.class_distances = r.class_distances;
  rep.iterations = r.cert.iterations;
  rep.f_reg.resize(rep.apex.size());
  for (std::size_t i = 0; i < rep.apex.size(); ++i) rep.f_reg[i] = std::exp(rep.apex[i]);
  rep.cert = std::move(r.cert);
  if (!is_bot_vector(rep.apex)) {
    EquilibriumDistance d = distance_to_equilibrium(prices, rep.apex);
    rep.distance = d.distance;
    rep.e = d.e;
    rep.e_defined = d.e_defined;
  }
  return rep;
}

}  // namespace tropreg
