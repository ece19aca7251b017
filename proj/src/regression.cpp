#include "tropreg/regression.hpp"

#include <algorithm>
#include <cmath>

namespace tropreg {

namespace {

struct Cleaned {
  TropMatrix V;
  Index dropped_rows, dropped_cols;
};

Index complement(const Index& s, std::size_t n) {
  std::vector<char> in(n, 0);
  for (int i : s) in[i] = 1;
  Index r;
  for (std::size_t i = 0; i < n; ++i)
    if (!in[i]) r.push_back(static_cast<int>(i));
  return r;
}

Cleaned drop_empty(const TropMatrix& V) {
  Cleaned c{V, V.empty_rows(), V.empty_cols()};
  if (!c.dropped_cols.empty()) c.V = c.V.select_columns(complement(c.dropped_cols, V.cols()));
  if (!c.dropped_rows.empty()) c.V = c.V.select_rows(complement(c.dropped_rows, V.rows()));
  return c;
}

Vec negate(const Vec& x) {
  Vec r(x);
  for (double& v : r) v = -v;
  return r;
}

Vec best_apex(const SpectralCertificate& c) { return canonicalize(c.eigenvector.empty() ? c.sub : c.eigenvector); }

}  // namespace

double configuration_distance(const TropMatrix& V, const Vec& a) {
  double d = 0;
  for (std::size_t k = 0; k < V.cols(); ++k) d = std::max(d, hyperplane_distance(V.column(k), a));
  return d;
}

double configuration_signed_distance(const TropMatrix& V, const Vec& a, const PartitionIJ& p) {
  double d = 0;
  for (std::size_t k = 0; k < V.cols(); ++k) d = std::max(d, signed_distance(V.column(k), a, p));
  return d;
}

InradiusResult inradius(const TropMatrix& V, const SolverConfig& cfg) {
  Cleaned cl = drop_empty(V);
  InradiusResult r;
  r.dropped_rows = cl.dropped_rows;
  r.dropped_cols = cl.dropped_cols;
  PlainOperator T(cl.V);
  r.cert = solve(T, cfg);
  if (is_bot(r.cert.rho)) {
    r.radius = kInf;
    return r;
  }
  r.radius = -r.cert.rho;
  if (r.cert.super_ok) {
    Vec c = negate(r.cert.super);
    if (!cl.dropped_rows.empty()) {
      Vec full(V.rows(), kBot);
      Index kept = complement(cl.dropped_rows, V.rows());
      for (std::size_t s = 0; s < kept.size(); ++s) full[kept[s]] = c[s];
      c = full;
    }
    r.center = c;
  }
  return r;
}

RegressionResult best_hyperplane(const TropMatrix& V, const SolverConfig& cfg) {
  RegressionResult r;
  Index er = V.empty_rows();
  if (!er.empty()) {
    // a_i = 0 on an identically -inf coordinate puts every point on H_a
    r.apex.assign(V.rows(), kBot);
    r.apex[er[0]] = 0.0;
    r.value = 0.0;
    r.apex_verified = true;
    r.cert.rho = r.cert.lower = r.cert.upper = 0.0;
    r.cert.converged = true;
    r.cert.note = "coordinate " + std::to_string(er[0] + 1) + " is -inf in every point";
    r.note = "coordinate " + std::to_string(er[0] + 1) + " is -inf in every point";
    return r;
  }
  Cleaned cl = drop_empty(V);
  r.dropped_cols = cl.dropped_cols;
  PlainOperator T(cl.V);
  r.cert = solve(T, cfg);
  const SpectralCertificate& c = r.cert;
  r.apex = best_apex(c);
  r.apex_verified = verify_sub(T, r.apex, c.rho, c.tol);
  if (is_bot(c.rho)) {
    r.value = kInf;
    return r;
  }
  r.value = -c.rho;
  if (c.super_ok) {
    r.ball_center = negate(c.super);
    r.ball_radius = r.value;
  }
  if (!c.eigenvector.empty()) {
    try {
      r.witnesses = witness_points(cl.V, c.eigenvector, std::max(c.tol, 1e-9));
      Index J = r.witnesses->columns;
      std::sort(J.begin(), J.end());
      J.erase(std::unique(J.begin(), J.end()), J.end());
      // indices refer to the cleaned matrix; map back
      Index kept = complement(cl.dropped_cols, V.cols());
      for (int& j : J) j = kept[j];
      for (int& j : r.witnesses->columns) j = kept[j];
      for (int& j : r.witnesses->sigma.sigma) j = kept[j];
      r.simplicial = J;
    } catch (const CertificateError& e) {
      r.note = e.what();
    }
  }
  return r;
}

WitnessReport witness_points(const TropMatrix& V, const Vec& a, double tol) {
  PlainOperator T(V);
  if (!all_finite(a)) throw CertificateError("witness points need a finite eigenvector");
  Vec d = sub(T(a), a);
  if (top(d) - bot(d) > 2 * tol) throw CertificateError("apex is not an eigenvector");
  WitnessReport w;
  const double rho = 0.5 * (top(d) + bot(d));
  w.value = -rho;
  w.sigma = T.extract_min_policy(a);
  const double slack = 4 * tol + 1e-12 * (1 + std::abs(rho));
  for (std::size_t i = 0; i < V.rows(); ++i) {
    int k = w.sigma.sigma[i];
    Vec x = V.column(k);
    double m = kBot;
    for (std::size_t j = 0; j < x.size(); ++j) m = std::max(m, x[j] + a[j]);
    if (x[i] + a[i] < m - slack)
      throw CertificateError("witness of sector " + std::to_string(i + 1) + " is not in its sector");
    if (std::abs(hyperplane_distance(x, a) - w.value) > slack)
      throw CertificateError("witness of sector " + std::to_string(i + 1) + " is not at the optimal distance");
    w.columns.push_back(k);
  }
  return w;
}

bool ball_in_column_space(const TropMatrix& V, const Vec& center, double r, double tol) {
  if (!all_finite(center)) return false;
  const double rr = std::max(0.0, r - tol);
  for (std::size_t i = 0; i < center.size(); ++i)
    for (double s : {rr, -rr}) {
      Vec x = center;
      x[i] += s;
      if (!in_column_space(V, x, 10 * tol)) return false;
    }
  return true;
}

SimplicialSupport simplicial_support(const TropMatrix& V, const Vec& a, double rho, double tol) {
  WitnessReport w = witness_points(V, a, tol);
  SimplicialSupport s;
  s.columns = w.sigma.sigma;
  std::sort(s.columns.begin(), s.columns.end());
  s.columns.erase(std::unique(s.columns.begin(), s.columns.end()), s.columns.end());
  s.ball_verified = ball_in_column_space(V.select_columns(s.columns), negate(a), -rho, tol);
  return s;
}

SignedRegressionResult regress_signed(const TropMatrix& V, const PartitionIJ& p, const SolverConfig& cfg) {
  SignedOperator T(V, p);
  SignedRegressionResult r;
  r.part = p;
  r.cert = solve(T, cfg);
  const SpectralCertificate& c = r.cert;
  r.apex = best_apex(c);
  r.apex_verified = verify_sub(T, r.apex, c.rho, c.tol);
  if (is_bot(c.rho)) return r;
  r.value = -c.rho;
  if (!c.super_ok) return r;
  // envelopes w^I, w^J built on V + u
  const Vec& u = c.super;
  const std::size_t n = V.rows();
  Index sigma = T.argmin_columns(u);
  auto shifted = [&](int i, int k) { return V(i, k) + u[i]; };
  Vec wI(n, kBot), wJ(n, kBot);
  for (const auto& [side, w] : {std::pair{&p.I, &wI}, std::pair{&p.J, &wJ}})
    for (int i : *side) {
      int k = sigma[i];
      for (std::size_t l = 0; l < n; ++l) (*w)[l] = std::max((*w)[l], shifted(static_cast<int>(l), k) - shifted(i, k));
    }
  Vec w(n);
  for (int l : p.I) w[l] = wI[l];
  for (int l : p.J) w[l] = wJ[l];
  if (!all_finite(w)) return r;
  r.interval_center = sub(w, u);
  r.interval_radius = r.value;
  const double t = std::max(c.tol, 1e-9);
  const double mu = std::max(0.0, r.value - t);
  r.interval_verified = true;
  for (double m : {-mu, 0.0, mu}) {
    Vec x = r.interval_center;
    for (int i : p.I) x[i] += m;
    if (!in_column_space(V, x, 10 * t)) r.interval_verified = false;
  }
  return r;
}

RegressionResult regress_typed(const TropMatrix& V, const Index& types, const SolverConfig& cfg,
                               bool allow_empty_classes) {
  const std::size_t n = V.rows();
  if (types.size() != V.cols()) throw std::invalid_argument("one type per column is required");
  if (!allow_empty_classes) {
    std::vector<int> count(n, 0);
    for (int t : types)
      if (t >= 0 && static_cast<std::size_t>(t) < n) ++count[t];
    for (std::size_t i = 0; i < n; ++i)
      if (!count[i]) throw std::invalid_argument("class " + std::to_string(i + 1) + " is empty");
  }
  TypedOperator T(V, types);
  RegressionResult r;
  r.cert = solve(T, cfg);
  const SpectralCertificate& c = r.cert;
  r.apex = best_apex(c);
  r.apex_verified = verify_sub(T, r.apex, c.rho, c.tol);
  r.value = is_bot(c.rho) ? kInf : -c.rho;
  r.class_distances.assign(n, 0.0);
  for (std::size_t k = 0; k < V.cols(); ++k) {
    int i = types[k];
    PartitionIJ pij;
    pij.I = {i};
    for (std::size_t l = 0; l < n; ++l)
      if (static_cast<int>(l) != i) pij.J.push_back(static_cast<int>(l));
    r.class_distances[i] = std::max(r.class_distances[i], signed_distance(V.column(k), r.apex, pij));
  }
  return r;
}

OneSidedResult one_sided_regression(const std::vector<Vec>& xs, const std::vector<Vec>& ys) {
  if (xs.empty() || xs.size() != ys.size()) throw std::invalid_argument("need a nonempty set of sample pairs");
  const std::size_t n = xs[0].size(), m = ys[0].size();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (xs[k].size() != n || ys[k].size() != m) throw DimensionError("samples of inconsistent size");
    if (!all_finite(xs[k]) || !all_finite(ys[k])) throw std::invalid_argument("samples must be finite");
  }
  OneSidedResult r;
  r.A_bar.assign(m, Vec(n, kInf));
  for (std::size_t k = 0; k < xs.size(); ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) r.A_bar[i][j] = std::min(r.A_bar[i][j], ys[k][i] - xs[k][j]);
  for (std::size_t k = 0; k < xs.size(); ++k)
    for (std::size_t i = 0; i < m; ++i) {
      double ax = kBot;
      for (std::size_t j = 0; j < n; ++j) ax = std::max(ax, r.A_bar[i][j] + xs[k][j]);
      r.delta = std::max(r.delta, std::abs(ys[k][i] - ax));
    }
  r.value = r.delta / 2;
  r.A_opt = r.A_bar;
  for (auto& row : r.A_opt)
    for (double& v : row) v += r.value;
  return r;
}

}  // namespace tropreg
