#pragma once
// Reference implementations used only by the tests. They follow the defining
// formulas directly and share no code with the library beyond TropMatrix.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "tropreg/tropical_core.hpp"

namespace oracle {

using tropreg::Index;
using tropreg::TropMatrix;
using tropreg::Vec;

inline constexpr double NEG = -std::numeric_limits<double>::infinity();
inline constexpr double POS = std::numeric_limits<double>::infinity();

// T_i(x) = min_{k: V_ik finite} (-V_ik + max_{j != i} (V_jk + x_j))
inline Vec plain(const TropMatrix& V, const Vec& x) {
  const std::size_t n = V.rows(), p = V.cols();
  Vec out(n, POS);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < p; ++k) {
      if (V(i, k) == NEG) continue;
      double m = NEG;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) m = std::max(m, V(j, k) + x[j]);
      out[i] = std::min(out[i], -V(i, k) + m);
    }
  return out;
}

inline Vec signed_op(const TropMatrix& V, const Index& I, const Vec& x) {
  const std::size_t n = V.rows();
  std::vector<char> inI(n, 0);
  for (int i : I) inI.at(i) = 1;
  Vec out(n, POS);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < V.cols(); ++k) {
      if (V(l, k) == NEG) continue;
      double m = NEG;
      for (std::size_t j = 0; j < n; ++j)
        if (inI[j] != inI[l]) m = std::max(m, V(j, k) + x[j]);
      out[l] = std::min(out[l], -V(l, k) + m);
    }
  return out;
}

// Pointwise min over classes i of the signed operator with I = {i} applied
// to the columns of class i.
inline Vec typed(const TropMatrix& V, const Index& types, const Vec& x) {
  const std::size_t n = V.rows();
  Vec out(n, POS);
  for (std::size_t i = 0; i < n; ++i) {
    Index cols;
    for (std::size_t k = 0; k < V.cols(); ++k)
      if (types[k] == static_cast<int>(i)) cols.push_back(static_cast<int>(k));
    if (cols.empty()) continue;
    Vec part = signed_op(V.select_columns(cols), {static_cast<int>(i)}, x);
    for (std::size_t l = 0; l < n; ++l) out[l] = std::min(out[l], part[l]);
  }
  return out;
}

// Max cycle mean by enumerating simple cycles from their smallest vertex.
inline double max_cycle_mean(const std::vector<Vec>& M) {
  const int n = static_cast<int>(M.size());
  double best = NEG;
  std::vector<int> path;
  std::vector<char> used(n, 0);
  std::function<void(int, int, double)> dfs = [&](int start, int v, double w) {
    for (int u = start; u < n; ++u) {
      if (M[v][u] == NEG) continue;
      if (u == start) {
        best = std::max(best, (w + M[v][u]) / static_cast<double>(path.size()));
      } else if (!used[u]) {
        used[u] = 1;
        path.push_back(u);
        dfs(start, u, w + M[v][u]);
        path.pop_back();
        used[u] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, 0);
    used[s] = 1;
    dfs(s, s, 0.0);
  }
  return best;
}

// rho(T_V) = min over Min policies of the max cycle mean of the linearized game.
inline double rho(const TropMatrix& V) {
  const std::size_t n = V.rows();
  std::vector<Index> acts(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < V.cols(); ++k)
      if (V(i, k) != NEG) acts[i].push_back(static_cast<int>(k));
  double best = POS;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<Vec> M(n, Vec(n, NEG));
    for (std::size_t i = 0; i < n; ++i) {
      int k = acts[i][pick[i]];
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) M[i][j] = -V(i, k) + V(j, k);
    }
    best = std::min(best, max_cycle_mean(M));
    std::size_t t = 0;
    while (t < n && ++pick[t] == acts[t].size()) pick[t++] = 0;
    if (t == n) break;
  }
  return best;
}

inline double plain_distance(const Vec& x, const Vec& a) {
  Vec s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + a[i];
  std::sort(s.rbegin(), s.rend());
  if (s[0] == NEG) return 0;
  if (s.size() < 2 || s[1] == NEG) return POS;
  return s[0] - s[1];
}

inline double signed_distance(const Vec& x, const Vec& a, const Index& I) {
  std::vector<char> inI(x.size(), 0);
  for (int i : I) inI.at(i) = 1;
  double mi = NEG, mj = NEG;
  for (std::size_t i = 0; i < x.size(); ++i) (inI[i] ? mi : mj) = std::max(inI[i] ? mi : mj, x[i] + a[i]);
  if (mi == NEG && mj == NEG) return 0;
  return std::abs(mi - mj);
}

// Apex grid search for signed regression on n = 3: a_1 = 0 fixed, the other
// coordinates range over [-R, R] with the given step, or -inf.
inline double signed_grid(const TropMatrix& V, const Index& I, double R, double step) {
  std::vector<double> vals{NEG};
  for (double t = -R; t <= R + 1e-12; t += step) vals.push_back(t);
  double best = POS;
  for (double a2 : vals)
    for (double a3 : vals) {
      Vec a{0.0, a2, a3};
      double worst = 0;
      for (std::size_t k = 0; k < V.cols() && worst < best; ++k) worst = std::max(worst, signed_distance(V.column(k), a, I));
      best = std::min(best, worst);
    }
  return best;
}

// Existence of a nonempty K != [p] such that every column outside K has at
// least two finite entries outside the union of supports of K.
inline bool dominions_exist(const TropMatrix& V) {
  const std::size_t n = V.rows(), p = V.cols();
  for (unsigned K = 1; K + 1 < (1u << p); ++K) {
    std::vector<char> S(n, 0);
    for (std::size_t k = 0; k < p; ++k)
      if (K >> k & 1)
        for (std::size_t i = 0; i < n; ++i)
          if (V(i, k) != NEG) S[i] = 1;
    bool ok = true;
    for (std::size_t k = 0; k < p && ok; ++k) {
      if (K >> k & 1) continue;
      int outside = 0;
      for (std::size_t i = 0; i < n; ++i) outside += V(i, k) != NEG && !S[i];
      ok = outside >= 2;
    }
    if (ok) return true;
  }
  return false;
}

inline TropMatrix random_integer(std::mt19937_64& g, std::size_t n, std::size_t p, int lo, int hi,
                                 double bot_prob = 0.0) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::uniform_real_distribution<double> u(0, 1);
  TropMatrix V(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < p; ++k) V.set(i, k, u(g) < bot_prob ? NEG : d(g));
  return V;
}

inline TropMatrix random_real(std::mt19937_64& g, std::size_t n, std::size_t p, double lo, double hi,
                              double bot_prob = 0.0) {
  std::uniform_real_distribution<double> d(lo, hi), u(0, 1);
  TropMatrix V(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < p; ++k) V.set(i, k, u(g) < bot_prob ? NEG : d(g));
  return V;
}

// Random matrix with no identically -inf row or column.
inline TropMatrix random_valid(std::mt19937_64& g, std::size_t n, std::size_t p, int lo, int hi, double bot_prob) {
  while (true) {
    TropMatrix V = random_integer(g, n, p, lo, hi, bot_prob);
    if (V.empty_rows().empty() && V.empty_cols().empty()) return V;
  }
}

// Projective equality: x - y constant on a common support.
inline bool near(double a, double b, double tol) { return a == b || std::abs(a - b) <= tol; }

inline bool proj_equal(const Vec& x, const Vec& y, double tol) {
  if (x.size() != y.size()) return false;
  double c = std::nan("");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((x[i] == NEG) != (y[i] == NEG)) return false;
    if (x[i] == NEG) continue;
    if (std::isnan(c)) c = x[i] - y[i];
    if (std::abs(x[i] - y[i] - c) > tol) return false;
  }
  return true;
}

}  // namespace oracle
