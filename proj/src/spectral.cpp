#include "tropreg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tropreg {

std::string to_string(Method m) {
  switch (m) {
    case Method::km: return "km";
    case Method::vi: return "vi";
    case Method::exact: return "exact";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "km") return Method::km;
  if (s == "vi") return Method::vi;
  if (s == "exact") return Method::exact;
  throw std::invalid_argument("unknown method: " + s);
}

void SolverConfig::validate() const {
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in (0,1)");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (max_iter <= 0) throw std::invalid_argument("max_iter must be positive");
}

// ---------------------------------------------------------------- rationals

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) num = -num, den = -den;
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) num /= g, den /= g;
  return {num, den};
}

std::string Rational::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

std::optional<Rational> simplest_rational_in(double lo, double hi, long long max_den) {
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) return std::nullopt;
  double c = std::ceil(lo);
  if (c <= hi) return make_rational(static_cast<long long>(c), 1);
  // lo and hi share the integer part; descend the Stern-Brocot tree of (0,1)
  long long fl = static_cast<long long>(std::floor(lo));
  long double a = lo - fl, b = hi - fl;
  long long pn = 0, pd = 1, qn = 1, qd = 1;  // bounds pn/pd < x < qn/qd
  while (true) {
    long long mn = pn + qn, md = pd + qd;
    if (md > max_den) return std::nullopt;
    long double m = static_cast<long double>(mn) / md;
    if (m < a) {
      // move the left bound as far right as possible in one batch
      long double t = (a * pd - pn) / (qn - a * qd);
      long long steps = std::max(1LL, static_cast<long long>(std::ceil(t)) - 1);
      if (pd + steps * qd > max_den) steps = std::max(1LL, (max_den - pd) / qd);
      pn += steps * qn;
      pd += steps * qd;
      if (static_cast<long double>(pn) / pd >= a && static_cast<long double>(pn) / pd <= b)
        return make_rational(pn + fl * pd, pd);
    } else if (m > b) {
      long double t = (qn - b * qd) / (b * pd - pn);
      long long steps = std::max(1LL, static_cast<long long>(std::ceil(t)) - 1);
      if (qd + steps * pd > max_den) steps = std::max(1LL, (max_den - qd) / pd);
      qn += steps * pn;
      qd += steps * pd;
      if (static_cast<long double>(qn) / qd >= a && static_cast<long double>(qn) / qd <= b)
        return make_rational(qn + fl * qd, qd);
    } else {
      return make_rational(mn + fl * md, md);
    }
    if (pd > max_den && qd > max_den) return std::nullopt;
  }
}

namespace {
long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }
bool rat_less(const Rational& x, const Rational& y) {
  return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
}
}  // namespace

std::vector<Rational> rationals_between(long long lo_num, long long lo_den, long long hi_num, long long hi_den,
                                        long long max_den) {
  std::vector<Rational> out;
  for (long long q = 1; q <= max_den; ++q) {
    long long p0 = ceil_div(lo_num * q, lo_den), p1 = floor_div(hi_num * q, hi_den);
    for (long long p = p0; p <= p1; ++p)
      if (std::gcd(p < 0 ? -p : p, q) == 1) out.push_back({p, q});
  }
  std::sort(out.begin(), out.end(), rat_less);
  return out;
}

// ---------------------------------------------------------------- helpers

PositiveCycle::PositiveCycle(Index c, double w)
    : std::runtime_error("positive cycle of weight " + std::to_string(w)), cycle(std::move(c)), weight(w) {}

std::pair<double, double> diameter_bounds(const TropMatrix& V) {
  double W = 0, Wp = 0;
  for (std::size_t k = 0; k < V.cols(); ++k) {
    Vec c = V.column(k);
    double h = hilbert_norm(c);
    Wp = std::max(Wp, h);
    W = std::max(W, all_finite(c) ? h : kInf);
  }
  return {W, Wp};
}

Index finite_part(const ShapleyOperator& T) {
  const std::size_t n = T.dim();
  Vec x(n, 0.0);
  for (std::size_t it = 0; it <= n; ++it) {
    Vec y = T(x);
    Vec nx(n);
    for (std::size_t i = 0; i < n; ++i) nx[i] = is_bot(y[i]) ? kBot : 0.0;
    if (nx == x) break;
    x = nx;
  }
  return support(x);
}

bool verify_sub(const ShapleyOperator& T, const Vec& b, double rho, double tol) {
  if (b.size() != T.dim() || is_bot_vector(b)) return false;
  if (is_bot(rho)) return true;
  Vec y = T(b);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (is_bot(b[i])) continue;
    if (!(y[i] >= rho + b[i] - tol)) return false;
  }
  return true;
}

bool verify_super(const ShapleyOperator& T, const Vec& c, double rho, double tol) {
  if (c.size() != T.dim() || !all_finite(c)) return false;
  Vec y = T(c);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!(y[i] <= rho + c[i] + tol)) return false;
  return true;
}

double eigen_residual(const ShapleyOperator& T, const Vec& u) {
  Vec y = T(u);
  double hi = kBot, lo = kInf;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (is_bot(u[i]) != is_bot(y[i])) return kInf;
    if (is_bot(u[i])) continue;
    hi = std::max(hi, y[i] - u[i]);
    lo = std::min(lo, y[i] - u[i]);
  }
  return is_bot(hi) ? 0.0 : hi - lo;
}

namespace {

double max_abs_entry(const TropMatrix& V) {
  double m = 0;
  for (std::size_t i = 0; i < V.rows(); ++i)
    for (int k : V.row_support(i)) m = std::max(m, std::abs(V(i, k)));
  return m;
}

double cert_tol(double scale) { return 1e-9 * (1.0 + scale); }

void fill_diameters(SpectralCertificate& c, const ShapleyOperator& T) {
  auto [W, Wp] = diameter_bounds(T.data());
  c.W = W;
  c.W_prime = Wp;
}

SpectralCertificate infinite_certificate(const ShapleyOperator& T, Method m) {
  SpectralCertificate c;
  c.method = m;
  c.rho = c.lower = c.upper = kBot;
  c.sub.assign(T.dim(), kBot);
  c.sub[0] = 0.0;
  c.sub_ok = true;
  c.converged = true;
  c.residual = 0;
  c.note = "T^n(0) is BOT";
  fill_diameters(c, T);
  return c;
}

Vec embed(const Index& part, std::size_t n, const Vec& xs) {
  Vec x(n, kBot);
  for (std::size_t s = 0; s < part.size(); ++s) x[part[s]] = xs[s];
  return x;
}

OperatorPtr restrict_to(const ShapleyOperator& T, const Index& part) {
  if (part.size() == T.dim()) return T.rebuild(T.data());
  return std::make_unique<RestrictedOperator>(T, part);
}

// Linearization of T^sigma without building the policy operator.
TropMatrix linearize(const TropMatrix& V, const Index& sigma) {
  const std::size_t n = V.rows();
  std::vector<Vec> rows(n, Vec(n, kBot));
  for (std::size_t i = 0; i < n; ++i) {
    int k = sigma[i];
    for (int j : V.col_support(k))
      if (j != static_cast<int>(i)) rows[i][j] = V(j, k) - V(i, k);
  }
  return TropMatrix::from_rows(rows);
}

}  // namespace

int decimal_scale(const TropMatrix& V, int max_digits) {
  double s = 1;
  for (int d = 0; d <= max_digits; ++d, s *= 10) {
    bool ok = true;
    for (std::size_t i = 0; i < V.rows() && ok; ++i)
      for (int k : V.row_support(i)) {
        double v = V(i, k) * s;
        if (std::abs(v) > 1e12 || std::abs(v - std::round(v)) > 1e-9 * std::max(1.0, std::abs(v))) {
          ok = false;
          break;
        }
      }
    if (ok) return d;
  }
  return -1;
}

// ---------------------------------------------------------------- KM

SpectralCertificate km_solve(const ShapleyOperator& T, const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t n = T.dim();
  SpectralCertificate c;
  c.method = Method::km;
  fill_diameters(c, T);
  Vec v(n, 0.0), t = T(v);
  if (!all_finite(t)) throw DegenerateOperator("operator sends a finite vector to a vector with -inf entries");
  long k = 0;
  Vec r;
  for (;; ++k) {
    r = sub(t, v);
    double res = top(r) - bot(r);
    if (k <= cfg.residual_log_limit) c.residual_log.emplace_back(k, res);
    c.residual = res;
    if (res <= cfg.epsilon) {
      c.converged = true;
      break;
    }
    if (k >= cfg.max_iter) break;
    double tt = top(t);
    for (std::size_t i = 0; i < n; ++i) v[i] = (1 - cfg.gamma) * v[i] + cfg.gamma * (t[i] - tt);
    t = T(v);
    if (!all_finite(t)) throw DegenerateOperator("operator sends a finite vector to a vector with -inf entries");
  }
  c.iterations = k;
  c.lower = bot(r);
  c.upper = top(r);
  c.rho = 0.5 * (c.lower + c.upper);
  c.tol = 0.5 * (c.upper - c.lower) + cert_tol(std::abs(c.rho) + top(v) - bot(v));
  Vec u = canonicalize(v);
  if (c.converged) c.eigenvector = u;
  c.sub = u;
  c.super = u;
  c.sub_ok = verify_sub(T, c.sub, c.rho, c.tol);
  c.super_ok = verify_super(T, c.super, c.rho, c.tol);
  return c;
}

// ---------------------------------------------------------------- VI

SpectralCertificate value_iterate(const ShapleyOperator& T, long k_max, double gap_tol) {
  if (k_max <= 0) throw std::invalid_argument("k_max must be positive");
  const std::size_t n = T.dim();
  SpectralCertificate c;
  c.method = Method::vi;
  fill_diameters(c, T);
  // first pass: bounds
  Vec v(n, 0.0);
  long k = 0;
  double hi = 0, lo = 0;
  while (k < k_max) {
    v = T(v);
    ++k;
    if (!all_finite(v)) throw DegenerateOperator("operator sends a finite vector to a vector with -inf entries");
    hi = top(v);
    lo = bot(v);
    if ((hi - lo) / static_cast<double>(k) <= gap_tol) break;
  }
  c.iterations = k;
  c.upper = hi / k;
  c.lower = lo / k;
  c.converged = (c.upper - c.lower) <= gap_tol;
  // second pass: regularized super and sub vectors over v^0..v^{k-1}
  Vec w(n, kInf), z(n, kBot), x(n, 0.0);
  for (long m = 0; m < k; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = std::min(w[i], x[i] - m * c.upper);
      z[i] = std::max(z[i], x[i] - m * c.lower);
    }
    if (m + 1 < k) x = T(x);
  }
  c.rho = 0.5 * (c.lower + c.upper);
  c.super = canonicalize(w);
  c.sub = canonicalize(z);
  double mag = std::max(hilbert_norm(w), hilbert_norm(z));
  c.tol = 0.5 * (c.upper - c.lower) + cert_tol(std::abs(c.rho) + mag);
  c.residual = eigen_residual(T, c.super);
  c.sub_ok = verify_sub(T, c.sub, c.rho, c.tol);
  c.super_ok = verify_super(T, c.super, c.rho, c.tol);
  return c;
}

// ---------------------------------------------------------------- exact

namespace {

struct IntegerIteration {
  const ShapleyOperator& G;  // integer data
  double a;                  // candidate eigenvalue in G units
  double bound;              // magnitude cap
  long cap;                  // iteration cap

  // Largest b <= 0 with G(b) >= a + b, coordinates below -bound dropped to -inf.
  std::optional<Vec> sub() const {
    Vec b(G.dim(), 0.0);
    for (long it = 0; it < cap; ++it) {
      Vec y = G(b);
      Vec nb(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) {
        nb[i] = std::min(b[i], y[i] - a);
        if (nb[i] < -bound) nb[i] = kBot;
      }
      if (nb == b) {
        if (verify_sub(G, b, a, 0.0)) return b;
        return std::nullopt;
      }
      if (is_bot_vector(nb)) return std::nullopt;
      b = std::move(nb);
    }
    return std::nullopt;
  }

  // Least c >= 0 with G(c) <= a + c.
  std::optional<Vec> super() const {
    Vec c(G.dim(), 0.0);
    for (long it = 0; it < cap; ++it) {
      Vec y = G(c);
      Vec nc(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) {
        nc[i] = std::max(c[i], y[i] - a);
        if (nc[i] > bound) return std::nullopt;
      }
      if (nc == c) {
        if (verify_super(G, c, a, 0.0)) return c;
        return std::nullopt;
      }
      c = std::move(nc);
    }
    return std::nullopt;
  }

  // Iterates x <- G(x) - a downward from a super-fixed point.
  std::optional<Vec> eigen_from(Vec x) const {
    for (long it = 0; it < cap; ++it) {
      Vec y = add_scalar(G(x), -a);
      if (y == x) return x;
      if (!all_finite(y) || bot(y) < -bound) return std::nullopt;
      x = std::move(y);
    }
    return std::nullopt;
  }
};

Vec divided(const Vec& x, double s) {
  Vec r(x);
  for (double& v : r)
    if (!is_bot(v)) v /= s;
  return r;
}

}  // namespace

SpectralCertificate rho_exact(const ShapleyOperator& T, const SolverConfig& cfg) {
  const std::size_t n = T.dim();
  Index part = finite_part(T);
  if (part.empty()) {
    auto c = infinite_certificate(T, Method::exact);
    c.rho_exact.reset();
    return c;
  }
  SpectralCertificate c;
  c.method = Method::exact;
  c.part = part;
  fill_diameters(c, T);

  const int d = decimal_scale(T.data());
  const std::size_t ns = part.size();
  const auto* plain = dynamic_cast<const PlainOperator*>(&T);

  auto fallback = [&](const std::string& why, double lo, double hi) {
    c.note = why;
    if (plain) {
      double prods = 1;
      for (std::size_t i = 0; i < n; ++i) prods *= static_cast<double>(plain->data().row_support(i).size());
      if (prods <= cfg.policy_budget) {
        double r = brute_force_rho(*plain, cfg.policy_budget);
        c.rho = c.lower = c.upper = r;
        c.tol = cert_tol(std::abs(r));
        c.note += "; value from policy enumeration";
        try {
          c.sub = construct_sub_eigenvector(T, r, {}, c.tol);
          c.sub_ok = true;
        } catch (const CertificateError&) {
        }
        try {
          c.super = construct_super_eigenvector(*plain, r, {}, c.tol);
          c.super_ok = true;
        } catch (const CertificateError&) {
        }
        c.converged = c.sub_ok;
        return c;
      }
    }
    c.lower = lo;
    c.upper = hi;
    c.rho = 0.5 * (lo + hi);
    c.converged = false;
    return c;
  };

  if (d < 0) return fallback("data are not decimal with at most 6 digits", kBot, kInf);
  const double scale = std::pow(10.0, d);
  TropMatrix Z = T.data().scaled(scale);
  {
    std::vector<Vec> rows = Z.to_rows();
    for (auto& r : rows)
      for (double& v : r)
        if (!is_bot(v)) v = std::round(v);
    Z = TropMatrix::from_rows(rows);
  }
  OperatorPtr Tz = T.rebuild(Z);
  OperatorPtr TzS = restrict_to(*Tz, part);
  const double M = max_abs_entry(Z);

  // bracket rho(Tz) with value iteration; all values stay integral
  Vec v(ns, 0.0);
  long k = 0;
  long long hi_num = 0, lo_num = 0;
  const long kcap = std::min<long>(cfg.max_iter, 200000);
  while (k < kcap) {
    v = TzS->apply(v);
    ++k;
    hi_num = static_cast<long long>(top(v));
    lo_num = static_cast<long long>(bot(v));
    if (static_cast<__int128>(hi_num - lo_num) * static_cast<long long>(ns * ns) < k) break;
  }
  c.iterations = k;
  const double lo_d = static_cast<double>(lo_num) / k / scale, hi_d = static_cast<double>(hi_num) / k / scale;
  std::vector<Rational> cand = rationals_between(lo_num, k, hi_num, k, static_cast<long long>(ns));

  for (int round = 0; round < 4; ++round) {
    const double grow = std::pow(4.0, round);
    // F(x) = G(x) - num with G built on den * Z, so every value stays integral
    auto iteration = [&](const Rational& r, const ShapleyOperator& G) {
      double q = static_cast<double>(r.den), a = static_cast<double>(r.num);
      double bound = grow * (4.0 * static_cast<double>(n) * (2.0 * M * q + std::abs(a)) + 16.0);
      long cap = static_cast<long>(std::min(4.0 * static_cast<double>(n) * bound + 64.0, 4e6));
      return IntegerIteration{G, a, bound, cap};
    };
    // largest candidate admitting a sub-eigenvector
    long best = -1;
    std::optional<Vec> best_sub;
    long l = 0, r = static_cast<long>(cand.size()) - 1;
    while (l <= r) {
      long mid = (l + r) / 2;
      OperatorPtr G = TzS->scaled(static_cast<double>(cand[mid].den));
      auto b = iteration(cand[mid], *G).sub();
      if (b) {
        best = mid;
        best_sub = std::move(b);
        l = mid + 1;
      } else {
        r = mid - 1;
      }
    }
    if (best < 0) continue;
    const Rational lam = cand[best];
    OperatorPtr GS = TzS->scaled(static_cast<double>(lam.den));
    auto cS = iteration(lam, *GS).super();
    if (!cS) continue;

    // certified: rho(Tz) = lam on the part, hence rho(T) = lam / scale
    const double unit = static_cast<double>(lam.den) * scale;
    c.rho_exact = make_rational(lam.num, lam.den * static_cast<long long>(std::llround(scale)));
    c.rho = c.rho_exact->value();
    c.lower = c.upper = c.rho;
    c.tol = cert_tol(std::abs(c.rho) + M / scale);
    c.sub = canonicalize(divided(embed(part, n, *best_sub), unit));
    OperatorPtr GF = Tz->scaled(static_cast<double>(lam.den));
    IntegerIteration runF = iteration(lam, *GF);
    std::optional<Vec> cF = (ns == n) ? cS : runF.super();
    if (cF) {
      c.super = canonicalize(divided(*cF, unit));
      if (ns == n) {
        auto u = runF.eigen_from(*cF);
        if (u) c.eigenvector = canonicalize(divided(*u, unit));
      }
    } else {
      c.note = "no finite super-eigenvector on the whole space";
    }
    c.converged = true;
    c.residual = c.eigenvector.empty() ? (c.super.empty() ? kInf : eigen_residual(T, c.super))
                                       : eigen_residual(T, c.eigenvector);
    c.sub_ok = verify_sub(T, c.sub, c.rho, c.tol);
    c.super_ok = !c.super.empty() && verify_super(T, c.super, c.rho, c.tol);
    if (!c.sub_ok) throw CertificateError("exact sub-eigenvector failed re-verification");
    return c;
  }
  return fallback("exact certification did not close", lo_d, hi_d);
}

// ---------------------------------------------------------------- dispatcher

SpectralCertificate solve(const ShapleyOperator& T, const SolverConfig& cfg) {
  cfg.validate();
  if (cfg.method == Method::exact) return rho_exact(T, cfg);
  const std::size_t n = T.dim();
  Index part = finite_part(T);
  if (part.empty()) return infinite_certificate(T, cfg.method);
  OperatorPtr TS = restrict_to(T, part);
  SpectralCertificate c = cfg.method == Method::km ? km_solve(*TS, cfg) : value_iterate(*TS, cfg.max_iter, cfg.epsilon);
  fill_diameters(c, T);
  c.part = part;
  if (part.size() != n) {
    c.sub = embed(part, n, c.sub);
    c.eigenvector.clear();
    Vec hint = embed(part, n, c.super);
    c.super.clear();
    if (const auto* plain = dynamic_cast<const PlainOperator*>(&T)) {
      try {
        c.super = construct_super_eigenvector(*plain, c.rho + c.tol, hint, c.tol);
      } catch (const std::exception&) {
      }
    }
  }
  c.sub_ok = verify_sub(T, c.sub, c.rho, c.tol);
  c.super_ok = !c.super.empty() && verify_super(T, c.super, c.rho, c.tol);
  return c;
}

// ---------------------------------------------------------------- constructions

Vec construct_sub_eigenvector(const ShapleyOperator& T, double rho, const Vec& hint, double tol) {
  const std::size_t n = T.dim();
  if (!hint.empty() && verify_sub(T, hint, rho, tol)) return canonicalize(hint);
  if (is_bot(rho)) {
    Vec b(n, kBot);
    b[0] = 0;
    return b;
  }
  const double M = max_abs_entry(T.data());
  const double bound = 4.0 * n * (2.0 * M + std::abs(rho)) + 16.0;
  const double lam = rho - 0.5 * tol;
  Vec b(n, 0.0);
  for (long it = 0; it < 2000000; ++it) {
    Vec y = T(b);
    Vec nb(n);
    double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      nb[i] = std::min(b[i], y[i] - lam);
      if (nb[i] < -bound) nb[i] = kBot;
      if (!is_bot(b[i])) change = std::max(change, is_bot(nb[i]) ? kInf : b[i] - nb[i]);
    }
    if (is_bot_vector(nb)) break;
    b = std::move(nb);
    if (change <= 0.25 * tol) break;
  }
  if (!verify_sub(T, b, rho, tol)) throw CertificateError("could not certify a sub-eigenvector");
  return canonicalize(b);
}

Vec construct_super_eigenvector(const PlainOperator& T, double rho, const Vec& hint, double tol) {
  if (!std::isfinite(rho)) throw std::invalid_argument("construct_super_eigenvector needs a finite rho");
  const std::size_t n = T.dim();
  std::vector<Vec> hints;
  if (!hint.empty()) hints.push_back(hint);
  Vec v(n, 0.0);
  for (std::size_t m = 0; m < 4 * n + 4; ++m) {
    v = T(v);
    if (is_bot_vector(v)) break;
    hints.push_back(v);
  }
  for (const Vec& h : hints) {
    MinPolicy s;
    try {
      s = T.extract_min_policy(h);
    } catch (const std::exception&) {
      continue;
    }
    TropMatrix B = linearize(T.data(), s.sigma);
    for (std::size_t i = 0; i < n; ++i)
      for (int j : B.row_support(i)) B.set(i, j, B(i, j) - rho);
    KleeneStar ks;
    try {
      ks = kleene_star(B, tol);
    } catch (const PositiveCycle&) {
      continue;
    }
    Vec c(n, kBot);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c[i] = std::max(c[i], ks.star(i, j));
    if (verify_super(T, c, rho, tol)) return canonicalize(c);
  }
  // exact route for decimal data
  if (decimal_scale(T.data()) >= 0) {
    SpectralCertificate e = rho_exact(T);
    if (!e.super.empty() && e.rho <= rho + tol && verify_super(T, e.super, rho, tol)) return e.super;
  }
  throw CertificateError("could not certify a super-eigenvector");
}

KleeneStar kleene_star(const TropMatrix& B, double tol) {
  const std::size_t n = B.rows();
  if (B.cols() != n) throw DimensionError("kleene_star needs a square matrix");
  // positive cycle detection (longest-path Bellman-Ford from a virtual source)
  Vec dist(n, 0.0);
  Index pred(n, -1);
  int last = -1;
  for (std::size_t round = 0; round < n; ++round) {
    last = -1;
    for (std::size_t u = 0; u < n; ++u)
      for (int w : B.row_support(u))
        if (dist[u] + B(u, w) > dist[w] + tol) {
          dist[w] = dist[u] + B(u, w);
          pred[w] = static_cast<int>(u);
          last = w;
        }
    if (last < 0) break;
  }
  if (last >= 0) {
    int x = last;
    for (std::size_t i = 0; i < n; ++i) x = pred[x];
    Index cyc{x};
    for (int y = pred[x]; y != x; y = pred[y]) cyc.push_back(y);
    std::reverse(cyc.begin(), cyc.end());
    double w = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i) w += B(cyc[i], cyc[(i + 1) % cyc.size()]);
    throw PositiveCycle(cyc, w);
  }
  std::vector<Vec> D = B.to_rows();
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i) {
      if (is_bot(D[i][m])) continue;
      for (std::size_t j = 0; j < n; ++j) D[i][j] = std::max(D[i][j], D[i][m] + D[m][j]);
    }
  for (std::size_t i = 0; i < n; ++i) D[i][i] = std::max(D[i][i], 0.0);
  for (std::size_t i = 0; i < n; ++i)
    if (D[i][i] <= tol) D[i][i] = 0.0;
  return {B, TropMatrix::from_rows(D)};
}

double one_player_eigenvalue(const TropMatrix& M) {
  const std::size_t n = M.rows();
  if (n == 0) throw std::invalid_argument("empty graph");
  if (M.cols() != n) throw DimensionError("one_player_eigenvalue needs a square matrix");
  std::vector<Vec> D(n + 1, Vec(n, kBot));
  std::fill(D[0].begin(), D[0].end(), 0.0);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t u = 0; u < n; ++u) {
      if (is_bot(D[k - 1][u])) continue;
      for (int v : M.row_support(u)) D[k][v] = std::max(D[k][v], D[k - 1][u] + M(u, v));
    }
  double best = kBot;
  for (std::size_t v = 0; v < n; ++v) {
    if (is_bot(D[n][v])) continue;
    double worst = kInf;
    for (std::size_t k = 0; k < n; ++k)
      if (!is_bot(D[k][v])) worst = std::min(worst, (D[n][v] - D[k][v]) / static_cast<double>(n - k));
    best = std::max(best, worst);
  }
  return best;
}

double brute_force_rho(const PlainOperator& T, double budget) {
  const TropMatrix& V = T.data();
  const std::size_t n = V.rows();
  double count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= static_cast<double>(V.row_support(i).size());
  if (count > budget) throw BudgetExceeded("policy enumeration exceeds the budget");
  std::vector<std::size_t> pos(n, 0);
  Index sigma(n);
  double best = kInf;
  while (true) {
    for (std::size_t i = 0; i < n; ++i) sigma[i] = V.row_support(i)[pos[i]];
    best = std::min(best, one_player_eigenvalue(linearize(V, sigma)));
    std::size_t i = 0;
    while (i < n && ++pos[i] == V.row_support(i).size()) pos[i++] = 0;
    if (i == n) break;
  }
  return best;
}

}  // namespace tropreg
