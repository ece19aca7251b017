#include "tropreg/tropical_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tropreg {

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, double fill)
    : n_(rows), p_(cols), a_(rows * cols, fill) {
  rebuild();
}

TropMatrix TropMatrix::from_rows(const std::vector<Vec>& rows) {
  TropMatrix m;
  m.n_ = rows.size();
  m.p_ = rows.empty() ? 0 : rows[0].size();
  m.a_.reserve(m.n_ * m.p_);
  for (const auto& r : rows) {
    if (r.size() != m.p_) throw DimensionError("ragged rows");
    m.a_.insert(m.a_.end(), r.begin(), r.end());
  }
  for (double v : m.a_)
    if (std::isnan(v) || v == kInf) throw ValidationError("entries must be finite or -inf");
  m.rebuild();
  return m;
}

void TropMatrix::set(std::size_t i, std::size_t k, double v) {
  if (std::isnan(v) || v == kInf) throw ValidationError("entries must be finite or -inf");
  a_[i * p_ + k] = v;
  rebuild();
}

void TropMatrix::rebuild() {
  col_sup_.assign(p_, {});
  row_sup_.assign(n_, {});
  nnz_ = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < p_; ++k)
      if (!is_bot(a_[i * p_ + k])) {
        col_sup_[k].push_back(static_cast<int>(i));
        row_sup_[i].push_back(static_cast<int>(k));
        ++nnz_;
      }
}

Vec TropMatrix::column(std::size_t k) const {
  Vec c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, k);
  return c;
}

Vec TropMatrix::row(std::size_t i) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * p_),
             a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * p_));
}

std::vector<Vec> TropMatrix::to_rows() const {
  std::vector<Vec> r;
  for (std::size_t i = 0; i < n_; ++i) r.push_back(row(i));
  return r;
}

TropMatrix TropMatrix::select_columns(const Index& cols) const {
  TropMatrix m(n_, cols.size());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t c = 0; c < cols.size(); ++c) m.a_[i * cols.size() + c] = (*this)(i, cols[c]);
  m.rebuild();
  return m;
}

TropMatrix TropMatrix::select_rows(const Index& rows) const {
  TropMatrix m(rows.size(), p_);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < p_; ++k) m.a_[r * p_ + k] = (*this)(rows[r], k);
  m.rebuild();
  return m;
}

TropMatrix TropMatrix::scaled(double s) const {
  TropMatrix m = *this;
  for (double& v : m.a_)
    if (!is_bot(v)) v *= s;
  return m;
}

Index TropMatrix::empty_rows() const {
  Index r;
  for (std::size_t i = 0; i < n_; ++i)
    if (row_sup_[i].empty()) r.push_back(static_cast<int>(i));
  return r;
}

Index TropMatrix::empty_cols() const {
  Index r;
  for (std::size_t k = 0; k < p_; ++k)
    if (col_sup_[k].empty()) r.push_back(static_cast<int>(k));
  return r;
}

bool TropMatrix::is_integer() const {
  return std::all_of(a_.begin(), a_.end(), [](double v) { return is_bot(v) || v == std::round(v); });
}

void TropMatrix::validate() const {
  if (n_ == 0 || p_ == 0) throw ValidationError("empty matrix");
  auto r = empty_rows();
  if (!r.empty()) throw ValidationError("row " + std::to_string(r[0] + 1) + " is identically -inf");
  auto c = empty_cols();
  if (!c.empty()) throw ValidationError("column " + std::to_string(c[0] + 1) + " is identically -inf");
}

TropMatrix identity_matrix(std::size_t n) {
  TropMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 0.0);
  return m;
}

double top(const Vec& x) {
  double t = kBot;
  for (double v : x) t = std::max(t, v);
  return t;
}

double bot(const Vec& x) {
  if (x.empty()) return kBot;
  double t = kInf;
  for (double v : x) t = std::min(t, v);
  return t;
}

bool is_bot_vector(const Vec& x) {
  return std::all_of(x.begin(), x.end(), [](double v) { return is_bot(v); });
}

bool all_finite(const Vec& x) {
  return std::all_of(x.begin(), x.end(), [](double v) { return is_finite(v); });
}

Index support(const Vec& x) {
  Index s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_bot(x[i])) s.push_back(static_cast<int>(i));
  return s;
}

Vec add_scalar(const Vec& x, double c) {
  Vec r(x);
  for (double& v : r) v += c;
  return r;
}

Vec sub(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionError("length mismatch");
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

double sup_norm_diff(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionError("length mismatch");
  double m = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == y[i]) continue;  // also covers -inf == -inf
    m = std::max(m, std::abs(x[i] - y[i]));
  }
  return m;
}

Vec canonicalize(const Vec& x) {
  double t = top(x);
  if (is_bot(t)) return x;
  return add_scalar(x, -t);
}

void check_partition(const PartitionIJ& p, std::size_t n) {
  if (p.I.empty() || p.J.empty()) throw std::invalid_argument("I and J must be nonempty");
  std::vector<int> seen(n, 0);
  for (const Index* s : {&p.I, &p.J})
    for (int i : *s) {
      if (i < 0 || static_cast<std::size_t>(i) >= n) throw std::invalid_argument("index out of range in partition");
      if (seen[i]++) throw std::invalid_argument("I and J must be disjoint");
    }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) throw std::invalid_argument("I and J must cover all coordinates");
}

Hyperplane Hyperplane::plain(const Vec& a) {
  if (is_bot_vector(a)) throw std::invalid_argument("hyperplane apex cannot be BOT");
  Hyperplane h;
  h.apex = canonicalize(a);
  return h;
}

Hyperplane Hyperplane::signed_ij(const Vec& a, const PartitionIJ& p) {
  check_partition(p, a.size());
  Hyperplane h = plain(a);
  h.kind = Kind::signed_ij;
  h.part = p;
  return h;
}

double Hyperplane::distance(const Vec& x) const {
  return kind == Kind::plain ? hyperplane_distance(x, apex) : signed_distance(x, apex, part);
}

double hilbert_distance(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw DimensionError("length mismatch");
  double hi = kBot, lo = kInf;
  bool any = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    bool bx = is_bot(x[i]), by = is_bot(y[i]);
    if (bx != by) return kInf;
    if (bx) continue;
    any = true;
    double d = x[i] - y[i];
    hi = std::max(hi, d);
    lo = std::min(lo, d);
  }
  return any ? hi - lo : 0.0;
}

double hilbert_norm(const Vec& x) {
  double hi = kBot, lo = kInf;
  for (double v : x)
    if (!is_bot(v)) {
      hi = std::max(hi, v);
      lo = std::min(lo, v);
    }
  return is_bot(hi) ? 0.0 : hi - lo;
}

Vec trop_matvec(const TropMatrix& V, const Vec& x) {
  if (x.size() != V.cols()) throw DimensionError("trop_matvec: length mismatch");
  Vec y(V.rows(), kBot);
  for (std::size_t i = 0; i < V.rows(); ++i)
    for (int k : V.row_support(i)) y[i] = std::max(y[i], V(i, k) + x[k]);
  return y;
}

Vec adjoint_apply(const TropMatrix& V, const Vec& y) {
  if (y.size() != V.rows()) throw DimensionError("adjoint_apply: length mismatch");
  Vec z(V.cols(), kInf);
  for (std::size_t k = 0; k < V.cols(); ++k)
    for (int i : V.col_support(k)) z[k] = std::min(z[k], y[i] - V(i, k));
  return z;
}

Vec cone_project(const TropMatrix& V, const Vec& x) {
  Vec z = adjoint_apply(V, x);
  // an identically -inf column would give +inf here; it contributes nothing
  for (double& v : z)
    if (v == kInf) v = kBot;
  return trop_matvec(V, z);
}

bool in_column_space(const TropMatrix& V, const Vec& x, double tol) {
  Vec p = cone_project(V, x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_bot(x[i]) != is_bot(p[i])) return false;
    if (!is_bot(x[i]) && std::abs(x[i] - p[i]) > tol) return false;
  }
  return true;
}

Vec hyperplane_project(const Vec& x, const Vec& a) {
  if (x.size() != a.size()) throw DimensionError("length mismatch");
  if (is_bot_vector(a)) throw std::invalid_argument("hyperplane apex cannot be BOT");
  std::size_t best = x.size();
  double m1 = kBot, m2 = kBot;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double s = x[i] + a[i];
    if (s > m1) {
      m2 = m1;
      m1 = s;
      best = i;
    } else if (s > m2) {
      m2 = s;
    }
  }
  if (is_bot(m1)) return x;
  if (is_bot(m2)) throw std::invalid_argument("point has a single finite coordinate in the support of a");
  Vec y(x);
  y[best] = m2 - a[best];
  return y;
}

double hyperplane_distance(const Vec& x, const Vec& a) {
  if (x.size() != a.size()) throw DimensionError("length mismatch");
  if (is_bot_vector(a)) throw std::invalid_argument("hyperplane apex cannot be BOT");
  double m1 = kBot, m2 = kBot;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double s = x[i] + a[i];
    if (s > m1) {
      m2 = m1;
      m1 = s;
    } else if (s > m2) {
      m2 = s;
    }
  }
  if (is_bot(m1)) return 0.0;  // (-inf) - (-inf) = 0 here
  if (is_bot(m2)) return kInf;
  return m1 - m2;
}

namespace {
double max_over(const Vec& x, const Vec& a, const Index& s) {
  double m = kBot;
  for (int i : s) m = std::max(m, x[i] + a[i]);
  return m;
}
}  // namespace

SignedProjection signed_project_and_distance(const Vec& x, const Vec& a, const PartitionIJ& p) {
  if (x.size() != a.size()) throw DimensionError("length mismatch");
  check_partition(p, x.size());
  if (is_bot_vector(a)) throw std::invalid_argument("hyperplane apex cannot be BOT");
  double mi = max_over(x, a, p.I), mj = max_over(x, a, p.J);
  SignedProjection r{x, 0.0};
  for (int l : p.I)
    if (!is_bot(a[l])) r.point[l] = std::min(x[l], -a[l] + mj);
  for (int l : p.J)
    if (!is_bot(a[l])) r.point[l] = std::min(x[l], -a[l] + mi);
  if (is_bot(mi) && is_bot(mj))
    r.distance = 0.0;
  else if (is_bot(mi) || is_bot(mj))
    r.distance = kInf;
  else
    r.distance = std::abs(mi - mj);
  return r;
}

double signed_distance(const Vec& x, const Vec& a, const PartitionIJ& p) {
  if (x.size() != a.size()) throw DimensionError("length mismatch");
  check_partition(p, x.size());
  double mi = max_over(x, a, p.I), mj = max_over(x, a, p.J);
  if (is_bot(mi) && is_bot(mj)) return 0.0;
  if (is_bot(mi) || is_bot(mj)) return kInf;
  return std::abs(mi - mj);
}

Index sector_index(const Vec& x, const Vec& a) {
  if (x.size() != a.size()) throw DimensionError("length mismatch");
  if (!all_finite(a)) throw std::invalid_argument("sector_index needs a finite apex");
  double m = kBot;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, x[i] + a[i]);
  Index s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] + a[i] == m) s.push_back(static_cast<int>(i));
  return s;
}

std::string format_vec(const Vec& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ", ";
    if (is_bot(x[i]))
      os << "-inf";
    else
      os << x[i];
  }
  os << ')';
  return os.str();
}

}  // namespace tropreg
