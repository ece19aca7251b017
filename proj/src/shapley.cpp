#include "tropreg/shapley.hpp"

#include <algorithm>

namespace tropreg {

namespace {
void check_dim(const Vec& x, std::size_t n) {
  if (x.size() != n) throw DimensionError("operator argument has wrong length");
}

void check_rows_nonempty(const TropMatrix& V) {
  if (V.rows() == 0 || V.cols() == 0) throw ValidationError("empty matrix");
  auto r = V.empty_rows();
  if (!r.empty())
    throw ValidationError("coordinate " + std::to_string(r[0] + 1) + " is -inf in every point");
}
}  // namespace

// ---------------------------------------------------------------- plain

PlainOperator::PlainOperator(TropMatrix V) : V_(std::move(V)) { V_.validate(); }

void PlainOperator::column_pass(const Vec& x, std::vector<ColumnMax>& c, std::uint64_t* ops) const {
  const std::size_t p = V_.cols();
  c.assign(p, ColumnMax{kBot, kBot, -1});
  for (std::size_t k = 0; k < p; ++k) {
    ColumnMax& ck = c[k];
    for (int j : V_.col_support(k)) {
      double s = V_(j, k) + x[j];
      if (ck.arg < 0) {
        ck.M = s;
        ck.arg = j;
      } else if (s > ck.M) {
        ck.m = ck.M;
        ck.M = s;
        ck.arg = j;
      } else if (s > ck.m) {
        ck.m = s;
      }
    }
    if (ops) *ops += 2 * V_.col_support(k).size();
  }
}

Vec PlainOperator::apply(const Vec& x) const {
  std::uint64_t ops = 0;
  return apply_counted(x, ops);
}

Vec PlainOperator::apply_counted(const Vec& x, std::uint64_t& ops) const {
  check_dim(x, dim());
  std::vector<ColumnMax> c;
  column_pass(x, c, &ops);
  Vec y(dim(), kInf);
  for (std::size_t i = 0; i < dim(); ++i) {
    for (int k : V_.row_support(i)) {
      const ColumnMax& ck = c[k];
      double inner = (ck.arg == static_cast<int>(i)) ? ck.m : ck.M;
      y[i] = std::min(y[i], inner - V_(i, k));
    }
    ops += 2 * V_.row_support(i).size();
  }
  return y;
}

Vec PlainOperator::apply_naive(const Vec& x, std::uint64_t* ops) const {
  check_dim(x, dim());
  const std::size_t n = dim();
  Vec y(n, kInf);
  for (std::size_t i = 0; i < n; ++i)
    for (int k : V_.row_support(i)) {
      double inner = kBot;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || is_bot(V_(j, k))) continue;
        inner = std::max(inner, V_(j, k) + x[j]);
        if (ops) *ops += 2;
      }
      y[i] = std::min(y[i], -V_(i, k) + inner);
      if (ops) *ops += 2;
    }
  return y;
}

OperatorPtr PlainOperator::rebuild(TropMatrix V) const { return std::make_unique<PlainOperator>(std::move(V)); }

MinPolicy PlainOperator::extract_min_policy(const Vec& x) const {
  check_dim(x, dim());
  std::vector<ColumnMax> c;
  column_pass(x, c, nullptr);
  MinPolicy s;
  s.sigma.assign(dim(), -1);
  for (std::size_t i = 0; i < dim(); ++i) {
    double best = kInf;
    for (int k : V_.row_support(i)) {
      double inner = (c[k].arg == static_cast<int>(i)) ? c[k].m : c[k].M;
      double v = inner - V_(i, k);
      if (s.sigma[i] < 0 || v < best) {
        best = v;
        s.sigma[i] = k;
      }
    }
    if (s.sigma[i] < 0) throw ValidationError("state without action");
  }
  return s;
}

MaxPolicy PlainOperator::extract_max_policy(const Vec& x) const {
  check_dim(x, dim());
  MaxPolicy t;
  t.tau.assign(dim(), Index(V_.cols(), -1));
  for (std::size_t i = 0; i < dim(); ++i)
    for (int k : V_.row_support(i)) {
      double best = kBot;
      for (int j : V_.col_support(k)) {
        if (j == static_cast<int>(i)) continue;
        double v = V_(j, k) + x[j];
        if (t.tau[i][k] < 0 || v > best) {
          best = v;
          t.tau[i][k] = j;
        }
      }
    }
  return t;
}

void PlainOperator::check_policy(const MinPolicy& s) const {
  if (s.sigma.size() != dim()) throw std::invalid_argument("min policy has wrong length");
  for (std::size_t i = 0; i < dim(); ++i) {
    int k = s.sigma[i];
    if (k < 0 || static_cast<std::size_t>(k) >= V_.cols() || is_bot(V_(i, k)))
      throw std::invalid_argument("min policy picks an action outside E at state " + std::to_string(i + 1));
  }
}

void PlainOperator::check_policy(const MaxPolicy& t) const {
  if (t.tau.size() != dim()) throw std::invalid_argument("max policy has wrong shape");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (t.tau[i].size() != V_.cols()) throw std::invalid_argument("max policy has wrong shape");
    for (int k : V_.row_support(i)) {
      int j = t.tau[i][k];
      if (j < 0) {
        if (V_.col_support(k).size() > 1) throw std::invalid_argument("max policy undefined on a state with moves");
        continue;
      }
      if (j == static_cast<int>(i) || static_cast<std::size_t>(j) >= dim() || is_bot(V_(j, k)))
        throw std::invalid_argument("max policy picks an infeasible move");
    }
  }
}

// ---------------------------------------------------------------- policies

MinPolicyOperator::MinPolicyOperator(TropMatrix V, MinPolicy s) : V_(std::move(V)), s_(std::move(s)) {
  PlainOperator(V_).check_policy(s_);
}

Vec MinPolicyOperator::apply(const Vec& x) const {
  check_dim(x, dim());
  Vec y(dim(), kBot);
  for (std::size_t i = 0; i < dim(); ++i) {
    int k = s_.sigma[i];
    for (int j : V_.col_support(k))
      if (j != static_cast<int>(i)) y[i] = std::max(y[i], V_(j, k) + x[j]);
    y[i] -= V_(i, k);
  }
  return y;
}

OperatorPtr MinPolicyOperator::rebuild(TropMatrix V) const {
  return std::make_unique<MinPolicyOperator>(std::move(V), s_);
}

TropMatrix MinPolicyOperator::linearization() const {
  const std::size_t n = dim();
  TropMatrix M(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    int k = s_.sigma[i];
    for (int j : V_.col_support(k))
      if (j != static_cast<int>(i)) M.set(i, j, V_(j, k) - V_(i, k));
  }
  return M;
}

MaxPolicyOperator::MaxPolicyOperator(TropMatrix V, MaxPolicy t) : V_(std::move(V)), t_(std::move(t)) {
  PlainOperator(V_).check_policy(t_);
}

Vec MaxPolicyOperator::apply(const Vec& x) const {
  check_dim(x, dim());
  Vec y(dim(), kInf);
  for (std::size_t i = 0; i < dim(); ++i)
    for (int k : V_.row_support(i)) {
      int j = t_.tau[i][k];
      double inner = j < 0 ? kBot : V_(j, k) + x[j];
      y[i] = std::min(y[i], inner - V_(i, k));
    }
  return y;
}

OperatorPtr MaxPolicyOperator::rebuild(TropMatrix V) const {
  return std::make_unique<MaxPolicyOperator>(std::move(V), t_);
}

MinPolicyOperator restrict_min(const PlainOperator& op, const MinPolicy& s) {
  return MinPolicyOperator(op.data(), s);
}

MaxPolicyOperator restrict_max(const PlainOperator& op, const MaxPolicy& t) {
  return MaxPolicyOperator(op.data(), t);
}

MinPolicy extract_min_policy(const PlainOperator& op, const Vec& x) { return op.extract_min_policy(x); }

// ---------------------------------------------------------------- signed

SignedOperator::SignedOperator(TropMatrix V, PartitionIJ part) : V_(std::move(V)), part_(std::move(part)) {
  check_partition(part_, V_.rows());
  check_rows_nonempty(V_);
  inI_.assign(V_.rows(), 0);
  for (int i : part_.I) inI_[i] = 1;
}

void SignedOperator::side_maxima(const Vec& x, Vec& mI, Vec& mJ) const {
  mI.assign(V_.cols(), kBot);
  mJ.assign(V_.cols(), kBot);
  for (std::size_t k = 0; k < V_.cols(); ++k)
    for (int j : V_.col_support(k)) {
      double s = V_(j, k) + x[j];
      double& m = inI_[j] ? mI[k] : mJ[k];
      m = std::max(m, s);
    }
}

Vec SignedOperator::apply(const Vec& x) const {
  check_dim(x, dim());
  Vec mI, mJ;
  side_maxima(x, mI, mJ);
  Vec y(dim(), kInf);
  for (std::size_t l = 0; l < dim(); ++l) {
    const Vec& other = inI_[l] ? mJ : mI;
    for (int k : V_.row_support(l)) y[l] = std::min(y[l], other[k] - V_(l, k));
  }
  return y;
}

Index SignedOperator::argmin_columns(const Vec& x) const {
  check_dim(x, dim());
  Vec mI, mJ;
  side_maxima(x, mI, mJ);
  Index s(dim(), -1);
  for (std::size_t l = 0; l < dim(); ++l) {
    const Vec& other = inI_[l] ? mJ : mI;
    double best = kInf;
    for (int k : V_.row_support(l)) {
      double v = other[k] - V_(l, k);
      if (s[l] < 0 || v < best) {
        best = v;
        s[l] = k;
      }
    }
  }
  return s;
}

OperatorPtr SignedOperator::rebuild(TropMatrix V) const {
  return std::make_unique<SignedOperator>(std::move(V), part_);
}

// ---------------------------------------------------------------- typed

TypedOperator::TypedOperator(TropMatrix V, Index types) : V_(std::move(V)), types_(std::move(types)) {
  const std::size_t n = V_.rows();
  if (types_.size() != V_.cols()) throw std::invalid_argument("one type per column is required");
  for (int t : types_)
    if (t < 0 || static_cast<std::size_t>(t) >= n) throw std::invalid_argument("type index out of range");
  check_rows_nonempty(V_);
  c_.assign(n, Vec(n, kInf));
  for (std::size_t k = 0; k < V_.cols(); ++k) {
    int i = types_[k];
    for (int l : V_.col_support(k))
      if (l != i) c_[i][l] = std::min(c_[i][l], V_(i, k) - V_(l, k));
  }
}

Vec TypedOperator::apply(const Vec& x) const {
  const std::size_t n = dim();
  check_dim(x, n);
  Vec y(n, kInf);
  // own-class part: columns of class l with V_lk finite, max over j != l
  for (std::size_t k = 0; k < V_.cols(); ++k) {
    int l = types_[k];
    if (is_bot(V_(l, k))) continue;
    double inner = kBot;
    for (int j : V_.col_support(k))
      if (j != l) inner = std::max(inner, V_(j, k) + x[j]);
    y[l] = std::min(y[l], inner - V_(l, k));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (l == i || c_[i][l] == kInf) continue;
      y[l] = std::min(y[l], c_[i][l] + x[i]);
    }
  return y;
}

OperatorPtr TypedOperator::rebuild(TropMatrix V) const { return std::make_unique<TypedOperator>(std::move(V), types_); }

// ---------------------------------------------------------------- restriction

RestrictedOperator::RestrictedOperator(const ShapleyOperator& base, Index part)
    : RestrictedOperator(base.rebuild(base.data()), std::move(part), base.dim()) {}

RestrictedOperator::RestrictedOperator(OperatorPtr base, Index part, std::size_t n)
    : base_(std::move(base)), part_(std::move(part)), n_(n) {
  for (int i : part_)
    if (i < 0 || static_cast<std::size_t>(i) >= n_) throw std::invalid_argument("part index out of range");
}

Vec RestrictedOperator::embed(const Vec& xs) const {
  check_dim(xs, part_.size());
  Vec x(n_, kBot);
  for (std::size_t s = 0; s < part_.size(); ++s) x[part_[s]] = xs[s];
  return x;
}

Vec RestrictedOperator::apply(const Vec& xs) const {
  Vec y = base_->apply(embed(xs));
  Vec ys(part_.size());
  for (std::size_t s = 0; s < part_.size(); ++s) ys[s] = y[part_[s]];
  return ys;
}

OperatorPtr RestrictedOperator::rebuild(TropMatrix V) const {
  return OperatorPtr(new RestrictedOperator(base_->rebuild(std::move(V)), part_, n_));
}

}  // namespace tropreg
