#pragma once
// Shapley operators of the regression games: plain T_V, signed T^{IJ},
// typed T^ty, one-player restrictions and the restriction to a part.

#include <cstdint>
#include <memory>

#include "tropreg/tropical_core.hpp"

namespace tropreg {

class ShapleyOperator {
 public:
  virtual ~ShapleyOperator() = default;
  virtual std::size_t dim() const = 0;
  virtual Vec apply(const Vec& x) const = 0;
  // Same operator shape on other data of the same size.
  virtual std::unique_ptr<ShapleyOperator> rebuild(TropMatrix V) const = 0;
  virtual const TropMatrix& data() const = 0;

  // Operator built on s*V. All operators here satisfy T_{sV}(s x) = s T_V(x).
  std::unique_ptr<ShapleyOperator> scaled(double s) const { return rebuild(data().scaled(s)); }

  Vec operator()(const Vec& x) const { return apply(x); }
};

using OperatorPtr = std::unique_ptr<ShapleyOperator>;

struct MinPolicy {
  Index sigma;  // sigma[i] = column chosen at state i
};

struct MaxPolicy {
  std::vector<Index> tau;  // tau[i][k] = row answered at (i,k), -1 outside E
};

class PlainOperator final : public ShapleyOperator {
 public:
  explicit PlainOperator(TropMatrix V);

  std::size_t dim() const override { return V_.rows(); }
  Vec apply(const Vec& x) const override;
  OperatorPtr rebuild(TropMatrix V) const override;
  const TropMatrix& data() const override { return V_; }

  // O(|E|) evaluation; adds the number of arithmetic operations to ops.
  Vec apply_counted(const Vec& x, std::uint64_t& ops) const;
  // Direct double loop over (i,k,j), O(n|E|).
  Vec apply_naive(const Vec& x, std::uint64_t* ops = nullptr) const;

  // Smallest k achieving the outer minimum at each coordinate.
  MinPolicy extract_min_policy(const Vec& x) const;
  void check_policy(const MinPolicy& s) const;
  void check_policy(const MaxPolicy& t) const;
  // Max policy attaining the inner maxima at x (smallest row on ties).
  MaxPolicy extract_max_policy(const Vec& x) const;

 private:
  struct ColumnMax {
    double M, m;
    int arg;
  };
  void column_pass(const Vec& x, std::vector<ColumnMax>& c, std::uint64_t* ops) const;
  TropMatrix V_;
};

// T^sigma: one-player max-plus linear map.
class MinPolicyOperator final : public ShapleyOperator {
 public:
  MinPolicyOperator(TropMatrix V, MinPolicy s);
  std::size_t dim() const override { return V_.rows(); }
  Vec apply(const Vec& x) const override;
  OperatorPtr rebuild(TropMatrix V) const override;
  const TropMatrix& data() const override { return V_; }
  // M_ij = V_{j sigma(i)} - V_{i sigma(i)} for j != i, -inf on the diagonal.
  TropMatrix linearization() const;
  const MinPolicy& policy() const { return s_; }

 private:
  TropMatrix V_;
  MinPolicy s_;
};

// ^tau T: one-player min-plus linear map.
class MaxPolicyOperator final : public ShapleyOperator {
 public:
  MaxPolicyOperator(TropMatrix V, MaxPolicy t);
  std::size_t dim() const override { return V_.rows(); }
  Vec apply(const Vec& x) const override;
  OperatorPtr rebuild(TropMatrix V) const override;
  const TropMatrix& data() const override { return V_; }

 private:
  TropMatrix V_;
  MaxPolicy t_;
};

MinPolicyOperator restrict_min(const PlainOperator& op, const MinPolicy& s);
MaxPolicyOperator restrict_max(const PlainOperator& op, const MaxPolicy& t);
MinPolicy extract_min_policy(const PlainOperator& op, const Vec& x);

class SignedOperator final : public ShapleyOperator {
 public:
  SignedOperator(TropMatrix V, PartitionIJ part);
  std::size_t dim() const override { return V_.rows(); }
  Vec apply(const Vec& x) const override;
  OperatorPtr rebuild(TropMatrix V) const override;
  const TropMatrix& data() const override { return V_; }
  const PartitionIJ& partition() const { return part_; }
  // Column attaining the infimum at each coordinate (smallest index on ties).
  Index argmin_columns(const Vec& x) const;

 private:
  void side_maxima(const Vec& x, Vec& mI, Vec& mJ) const;
  TropMatrix V_;
  PartitionIJ part_;
  std::vector<char> inI_;
};

class TypedOperator final : public ShapleyOperator {
 public:
  // types[k] in [0,n) is the class of column k. Empty classes are allowed here;
  // regress_typed rejects them.
  TypedOperator(TropMatrix V, Index types);
  std::size_t dim() const override { return V_.rows(); }
  Vec apply(const Vec& x) const override;
  OperatorPtr rebuild(TropMatrix V) const override;
  const TropMatrix& data() const override { return V_; }
  const Index& types() const { return types_; }

 private:
  TropMatrix V_;
  Index types_;
  std::vector<Vec> c_;  // c_[i][l] = min over class i, V_lk finite, of V_ik - V_lk
};

// Action of T on the part {x : supp x = S}, seen as a map on R^S.
class RestrictedOperator final : public ShapleyOperator {
 public:
  RestrictedOperator(const ShapleyOperator& base, Index part);
  std::size_t dim() const override { return part_.size(); }
  Vec apply(const Vec& x) const override;
  OperatorPtr rebuild(TropMatrix V) const override;
  const TropMatrix& data() const override { return base_->data(); }
  const Index& part() const { return part_; }
  Vec embed(const Vec& xs) const;

 private:
  RestrictedOperator(OperatorPtr base, Index part, std::size_t n);
  OperatorPtr base_;
  Index part_;
  std::size_t n_;
};

}  // namespace tropreg
