#pragma once
// Max-plus arithmetic, Hilbert projective metric and tropical hyperplanes.
//
// BOTTOM (the max-plus zero) is the IEEE value -infinity. Generic arithmetic
// follows IEEE rules, so -inf + x = -inf for finite x. The only place where
// (-inf) - (-inf) is given the value 0 is hyperplane_distance.

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropreg {

using Vec = std::vector<double>;
using Index = std::vector<int>;

inline constexpr double kBot = -std::numeric_limits<double>::infinity();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool is_bot(double x) { return x == kBot; }
inline bool is_finite(double x) { return x > kBot && x < kInf; }

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Row-major n x p matrix over R U {-inf}. The finite pattern E is cached per
// row and per column and rebuilt whenever an entry changes.
class TropMatrix {
 public:
  TropMatrix() = default;
  TropMatrix(std::size_t rows, std::size_t cols, double fill = kBot);
  static TropMatrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return n_; }
  std::size_t cols() const { return p_; }
  double operator()(std::size_t i, std::size_t k) const { return a_[i * p_ + k]; }
  void set(std::size_t i, std::size_t k, double v);

  // rows i with V_ik finite
  const Index& col_support(std::size_t k) const { return col_sup_[k]; }
  // columns k with V_ik finite
  const Index& row_support(std::size_t i) const { return row_sup_[i]; }
  std::size_t nnz() const { return nnz_; }

  Vec column(std::size_t k) const;
  Vec row(std::size_t i) const;
  std::vector<Vec> to_rows() const;
  TropMatrix select_columns(const Index& cols) const;
  TropMatrix select_rows(const Index& rows) const;
  TropMatrix scaled(double s) const;

  Index empty_rows() const;
  Index empty_cols() const;
  bool all_finite() const { return nnz_ == n_ * p_; }
  bool is_integer() const;
  // Throws ValidationError when a row or a column is identically -inf.
  void validate() const;

  bool operator==(const TropMatrix& o) const { return n_ == o.n_ && p_ == o.p_ && a_ == o.a_; }

 private:
  void rebuild();
  std::size_t n_ = 0, p_ = 0, nnz_ = 0;
  Vec a_;
  std::vector<Index> col_sup_, row_sup_;
};

TropMatrix identity_matrix(std::size_t n);

// Vector helpers.
double top(const Vec& x);  // max entry, -inf for BOT or empty
double bot(const Vec& x);  // min entry
bool is_bot_vector(const Vec& x);
bool all_finite(const Vec& x);
Index support(const Vec& x);
Vec add_scalar(const Vec& x, double c);
Vec sub(const Vec& x, const Vec& y);  // entrywise x - y, IEEE rules
double sup_norm_diff(const Vec& x, const Vec& y);
// Shift so that the largest finite entry is 0. BOT is returned unchanged.
Vec canonicalize(const Vec& x);

struct PartitionIJ {
  Index I, J;  // 0-based, disjoint, I U J = [n]
};
// Throws std::invalid_argument unless I,J are nonempty, disjoint and cover [n].
void check_partition(const PartitionIJ& p, std::size_t n);

struct Hyperplane {
  enum class Kind { plain, signed_ij };
  Vec apex;  // the parameter a, canonical
  Kind kind = Kind::plain;
  PartitionIJ part;

  static Hyperplane plain(const Vec& a);
  static Hyperplane signed_ij(const Vec& a, const PartitionIJ& p);
  double distance(const Vec& x) const;
};

double hilbert_distance(const Vec& x, const Vec& y);
// Hilbert seminorm of a single vector over its support.
double hilbert_norm(const Vec& x);
Vec trop_matvec(const TropMatrix& V, const Vec& x);
// (V#y)_j = min_i (-V_ij + y_i) with -inf + inf = +inf.
Vec adjoint_apply(const TropMatrix& V, const Vec& y);
Vec cone_project(const TropMatrix& V, const Vec& x);
bool in_column_space(const TropMatrix& V, const Vec& x, double tol = 1e-9);

double hyperplane_distance(const Vec& x, const Vec& a);
// Lowers the first maximizing coordinate of x + a to the second maximum.
// Returns x unchanged when the maximum is already attained twice, and BOT
// components are left alone; throws when the second maximum is -inf.
Vec hyperplane_project(const Vec& x, const Vec& a);

struct SignedProjection {
  Vec point;
  double distance;
};
SignedProjection signed_project_and_distance(const Vec& x, const Vec& a, const PartitionIJ& p);
double signed_distance(const Vec& x, const Vec& a, const PartitionIJ& p);

// All i with x_i + a_i maximal. a must be finite.
Index sector_index(const Vec& x, const Vec& a);

std::string format_vec(const Vec& x);

}  // namespace tropreg
