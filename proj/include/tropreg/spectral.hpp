#pragma once
// Eigenvalue rho(T) and sub/super-eigenvectors of Shapley operators.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "tropreg/shapley.hpp"

namespace tropreg {

enum class Method { km, vi, exact };
std::string to_string(Method m);
Method parse_method(const std::string& s);

struct SolverConfig {
  Method method = Method::km;
  double gamma = 0.5;
  double epsilon = 1e-8;
  long max_iter = 1000000;
  // Largest number of Min policies brute_force_rho will enumerate.
  double policy_budget = 5e6;
  // Keep the residual of every KM iterate up to this many iterations.
  long residual_log_limit = 0;

  void validate() const;
};

struct Rational {
  long long num = 0, den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};
Rational make_rational(long long num, long long den);
// Fraction of smallest denominator in [lo, hi] (Stern-Brocot descent).
std::optional<Rational> simplest_rational_in(double lo, double hi, long long max_den);
// All reduced fractions num/den with den <= max_den and lo_num/lo_den <= x <= hi_num/hi_den, ascending.
std::vector<Rational> rationals_between(long long lo_num, long long lo_den, long long hi_num, long long hi_den,
                                        long long max_den);

struct SpectralCertificate {
  Method method = Method::km;
  double rho = kBot;
  std::optional<Rational> rho_exact;
  double lower = kBot, upper = kInf;
  Vec eigenvector;  // T(u) = rho + u; empty when not available
  Vec sub;          // b != BOT with T(b) >= rho + b - tol
  Vec super;        // finite c with T(c) <= rho + c + tol; empty when not available
  double tol = 0;
  bool sub_ok = false, super_ok = false;
  double residual = kInf;  // ||T(u) - u||_H of the last iterate or eigenvector
  long iterations = 0;
  bool converged = false;
  double W = 0, W_prime = 0;
  Index part;  // invariant part on which rho is computed
  std::vector<std::pair<long, double>> residual_log;
  std::string note;
};

struct KleeneStar {
  TropMatrix B, star;
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class DegenerateOperator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class PositiveCycle : public std::runtime_error {
 public:
  PositiveCycle(Index cycle, double weight);
  Index cycle;  // closed walk, first vertex not repeated
  double weight;
};

// W = max ||v||_H over columns (+inf if some column has -inf entries) and
// W' = max spread of the finite entries of a column.
std::pair<double, double> diameter_bounds(const TropMatrix& V);

// Support of lim T^k(0); rho(T) is computed on this part.
Index finite_part(const ShapleyOperator& T);

bool verify_sub(const ShapleyOperator& T, const Vec& b, double rho, double tol);
bool verify_super(const ShapleyOperator& T, const Vec& c, double rho, double tol);
// Hilbert seminorm of T(u) - u.
double eigen_residual(const ShapleyOperator& T, const Vec& u);

SpectralCertificate km_solve(const ShapleyOperator& T, const SolverConfig& cfg);
// Runs k_max steps of v^k = T(v^{k-1}), or stops early once the bound gap is below gap_tol.
SpectralCertificate value_iterate(const ShapleyOperator& T, long k_max, double gap_tol = 0.0);
// Exact rho for data that become integral after scaling by a power of ten.
SpectralCertificate rho_exact(const ShapleyOperator& T, const SolverConfig& cfg = {});
// Dispatches on cfg.method after restricting to the finite part, and
// re-verifies the returned certificates.
SpectralCertificate solve(const ShapleyOperator& T, const SolverConfig& cfg);

Vec construct_sub_eigenvector(const ShapleyOperator& T, double rho, const Vec& hint = {}, double tol = 1e-9);
Vec construct_super_eigenvector(const PlainOperator& T, double rho, const Vec& hint = {}, double tol = 1e-9);

KleeneStar kleene_star(const TropMatrix& B, double tol = 1e-9);
// Max cycle mean of the digraph with an edge i -> j of weight M_ij (Karp).
double one_player_eigenvalue(const TropMatrix& M);
double brute_force_rho(const PlainOperator& T, double budget = 5e6);

// Smallest d in [0, max_digits] with 10^d V integral, or -1.
int decimal_scale(const TropMatrix& V, int max_digits = 6);

}  // namespace tropreg
