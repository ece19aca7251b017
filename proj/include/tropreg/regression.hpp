#pragma once
// Tropical linear regression: plain, signed and typed hyperplanes, inner
// balls of column spaces, witness points and the one-sided closed form.

#include <optional>

#include "tropreg/spectral.hpp"

namespace tropreg {

struct WitnessReport {
  MinPolicy sigma;
  Index columns;  // columns[i] is the witness in sector i
  double value = 0;
};

struct RegressionResult {
  Vec apex;  // parameter a of H_a, canonical
  double value = kInf;
  bool apex_verified = false;
  Vec ball_center;  // empty when unavailable
  double ball_radius = 0;
  std::optional<WitnessReport> witnesses;
  Index simplicial;  // sigma([n]) when witnesses are available
  Vec class_distances;  // typed regression only
  SpectralCertificate cert;
  Index dropped_rows, dropped_cols;
  std::string note;
};

struct InradiusResult {
  double radius = 0;
  std::optional<Vec> center;
  SpectralCertificate cert;
  Index dropped_rows, dropped_cols;
};

struct SignedRegressionResult {
  Vec apex;
  double value = kInf;
  bool apex_verified = false;
  Vec interval_center;  // empty when unavailable
  double interval_radius = 0;
  bool interval_verified = false;
  PartitionIJ part;
  SpectralCertificate cert;
};

struct SimplicialSupport {
  Index columns;
  bool ball_verified = false;
};

struct OneSidedResult {
  std::vector<Vec> A_bar, A_opt;  // m x n
  double delta = 0, value = 0;
};

// max over columns of hyperplane_distance(V_k, a)
double configuration_distance(const TropMatrix& V, const Vec& a);
double configuration_signed_distance(const TropMatrix& V, const Vec& a, const PartitionIJ& p);

InradiusResult inradius(const TropMatrix& V, const SolverConfig& cfg = {});
RegressionResult best_hyperplane(const TropMatrix& V, const SolverConfig& cfg = {});
// a must satisfy T(a) = rho + a up to tol; throws CertificateError otherwise.
WitnessReport witness_points(const TropMatrix& V, const Vec& a, double tol = 1e-9);
SimplicialSupport simplicial_support(const TropMatrix& V, const Vec& a, double rho, double tol = 1e-9);
// Membership of the generators of B(center, r - tol) in Col(V).
bool ball_in_column_space(const TropMatrix& V, const Vec& center, double r, double tol = 1e-9);
SignedRegressionResult regress_signed(const TropMatrix& V, const PartitionIJ& p, const SolverConfig& cfg = {});
// types[k] in [0,n) is the class of column k; every class must be nonempty.
RegressionResult regress_typed(const TropMatrix& V, const Index& types, const SolverConfig& cfg = {},
                               bool allow_empty_classes = false);
// Samples (x^(k), y^(k)) in R^n x R^m; minimizes max_k ||y^(k) - A x^(k)||_inf.
OneSidedResult one_sided_regression(const std::vector<Vec>& xs, const std::vector<Vec>& ys);

}  // namespace tropreg
