#pragma once
// Repeated first-price tenders with hidden preference factors: synthetic
// generation, winner determination and inference by tropical regression.
//
// Random stream (std::mt19937_64, u = (x >> 11) * 2^-53): reference prices
// first when they are generated, then the quotes A_ij row-major, then the
// noise terms row-major.

#include <cstdint>
#include <optional>
#include <random>

#include "tropreg/regression.hpp"

namespace tropreg {

struct AuctionParams {
  std::size_t n = 3, q = 6;
  Vec f{1.0, 0.8, 0.6};
  Vec reference_prices;  // empty: drawn log-uniform on [1, 100]
  double delta = 0.05;
  std::uint64_t seed = 42;
  double band = 0.1;

  void validate() const;
};

struct AuctionInstance {
  std::vector<Vec> prices;  // n x q
  Vec f;                    // normalized to max 1
  Vec reference_prices;
  double delta = 0;
  std::uint64_t seed = 0;
  std::optional<Index> winners;

  TropMatrix valuation() const;  // V = -log p
};

struct EquilibriumDistance {
  double distance = 0;
  double e = 0;
  bool e_defined = true;
};

struct InferenceReport {
  Vec f_reg;
  Vec apex;  // log f_reg
  double value = 0;  // regression value (typed when winners are used)
  double distance = 0;
  double e = 0;
  bool e_defined = true;
  bool typed = false;
  long iterations = 0;
  Vec class_distances;
  SpectralCertificate cert;
  // typed runs also carry the untyped fit; the two apexes may differ
  Vec untyped_apex;
  double untyped_value = 0;
};

// Uniform double in [0, 1) from one 64-bit draw.
double unit_uniform(std::mt19937_64& g);

AuctionInstance simulate(const AuctionParams& params);

// winner(j) = argmax_i (V_ij + log f_i); entries within tie_tol of the
// maximum count as ties and the smallest index wins.
Index determine_winners(const std::vector<Vec>& prices, const Vec& f, double tie_tol = 1e-9);
Index determine_winners(const AuctionInstance& inst, double tie_tol = 1e-9);

// Default solver: KM with epsilon 1e-12.
SolverConfig inference_config();
InferenceReport infer(const std::vector<Vec>& prices, const std::optional<Index>& winners = std::nullopt,
                      const SolverConfig& cfg = inference_config());

// e = distance / max_j |log(max_i p_ij - min_i p_ij)|.
EquilibriumDistance distance_to_equilibrium(const std::vector<Vec>& prices, const Vec& b);

}  // namespace tropreg
