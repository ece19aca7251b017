#include "tropreg/dominions.hpp"

#include <algorithm>

namespace tropreg {

std::string to_string(DominionVerdict v) {
  switch (v) {
    case DominionVerdict::finite_eigenvector_guaranteed: return "finite-eigenvector-guaranteed";
    case DominionVerdict::inconclusive: return "inconclusive";
    case DominionVerdict::invalid_input: return "invalid-input";
  }
  return "?";
}

void check_dominion_input(const TropMatrix& V) {
  if (V.rows() == 0 || V.cols() == 0) throw ValidationError("empty matrix");
  for (std::size_t i = 0; i < V.rows(); ++i)
    if (V.row_support(i).empty()) throw ValidationError("row " + std::to_string(i + 1) + " is identically -inf");
  for (std::size_t k = 0; k < V.cols(); ++k)
    if (V.col_support(k).size() < 2)
      throw ValidationError("column " + std::to_string(k + 1) + " has fewer than two finite entries");
}

DominionReport detect_dominions(const TropMatrix& V) {
  check_dominion_input(V);
  const std::size_t n = V.rows(), p = V.cols();
  DominionReport rep;
  std::vector<char> inS(n), inK(p);
  for (std::size_t seed = 0; seed < p; ++seed) {
    std::fill(inS.begin(), inS.end(), 0);
    std::fill(inK.begin(), inK.end(), 0);
    inK[seed] = 1;
    std::size_t sizeS = 0;
    for (int i : V.col_support(seed)) inS[i] = 1, ++sizeS;
    bool augmented = true;
    while (augmented) {
      augmented = false;
      for (std::size_t l = 0; l < p; ++l) {
        if (inK[l]) continue;
        int outside = 0, last = -1;
        for (int i : V.col_support(l)) {
          ++rep.ops;
          if (!inS[i]) ++outside, last = i;
        }
        if (outside == 1) {
          inK[l] = 1;
          inS[last] = 1;
          ++sizeS;
          augmented = true;
        } else if (outside == 0) {
          inK[l] = 1;
        }
      }
    }
    if (sizeS != n) {
      rep.found = true;
      for (std::size_t i = 0; i < n; ++i) (inS[i] ? rep.S : rep.max_dominion).push_back(static_cast<int>(i));
      for (std::size_t k = 0; k < p; ++k)
        if (inK[k]) rep.K.push_back(static_cast<int>(k));
      rep.verdict = DominionVerdict::inconclusive;
      rep.message = "disjoint dominions found; finite eigenvector not guaranteed (sufficiency check inconclusive)";
      return rep;
    }
  }
  rep.verdict = DominionVerdict::finite_eigenvector_guaranteed;
  rep.message = "no disjoint dominions; r + T has a finite eigenvector for every r";
  return rep;
}

DominionReport dominion_report(const TropMatrix& V) {
  try {
    return detect_dominions(V);
  } catch (const ValidationError& e) {
    DominionReport r;
    r.verdict = DominionVerdict::invalid_input;
    r.message = e.what();
    return r;
  }
}

bool is_dominion_witness(const TropMatrix& V, const Index& K) {
  const std::size_t n = V.rows(), p = V.cols();
  if (K.empty() || K.size() >= p) return false;
  std::vector<char> inS(n, 0), inK(p, 0);
  for (int k : K) {
    if (k < 0 || static_cast<std::size_t>(k) >= p || inK[k]) return false;
    inK[k] = 1;
    for (int i : V.col_support(k)) inS[i] = 1;
  }
  for (std::size_t k = 0; k < p; ++k) {
    if (inK[k]) continue;
    int outside = 0;
    for (int i : V.col_support(k)) outside += !inS[i];
    if (outside < 2) return false;
  }
  return true;
}

}  // namespace tropreg
