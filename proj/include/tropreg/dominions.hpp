#pragma once
// Disjoint dominions of Min and Max in the game of T_V, found by seeded
// closure over columns. Absence of dominions guarantees a finite eigenvector
// of r + T_V for every shift r; presence decides nothing.

#include <cstdint>
#include <string>

#include "tropreg/tropical_core.hpp"

namespace tropreg {

enum class DominionVerdict { finite_eigenvector_guaranteed, inconclusive, invalid_input };
std::string to_string(DominionVerdict v);

struct DominionReport {
  bool found = false;
  Index S;             // dominion of Min, sorted
  Index max_dominion;  // [n] \ S
  Index K;             // columns whose supports union to S, sorted
  std::uint64_t ops = 0;
  DominionVerdict verdict = DominionVerdict::invalid_input;
  std::string message;
};

// Throws ValidationError when a row is identically -inf or a column has
// fewer than two finite entries.
void check_dominion_input(const TropMatrix& V);

DominionReport detect_dominions(const TropMatrix& V);

// Like detect_dominions but reports invalid input through the verdict.
DominionReport dominion_report(const TropMatrix& V);

// True when K is nonempty, K != [p], and every column outside K has at least
// two finite entries outside the union of supports of K.
bool is_dominion_witness(const TropMatrix& V, const Index& K);

}  // namespace tropreg
