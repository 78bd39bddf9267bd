#pragma once

#include <optional>
#include <vector>

#include "fusionkit/ring.hpp"

namespace fusionkit {

struct SearchSpec {
  int rank = 2;
  Int max_entry = 1;                     // bound B on structure constants
  std::optional<std::vector<int>> dual;  // fixed dual permutation, else all involutions
  bool commutative_only = false;
  bool require_reciprocity = false;
};

// Bounded exhaustive search over valid fusion rings of the given rank with
// entries <= B, one canonical representative per isomorphism class (basis
// relabelings fixing the unit). Depth-first with incremental associativity
// checks and orderly pruning on row-complete prefixes.
std::vector<FusionRing> enumerate_rings(const SearchSpec& spec);

struct CanonicalForm {
  FusionRing ring;
  std::vector<int> permutation;  // new_index = permutation[old_index]
};

// Lexicographically minimal (dual, tensor) over relabelings fixing index 0.
CanonicalForm canonical_form(const FusionRing& ring);
bool isomorphic(const FusionRing& a, const FusionRing& b);

}  // namespace fusionkit
