#pragma once

#include <vector>

#include "fusionkit/cochain.hpp"
#include "fusionkit/group.hpp"

namespace fusionkit {

// Irreducible module dimensions of the psi-twisted group algebra of H.
// Primary method: spectral multiplicities of a generic Hermitian element of
// the regular representation at high precision; cross-checked against the
// exact count of psi-regular conjugacy classes. Disagreement is an error.
std::vector<int> twisted_group_algebra_irreps(const FiniteGroup& h, const Cochain& psi);

// Exact count of psi-regular conjugacy classes (the number of irreducibles).
int count_regular_classes(const FiniteGroup& h, const Cochain& psi);

// psi nondegenerate: the twisted algebra has a single irreducible, of
// dimension sqrt(|H|).
bool is_nondegenerate(const FiniteGroup& h, const Cochain& psi);

struct ModuleCategoryDatum {
  std::vector<int> subgroup;  // sorted element set of H <= G
  Cochain psi;                // 2-cochain on H with d(psi) = omega|_H
  int orbit_size = 1;
  bool nondegenerate = false;
};

// Pairs (H, psi) with omega|_H trivialized by psi, up to simultaneous
// conjugation; canonical representatives with orbit sizes.
std::vector<ModuleCategoryDatum> enumerate_module_categories(const FiniteGroup& g,
                                                             const Cochain& omega);

struct FiberFunctorCount {
  int count = 0;
  std::vector<ModuleCategoryDatum> witnesses;
};

// Module categories over Rep G (trivial omega) with nondegenerate psi.
FiberFunctorCount count_fiber_functors(const FiniteGroup& g);

}  // namespace fusionkit
