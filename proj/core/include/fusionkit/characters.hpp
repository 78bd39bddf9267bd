#pragma once

#include <vector>

#include "fusionkit/algebraic.hpp"
#include "fusionkit/ring.hpp"

namespace fusionkit {

// One character chi_j of a commutative fusion ring. Values carry both an
// exact representation (a polynomial in the generator's eigenvalue, modulo
// the irreducible factor the eigenvalue belongs to) and a certified
// high-precision complex approximation.
struct CharacterColumn {
  int factor;                          // index into CharacterTable::factors
  int root_index;                      // which complex root of that factor
  std::vector<RatPoly> values_exact;   // chi(X_i) as element of Q[t]/factor
  std::vector<Cplx> values;            // approximations
  Real error;                          // uniform error bound on values
};

struct CharacterTable {
  int rank = 0;
  IntPoly generator_charpoly;            // squarefree charpoly of the generator
  std::vector<IntPoly> factors;          // its irreducible factors
  std::vector<std::vector<ComplexRoot>> factor_roots;
  std::vector<CharacterColumn> columns;  // rank() columns
  int fp_column = -1;                    // the all-positive (dimension) column
};

// Simultaneous characters of a commutative fusion ring, computed exactly:
// a generic basis combination c with squarefree characteristic polynomial
// generates the ring algebra over Q; every basis element is a polynomial in
// c, so the characters are its images at the roots. Noncommutative input is
// unsupported; a ring algebra that is not semisimple (degenerate trace form)
// raises DegeneracyError with the witness.
CharacterTable character_table(const FusionRing& ring);

}  // namespace fusionkit
