#pragma once

#include <string>
#include <vector>

#include "fusionkit/algebraic.hpp"
#include "fusionkit/ring.hpp"

namespace fusionkit {

// d+(X_i) = spectral radius of N_i, exactly (largest real root of the
// characteristic polynomial, isolated by Sturm bisection).
AlgebraicNumber perron_dimension(const FusionRing& ring, int i);

struct DimensionVector {
  std::vector<AlgebraicNumber> dims;  // d+(X_0) .. d+(X_{r-1})
  AlgebraicNumber ring_dim;           // sum of squares
  // Exact common-field representation: dims[i] = field_reps[i] evaluated at
  // the Perron root of field_poly (the minimal polynomial of d+(sum X_i)).
  IntPoly field_poly;
  std::vector<RatPoly> field_reps;
};

// All dimensions, with the homomorphism identity d_i d_j = sum_k N_ij^k d_k
// verified exactly in the common number field. A failure is an InternalError.
DimensionVector dimension_vector(const FusionRing& ring);

enum class Verdict { pass, fail, undecided, not_applicable };
std::string verdict_name(Verdict v);

struct ObstructionCheck {
  std::string name;
  Verdict verdict;
  std::string witness;   // human-readable details
  std::string citation;  // provenance of the criterion
};

struct ObstructionReport {
  std::vector<ObstructionCheck> checks;
  std::vector<std::string> annotations;  // classification metadata, not verdicts
  bool obstructed() const;
  bool undecided() const;
};

// Runs, in order: reciprocity, conjugate dominance, 2cos(pi/n) quantization
// for dimensions in [1,2), squared integrality when the ring dimension is an
// integer, cyclotomicity (abelian splitting fields), and the integer-
// dimension quasi-Hopf classifier. Any fail refutes realizability.
ObstructionReport obstruction_battery(const FusionRing& ring);

struct DivisibilityResult {
  AlgebraicNumber ratio;  // ring_dim / subring_dim
  bool algebraic_integer;
};

// Theorem-of-Lagrange style test for a full based subring (a subset as
// produced by find_subrings).
DivisibilityResult divisibility_check(const FusionRing& ring, const std::vector<int>& subring);

// length(X_i^n)^(1/n) for n = 1..n_max, as exact rationals truncated at 6
// decimal places; approaches d+(X_i).
std::vector<Rat> growth_rate_sanity(const FusionRing& ring, int i, int n_max);

}  // namespace fusionkit
