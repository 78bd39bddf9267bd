#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusionkit/characters.hpp"
#include "fusionkit/ring.hpp"

namespace fusionkit {

// Normalized S-matrix candidate s_{ij} = S_{ij}/sqrt(dim): symmetric, with
// s^2 equal to the charge-conjugation permutation.
struct ModularDatum {
  int rank = 0;
  std::vector<std::vector<Cplx>> s;
  Real error;                            // uniform entry error bound
  std::vector<int> charge_conjugation;   // i -> i*
  int fp_column = -1;                    // designated FP column r0
  std::vector<int> column_character;     // character column placed at position j
  std::vector<int> column_sign;          // epsilon_j in {+1, -1}
  bool heuristic = false;                // search truncated (rank > 8)
};

// Builds s from the character table by scaling each column to unit norm and
// searching column orders and signs for a symmetric matrix. Canonical
// choice: lexicographically smallest symmetric matrix with s_00 > 0.
// Returns nullopt when no symmetric assignment exists.
std::optional<ModularDatum> candidate_s_matrix(const FusionRing& ring);

struct ModularVerification {
  struct Item {
    std::string name;
    bool pass;
    Real max_residual;
  };
  std::vector<Item> items;
  bool all_pass() const;
};

// Checks symmetry, duality s_{ij} = s_{i*j*}, nonvanishing of the unit row,
// s^2 = charge conjugation, and the Verlinde identity, each within `tol`.
ModularVerification verify_modular(const ModularDatum& datum, const FusionRing& ring,
                                   const Real& tol = Real("1e-9"));

// Inverts the Verlinde formula: N_{ij}^k = sum_r s_ir s_jr s_{r k*} / s_0r,
// snapped to nonnegative integers within `tol`; the result is re-validated
// (ring axioms). Throws UnsupportedError when entries are not integral.
FusionRing verlinde_fusion_from_s(const ModularDatum& datum, const Real& tol = Real("1e-9"));

struct RatioVerdict {
  int column;
  AlgebraicNumber value;  // sum_i chi_r(X_i) chi_r(X_{i*})
  bool algebraic_integer;
  bool fp_column;
};

// The algebraic-integer test dim C / (dim X_r)^2 per character column,
// computed exactly in the column's number field.
std::vector<RatioVerdict> algebraic_integer_ratios(const FusionRing& ring);

struct GaloisSymmetry {
  std::vector<int> perm;
  std::vector<int> signs;  // epsilon(i) in {+1, -1}
};

struct GaloisSymmetryResult {
  std::vector<GaloisSymmetry> symmetries;  // deduplicated by permutation
  bool closed = false;
  bool abelian = false;
  bool dual_compatible = false;
};

// All sign-permutation symmetries g(s_ij) = eps(i) s_{g(i)j} compatible with
// a field automorphism: detected through the internal consistency identity
// eps(i) s_{perm(i),j} = eps(j) s_{i,perm(j)} plus exact minimal-polynomial
// (factor) preservation; verifies g(i*) = g(i)* and group structure.
GaloisSymmetryResult galois_symmetry(const ModularDatum& datum, const FusionRing& ring);

}  // namespace fusionkit
