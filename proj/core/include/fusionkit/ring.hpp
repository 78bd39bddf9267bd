#pragma once

#include <array>
#include <string>
#include <vector>

#include "fusionkit/linalg.hpp"
#include "fusionkit/numeric.hpp"

namespace fusionkit {

// Element of the Grothendieck semiring: nonnegative coordinates in the
// distinguished basis.
using BasisVector = std::vector<Int>;

enum class Axiom { unit, duality, associativity, antiautomorphism };
std::string axiom_name(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  std::vector<int> index;
};
using AxiomReport = std::vector<AxiomViolation>;

// A based ring: distinguished basis with unit at index 0, nonnegative
// integer structure constants and a dual involution. Immutable after
// construction; construction checks shape only, the axioms are checked by
// verify_axioms.
class FusionRing {
 public:
  FusionRing(int rank, std::vector<std::string> labels, std::vector<int> dual,
             std::vector<Int> tensor, std::string name = "");

  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& dual_perm() const { return dual_; }
  int dual(int i) const { return dual_.at(i); }
  const Int& n(int i, int j, int k) const {
    return tensor_[(static_cast<size_t>(i) * rank_ + j) * rank_ + k];
  }
  const std::vector<Int>& tensor() const { return tensor_; }
  bool commutative() const;

  const std::vector<std::string>& annotations() const { return annotations_; }
  FusionRing with_annotation(std::string note) const;
  FusionRing renamed(std::string name) const;

 private:
  int rank_;
  std::vector<std::string> labels_;
  std::vector<int> dual_;
  std::vector<Int> tensor_;  // N_{ij}^k at ((i*r)+j)*r+k
  std::string name_;
  std::vector<std::string> annotations_;
};

// Every violated axiom with witness indices, in deterministic order (axioms
// in declaration order, witnesses lexicographic). Empty report = valid ring.
AxiomReport verify_axioms(const FusionRing& ring);
bool is_valid(const FusionRing& ring);

BasisVector basis_vector(const FusionRing& ring, int i);
BasisVector multiply(const FusionRing& ring, const BasisVector& a, const BasisVector& b);

// (N_i)_{jk} = N_{ij}^k: row j holds the expansion of X_i * X_j.
IntMat left_mult_matrix(const FusionRing& ring, int i);

struct ReciprocityResult {
  bool holds = true;
  std::vector<std::array<int, 3>> witnesses;  // (i, j, k) with N_{i*j}^k != N_{ik}^j
};
ReciprocityResult check_reciprocity(const FusionRing& ring);

struct InvertiblesResult {
  std::vector<int> indices;              // ascending
  std::vector<std::vector<int>> table;   // group table on those indices
};
InvertiblesResult invertibles(const FusionRing& ring);

FusionRing product_ring(const FusionRing& a, const FusionRing& b);

struct SubringSearch {
  std::vector<std::vector<int>> subrings;  // sorted index sets, each contains 0
  std::vector<int> adjoint;                // the adjoint subring
};
SubringSearch find_subrings(const FusionRing& ring);

bool tables_equal(const FusionRing& a, const FusionRing& b);

}  // namespace fusionkit
