#pragma once

#include <string>
#include <vector>

#include "fusionkit/numeric.hpp"

namespace fusionkit {

// Finite group as a multiplication table with identity at index 0. Group
// axioms are verified on construction.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<int>> table, std::string name = "");

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int conjugate(int g, int x) const { return mul(mul(x, g), inv(x)); }  // x g x^{-1}
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool abelian() const;
  int element_order(int g) const;
  std::vector<std::vector<int>> conjugacy_classes() const;
  // All subgroups as sorted element sets (ascending size, then lex).
  std::vector<std::vector<int>> subgroups() const;
  // Group structure induced on a subgroup's element set (element 0 of the
  // result corresponds to the identity).
  FiniteGroup subgroup_group(const std::vector<int>& elements) const;

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
  static FiniteGroup dihedral8();
  static FiniteGroup quaternion8();
  static FiniteGroup symmetric3();
  // "z4", "z2xz2", "d8", "q8", "s3", "trivial"
  static FiniteGroup from_spec(const std::string& spec);

 private:
  int n_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::string name_;
};

}  // namespace fusionkit
