#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fusionkit/group.hpp"
#include "fusionkit/linalg.hpp"

namespace fusionkit {

// d-cochain on G with values in mu_m, stored as additive exponents mod m.
struct Cochain {
  int degree = 0;
  std::int64_t modulus = 1;
  int group_order = 1;
  std::vector<std::int64_t> values;  // indexed by the tuple (g_1..g_d), row major

  static Cochain zero(const FiniteGroup& g, int degree, std::int64_t modulus);
  std::int64_t& at(const std::vector<int>& tuple);
  std::int64_t at(const std::vector<int>& tuple) const;
  size_t index_of(const std::vector<int>& tuple) const;
  // re-encode into mu_M for m | M (exponents scale by M/m)
  Cochain include_into(std::int64_t larger_modulus) const;
};

// Standard bar differential: (dc)(g0..gd) = c(g1..gd) - c(g0 g1, g2..) +
// ... + (-1)^(d+1) c(g0..g_{d-1}).
Cochain coboundary(const FiniteGroup& g, const Cochain& c);
bool is_cocycle(const FiniteGroup& g, const Cochain& c);
// Solves dc' = c over mu_m exactly; the witness has degree d-1.
std::optional<Cochain> is_coboundary(const FiniteGroup& g, const Cochain& c);
// Triviality over the full coefficient group C^x (solvable with a witness
// valued in mu_{m * |G|}).
std::optional<Cochain> is_coboundary_cx(const FiniteGroup& g, const Cochain& c);

struct CohomologyGroup {
  int degree;
  std::int64_t modulus;
  std::vector<std::int64_t> factor_orders;  // cyclic factors > 1, divisibility order
  std::vector<Cochain> representatives;     // one generator per factor
};

// H^degree(G, C^x) restricted to classes representable with mu_m values
// (with m = |G|, the default, this is the full C^x-valued cohomology since
// every class has exponent dividing |G|). Computed from the bar complex mod
// m with triviality decided in mu_{m.|G|}, via Howell kernels and Smith
// normal form.
CohomologyGroup cohomology(const FiniteGroup& g, int degree, std::int64_t modulus = 0);

// The standard generator family of H^3 of a cyclic group:
// w_q(a,b,c) = q * a * floor((b+c)/n) mod n.
Cochain standard_3cocycle(int n, std::int64_t q);

// Restriction of a cochain on G to the subgroup given by `elements`
// (result indexed by the subgroup's own element order).
Cochain restrict_cochain(const FiniteGroup& g, const Cochain& c,
                         const std::vector<int>& elements);

}  // namespace fusionkit
