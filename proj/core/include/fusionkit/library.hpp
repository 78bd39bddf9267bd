#pragma once

#include <string>
#include <vector>

#include "fusionkit/group.hpp"
#include "fusionkit/ring.hpp"

namespace fusionkit {

// Constructors for the concrete fusion rings used throughout; every output
// passes verify_axioms.
FusionRing group_ring(const FiniteGroup& g);
// Verlinde ring of sl2 at level l: rank l+1, all objects self-dual.
FusionRing sl2_verlinde(int level);
// Rank-2 family: X^2 = 1 + nX, X self-dual.
FusionRing a_n(int n);
// Rank n+1 family: X_i X_j = X_{i+j}, X_i Y = Y X_i = Y, Y^2 = (n-1)Y + sum X_i.
FusionRing b_n(int n);
// Z[G] + X with X^2 = sum of G, gX = Xg = X. Nonabelian G is accepted and
// annotated as not realizable.
FusionRing tambara_yamagami(const FiniteGroup& g);
FusionRing rep_s3();
FusionRing ising();
FusionRing yang_lee();

// Built-in registry used by the CLI: "yang_lee", "ising", "rep_s3",
// "a_n:3", "b_n:2", "sl2:4", "ty:z2xz2", "group_ring:s3".
FusionRing builtin_ring(const std::string& name);
std::vector<std::string> builtin_names();
// All built-ins exercised by test batteries, with parameters at desk scale.
std::vector<FusionRing> builtin_test_set();

}  // namespace fusionkit
