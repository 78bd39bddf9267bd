#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fusionkit/numeric.hpp"

namespace fusionkit {

// Dense little-endian coefficient vectors; {} is the zero polynomial and
// all nonzero polynomials carry a nonzero leading coefficient.
using IntPoly = std::vector<Int>;
using RatPoly = std::vector<Rat>;

IntPoly ip_trim(IntPoly p);
int degree(const IntPoly& p);  // -1 for the zero polynomial
int degree(const RatPoly& p);
const Int& lc(const IntPoly& p);  // requires p nonzero

IntPoly ip_add(const IntPoly& a, const IntPoly& b);
IntPoly ip_sub(const IntPoly& a, const IntPoly& b);
IntPoly ip_neg(IntPoly a);
IntPoly ip_mul(const IntPoly& a, const IntPoly& b);
IntPoly ip_scale(const IntPoly& a, const Int& c);
IntPoly ip_shift(const IntPoly& a, int k);  // multiply by x^k

Int ip_eval(const IntPoly& p, const Int& x);
Rat ip_eval_rat(const IntPoly& p, const Rat& x);
int ip_sign_at(const IntPoly& p, const Rat& x);  // exact sign of p(x)
Real ip_eval_real(const IntPoly& p, const Real& x);
Cplx ip_eval_cplx(const IntPoly& p, const Cplx& x);

IntPoly ip_derivative(const IntPoly& p);
Int ip_content(const IntPoly& p);           // >= 0; 0 only for the zero poly
IntPoly ip_primitive(const IntPoly& p);     // content 1, sign of lc kept
IntPoly ip_normalize(const IntPoly& p);     // content 1, positive lc
// Exact division: returns false if b does not divide a over Z.
bool ip_divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& quot);
// Substitutions used for algebraic-number fast paths.
IntPoly ip_compose_neg(const IntPoly& p);              // p(-x)
IntPoly ip_reverse(const IntPoly& p);                  // x^deg * p(1/x)
IntPoly ip_shift_arg(const IntPoly& p, const Rat& r);  // p(x + r), denominators cleared
IntPoly ip_scale_arg(const IntPoly& p, const Rat& r);  // p(r x), denominators cleared
IntPoly ip_compose_square(const IntPoly& p);           // p(x^2)

RatPoly to_rat(const IntPoly& p);
IntPoly clear_denominators(const RatPoly& p);  // primitive, positive lc

RatPoly rp_trim(RatPoly p);
RatPoly rp_add(const RatPoly& a, const RatPoly& b);
RatPoly rp_sub(const RatPoly& a, const RatPoly& b);
RatPoly rp_mul(const RatPoly& a, const RatPoly& b);
RatPoly rp_scale(const RatPoly& a, const Rat& c);
void rp_divrem(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
RatPoly rp_gcd(const RatPoly& a, const RatPoly& b);  // monic
RatPoly rp_derivative(const RatPoly& p);
Rat rp_eval(const RatPoly& p, const Rat& x);
RatPoly rp_mod(const RatPoly& a, const RatPoly& b);

// Resultant of two integer polynomials (Sylvester determinant, exact).
Int resultant(const IntPoly& f, const IntPoly& g);
IntPoly ip_gcd(const IntPoly& a, const IntPoly& b);  // primitive, positive lc
IntPoly squarefree_part(const IntPoly& f);
Int discriminant(const IntPoly& f);

// Sturm machinery. Chains are built from the squarefree part internally.
struct SturmChain {
  std::vector<IntPoly> seq;
};
SturmChain sturm_chain(const IntPoly& f);
int sturm_variations(const SturmChain& chain, const Rat& x);
// Number of distinct real roots in the open interval (lo, hi); endpoints
// must not be roots (callers nudge them first).
int count_real_roots(const SturmChain& chain, const Rat& lo, const Rat& hi);
int count_real_roots_total(const SturmChain& chain);
Rat cauchy_root_bound(const IntPoly& f);  // all real roots lie in [-B, B]

// Factorization over Z. Inputs need not be primitive; content is dropped.
// factor_squarefree requires a squarefree primitive input.
std::vector<IntPoly> factor_squarefree(const IntPoly& f);
std::vector<std::pair<IntPoly, int>> factor(const IntPoly& f);
bool is_irreducible(const IntPoly& f);

IntPoly cyclotomic_poly(unsigned m);

// Lagrange interpolation through distinct sample points.
RatPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& pts);

// "x^2-x-1" style rendering and parsing (used by reports and ring files).
std::string poly_to_string(const IntPoly& p, const std::string& var = "x");
IntPoly poly_from_string(const std::string& s);

// Certified complex root approximations: Aberth refinement with Weierstrass
// error radii. Returns one (value, radius) pair per root of the squarefree
// input, radii small enough that the discs are pairwise disjoint.
struct ComplexRoot {
  Cplx value;
  Real radius;
};
std::vector<ComplexRoot> complex_roots(const IntPoly& f);

}  // namespace fusionkit
