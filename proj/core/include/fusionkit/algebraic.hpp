#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusionkit/numeric.hpp"
#include "fusionkit/poly.hpp"

namespace fusionkit {

// A real algebraic number: primitive irreducible integer minimal polynomial
// with positive leading coefficient, together with an open rational interval
// isolating exactly one real root. Values are immutable; interval refinement
// is internal and monotone.
class AlgebraicNumber {
 public:
  AlgebraicNumber();  // zero
  static AlgebraicNumber from_rational(const Rat& r);
  static AlgebraicNumber from_int(const Int& n);
  // Unique real root of `poly` (not necessarily irreducible) in (lo, hi).
  static AlgebraicNumber root_of(const IntPoly& poly, const Rat& lo, const Rat& hi);
  static AlgebraicNumber largest_real_root(const IntPoly& poly);

  const IntPoly& minpoly() const { return minpoly_; }
  std::pair<Rat, Rat> interval() const { return {lo_, hi_}; }
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  bool is_rational() const { return degree() == 1; }
  bool is_zero() const;
  Rat rational_value() const;  // requires is_rational()
  bool is_integer() const;
  Int integer_value() const;
  bool is_algebraic_integer() const { return !minpoly_.empty() && minpoly_.back() == 1; }

  AlgebraicNumber operator-() const;
  AlgebraicNumber operator+(const AlgebraicNumber& o) const;
  AlgebraicNumber operator-(const AlgebraicNumber& o) const;
  AlgebraicNumber operator*(const AlgebraicNumber& o) const;
  AlgebraicNumber operator/(const AlgebraicNumber& o) const;
  AlgebraicNumber inverse() const;
  AlgebraicNumber sqrt() const;  // requires *this >= 0

  bool operator==(const AlgebraicNumber& o) const;
  bool operator!=(const AlgebraicNumber& o) const { return !(*this == o); }
  bool operator<(const AlgebraicNumber& o) const { return compare(o) < 0; }
  bool operator<=(const AlgebraicNumber& o) const { return compare(o) <= 0; }
  bool operator>(const AlgebraicNumber& o) const { return compare(o) > 0; }
  bool operator>=(const AlgebraicNumber& o) const { return compare(o) >= 0; }
  int compare(const AlgebraicNumber& o) const;
  int sign() const;

  // Shrink the isolating interval to width <= w.
  void refine_to(const Rat& w) const;
  Rat midpoint() const { return (lo_ + hi_) / 2; }
  Real approx(int digits = 40) const;
  double approx_double() const;
  std::string decimal_string(int digits) const;
  // "root of x^2-x-1 in (1.6, 1.7) ~ 1.6180339887" style rendering;
  // rationals render as plain "p/q".
  std::string to_string() const;

 private:
  IntPoly minpoly_;
  mutable Rat lo_, hi_;
  void bisect_once() const;
};

// Every complex conjugate has modulus <= the designated real root (ties
// allowed). Certified: exact detection of conjugates on the critical circle,
// numeric certification off it.
bool conjugate_dominance(const AlgebraicNumber& a);

// If a == 2cos(pi/n) for some 3 <= n <= n_max, returns n.
std::optional<int> two_cos_quantization(const AlgebraicNumber& a, int n_max = 1000);

enum class Ternary { yes, no, undecided };

// Whether the splitting field of the irreducible polynomial is abelian over
// Q. Exact for degree <= 6; degree > 6 reports undecided.
Ternary galois_abelian(const IntPoly& minpoly);

// ---------------------------------------------------------------------------
// Arithmetic in the number field Q[t]/(poly), elements as RatPoly of degree
// < deg(poly). Used for character tables, FP-dimension verification and the
// Galois machinery.
struct NumberField {
  explicit NumberField(IntPoly defining);
  IntPoly poly;    // primitive irreducible, positive lc
  RatPoly monic;   // the same polynomial made monic over Q
  int deg;

  RatPoly reduce(const RatPoly& a) const;
  RatPoly add(const RatPoly& a, const RatPoly& b) const { return rp_add(a, b); }
  RatPoly sub(const RatPoly& a, const RatPoly& b) const { return rp_sub(a, b); }
  RatPoly mul(const RatPoly& a, const RatPoly& b) const;
  RatPoly inv(const RatPoly& a) const;
  RatPoly compose(const RatPoly& a, const RatPoly& b) const;  // a(b) mod poly
  bool is_zero(const RatPoly& a) const { return rp_trim(a).empty(); }
  // Minimal polynomial of the element over Q (primitive integer form).
  IntPoly element_minpoly(const RatPoly& a) const;
};

// Converts a field element to an AlgebraicNumber, given the designated real
// root of the defining polynomial.
AlgebraicNumber to_algebraic(const NumberField& field, const RatPoly& elem,
                             const AlgebraicNumber& root);

// Polynomials over a number field (little-endian, elements reduced).
using KPoly = std::vector<RatPoly>;
KPoly kp_trim(const NumberField& K, KPoly a);
KPoly kp_mul(const NumberField& K, const KPoly& a, const KPoly& b);
KPoly kp_mod(const NumberField& K, KPoly a, const KPoly& b);
KPoly kp_gcd(const NumberField& K, KPoly a, KPoly b);  // monic
// Roots of `poly` (over Q) inside the field, via Trager norms; returns all
// elements r with poly(r) = 0, or nullopt when poly does not split.
std::optional<std::vector<RatPoly>> roots_in_field(const NumberField& K, const IntPoly& target);

// Parses "sqrt(2)/2", "(1+sqrt(5))/2", "3/4", "1.25" style expressions into
// exact algebraic numbers. Grammar: +, -, *, /, sqrt(...), parentheses,
// integer and decimal literals.
AlgebraicNumber parse_algebraic(const std::string& text);

}  // namespace fusionkit
