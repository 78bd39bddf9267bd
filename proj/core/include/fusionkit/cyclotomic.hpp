#pragma once

#include <string>

#include "fusionkit/numeric.hpp"
#include "fusionkit/poly.hpp"

namespace fusionkit {

// Elements of Q(zeta_m), stored reduced modulo the m-th cyclotomic
// polynomial (degree < phi(m)).
class CyclotomicElement {
 public:
  explicit CyclotomicElement(unsigned order);         // zero in Q(zeta_m)
  static CyclotomicElement zeta_power(unsigned order, long exponent);
  static CyclotomicElement from_rational(unsigned order, const Rat& r);

  unsigned order() const { return order_; }
  const RatPoly& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rat rational_value() const;

  CyclotomicElement operator+(const CyclotomicElement& o) const;
  CyclotomicElement operator-(const CyclotomicElement& o) const;
  CyclotomicElement operator*(const CyclotomicElement& o) const;
  CyclotomicElement conj() const;  // complex conjugation zeta -> zeta^(m-1)
  bool operator==(const CyclotomicElement& o) const;
  bool operator!=(const CyclotomicElement& o) const { return !(*this == o); }

  Cplx approx() const;
  std::string to_string() const;

 private:
  unsigned order_;
  RatPoly coeffs_;
  const IntPoly& phi() const;
  void check_order(const CyclotomicElement& o) const;
};

}  // namespace fusionkit
