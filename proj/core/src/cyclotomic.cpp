#include "fusionkit/cyclotomic.hpp"

#include <map>
#include <sstream>

namespace fusionkit {

namespace {

const IntPoly& cached_cyclotomic(unsigned m) {
  static std::map<unsigned, IntPoly> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, cyclotomic_poly(m)).first;
  return it->second;
}

}  // namespace

CyclotomicElement::CyclotomicElement(unsigned order) : order_(order) {
  if (order == 0) throw ShapeError("CyclotomicElement: order must be positive");
}

const IntPoly& CyclotomicElement::phi() const { return cached_cyclotomic(order_); }

void CyclotomicElement::check_order(const CyclotomicElement& o) const {
  if (order_ != o.order_)
    throw ShapeError("CyclotomicElement: mixed orders " + std::to_string(order_) +
                     " and " + std::to_string(o.order_));
}

CyclotomicElement CyclotomicElement::zeta_power(unsigned order, long exponent) {
  CyclotomicElement e(order);
  long m = static_cast<long>(order);
  long k = ((exponent % m) + m) % m;
  RatPoly p(k + 1, Rat(0));
  p[k] = 1;
  e.coeffs_ = rp_mod(p, to_rat(e.phi()));
  return e;
}

CyclotomicElement CyclotomicElement::from_rational(unsigned order, const Rat& r) {
  CyclotomicElement e(order);
  if (r != 0) e.coeffs_ = RatPoly{r};
  return e;
}

bool CyclotomicElement::is_zero() const { return rp_trim(coeffs_).empty(); }

bool CyclotomicElement::is_one() const {
  RatPoly t = rp_trim(coeffs_);
  return t.size() == 1 && t[0] == 1;
}

bool CyclotomicElement::is_rational() const { return degree(rp_trim(coeffs_)) <= 0; }

Rat CyclotomicElement::rational_value() const {
  RatPoly t = rp_trim(coeffs_);
  if (degree(t) > 0) throw ShapeError("rational_value: element not rational");
  return t.empty() ? Rat(0) : t[0];
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement& o) const {
  check_order(o);
  CyclotomicElement e(order_);
  e.coeffs_ = rp_add(coeffs_, o.coeffs_);
  return e;
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement& o) const {
  check_order(o);
  CyclotomicElement e(order_);
  e.coeffs_ = rp_sub(coeffs_, o.coeffs_);
  return e;
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& o) const {
  check_order(o);
  CyclotomicElement e(order_);
  e.coeffs_ = rp_mod(rp_mul(coeffs_, o.coeffs_), to_rat(phi()));
  return e;
}

CyclotomicElement CyclotomicElement::conj() const {
  CyclotomicElement e(order_);
  // substitute zeta -> zeta^(m-1)
  RatPoly zinv;
  {
    RatPoly p(order_, Rat(0));
    p[order_ - 1] = 1;
    zinv = rp_mod(p, to_rat(phi()));
  }
  RatPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = rp_mod(rp_mul(acc, zinv), to_rat(phi()));
    if (acc.empty()) acc = RatPoly{*it};
    else acc[0] += *it;
    acc = rp_trim(std::move(acc));
  }
  e.coeffs_ = acc;
  return e;
}

bool CyclotomicElement::operator==(const CyclotomicElement& o) const {
  check_order(o);
  return rp_trim(rp_sub(coeffs_, o.coeffs_)).empty();
}

Cplx CyclotomicElement::approx() const {
  const Real pi = 4 * atan(Real(1));
  Real angle = 2 * pi / static_cast<long>(order_);
  Cplx zeta(cos(angle), sin(angle));
  Cplx acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * zeta + Cplx(to_real(*it));
  return acc;
}

std::string CyclotomicElement::to_string() const {
  RatPoly t = rp_trim(coeffs_);
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(t); d >= 0; --d) {
    const Rat& c = t[d];
    if (c == 0) continue;
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    bool unit = (a == 1);
    if (d == 0 || !unit) {
      os << num(a).str();
      if (den(a) != 1) os << "/" << den(a).str();
    }
    if (d > 0) {
      os << "z" << order_;
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

}  // namespace fusionkit
