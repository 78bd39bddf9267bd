#include "fusionkit/algebraic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "fusionkit/linalg.hpp"

namespace fusionkit {

namespace {

struct RatInterval {
  Rat lo, hi;
};

RatInterval iv_add(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
  Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {lo, hi};
}

RatInterval iv_eval(const RatPoly& p, const RatInterval& x) {
  RatInterval acc{Rat(0), Rat(0)};
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = iv_mul(acc, x);
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

// Interpolated resultants for sums and products of algebraic numbers.
IntPoly resultant_sum_poly(const IntPoly& f, const IntPoly& g) {
  int dr = degree(f) * degree(g);
  std::vector<std::pair<Rat, Rat>> pts;
  pts.reserve(dr + 1);
  for (int k = 0; static_cast<int>(pts.size()) <= dr; ++k) {
    Int x0 = (k % 2 == 0) ? Int(k / 2) : Int(-(k / 2 + 1));
    // g(x0 - y) as a polynomial in y
    IntPoly gy{Int(0)};
    IntPoly lin{x0, Int(-1)};  // x0 - y
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
      gy = ip_mul(gy, lin);
      if (gy.empty()) gy = {*it};
      else gy[0] += *it;
      gy = ip_trim(std::move(gy));
    }
    pts.emplace_back(Rat(x0), Rat(resultant(f, gy)));
  }
  RatPoly r = lagrange_interpolate(pts);
  return clear_denominators(r);
}

IntPoly resultant_prod_poly(const IntPoly& f, const IntPoly& g) {
  int m = degree(g);
  int dr = degree(f) * m;
  std::vector<std::pair<Rat, Rat>> pts;
  pts.reserve(dr + 1);
  for (int k = 0; static_cast<int>(pts.size()) <= dr; ++k) {
    Int x0 = (k % 2 == 0) ? Int(k / 2) : Int(-(k / 2 + 1));
    // G(y) = sum_j g_j x0^j y^(m-j)
    IntPoly gy(m + 1, Int(0));
    Int pw = 1;
    for (int j = 0; j <= m; ++j) {
      gy[m - j] = g[j] * pw;
      pw *= x0;
    }
    gy = ip_trim(std::move(gy));
    pts.emplace_back(Rat(x0), Rat(resultant(f, gy)));
  }
  RatPoly r = lagrange_interpolate(pts);
  return clear_denominators(r);
}

Rat rat_sqrt_below(const Rat& q) {
  // sqrt(p/q) = sqrt(p*q)/q, floored at dyadic precision
  Int p = num(q), d = den(q);
  Int scaled = p * d;
  scaled <<= 120;
  Int s = boost::multiprecision::sqrt(scaled);
  return Rat(s, d * (Int(1) << 60));
}

Rat rat_sqrt_above(const Rat& q) {
  Int p = num(q), d = den(q);
  Int scaled = p * d;
  scaled <<= 120;
  Int s = boost::multiprecision::sqrt(scaled) + 1;
  return Rat(s, d * (Int(1) << 60));
}

std::string format_rat_fixed(const Rat& value, int decimals) {
  Int scale = boost::multiprecision::pow(Int(10), unsigned(decimals));
  Rat scaled = value * Rat(scale);
  Int rounded;
  {
    Int n = num(scaled), d = den(scaled);
    Int twice = 2 * n + (n >= 0 ? d : -d);
    rounded = twice / (2 * d);
  }
  bool neg = rounded < 0;
  Int mag = neg ? -rounded : rounded;
  std::string digits = mag.str();
  if (static_cast<int>(digits.size()) <= decimals)
    digits.insert(0, decimals + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - decimals);
  if (decimals > 0) out += "." + digits.substr(digits.size() - decimals);
  return (neg ? "-" : "") + out;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber() : minpoly_{Int(0), Int(1)}, lo_(Rat(-1, 2)), hi_(Rat(1, 2)) {}

AlgebraicNumber AlgebraicNumber::from_rational(const Rat& r) {
  AlgebraicNumber a;
  a.minpoly_ = ip_normalize(IntPoly{-num(r), den(r)});
  a.lo_ = r - Rat(1, 2);
  a.hi_ = r + Rat(1, 2);
  return a;
}

AlgebraicNumber AlgebraicNumber::from_int(const Int& n) { return from_rational(Rat(n)); }

AlgebraicNumber AlgebraicNumber::root_of(const IntPoly& poly, const Rat& lo, const Rat& hi) {
  if (lo >= hi) throw ShapeError("root_of: empty interval");
  auto factors = factor(poly);
  if (factors.empty()) throw ShapeError("root_of: constant polynomial");
  const IntPoly* chosen = nullptr;
  Rat clo = lo, chi = hi;
  int total = 0;
  for (const auto& [f, mult] : factors) {
    if (fusionkit::degree(f) == 1) {
      Rat r(-f[0], f[1]);
      if (lo < r && r < hi) {
        ++total;
        chosen = &f;
        clo = r - 1;
        chi = r + 1;
      }
      continue;
    }
    SturmChain chain = sturm_chain(f);
    if (ip_sign_at(f, lo) == 0 || ip_sign_at(f, hi) == 0)
      throw ShapeError("root_of: interval endpoint is a root");
    int c = count_real_roots(chain, lo, hi);
    if (c > 0) {
      total += c;
      chosen = &f;
      clo = lo;
      chi = hi;
    }
  }
  if (total != 1 || chosen == nullptr)
    throw ShapeError("root_of: interval does not isolate exactly one root");
  AlgebraicNumber a;
  a.minpoly_ = *chosen;
  a.lo_ = clo;
  a.hi_ = chi;
  return a;
}

AlgebraicNumber AlgebraicNumber::largest_real_root(const IntPoly& poly) {
  IntPoly sf = squarefree_part(poly);
  if (fusionkit::degree(sf) < 1) throw ShapeError("largest_real_root: constant polynomial");
  SturmChain chain = sturm_chain(sf);
  Rat bound = cauchy_root_bound(sf) + 1;
  Rat lo = -bound, hi = bound;
  int total = count_real_roots(chain, lo, hi);
  if (total == 0) throw ShapeError("largest_real_root: no real roots");
  while (count_real_roots(chain, lo, hi) != 1) {
    Rat mid = (lo + hi) / 2;
    if (ip_sign_at(sf, mid) == 0) mid += (hi - lo) / 8;
    if (ip_sign_at(sf, mid) == 0)
      throw InternalError("largest_real_root: failed to dodge a root");
    if (count_real_roots(chain, mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return root_of(poly, lo, hi);
}

bool AlgebraicNumber::is_zero() const {
  return minpoly_.size() == 2 && minpoly_[0] == 0 && minpoly_[1] == 1;
}

Rat AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw ShapeError("rational_value: degree > 1");
  return Rat(-minpoly_[0], minpoly_[1]);
}

bool AlgebraicNumber::is_integer() const {
  return is_rational() && minpoly_[1] == 1;
}

Int AlgebraicNumber::integer_value() const {
  if (!is_integer()) throw ShapeError("integer_value: not an integer");
  return -minpoly_[0];
}

void AlgebraicNumber::bisect_once() const {
  if (is_rational()) {
    Rat r = Rat(-minpoly_[0], minpoly_[1]);
    lo_ = (lo_ + r) / 2;
    hi_ = (hi_ + r) / 2;
    return;
  }
  Rat mid = (lo_ + hi_) / 2;
  int s = ip_sign_at(minpoly_, mid);
  if (s == 0) throw InternalError("bisect_once: rational root of irreducible poly");
  if (s == ip_sign_at(minpoly_, lo_))
    lo_ = mid;
  else
    hi_ = mid;
}

void AlgebraicNumber::refine_to(const Rat& w) const {
  while (hi_ - lo_ > w) bisect_once();
}

Real AlgebraicNumber::approx(int digits) const {
  refine_to(Rat(1, boost::multiprecision::pow(Int(10), unsigned(digits))));
  return to_real(midpoint());
}

double AlgebraicNumber::approx_double() const { return approx(20).convert_to<double>(); }

AlgebraicNumber AlgebraicNumber::operator-() const {
  if (is_rational()) return from_rational(-rational_value());
  AlgebraicNumber a;
  a.minpoly_ = ip_normalize(ip_compose_neg(minpoly_));
  a.lo_ = -hi_;
  a.hi_ = -lo_;
  return a;
}

namespace {

AlgebraicNumber make_direct(IntPoly minpoly, Rat lo, Rat hi) {
  return AlgebraicNumber::root_of(minpoly, lo, hi);
}

}  // namespace

AlgebraicNumber AlgebraicNumber::operator+(const AlgebraicNumber& o) const {
  if (is_rational() && o.is_rational())
    return from_rational(rational_value() + o.rational_value());
  if (o.is_rational()) {
    Rat r = o.rational_value();
    if (r == 0) return *this;
    AlgebraicNumber a;
    a.minpoly_ = ip_normalize(ip_shift_arg(minpoly_, -r));
    a.lo_ = lo_ + r;
    a.hi_ = hi_ + r;
    return a;
  }
  if (is_rational()) return o + *this;
  IntPoly r = resultant_sum_poly(minpoly_, o.minpoly_);
  auto factors = factor(r);
  for (int round = 0; round < 300; ++round) {
    Rat lo = lo_ + o.lo_, hi = hi_ + o.hi_;
    int total = 0;
    const IntPoly* chosen = nullptr;
    bool clean = true;
    for (const auto& [f, mult] : factors) {
      if (ip_sign_at(f, lo) == 0 || ip_sign_at(f, hi) == 0) {
        clean = false;
        break;
      }
      int c = count_real_roots(sturm_chain(f), lo, hi);
      total += c;
      if (c >= 1) chosen = &f;
    }
    if (clean && total == 1) return make_direct(*chosen, lo, hi);
    bisect_once();
    o.bisect_once();
  }
  throw InternalError("algebraic add: isolation failed");
}

AlgebraicNumber AlgebraicNumber::operator-(const AlgebraicNumber& o) const {
  return *this + (-o);
}

AlgebraicNumber AlgebraicNumber::operator*(const AlgebraicNumber& o) const {
  if (is_rational() && o.is_rational())
    return from_rational(rational_value() * o.rational_value());
  if (o.is_rational()) {
    Rat r = o.rational_value();
    if (r == 0) return AlgebraicNumber();
    AlgebraicNumber a;
    a.minpoly_ = ip_normalize(ip_scale_arg(minpoly_, Rat(1) / r));
    if (r > 0) {
      a.lo_ = lo_ * r;
      a.hi_ = hi_ * r;
    } else {
      a.lo_ = hi_ * r;
      a.hi_ = lo_ * r;
    }
    return a;
  }
  if (is_rational()) return o * *this;
  IntPoly r = resultant_prod_poly(minpoly_, o.minpoly_);
  auto factors = factor(r);
  for (int round = 0; round < 300; ++round) {
    RatInterval hull = iv_mul({lo_, hi_}, {o.lo_, o.hi_});
    int total = 0;
    const IntPoly* chosen = nullptr;
    bool clean = true;
    for (const auto& [f, mult] : factors) {
      if (ip_sign_at(f, hull.lo) == 0 || ip_sign_at(f, hull.hi) == 0) {
        clean = false;
        break;
      }
      int c = count_real_roots(sturm_chain(f), hull.lo, hull.hi);
      total += c;
      if (c >= 1) chosen = &f;
    }
    if (clean && total == 1) return make_direct(*chosen, hull.lo, hull.hi);
    bisect_once();
    o.bisect_once();
  }
  throw InternalError("algebraic mul: isolation failed");
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) throw ShapeError("inverse: division by zero");
  if (is_rational()) return from_rational(Rat(1) / rational_value());
  while (lo_ < 0 && hi_ > 0) bisect_once();
  AlgebraicNumber a;
  a.minpoly_ = ip_normalize(ip_reverse(minpoly_));
  a.lo_ = Rat(1) / hi_;
  a.hi_ = Rat(1) / lo_;
  return a;
}

AlgebraicNumber AlgebraicNumber::operator/(const AlgebraicNumber& o) const {
  return *this * o.inverse();
}

AlgebraicNumber AlgebraicNumber::sqrt() const {
  int s = sign();
  if (s < 0) throw ShapeError("sqrt of negative algebraic number");
  if (s == 0) return AlgebraicNumber();
  if (is_rational()) {
    Rat r = rational_value();
    Int sn = boost::multiprecision::sqrt(num(r));
    Int sd = boost::multiprecision::sqrt(den(r));
    if (sn * sn == num(r) && sd * sd == den(r)) return from_rational(Rat(sn, sd));
  }
  IntPoly g = ip_compose_square(minpoly_);
  auto factors = factor(g);
  for (int round = 0; round < 300; ++round) {
    Rat lo = lo_ < 0 ? Rat(0) : lo_;
    Rat slo = rat_sqrt_below(lo), shi = rat_sqrt_above(hi_);
    int total = 0;
    const IntPoly* chosen = nullptr;
    bool clean = true;
    for (const auto& [f, mult] : factors) {
      if (fusionkit::degree(f) == 1) {
        Rat r(-f[0], f[1]);
        if (slo < r && r < shi) {
          ++total;
          chosen = &f;
        }
        continue;
      }
      if (ip_sign_at(f, slo) == 0 || ip_sign_at(f, shi) == 0) {
        clean = false;
        break;
      }
      int c = count_real_roots(sturm_chain(f), slo, shi);
      total += c;
      if (c >= 1) chosen = &f;
    }
    if (clean && total == 1) {
      if (fusionkit::degree(*chosen) == 1) return from_rational(Rat(-(*chosen)[0], (*chosen)[1]));
      return make_direct(*chosen, slo, shi);
    }
    bisect_once();
  }
  throw InternalError("algebraic sqrt: isolation failed");
}

bool AlgebraicNumber::operator==(const AlgebraicNumber& o) const {
  if (minpoly_ != o.minpoly_) return false;
  if (is_rational()) return true;
  SturmChain chain = sturm_chain(minpoly_);
  for (int round = 0; round < 300; ++round) {
    if (hi_ <= o.lo_ || o.hi_ <= lo_) return false;
    Rat lo = std::min(lo_, o.lo_), hi = std::max(hi_, o.hi_);
    if (ip_sign_at(minpoly_, lo) != 0 && ip_sign_at(minpoly_, hi) != 0 &&
        count_real_roots(chain, lo, hi) == 1)
      return true;
    bisect_once();
    o.bisect_once();
  }
  throw InternalError("algebraic equality: isolation failed");
}

int AlgebraicNumber::compare(const AlgebraicNumber& o) const {
  if (*this == o) return 0;
  for (int round = 0; round < 2000; ++round) {
    if (hi_ <= o.lo_) return -1;
    if (o.hi_ <= lo_) return 1;
    bisect_once();
    o.bisect_once();
  }
  throw InternalError("algebraic compare: separation failed");
}

int AlgebraicNumber::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) {
    Rat r = rational_value();
    return r > 0 ? 1 : (r < 0 ? -1 : 0);
  }
  while (lo_ < 0 && hi_ > 0) bisect_once();
  return hi_ <= 0 ? -1 : 1;
}

std::string AlgebraicNumber::decimal_string(int digits) const {
  refine_to(Rat(1, boost::multiprecision::pow(Int(10), unsigned(digits + 3))));
  return format_rat_fixed(midpoint(), digits);
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) {
    Rat r = rational_value();
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
  }
  refine_to(Rat(1, 100000));
  SturmChain chain = sturm_chain(minpoly_);
  std::string ivstr;
  for (int prec = 1; prec <= 12; ++prec) {
    Int scale = boost::multiprecision::pow(Int(10), unsigned(prec));
    // outward rounding at this precision
    Int lf = num(lo_ * Rat(scale)) / den(lo_ * Rat(scale));
    if (Rat(lf, scale) > lo_) lf -= 1;
    Int hc = num(hi_ * Rat(scale)) / den(hi_ * Rat(scale));
    if (Rat(hc, scale) < hi_) hc += 1;
    Rat lo2(lf, scale), hi2(hc, scale);
    if (ip_sign_at(minpoly_, lo2) != 0 && ip_sign_at(minpoly_, hi2) != 0 &&
        count_real_roots(chain, lo2, hi2) == 1) {
      ivstr = "(" + format_rat_fixed(lo2, prec) + ", " + format_rat_fixed(hi2, prec) + ")";
      break;
    }
  }
  if (ivstr.empty())
    ivstr = "(" + format_rat_fixed(lo_, 12) + ", " + format_rat_fixed(hi_, 12) + ")";
  return "root of " + poly_to_string(minpoly_) + " in " + ivstr + " ≈ " +
         decimal_string(10);
}

// ---------------------------------------------------------------------------
// NumberField

NumberField::NumberField(IntPoly defining) {
  poly = ip_normalize(std::move(defining));
  deg = degree(poly);
  if (deg < 1) throw ShapeError("NumberField: constant defining polynomial");
  monic = to_rat(poly);
  Rat inv = Rat(1) / monic.back();
  for (auto& c : monic) c *= inv;
}

RatPoly NumberField::reduce(const RatPoly& a) const { return rp_mod(a, monic); }

RatPoly NumberField::mul(const RatPoly& a, const RatPoly& b) const {
  return rp_mod(rp_mul(a, b), monic);
}

RatPoly NumberField::inv(const RatPoly& a) const {
  // extended Euclid over Q[x]
  RatPoly r0 = monic, r1 = reduce(a);
  if (rp_trim(r1).empty()) throw ShapeError("NumberField::inv: zero element");
  RatPoly t0{}, t1{Rat(1)};
  while (!rp_trim(r1).empty()) {
    RatPoly q, r2;
    rp_divrem(r0, r1, q, r2);
    RatPoly t2 = rp_sub(t0, rp_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (degree(r0) != 0) throw InternalError("NumberField::inv: defining polynomial not irreducible");
  return reduce(rp_scale(t0, Rat(1) / r0[0]));
}

RatPoly NumberField::compose(const RatPoly& a, const RatPoly& b) const {
  RatPoly acc;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = mul(acc, b);
    if (acc.empty()) acc = RatPoly{*it};
    else acc[0] += *it;
    acc = rp_trim(std::move(acc));
  }
  return reduce(acc);
}

IntPoly NumberField::element_minpoly(const RatPoly& a) const {
  RatPoly e = reduce(a);
  if (rp_trim(e).empty()) return IntPoly{Int(0), Int(1)};
  // multiplication matrix in the power basis
  std::vector<RatPoly> cols(deg);
  RatPoly cur = e;
  for (int k = 0; k < deg; ++k) {
    cols[k] = cur;  // a * t^k
    cur = mul(cur, RatPoly{Rat(0), Rat(1)});
  }
  Int common = 1;
  for (const auto& col : cols)
    for (const auto& c : col) common = boost::multiprecision::lcm(common, den(c));
  IntMat m(deg, std::vector<Int>(deg, Int(0)));
  for (int k = 0; k < deg; ++k)
    for (size_t i = 0; i < cols[k].size(); ++i)
      m[i][k] = num(cols[k][i]) * (common / den(cols[k][i]));
  IntPoly cp = charpoly(m);  // roots are common * conjugates of a
  IntPoly scaled = ip_normalize(ip_scale_arg(cp, Rat(common)));
  return squarefree_part(scaled);
}

AlgebraicNumber to_algebraic(const NumberField& field, const RatPoly& elem,
                             const AlgebraicNumber& root) {
  RatPoly e = field.reduce(elem);
  if (rp_trim(e).empty()) return AlgebraicNumber();
  if (degree(e) <= 0) return AlgebraicNumber::from_rational(e.empty() ? Rat(0) : e[0]);
  IntPoly mp = field.element_minpoly(e);
  if (degree(mp) == 1) return AlgebraicNumber::from_rational(Rat(-mp[0], mp[1]));
  SturmChain chain = sturm_chain(mp);
  for (int round = 0; round < 400; ++round) {
    auto [lo, hi] = root.interval();
    RatInterval hull = iv_eval(e, {lo, hi});
    if (ip_sign_at(mp, hull.lo) != 0 && ip_sign_at(mp, hull.hi) != 0 &&
        count_real_roots(chain, hull.lo, hull.hi) == 1)
      return AlgebraicNumber::root_of(mp, hull.lo, hull.hi);
    root.refine_to((hi - lo) / 2);
  }
  throw InternalError("to_algebraic: isolation failed");
}

KPoly kp_trim(const NumberField& K, KPoly a) {
  while (!a.empty() && K.is_zero(a.back())) a.pop_back();
  return a;
}

KPoly kp_mul(const NumberField& K, const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  KPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  return kp_trim(K, std::move(r));
}

KPoly kp_mod(const NumberField& K, KPoly a, const KPoly& b) {
  if (b.empty()) throw ShapeError("kp_mod: division by zero");
  RatPoly binv = K.inv(b.back());
  a = kp_trim(K, std::move(a));
  while (a.size() >= b.size() && !a.empty()) {
    RatPoly c = K.mul(a.back(), binv);
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[off + i] = K.sub(a[off + i], K.mul(c, b[i]));
    a = kp_trim(K, std::move(a));
  }
  return a;
}

KPoly kp_gcd(const NumberField& K, KPoly a, KPoly b) {
  a = kp_trim(K, std::move(a));
  b = kp_trim(K, std::move(b));
  while (!b.empty()) {
    KPoly r = kp_mod(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    RatPoly inv = K.inv(a.back());
    for (auto& c : a) c = K.mul(c, inv);
  }
  return a;
}

std::optional<std::vector<RatPoly>> roots_in_field(const NumberField& K,
                                                   const IntPoly& target) {
  IntPoly f = ip_normalize(target);
  int n = degree(f);
  if (n < 1) return std::nullopt;
  // Trager norm N(y) = Res_x(K.poly(x), f(y - s x)), squarefree for good s.
  for (int s = 1; s <= 24; ++s) {
    int dr = K.deg * n;
    std::vector<std::pair<Rat, Rat>> pts;
    for (int k = 0; static_cast<int>(pts.size()) <= dr; ++k) {
      Int x0 = (k % 2 == 0) ? Int(k / 2) : Int(-(k / 2 + 1));
      IntPoly fy{Int(0)};
      IntPoly lin{x0, Int(-s)};  // y0 - s x as polynomial in x
      for (auto it = f.rbegin(); it != f.rend(); ++it) {
        fy = ip_mul(fy, lin);
        if (fy.empty()) fy = {*it};
        else fy[0] += *it;
        fy = ip_trim(std::move(fy));
      }
      pts.emplace_back(Rat(x0), Rat(resultant(K.poly, fy)));
    }
    IntPoly norm = clear_denominators(lagrange_interpolate(pts));
    if (degree(ip_gcd(norm, ip_derivative(norm))) != 0) continue;  // not squarefree
    std::vector<RatPoly> roots;
    for (const auto& ni : factor_squarefree(norm)) {
      if (degree(ni) % K.deg != 0) continue;
      if (degree(ni) != K.deg) continue;  // would give a factor of degree > 1
      // shifted = ni(y + s t) over K
      KPoly shifted;
      {
        KPoly acc;
        KPoly lin2(2);
        lin2[0] = RatPoly{Rat(0), Rat(s)};  // s*t
        lin2[1] = RatPoly{Rat(1)};
        for (auto it = ni.rbegin(); it != ni.rend(); ++it) {
          acc = kp_mul(K, acc, lin2);
          if (acc.empty()) acc = KPoly{RatPoly{Rat(*it)}};
          else
            acc[0] = K.add(acc[0], RatPoly{Rat(*it)});
          acc = kp_trim(K, std::move(acc));
        }
        shifted = std::move(acc);
      }
      KPoly fk(f.size());
      for (size_t i = 0; i < f.size(); ++i) fk[i] = RatPoly{Rat(f[i])};
      KPoly g = kp_gcd(K, kp_trim(K, std::move(fk)), shifted);
      if (g.size() == 2) {
        // monic linear factor y + c: root is -c
        RatPoly rt = K.reduce(rp_scale(g[0], Rat(-1)));
        roots.push_back(std::move(rt));
      }
    }
    return roots;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Predicates

bool conjugate_dominance(const AlgebraicNumber& a) {
  if (a.sign() < 0) return false;
  if (a.is_rational()) return true;
  const IntPoly& f = a.minpoly();
  int n = degree(f);
  // Exact count of conjugates on the circle |z| = a: roots common to f(y)
  // and y^n f(gamma / y) over Q(gamma), gamma = a^2.
  AlgebraicNumber gamma = a * a;
  int on_circle;
  {
    NumberField K(gamma.minpoly());
    RatPoly t = gamma.is_rational() ? RatPoly{gamma.rational_value()} : RatPoly{Rat(0), Rat(1)};
    KPoly fk(f.size()), fg(f.size());
    RatPoly tp{Rat(1)};
    for (int i = 0; i <= n; ++i) {
      fk[i] = RatPoly{Rat(f[i])};
      fg[n - i] = K.mul(RatPoly{Rat(f[i])}, tp);
      tp = K.mul(tp, t);
    }
    KPoly g = kp_gcd(K, kp_trim(K, std::move(fk)), kp_trim(K, std::move(fg)));
    on_circle = static_cast<int>(g.size()) - 1;
  }
  // Certified numeric classification of the remaining roots.
  a.refine_to(Rat(1, boost::multiprecision::pow(Int(10), 45)));
  Real alo = to_real(a.interval().first), ahi = to_real(a.interval().second);
  const Real fudge("1e-40");
  auto roots = complex_roots(f);
  int outside = 0, ambiguous = 0;
  for (const auto& r : roots) {
    Real mag = abs(r.value);
    if (mag + r.radius < alo - fudge) continue;  // strictly inside
    if (mag - r.radius > ahi + fudge) {
      ++outside;
      continue;
    }
    ++ambiguous;
  }
  if (outside > 0) return false;
  if (ambiguous == on_circle) return true;
  throw InternalError("conjugate_dominance: numeric certification inconclusive");
}

namespace {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Minimal polynomial of 2 cos(pi/n) via the palindromic reduction of the
// cyclotomic polynomial of order 2n.
IntPoly two_cos_minpoly(int n) {
  unsigned m = 2 * static_cast<unsigned>(n);
  IntPoly phi = cyclotomic_poly(m);
  int d = degree(phi);
  int h = d / 2;
  // v_j(x) = y^j + y^{-j} as a polynomial in x = y + 1/y
  IntPoly v0{Int(2)}, v1{Int(0), Int(1)};
  IntPoly p = ip_scale(IntPoly{Int(1)}, phi[h]);
  IntPoly vj_prev = v0, vj = v1;
  for (int j = 1; j <= h; ++j) {
    p = ip_add(p, ip_scale(vj, phi[h + j]));
    IntPoly vnext = ip_sub(ip_mul(IntPoly{Int(0), Int(1)}, vj), vj_prev);
    vj_prev = vj;
    vj = vnext;
  }
  return ip_normalize(p);
}

}  // namespace

std::optional<int> two_cos_quantization(const AlgebraicNumber& a, int n_max) {
  AlgebraicNumber one = AlgebraicNumber::from_int(1);
  AlgebraicNumber two = AlgebraicNumber::from_int(2);
  if (a < one || a >= two)
    throw ShapeError("two_cos_quantization: argument outside [1, 2)");
  int d = a.degree();
  double ax = a.approx_double();
  for (int n = 3; n <= n_max; ++n) {
    if (static_cast<int>(euler_phi(2 * static_cast<unsigned>(n))) != 2 * d) continue;
    double cand = 2.0 * std::cos(3.14159265358979323846 / n);
    if (std::abs(cand - ax) > 1e-6) continue;
    IntPoly mp = two_cos_minpoly(n);
    if (mp != a.minpoly()) continue;
    AlgebraicNumber val = AlgebraicNumber::largest_real_root(mp);
    if (val == a) return n;
  }
  return std::nullopt;
}

Ternary galois_abelian(const IntPoly& minpoly) {
  IntPoly f = ip_normalize(minpoly);
  int d = degree(f);
  if (d < 1) throw ShapeError("galois_abelian: constant polynomial");
  if (!is_irreducible(f)) throw ShapeError("galois_abelian: polynomial not irreducible");
  if (d <= 2) return Ternary::yes;
  if (d == 3) {
    Int disc = discriminant(f);
    if (disc <= 0) return Ternary::no;
    Int s = boost::multiprecision::sqrt(disc);
    return s * s == disc ? Ternary::yes : Ternary::no;
  }
  if (d > 6) return Ternary::undecided;
  NumberField K(f);
  auto roots = roots_in_field(K, f);
  if (!roots) return Ternary::undecided;
  if (static_cast<int>(roots->size()) != d) return Ternary::no;
  // automorphisms commute iff b_i(b_j(t)) == b_j(b_i(t)) mod f
  for (size_t i = 0; i < roots->size(); ++i) {
    for (size_t j = i + 1; j < roots->size(); ++j) {
      RatPoly ij = K.compose((*roots)[i], (*roots)[j]);
      RatPoly ji = K.compose((*roots)[j], (*roots)[i]);
      if (rp_trim(rp_sub(ij, ji)) != RatPoly{})
        return Ternary::no;
    }
  }
  return Ternary::yes;
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ShapeError("parse_algebraic: " + msg + " at position " + std::to_string(i) +
                     " in '" + s + "'");
  }

  AlgebraicNumber expr() {
    AlgebraicNumber acc = term();
    while (true) {
      skip();
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  AlgebraicNumber term() {
    AlgebraicNumber acc = factor();
    while (true) {
      skip();
      if (eat('*'))
        acc = acc * factor();
      else if (eat('/'))
        acc = acc / factor();
      else
        break;
    }
    return acc;
  }

  AlgebraicNumber factor() {
    skip();
    if (eat('-')) return -factor();
    if (eat('(')) {
      AlgebraicNumber v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (s.compare(i, 5, "sqrt(") == 0) {
      i += 5;
      AlgebraicNumber v = expr();
      if (!eat(')')) fail("missing ')' after sqrt");
      return v.sqrt();
    }
    return number();
  }

  AlgebraicNumber number() {
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected a number");
    std::string whole = s.substr(start, i - start);
    if (i < s.size() && s[i] == '.') {
      ++i;
      size_t fs = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      std::string frac = s.substr(fs, i - fs);
      Int numr = Int(whole + frac);
      Int denr = boost::multiprecision::pow(Int(10), unsigned(frac.size()));
      return AlgebraicNumber::from_rational(Rat(numr, denr));
    }
    return AlgebraicNumber::from_int(Int(whole));
  }
};

}  // namespace

AlgebraicNumber parse_algebraic(const std::string& text) {
  Parser p(text);
  AlgebraicNumber v = p.expr();
  p.skip();
  if (p.i != text.size()) p.fail("trailing characters");
  return v;
}

}  // namespace fusionkit
