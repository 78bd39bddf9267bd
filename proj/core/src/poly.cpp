#include "fusionkit/poly.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>

namespace fusionkit {

IntPoly ip_trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }
int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

const Int& lc(const IntPoly& p) { return p.back(); }

IntPoly ip_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return ip_trim(std::move(r));
}

IntPoly ip_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return ip_trim(std::move(r));
}

IntPoly ip_neg(IntPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return ip_trim(std::move(r));
}

IntPoly ip_scale(const IntPoly& a, const Int& c) {
  if (c == 0) return {};
  IntPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

IntPoly ip_shift(const IntPoly& a, int k) {
  if (a.empty()) return {};
  IntPoly r(a.size() + k, Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

Int ip_eval(const IntPoly& p, const Int& x) {
  Int acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat ip_eval_rat(const IntPoly& p, const Rat& x) {
  Rat acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

int ip_sign_at(const IntPoly& p, const Rat& x) {
  // Homogeneous evaluation: sign of q^n p(p/q), exact over Z.
  if (p.empty()) return 0;
  Int xn = num(x), xd = den(x);
  Int acc = 0, qi = 1;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * xn + (*it) * qi;
    qi *= xd;
  }
  return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

Real ip_eval_real(const IntPoly& p, const Real& x) {
  Real acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Real(*it);
  return acc;
}

Cplx ip_eval_cplx(const IntPoly& p, const Cplx& x) {
  Cplx acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Cplx(Real(*it));
  return acc;
}

IntPoly ip_derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Int(i);
  return ip_trim(std::move(r));
}

Int ip_content(const IntPoly& p) {
  Int g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

IntPoly ip_primitive(const IntPoly& p) {
  Int g = ip_content(p);
  if (g == 0 || g == 1) return p;
  IntPoly r = p;
  for (auto& c : r) c /= g;
  return r;
}

IntPoly ip_normalize(const IntPoly& p) {
  IntPoly r = ip_primitive(ip_trim(p));
  if (!r.empty() && r.back() < 0)
    for (auto& c : r) c = -c;
  return r;
}

bool ip_divide_exact(const IntPoly& a, const IntPoly& b, IntPoly& quot) {
  quot.clear();
  if (b.empty()) return false;
  IntPoly rem = a;
  if (degree(a) < degree(b)) return a.empty();
  quot.assign(a.size() - b.size() + 1, Int(0));
  for (int k = degree(rem); k >= degree(b); --k) {
    if (rem.empty() || degree(rem) != k) continue;
    Int q = rem.back() / b.back();
    if (q * b.back() != rem.back()) return false;
    quot[k - degree(b)] = q;
    for (size_t i = 0; i < b.size(); ++i)
      rem[k - degree(b) + i] -= q * b[i];
    rem = ip_trim(std::move(rem));
  }
  return rem.empty();
}

IntPoly ip_compose_neg(const IntPoly& p) {
  IntPoly r = p;
  for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return r;
}

IntPoly ip_reverse(const IntPoly& p) {
  IntPoly r(p.rbegin(), p.rend());
  return ip_trim(std::move(r));
}

IntPoly ip_shift_arg(const IntPoly& p, const Rat& r) {
  // p(x + r) with denominators cleared: compute q^n p(x + p/q) via
  // substituting x -> x + p/q in homogenized form.
  RatPoly acc{Rat(0)};
  RatPoly lin{r, Rat(1)};  // x + r
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = rp_mul(acc, lin);
    if (acc.empty()) acc = {Rat(*it)};
    else acc[0] += Rat(*it);
    acc = rp_trim(std::move(acc));
  }
  return clear_denominators(acc);
}

IntPoly ip_scale_arg(const IntPoly& p, const Rat& r) {
  RatPoly q(p.size());
  Rat pw = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    q[i] = Rat(p[i]) * pw;
    pw *= r;
  }
  return clear_denominators(rp_trim(std::move(q)));
}

IntPoly ip_compose_square(const IntPoly& p) {
  if (p.empty()) return {};
  IntPoly r(2 * p.size() - 1, Int(0));
  for (size_t i = 0; i < p.size(); ++i) r[2 * i] = p[i];
  return ip_trim(std::move(r));
}

RatPoly to_rat(const IntPoly& p) {
  RatPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = Rat(p[i]);
  return r;
}

IntPoly clear_denominators(const RatPoly& p) {
  Int l = 1;
  for (const auto& c : p) l = boost::multiprecision::lcm(l, den(c));
  IntPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = num(p[i]) * (l / den(p[i]));
  return ip_normalize(r);
}

RatPoly rp_trim(RatPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

RatPoly rp_add(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return rp_trim(std::move(r));
}

RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return rp_trim(std::move(r));
}

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return rp_trim(std::move(r));
}

RatPoly rp_scale(const RatPoly& a, const Rat& c) {
  if (c == 0) return {};
  RatPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

void rp_divrem(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  if (b.empty()) throw ShapeError("polynomial division by zero");
  q.clear();
  r = a;
  if (degree(a) >= degree(b)) q.assign(a.size() - b.size() + 1, Rat(0));
  while (!r.empty() && r.size() >= b.size()) {
    Rat c = r.back() / b.back();
    size_t off = r.size() - b.size();
    q[off] = c;
    for (size_t i = 0; i < b.size(); ++i) r[off + i] -= c * b[i];
    r = rp_trim(std::move(r));
  }
}

RatPoly rp_mod(const RatPoly& a, const RatPoly& b) {
  RatPoly q, r;
  rp_divrem(a, b, q, r);
  return r;
}

RatPoly rp_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = rp_trim(a), y = rp_trim(b);
  while (!y.empty()) {
    RatPoly r = rp_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty()) {
    Rat inv = Rat(1) / x.back();
    for (auto& c : x) c *= inv;
  }
  return x;
}

RatPoly rp_derivative(const RatPoly& p) {
  if (p.size() <= 1) return {};
  RatPoly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(Int(i));
  return rp_trim(std::move(r));
}

Rat rp_eval(const RatPoly& p, const Rat& x) {
  Rat acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// ---------------------------------------------------------------------------
// Resultant via fraction-free (Bareiss) elimination of the Sylvester matrix.

namespace {

Int bareiss_det(std::vector<std::vector<Int>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

Int resultant(const IntPoly& f, const IntPoly& g) {
  int m = degree(f), n = degree(g);
  if (m < 0 || n < 0) return 0;
  if (m == 0) return boost::multiprecision::pow(f[0], n);
  if (n == 0) return boost::multiprecision::pow(g[0], m);
  std::vector<std::vector<Int>> syl(m + n, std::vector<Int>(m + n, Int(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) syl[i][i + j] = f[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) syl[n + i][i + j] = g[n - j];
  return bareiss_det(std::move(syl));
}

IntPoly ip_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.empty()) return ip_normalize(b);
  if (b.empty()) return ip_normalize(a);
  RatPoly g = rp_gcd(to_rat(a), to_rat(b));
  IntPoly r = clear_denominators(g);
  // gcd of contents carries over
  Int c = boost::multiprecision::gcd(ip_content(a), ip_content(b));
  return ip_trim(ip_scale(r, c == 0 ? Int(1) : c));
}

IntPoly squarefree_part(const IntPoly& f) {
  IntPoly p = ip_normalize(f);
  if (degree(p) <= 1) return p;
  IntPoly g = ip_gcd(p, ip_derivative(p));
  if (degree(g) == 0) return p;
  IntPoly q;
  if (!ip_divide_exact(p, g, q)) throw InternalError("squarefree_part: inexact division");
  return ip_normalize(q);
}

Int discriminant(const IntPoly& f) {
  int n = degree(f);
  if (n < 1) return 0;
  Int res = resultant(f, ip_derivative(f));
  Int d = res / lc(f);
  if (d * lc(f) != res) throw InternalError("discriminant: lc does not divide resultant");
  int s = ((n * (n - 1)) / 2) % 2;
  return s ? -d : d;
}

// ---------------------------------------------------------------------------
// Sturm sequences: integer pseudo-remainder chain with sign bookkeeping.

SturmChain sturm_chain(const IntPoly& f) {
  SturmChain chain;
  IntPoly p0 = squarefree_part(f);
  if (p0.empty()) return chain;
  chain.seq.push_back(p0);
  IntPoly p1 = ip_normalize(ip_derivative(p0));
  if (p1.empty()) return chain;
  chain.seq.push_back(p1);
  while (true) {
    const IntPoly& a = chain.seq[chain.seq.size() - 2];
    const IntPoly& b = chain.seq.back();
    int delta = degree(a) - degree(b);
    if (delta < 0) throw InternalError("sturm_chain: degree order violated");
    // pseudo remainder of lc(b)^(delta+1) * a by b
    Int mult = boost::multiprecision::pow(lc(b), unsigned(delta + 1));
    IntPoly rem = ip_scale(a, mult);
    while (!rem.empty() && degree(rem) >= degree(b)) {
      Int q = rem.back() / b.back();
      if (q * b.back() != rem.back())
        throw InternalError("sturm_chain: pseudo division not exact");
      size_t off = rem.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) rem[off + i] -= q * b[i];
      rem = ip_trim(std::move(rem));
    }
    if (rem.empty()) break;
    // Sturm needs the negated true remainder up to a positive factor.
    bool mult_negative = mult < 0;
    IntPoly next = ip_primitive(rem);
    if (!mult_negative)
      next = ip_neg(std::move(next));
    chain.seq.push_back(std::move(next));
    if (degree(chain.seq.back()) == 0) break;
  }
  return chain;
}

int sturm_variations(const SturmChain& chain, const Rat& x) {
  int var = 0, last = 0;
  for (const auto& p : chain.seq) {
    int s = ip_sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

int count_real_roots(const SturmChain& chain, const Rat& lo, const Rat& hi) {
  if (chain.seq.empty()) return 0;
  return sturm_variations(chain, lo) - sturm_variations(chain, hi);
}

int count_real_roots_total(const SturmChain& chain) {
  if (chain.seq.empty()) return 0;
  Rat b = cauchy_root_bound(chain.seq.front()) + 1;
  return count_real_roots(chain, -b, b);
}

Rat cauchy_root_bound(const IntPoly& f) {
  if (f.size() <= 1) return Rat(1);
  Int m = 0;
  for (size_t i = 0; i + 1 < f.size(); ++i)
    m = std::max(m, Int(boost::multiprecision::abs(f[i])));
  Rat b = Rat(m, boost::multiprecision::abs(f.back())) + 1;
  return b;
}

// ---------------------------------------------------------------------------
// Factorization over Z: Zassenhaus (mod-p factorization, Hensel lifting,
// subset recombination with a Landau-Mignotte style bound).

namespace {

using u64 = std::uint64_t;
using PPoly = std::vector<u64>;  // little-endian, coefficients mod p

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
  }
  u64 pow(u64 a, Int e) const {
    u64 r = 1;
    while (e > 0) {
      if ((e & 1) != 0) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, Int(p) - 2); }
};

PPoly pp_trim(PPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

PPoly pp_mul(const PPoly& a, const PPoly& b, const Fp& F) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return pp_trim(std::move(r));
}

PPoly pp_sub(const PPoly& a, const PPoly& b, const Fp& F) {
  PPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  return pp_trim(std::move(r));
}

// Remainder of a modulo b (b nonzero).
PPoly pp_mod(PPoly a, const PPoly& b, const Fp& F) {
  u64 binv = F.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    u64 c = F.mul(a.back(), binv);
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] = F.sub(a[off + i], F.mul(c, b[i]));
    a = pp_trim(std::move(a));
  }
  return a;
}

PPoly pp_divexact(PPoly a, const PPoly& b, const Fp& F) {
  PPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  u64 binv = F.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    u64 c = F.mul(a.back(), binv);
    size_t off = a.size() - b.size();
    q[off] = c;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] = F.sub(a[off + i], F.mul(c, b[i]));
    a = pp_trim(std::move(a));
  }
  return q;
}

PPoly pp_gcd(PPoly a, PPoly b, const Fp& F) {
  a = pp_trim(std::move(a));
  b = pp_trim(std::move(b));
  while (!b.empty()) {
    PPoly r = pp_mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
  }
  return a;
}

PPoly pp_powmod(PPoly base, Int e, const PPoly& mod, const Fp& F) {
  PPoly r{1};
  base = pp_mod(std::move(base), mod, F);
  while (e > 0) {
    if ((e & 1) != 0) r = pp_mod(pp_mul(r, base, F), mod, F);
    base = pp_mod(pp_mul(base, base, F), mod, F);
    e >>= 1;
  }
  return r;
}

PPoly pp_derivative(const PPoly& a, const Fp& F) {
  if (a.size() <= 1) return {};
  PPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
  return pp_trim(std::move(r));
}

// Deterministic split of a product of degree-d irreducibles (p odd).
void equal_degree_split(const PPoly& f, int d, const Fp& F, u64& seed,
                        std::vector<PPoly>& out) {
  if (static_cast<int>(f.size()) - 1 == d) {
    PPoly g = f;
    u64 inv = F.inv(g.back());
    for (auto& c : g) c = F.mul(c, inv);
    out.push_back(std::move(g));
    return;
  }
  int n = static_cast<int>(f.size()) - 1;
  Int exp = (boost::multiprecision::pow(Int(F.p), unsigned(d)) - 1) / 2;
  while (true) {
    PPoly a(n, 0);
    for (int i = 0; i < n; ++i) {
      seed = seed * 6364136223846793005ull + 1442695040888963407ull;
      a[i] = (seed >> 16) % F.p;
    }
    a = pp_trim(std::move(a));
    if (a.empty()) continue;
    PPoly b = pp_powmod(a, exp, f, F);
    if (b.empty()) continue;
    b[0] = F.sub(b[0], 1);
    b = pp_trim(std::move(b));
    PPoly g = pp_gcd(f, b, F);
    if (!g.empty() && static_cast<int>(g.size()) - 1 > 0 &&
        g.size() < f.size()) {
      equal_degree_split(g, d, F, seed, out);
      equal_degree_split(pp_divexact(f, g, F), d, F, seed, out);
      return;
    }
  }
}

std::vector<PPoly> factor_mod_p(PPoly f, const Fp& F) {
  // f monic squarefree mod p
  std::vector<PPoly> out;
  u64 seed = 0x9e3779b97f4a7c15ull ^ F.p;
  for (const auto& c : f) seed = seed * 1099511628211ull ^ c;
  PPoly g = f;
  PPoly h{0, 1};  // x
  int d = 0;
  while (static_cast<int>(g.size()) - 1 > 0) {
    ++d;
    if (2 * d > static_cast<int>(g.size()) - 1) {
      u64 inv = F.inv(g.back());
      for (auto& c : g) c = F.mul(c, inv);
      out.push_back(g);
      break;
    }
    h = pp_powmod(h, Int(F.p), g, F);
    PPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = F.sub(hx[1], 1);
    hx = pp_trim(std::move(hx));
    PPoly t = hx.empty() ? g : pp_gcd(g, hx, F);
    if (!t.empty() && static_cast<int>(t.size()) - 1 > 0) {
      equal_degree_split(t, d, F, seed, out);
      g = pp_divexact(g, t, F);
      h = pp_mod(h, g, F);
    }
  }
  return out;
}

Int symmetric_rep(Int value, const Int& modulus) {
  value %= modulus;
  if (value < 0) value += modulus;
  if (2 * value > modulus) value -= modulus;
  return value;
}

IntPoly reduce_sym(IntPoly p, const Int& modulus) {
  for (auto& c : p) c = symmetric_rep(c, modulus);
  return ip_trim(std::move(p));
}

IntPoly reduce_pos(IntPoly p, const Int& modulus) {
  for (auto& c : p) {
    c %= modulus;
    if (c < 0) c += modulus;
  }
  return ip_trim(std::move(p));
}

IntPoly ip_mul_mod(const IntPoly& a, const IntPoly& b, const Int& modulus) {
  return reduce_pos(ip_mul(a, b), modulus);
}

// Extended Euclid over F_p for polynomials: s*a + t*b = 1 (a, b coprime).
void pp_bezout(const PPoly& a, const PPoly& b, const Fp& F, PPoly& s, PPoly& t) {
  PPoly r0 = a, r1 = b;
  PPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    PPoly q = pp_divexact(r0, r1, F);
    PPoly r2 = pp_sub(r0, pp_mul(q, r1, F), F);
    PPoly s2 = pp_sub(s0, pp_mul(q, s1, F), F);
    PPoly t2 = pp_sub(t0, pp_mul(q, t1, F), F);
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.size() != 1) throw InternalError("pp_bezout: inputs not coprime");
  u64 inv = F.inv(r0[0]);
  for (auto& c : s0) c = F.mul(c, inv);
  for (auto& c : t0) c = F.mul(c, inv);
  s = std::move(s0);
  t = std::move(t0);
}

IntPoly lift_from_pp(const PPoly& a) {
  IntPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Int(a[i]);
  return ip_trim(std::move(r));
}

PPoly pp_from_int(const IntPoly& a, const Fp& F) {
  PPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    Int c = a[i] % Int(F.p);
    if (c < 0) c += Int(F.p);
    r[i] = c.convert_to<u64>();
  }
  return pp_trim(std::move(r));
}

// Linear Hensel lifting of f = g*h (mod p) to mod p^K. g is monic; the
// leading coefficient of h is pinned to lc(f) exactly.
void hensel_pair(const IntPoly& f, IntPoly& g, IntPoly& h, const Fp& F, int K) {
  PPoly gp = pp_from_int(g, F), hp = pp_from_int(h, F);
  PPoly s, t;
  pp_bezout(gp, hp, F, s, t);
  Int modulus = Int(F.p);
  for (int j = 1; j < K; ++j) {
    Int next = modulus * Int(F.p);
    IntPoly e = ip_sub(f, ip_mul(g, h));
    for (auto& c : e) {
      if (c % modulus != 0) throw InternalError("hensel_pair: invariant broken");
      c /= modulus;
    }
    e = ip_trim(std::move(e));
    PPoly ep = pp_from_int(e, F);
    // t*e = q*g + u with deg u < deg g; then u*h + v*g = e for v = s*e + q*h.
    PPoly te = pp_mul(t, ep, F);
    PPoly q = te.size() >= gp.size() ? pp_divexact(te, gp, F) : PPoly{};
    PPoly u = pp_mod(te, gp, F);
    PPoly v = pp_mul(s, ep, F);
    {
      PPoly qh = pp_mul(q, hp, F);
      PPoly sum(std::max(v.size(), qh.size()), 0);
      for (size_t i = 0; i < v.size(); ++i) sum[i] = v[i];
      for (size_t i = 0; i < qh.size(); ++i) sum[i] = F.add(sum[i], qh[i]);
      v = pp_trim(std::move(sum));
    }
    IntPoly du = ip_scale(lift_from_pp(u), modulus);
    IntPoly dv = ip_scale(lift_from_pp(v), modulus);
    g = reduce_pos(ip_add(g, du), next);
    h = reduce_pos(ip_add(h, dv), next);
    size_t hsize = f.size() - g.size() + 1;
    h.resize(hsize, Int(0));
    Int lpin = f.back() % next;
    if (lpin < 0) lpin += next;
    h[hsize - 1] = lpin;
    h = ip_trim(std::move(h));
    modulus = next;
  }
}

void hensel_tree(const IntPoly& f, const std::vector<PPoly>& mods, const Fp& F,
                 int K, const Int& pK, std::vector<IntPoly>& out) {
  if (mods.size() == 1) {
    // f = unit * monic factor mod p^K
    Int linv;
    {
      // modular inverse of lc(f) mod p^K
      Int a = f.back() % pK;
      if (a < 0) a += pK;
      Int g0 = pK, g1 = a, x0 = 0, x1 = 1;
      while (g1 != 0) {
        Int q = g0 / g1;
        Int g2 = g0 - q * g1, x2 = x0 - q * x1;
        g0 = g1; g1 = g2; x0 = x1; x1 = x2;
      }
      if (g0 != 1) throw InternalError("hensel_tree: lc not invertible");
      linv = x0 % pK;
      if (linv < 0) linv += pK;
    }
    IntPoly monic = reduce_pos(ip_scale(f, linv), pK);
    out.push_back(std::move(monic));
    return;
  }
  size_t half = mods.size() / 2;
  std::vector<PPoly> left(mods.begin(), mods.begin() + half);
  std::vector<PPoly> right(mods.begin() + half, mods.end());
  PPoly gp{1};
  for (const auto& mpoly : left) gp = pp_mul(gp, mpoly, F);
  PPoly hp{pp_from_int(IntPoly{f.back()}, F)};
  for (const auto& mpoly : right) hp = pp_mul(hp, mpoly, F);
  IntPoly g = lift_from_pp(gp);
  IntPoly h = lift_from_pp(hp);
  // pin lc(h) = lc(f)
  {
    size_t hdeg = f.size() - g.size();
    h.resize(hdeg + 1, Int(0));
    h[hdeg] = f.back();
    h = ip_trim(std::move(h));
  }
  hensel_pair(f, g, h, F, K);
  hensel_tree(g, left, F, K, pK, out);
  hensel_tree(h, right, F, K, pK, out);
}

const std::array<u64, 25> kFactorPrimes = {
    3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
    47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};

}  // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& input) {
  IntPoly f = ip_normalize(input);
  std::vector<IntPoly> result;
  if (degree(f) < 1) return result;
  if (degree(f) == 1) {
    result.push_back(f);
    return result;
  }
  // choose a prime keeping f squarefree, preferring few modular factors
  Fp best{};
  std::vector<PPoly> best_factors;
  int tried = 0;
  for (u64 p : kFactorPrimes) {
    if (f.back() % Int(p) == 0) continue;
    Fp F{p};
    PPoly fp = pp_from_int(f, F);
    if (static_cast<int>(fp.size()) - 1 != degree(f)) continue;
    PPoly d = pp_derivative(fp, F);
    if (d.empty()) continue;
    PPoly g = pp_gcd(fp, d, F);
    if (g.size() != 1) continue;
    u64 inv = F.inv(fp.back());
    for (auto& c : fp) c = F.mul(c, inv);
    std::vector<PPoly> fac = factor_mod_p(fp, F);
    if (best_factors.empty() || fac.size() < best_factors.size()) {
      best = F;
      best_factors = std::move(fac);
    }
    if (best_factors.size() == 1) break;
    if (++tried >= 4 && !best_factors.empty()) break;
  }
  if (best_factors.empty())
    throw InternalError("factor_squarefree: no usable prime found");
  if (best_factors.size() == 1) {
    result.push_back(f);
    return result;
  }

  // Landau-Mignotte style coefficient bound for divisors of f
  Int norm1 = 0;
  for (const auto& c : f) norm1 += boost::multiprecision::abs(c);
  Int bound = (norm1 + 1) * boost::multiprecision::abs(f.back());
  bound <<= degree(f) + 1;
  int K = 1;
  Int pK(best.p);
  while (pK < 2 * bound + 1) {
    pK *= Int(best.p);
    ++K;
  }

  std::vector<IntPoly> lifted;
  std::sort(best_factors.begin(), best_factors.end(),
            [](const PPoly& a, const PPoly& b) { return a.size() < b.size(); });
  hensel_tree(f, best_factors, best, K, pK, lifted);

  // subset recombination
  std::vector<int> alive(lifted.size());
  std::iota(alive.begin(), alive.end(), 0);
  IntPoly rem = f;
  auto try_subset = [&](const std::vector<int>& subset) -> bool {
    IntPoly candidate{rem.back()};
    for (int idx : subset) candidate = ip_mul_mod(candidate, lifted[idx], pK);
    candidate = reduce_sym(std::move(candidate), pK);
    candidate = ip_normalize(candidate);
    if (candidate.empty() || degree(candidate) < 1) return false;
    IntPoly q;
    if (!ip_divide_exact(rem, candidate, q)) return false;
    result.push_back(candidate);
    rem = ip_normalize(q);
    std::vector<int> next;
    for (int idx : alive)
      if (std::find(subset.begin(), subset.end(), idx) == subset.end())
        next.push_back(idx);
    alive = std::move(next);
    return true;
  };

  auto next_combination = [](std::vector<size_t>& pos, size_t limit) -> bool {
    size_t card = pos.size();
    size_t i = card;
    while (i-- > 0) {
      if (pos[i] + (card - i) <= limit) {
        ++pos[i];
        for (size_t j = i + 1; j < card; ++j) pos[j] = pos[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  bool progress = true;
  while (progress && !alive.empty()) {
    progress = false;
    for (size_t card = 1; card <= alive.size() / 2 && !progress; ++card) {
      std::vector<int> idx(card);
      std::vector<size_t> pos(card);
      for (size_t i = 0; i < card; ++i) pos[i] = i;
      do {
        for (size_t i = 0; i < card; ++i) idx[i] = alive[pos[i]];
        if (try_subset(idx)) {
          progress = true;
          break;
        }
      } while (next_combination(pos, alive.size() - 1));
    }
  }
  if (degree(rem) >= 1) result.push_back(ip_normalize(rem));
  std::sort(result.begin(), result.end(), [](const IntPoly& a, const IntPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  return result;
}

std::vector<std::pair<IntPoly, int>> factor(const IntPoly& input) {
  std::vector<std::pair<IntPoly, int>> result;
  IntPoly f = ip_normalize(input);
  if (degree(f) < 1) return result;
  // Yun's squarefree decomposition
  IntPoly fp = ip_derivative(f);
  IntPoly a = ip_gcd(f, fp);
  IntPoly b, c, d;
  if (!ip_divide_exact(f, a, b)) throw InternalError("factor: yun b");
  if (!ip_divide_exact(fp, a, c)) throw InternalError("factor: yun c");
  d = ip_sub(c, ip_derivative(b));
  int i = 1;
  while (degree(b) > 0) {
    IntPoly ai = ip_gcd(b, d);
    if (degree(ai) > 0) {
      for (const auto& irr : factor_squarefree(ai)) result.emplace_back(irr, i);
    }
    IntPoly b2, c2;
    if (!ip_divide_exact(b, ai, b2)) throw InternalError("factor: yun b2");
    if (!ip_divide_exact(d, ai, c2)) throw InternalError("factor: yun c2");
    b = ip_normalize(b2);
    d = ip_sub(c2, ip_derivative(b));
    ++i;
  }
  return result;
}

bool is_irreducible(const IntPoly& f) {
  IntPoly p = ip_normalize(f);
  if (degree(p) < 1) return false;
  auto fac = factor(p);
  return fac.size() == 1 && fac[0].second == 1 && degree(fac[0].first) == degree(p);
}

IntPoly cyclotomic_poly(unsigned m) {
  if (m == 0) throw ShapeError("cyclotomic_poly: order must be positive");
  // x^m - 1 divided by all lower cyclotomics
  IntPoly num(m + 1, Int(0));
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    IntPoly phi_d = cyclotomic_poly(d);
    IntPoly q;
    if (!ip_divide_exact(num, phi_d, q))
      throw InternalError("cyclotomic_poly: division failed");
    num = std::move(q);
  }
  return num;
}

RatPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
  RatPoly acc;
  for (size_t i = 0; i < pts.size(); ++i) {
    RatPoly term{Rat(1)};
    Rat denom = 1;
    for (size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      term = rp_mul(term, RatPoly{-pts[j].first, Rat(1)});
      denom *= pts[i].first - pts[j].first;
    }
    term = rp_scale(term, pts[i].second / denom);
    acc = rp_add(acc, term);
  }
  return acc;
}

std::string poly_to_string(const IntPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(p); d >= 0; --d) {
    const Int& c = p[d];
    if (c == 0) continue;
    Int a = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    if (d == 0 || a != 1) os << a.str();
    if (d > 0) {
      os << var;
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

IntPoly poly_from_string(const std::string& s) {
  IntPoly acc;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  bool expect_term = true;
  int sign = 1;
  while (i < s.size()) {
    skip_ws();
    if (i >= s.size()) break;
    if (s[i] == '+') { sign = 1; ++i; expect_term = true; continue; }
    if (s[i] == '-') { sign = -1; ++i; expect_term = true; continue; }
    if (!expect_term) throw ShapeError("poly_from_string: unexpected token in '" + s + "'");
    skip_ws();
    Int coef = 1;
    bool saw_digits = false;
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      saw_digits = true;
    }
    if (saw_digits) coef = Int(digits);
    skip_ws();
    if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
    int exp = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      exp = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws();
        std::string e;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
        if (e.empty()) throw ShapeError("poly_from_string: missing exponent");
        exp = std::stoi(e);
      }
    } else if (!saw_digits) {
      throw ShapeError("poly_from_string: empty term in '" + s + "'");
    }
    if (static_cast<int>(acc.size()) <= exp) acc.resize(exp + 1, Int(0));
    acc[exp] += Int(sign) * coef;
    sign = 1;
    expect_term = false;
    skip_ws();
  }
  return ip_trim(std::move(acc));
}

std::vector<ComplexRoot> complex_roots(const IntPoly& input) {
  IntPoly f = squarefree_part(input);
  int n = degree(f);
  std::vector<ComplexRoot> roots;
  if (n < 1) return roots;
  if (n == 1) {
    roots.push_back({Cplx(-to_real(Rat(f[0], f[1]))), Real(0)});
    return roots;
  }
  std::vector<Cplx> coef(f.size());
  for (size_t i = 0; i < f.size(); ++i) coef[i] = Cplx(Real(f[i]));
  std::vector<Cplx> dcoef(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) dcoef[i - 1] = Cplx(Real(f[i]) * Real(i));
  auto eval = [](const std::vector<Cplx>& c, const Cplx& x) {
    Cplx acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  Real bound = to_real(cauchy_root_bound(f));
  std::vector<Cplx> z(n);
  const Real pi = 4 * atan(Real(1));
  for (int k = 0; k < n; ++k) {
    Real theta = (2 * pi * (k + 1)) / n + Real("0.41");
    Real radius = bound * (Real("0.3") + Real("0.6") * (k + 1) / n);
    z[k] = Cplx(radius * cos(theta), radius * sin(theta));
  }
  const Real target("1e-48");
  Real lcr = Real(f.back());
  bool converged = false;
  for (int iter = 0; iter < 800 && !converged; ++iter) {
    Real worst = 0;
    for (int k = 0; k < n; ++k) {
      Cplx fv = eval(coef, z[k]);
      Cplx dv = eval(dcoef, z[k]);
      Cplx ratio = dv == Cplx(0) ? Cplx(Real("1e-30")) : fv / dv;
      Cplx sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += Cplx(1) / (z[k] - z[j]);
      Cplx denom = Cplx(1) - ratio * sum;
      Cplx step = denom == Cplx(0) ? ratio : ratio / denom;
      z[k] -= step;
      Real s = abs(step);
      if (s > worst) worst = s;
    }
    if (worst < target) converged = true;
  }
  // Weierstrass certification radii
  for (int k = 0; k < n; ++k) {
    Cplx prod = Cplx(lcr);
    for (int j = 0; j < n; ++j)
      if (j != k) prod *= (z[k] - z[j]);
    Real w = abs(eval(coef, z[k]) / prod);
    roots.push_back({z[k], Real(n) * w});
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (abs(z[a] - z[b]) <= roots[a].radius + roots[b].radius)
        throw InternalError("complex_roots: certification discs overlap");
  return roots;
}

}  // namespace fusionkit
