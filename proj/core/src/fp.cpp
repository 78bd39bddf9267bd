#include "fusionkit/fp.hpp"

#include <algorithm>
#include <sstream>

#include "fusionkit/library.hpp"

namespace fusionkit {

AlgebraicNumber perron_dimension(const FusionRing& ring, int i) {
  IntPoly cp = charpoly(left_mult_matrix(ring, i));
  return AlgebraicNumber::largest_real_root(cp);
}

namespace {

std::string index_list(const std::vector<int>& idx) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << ")";
  return os.str();
}

}  // namespace

DimensionVector dimension_vector(const FusionRing& ring) {
  const int r = ring.rank();
  DimensionVector out;
  out.dims.reserve(r);
  for (int i = 0; i < r; ++i) out.dims.push_back(perron_dimension(ring, i));

  // Common-field representation: the FP eigenvector of N_c, c = sum X_i,
  // normalized to v_0 = 1, lives in Q(mu) for mu the Perron root of N_c.
  IntMat nc(r, std::vector<Int>(r, Int(0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) nc[j][k] += ring.n(i, j, k);
  AlgebraicNumber mu = AlgebraicNumber::largest_real_root(charpoly(nc));
  NumberField K(mu.minpoly());
  RatPoly t = K.deg == 1 ? RatPoly{mu.rational_value()} : RatPoly{Rat(0), Rat(1)};

  // Gaussian elimination of (N_c - t I) over K; kernel is one-dimensional.
  std::vector<std::vector<RatPoly>> m(r, std::vector<RatPoly>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      m[i][j] = RatPoly{Rat(nc[i][j])};
      if (i == j) m[i][j] = K.sub(m[i][j], t);
      m[i][j] = K.reduce(m[i][j]);
    }
  std::vector<int> pivot_col(r, -1);
  int row = 0;
  for (int col = 0; col < r && row < r; ++col) {
    int p = row;
    while (p < r && K.is_zero(m[p][col])) ++p;
    if (p == r) continue;
    std::swap(m[row], m[p]);
    RatPoly inv = K.inv(m[row][col]);
    for (int j = col; j < r; ++j) m[row][j] = K.mul(m[row][j], inv);
    for (int i = 0; i < r; ++i) {
      if (i == row || K.is_zero(m[i][col])) continue;
      RatPoly c = m[i][col];
      for (int j = col; j < r; ++j)
        m[i][j] = K.sub(m[i][j], K.mul(c, m[row][j]));
    }
    pivot_col[row] = col;
    ++row;
  }
  if (row != r - 1)
    throw InternalError("dimension_vector: Perron eigenspace is not one-dimensional");
  int free_col = 0;
  {
    std::vector<bool> is_pivot(r, false);
    for (int i = 0; i < row; ++i) is_pivot[pivot_col[i]] = true;
    for (int c = 0; c < r; ++c)
      if (!is_pivot[c]) free_col = c;
  }
  std::vector<RatPoly> v(r);
  v[free_col] = RatPoly{Rat(1)};
  for (int i = 0; i < row; ++i)
    v[pivot_col[i]] = K.sub(RatPoly{}, K.mul(m[i][free_col], v[free_col]));
  // normalize v_0 = 1
  RatPoly inv0 = K.inv(v[0]);
  for (int i = 0; i < r; ++i) v[i] = K.mul(v[i], inv0);

  // homomorphism identity, exactly in K
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      RatPoly lhs = K.mul(v[i], v[j]);
      RatPoly rhs;
      for (int k = 0; k < r; ++k) {
        if (ring.n(i, j, k) == 0) continue;
        rhs = K.add(rhs, K.mul(RatPoly{Rat(ring.n(i, j, k))}, v[k]));
      }
      if (!K.is_zero(K.sub(lhs, rhs)))
        throw InternalError("dimension_vector: homomorphism identity failed at " +
                            index_list({i, j}));
    }
  // cross-check against per-object Perron roots and the dual symmetry
  for (int i = 0; i < r; ++i) {
    AlgebraicNumber vi = to_algebraic(K, v[i], mu);
    if (!(vi == out.dims[i]))
      throw InternalError("dimension_vector: eigenvector disagrees with Perron root at index " +
                          std::to_string(i));
    if (!K.is_zero(K.sub(v[i], v[ring.dual(i)])))
      throw InternalError("dimension_vector: d(X*) != d(X) at index " + std::to_string(i));
  }
  if (!(out.dims[0] == AlgebraicNumber::from_int(1)))
    throw InternalError("dimension_vector: d(1) != 1");

  RatPoly delta;
  for (int i = 0; i < r; ++i) delta = K.add(delta, K.mul(v[i], v[i]));
  out.ring_dim = to_algebraic(K, delta, mu);
  out.field_poly = K.poly;
  out.field_reps = std::move(v);
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::undecided: return "undecided";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

bool ObstructionReport::obstructed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const ObstructionCheck& c) { return c.verdict == Verdict::fail; });
}

bool ObstructionReport::undecided() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const ObstructionCheck& c) { return c.verdict == Verdict::undecided; });
}

namespace {

// Structural family detection for the classification annotations.

bool matches_tambara_yamagami(const FusionRing& ring, bool& abelian_group) {
  const int r = ring.rank();
  if (r < 2) return false;
  InvertiblesResult inv = invertibles(ring);
  if (static_cast<int>(inv.indices.size()) != r - 1) return false;
  int x = -1;
  for (int i = 0; i < r; ++i)
    if (std::find(inv.indices.begin(), inv.indices.end(), i) == inv.indices.end()) x = i;
  if (x < 0 || ring.dual(x) != x) return false;
  // g X = X g = X and X^2 = sum of invertibles
  for (int g : inv.indices) {
    for (int k = 0; k < r; ++k) {
      Int want = (k == x) ? 1 : 0;
      if (ring.n(g, x, k) != want || ring.n(x, g, k) != want) return false;
    }
  }
  for (int k = 0; k < r; ++k) {
    Int want = (k == x) ? 0 : 1;
    if (ring.n(x, x, k) != want) return false;
  }
  abelian_group = true;
  for (int a : inv.indices)
    for (int b : inv.indices)
      for (int k = 0; k < r; ++k)
        if (ring.n(a, b, k) != ring.n(b, a, k)) abelian_group = false;
  return true;
}

bool matches_b_n(const FusionRing& ring, int& n_out) {
  const int r = ring.rank();
  if (r < 2) return false;
  const int n = r - 1;
  InvertiblesResult inv = invertibles(ring);
  if (static_cast<int>(inv.indices.size()) != n) return false;
  int y = -1;
  for (int i = 0; i < r; ++i)
    if (std::find(inv.indices.begin(), inv.indices.end(), i) == inv.indices.end()) y = i;
  if (y < 0 || ring.dual(y) != y) return false;
  // invertible part must be cyclic of order n
  {
    bool cyclic = (n == 1);
    for (int a = 1; a < n && !cyclic; ++a) {
      int ord = 1, cur = a;
      while (cur != 0 && ord <= n) {
        cur = inv.table[cur][a];
        ++ord;
      }
      if (cur == 0 && ord == n) cyclic = true;
    }
    if (!cyclic) return false;
  }
  for (int g : inv.indices)
    for (int k = 0; k < r; ++k) {
      Int want = (k == y) ? 1 : 0;
      if (ring.n(g, y, k) != want || ring.n(y, g, k) != want) return false;
    }
  for (int k = 0; k < r; ++k) {
    Int want = (k == y) ? Int(n - 1) : Int(1);
    if (ring.n(y, y, k) != want) return false;
  }
  n_out = n;
  return true;
}

bool is_prime(const Int& p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_prime_power(int q) {
  if (q < 2) return false;
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(Int(p))) continue;
    int v = q;
    while (v % p == 0) v /= p;
    return v == 1;
  }
  return false;
}

}  // namespace

ObstructionReport obstruction_battery(const FusionRing& ring) {
  ObstructionReport report;
  const int r = ring.rank();

  {
    ReciprocityResult rec = check_reciprocity(ring);
    ObstructionCheck c;
    c.name = "reciprocity";
    c.citation = "rigidity + semisimplicity identity N_{i*j}^k = N_{ik}^j";
    c.verdict = rec.holds ? Verdict::pass : Verdict::fail;
    if (!rec.holds) c.witness = "violated at " + index_list({rec.witnesses[0][0],
                                                             rec.witnesses[0][1],
                                                             rec.witnesses[0][2]});
    report.checks.push_back(std::move(c));
  }

  DimensionVector dv = dimension_vector(ring);

  {
    ObstructionCheck c;
    c.name = "fp_conjugate_dominance";
    c.citation = "Galois conjugates of d+(X) are bounded by d+(X)";
    c.verdict = Verdict::pass;
    for (int i = 0; i < r; ++i) {
      if (!conjugate_dominance(dv.dims[i])) {
        c.verdict = Verdict::fail;
        c.witness = "object " + std::to_string(i) + ": " + dv.dims[i].to_string();
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    ObstructionCheck c;
    c.name = "fp_two_cos_quantization";
    c.citation = "d+(X) < 2 forces d+(X) = 2cos(pi/n), n >= 3";
    c.verdict = Verdict::not_applicable;
    AlgebraicNumber one = AlgebraicNumber::from_int(1);
    AlgebraicNumber two = AlgebraicNumber::from_int(2);
    std::ostringstream wit;
    for (int i = 0; i < r; ++i) {
      if (!(dv.dims[i] < two) || dv.dims[i] < one) continue;
      c.verdict = Verdict::pass;
      auto n = two_cos_quantization(dv.dims[i]);
      if (!n) {
        c.verdict = Verdict::fail;
        c.witness = "object " + std::to_string(i) + " has dimension in [1,2) but not 2cos(pi/n)";
        break;
      }
      if (wit.tellp() > 0) wit << ", ";
      wit << "d(" << i << ")=2cos(pi/" << *n << ")";
    }
    if (c.verdict == Verdict::pass) c.witness = wit.str();
    report.checks.push_back(std::move(c));
  }

  {
    ObstructionCheck c;
    c.name = "squared_integrality";
    c.citation = "integer ring dimension forces integer squared dimensions";
    if (dv.ring_dim.is_integer()) {
      c.verdict = Verdict::pass;
      NumberField K(dv.field_poly);
      AlgebraicNumber mu = AlgebraicNumber::largest_real_root(dv.field_poly);
      for (int i = 0; i < r; ++i) {
        AlgebraicNumber sq = to_algebraic(K, K.mul(dv.field_reps[i], dv.field_reps[i]), mu);
        if (!sq.is_integer()) {
          c.verdict = Verdict::fail;
          c.witness = "d(" + std::to_string(i) + ")^2 = " + sq.to_string() + " not an integer";
          break;
        }
      }
    } else {
      c.verdict = Verdict::not_applicable;
      c.witness = "ring dimension " + dv.ring_dim.to_string() + " is not an integer";
    }
    report.checks.push_back(std::move(c));
  }

  {
    ObstructionCheck c;
    c.name = "cyclotomicity";
    c.citation = "d+(X) lies in Z[xi] for a root of unity xi";
    c.verdict = Verdict::pass;
    for (int i = 0; i < r; ++i) {
      Ternary t = galois_abelian(dv.dims[i].minpoly());
      if (t == Ternary::no) {
        c.verdict = Verdict::fail;
        c.witness = "minimal polynomial " + poly_to_string(dv.dims[i].minpoly()) +
                    " of d(" + std::to_string(i) + ") has nonabelian splitting field";
        break;
      }
      if (t == Ternary::undecided && c.verdict == Verdict::pass) {
        c.verdict = Verdict::undecided;
        c.witness = "degree of d(" + std::to_string(i) + ") exceeds the decision range";
      }
    }
    if (c.verdict == Verdict::pass) {
      // find a common cyclotomic field at small conductor, if cheap
      int conductor = 0;
      for (int mcand = 1; mcand <= 64 && conductor == 0; ++mcand) {
        bool all = true;
        for (int i = 0; i < r && all; ++i) {
          int d = dv.dims[i].degree();
          if (d == 1) continue;
          IntPoly phi = cyclotomic_poly(static_cast<unsigned>(mcand));
          if (degree(phi) * d > 48) {
            all = false;
            break;
          }
          NumberField Km(phi);
          auto roots = roots_in_field(Km, dv.dims[i].minpoly());
          if (!roots || static_cast<int>(roots->size()) != d) all = false;
        }
        if (all) conductor = mcand;
      }
      if (conductor > 0)
        c.witness = "all dimensions lie in Q(zeta_" + std::to_string(conductor) + ")";
      else
        c.witness = "all dimension fields abelian";
    }
    report.checks.push_back(std::move(c));
  }

  {
    ObstructionCheck c;
    c.name = "integer_fp_dimensions";
    c.citation = "integer FP dimensions characterize quasi-Hopf representation categories";
    bool all_int = true;
    for (int i = 0; i < r; ++i)
      if (!dv.dims[i].is_integer()) all_int = false;
    if (all_int) {
      c.verdict = Verdict::pass;
      c.witness = "every d+(X_i) is an integer: any realization is Rep of a quasi-Hopf algebra";
    } else {
      c.verdict = Verdict::not_applicable;
    }
    report.checks.push_back(std::move(c));
  }

  // Classification annotations (metadata, never verdicts).
  for (const auto& note : ring.annotations()) report.annotations.push_back(note);
  if (r == 2) {
    Int n = ring.n(1, 1, 1);
    if (n <= 1) {
      report.annotations.push_back("rank-2 family A_" + n.str() +
                                   ": two realizations (classification of rank 2)");
    } else {
      report.annotations.push_back("rank-2 family A_" + n.str() +
                                   ": not realizable per rank-2 classification");
    }
  }
  {
    InvertiblesResult inv = invertibles(ring);
    if (static_cast<int>(inv.indices.size()) == r && r > 0)
      report.annotations.push_back(
          "group ring Z[G]: realizations classified by H^3(G, C^x) / Out(G)");
  }
  {
    bool abelian = false;
    if (matches_tambara_yamagami(ring, abelian)) {
      if (abelian)
        report.annotations.push_back(
            "Tambara-Yamagami ring over an abelian group: realizable; realizations "
            "parametrized by symmetric isomorphisms G -> G^ and a sign");
      else
        report.annotations.push_back(
            "Tambara-Yamagami ring over a nonabelian group: not realizable");
    }
  }
  {
    int n = 0;
    if (matches_b_n(ring, n) && n >= 2) {
      int q = n + 1;
      if (is_prime_power(q)) {
        std::string count = q == 3 ? "3" : (q == 4 || q == 8 ? "2" : "1");
        report.annotations.push_back("B_" + std::to_string(n) + " family with q = " +
                                     std::to_string(q) + " a prime power: realizable, " +
                                     count + " realization(s)");
      } else {
        report.annotations.push_back("B_" + std::to_string(n) + " family with q = " +
                                     std::to_string(q) +
                                     " not a prime power: not realizable");
      }
    }
  }
  if (dv.ring_dim.is_integer()) {
    Int d = dv.ring_dim.integer_value();
    if (is_prime(d)) {
      report.annotations.push_back("prime FP dimension " + d.str() +
                                   ": any realization is C(Z_p, omega)");
    } else {
      for (Int p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        Int q = d / p;
        if (is_prime(p) && is_prime(q)) {
          report.annotations.push_back(
              "FP dimension " + p.str() + "*" + q.str() +
              ": realizations are Tambara-Yamagami (p=2) or Morita equivalent to C(G, omega)");
        }
        break;
      }
    }
  }
  return report;
}

DivisibilityResult divisibility_check(const FusionRing& ring, const std::vector<int>& subring) {
  std::vector<int> s = subring;
  std::sort(s.begin(), s.end());
  if (s.empty() || s[0] != 0)
    throw ShapeError("divisibility_check: subring must contain the unit");
  std::vector<int> pos(ring.rank(), -1);
  for (size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<int>(i);
  for (int a : s) {
    if (pos[ring.dual(a)] < 0)
      throw ShapeError("divisibility_check: subset not closed under duality");
    for (int b : s)
      for (int k = 0; k < ring.rank(); ++k)
        if (ring.n(a, b, k) != 0 && pos[k] < 0)
          throw ShapeError("divisibility_check: subset not closed under multiplication");
  }
  const int m = static_cast<int>(s.size());
  std::vector<Int> tensor(static_cast<size_t>(m) * m * m, Int(0));
  std::vector<int> dual(m);
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    dual[a] = pos[ring.dual(s[a])];
    labels[a] = ring.labels()[s[a]];
    for (int b = 0; b < m; ++b)
      for (int k = 0; k < m; ++k)
        tensor[(static_cast<size_t>(a) * m + b) * m + k] = ring.n(s[a], s[b], s[k]);
  }
  FusionRing sub(m, std::move(labels), std::move(dual), std::move(tensor));
  DivisibilityResult res{dimension_vector(ring).ring_dim / dimension_vector(sub).ring_dim,
                         false};
  res.algebraic_integer = res.ratio.is_algebraic_integer();
  return res;
}

namespace {

Int integer_nth_root(const Int& x, int n) {
  if (x < 0) throw ShapeError("integer_nth_root: negative");
  if (x == 0) return 0;
  Int lo = 1, hi = 2;
  while (boost::multiprecision::pow(hi, unsigned(n)) <= x) hi <<= 1;
  while (lo + 1 < hi) {
    Int mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, unsigned(n)) <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

std::vector<Rat> growth_rate_sanity(const FusionRing& ring, int i, int n_max) {
  if (i < 0 || i >= ring.rank()) throw ShapeError("growth_rate_sanity: index out of range");
  std::vector<Rat> out;
  BasisVector v = basis_vector(ring, i);
  const Int scale = boost::multiprecision::pow(Int(10), 6);
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) v = multiply(ring, v, basis_vector(ring, i));
    Int len = 0;
    for (const Int& c : v) len += c;
    // floor(len^(1/n) * 10^6) / 10^6
    Int scaled = len * boost::multiprecision::pow(scale, unsigned(n));
    out.emplace_back(integer_nth_root(scaled, n), scale);
  }
  return out;
}

}  // namespace fusionkit
