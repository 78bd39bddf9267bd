#include "fusionkit/modular.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace fusionkit {

namespace {

// Deterministic ordering key for complex values at coarse resolution.
std::pair<long long, long long> grid_key(const Cplx& z) {
  const Real scale("1e24");
  Real re = z.real() * scale, im = z.imag() * scale;
  return {re.convert_to<long long>(), im.convert_to<long long>()};
}

struct Candidate {
  std::vector<int> order;  // character column at matrix column j
  std::vector<int> sign;
};

}  // namespace

std::optional<ModularDatum> candidate_s_matrix(const FusionRing& ring) {
  const int r = ring.rank();
  CharacterTable table = character_table(ring);

  // column norms Q_j = sum_i |chi_j(X_i)|^2
  std::vector<Real> norm_inv(r);
  Real errbound = 0;
  for (int j = 0; j < r; ++j) {
    Real q = 0;
    for (int i = 0; i < r; ++i) q += norm(table.columns[j].values[i]);
    norm_inv[j] = 1 / sqrt(q);
    Real err = table.columns[j].error;
    if (err > errbound) errbound = err;
  }
  // s candidate entry for (row i, character j, sign e)
  auto entry = [&](int i, int j, int e) {
    return table.columns[j].values[i] * Cplx(norm_inv[j] * e);
  };

  const Real tol("1e-30");
  std::vector<Candidate> solutions;
  std::vector<int> order, sign, used(r, 0);
  long long budget = 2'000'000;
  std::function<void(int)> rec = [&](int j) {
    if (budget-- < 0) return;
    if (j == r) {
      solutions.push_back({order, sign});
      return;
    }
    for (int cand = 0; cand < r; ++cand) {
      if (used[cand]) continue;
      for (int e : {1, -1}) {
        bool ok = true;
        for (int i = 0; i < j && ok; ++i) {
          // symmetry: s_{ij} == s_{ji}
          Cplx sij = entry(i, cand, e);
          Cplx sji = entry(j, order[i], sign[i]);
          if (abs(sij - sji) > tol) ok = false;
        }
        if (!ok) continue;
        order.push_back(cand);
        sign.push_back(e);
        used[cand] = 1;
        rec(j + 1);
        used[cand] = 0;
        order.pop_back();
        sign.pop_back();
      }
    }
  };
  rec(0);
  if (solutions.empty()) return std::nullopt;

  // canonical: lexicographically smallest matrix with s_00 > 0
  auto matrix_of = [&](const Candidate& c) {
    std::vector<std::vector<Cplx>> m(r, std::vector<Cplx>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) m[i][j] = entry(i, c.order[j], c.sign[j]);
    return m;
  };
  auto key_of = [&](const std::vector<std::vector<Cplx>>& m) {
    std::vector<std::pair<long long, long long>> key;
    key.reserve(r * r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) key.push_back(grid_key(m[i][j]));
    return key;
  };
  int best = -1;
  std::vector<std::pair<long long, long long>> best_key;
  for (size_t c = 0; c < solutions.size(); ++c) {
    auto m = matrix_of(solutions[c]);
    if (!(m[0][0].real() > 0)) continue;
    auto key = key_of(m);
    if (best < 0 || key < best_key) {
      best = static_cast<int>(c);
      best_key = std::move(key);
    }
  }
  if (best < 0) best = 0;  // all-s00-negative cannot happen; guard anyway

  ModularDatum datum;
  datum.rank = r;
  datum.s = matrix_of(solutions[best]);
  datum.error = errbound * 4 + Real("1e-45");
  datum.charge_conjugation = ring.dual_perm();
  datum.column_character = solutions[best].order;
  datum.column_sign = solutions[best].sign;
  datum.heuristic = r > 8;
  datum.fp_column = -1;
  for (int j = 0; j < r; ++j)
    if (solutions[best].order[j] == table.fp_column) datum.fp_column = j;
  return datum;
}

bool ModularVerification::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const Item& i) { return i.pass; });
}

ModularVerification verify_modular(const ModularDatum& datum, const FusionRing& ring,
                                   const Real& tol) {
  const int r = datum.rank;
  if (ring.rank() != r) throw ShapeError("verify_modular: rank mismatch");
  ModularVerification v;
  auto add = [&](const std::string& name, const Real& residual) {
    v.items.push_back({name, residual < tol, residual});
  };
  Real sym = 0, dual = 0, unit = 1, orth = 0, verl = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      sym = std::max(sym, abs(datum.s[i][j] - datum.s[j][i]));
      dual = std::max(dual, abs(datum.s[i][j] - datum.s[ring.dual(i)][ring.dual(j)]));
    }
  add("symmetry", sym);
  add("duality", dual);
  for (int i = 0; i < r; ++i) unit = std::min(unit, abs(datum.s[0][i]));
  v.items.push_back({"unit_row_nonzero", unit > tol, unit});
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Cplx acc = 0;
      for (int k = 0; k < r; ++k) acc += datum.s[i][k] * datum.s[k][j];
      Cplx want = (j == ring.dual(i)) ? Cplx(1) : Cplx(0);
      orth = std::max(orth, abs(acc - want));
    }
  add("charge_conjugation", orth);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int rr = 0; rr < r; ++rr) {
        Cplx lhs = 0;
        for (int a = 0; a < r; ++a) {
          if (ring.n(i, j, a) == 0) continue;
          lhs += Cplx(Real(ring.n(i, j, a))) * datum.s[a][rr];
        }
        Cplx rhs = datum.s[i][rr] * datum.s[j][rr] / datum.s[0][rr];
        verl = std::max(verl, abs(lhs - rhs));
      }
  add("verlinde", verl);
  return v;
}

FusionRing verlinde_fusion_from_s(const ModularDatum& datum, const Real& tol) {
  const int r = datum.rank;
  const auto& dual = datum.charge_conjugation;
  std::vector<Int> tensor(static_cast<size_t>(r) * r * r, Int(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        Cplx acc = 0;
        for (int rr = 0; rr < r; ++rr)
          acc += datum.s[i][rr] * datum.s[j][rr] * datum.s[rr][dual[k]] / datum.s[0][rr];
        if (abs(acc.imag()) > tol)
          throw UnsupportedError("verlinde_fusion_from_s: entry has imaginary part");
        Real re = acc.real();
        Real rounded = floor(re + Real("0.5"));
        if (abs(re - rounded) > tol)
          throw UnsupportedError("verlinde_fusion_from_s: entry not within tolerance of an integer");
        if (rounded < Real("-0.5"))
          throw UnsupportedError("verlinde_fusion_from_s: entry rounds negative");
        long long value = rounded.convert_to<long long>();
        if (value < 0) throw UnsupportedError("verlinde_fusion_from_s: negative entry");
        tensor[(static_cast<size_t>(i) * r + j) * r + k] = Int(value);
      }
  FusionRing ring(r, {}, dual, std::move(tensor), "verlinde_reconstruction");
  if (!verify_axioms(ring).empty())
    throw UnsupportedError("verlinde_fusion_from_s: reconstructed tensor violates ring axioms");
  return ring;
}

std::vector<RatioVerdict> algebraic_integer_ratios(const FusionRing& ring) {
  const int r = ring.rank();
  CharacterTable table = character_table(ring);
  std::vector<RatioVerdict> out;
  for (int j = 0; j < r; ++j) {
    const CharacterColumn& col = table.columns[j];
    NumberField K(table.factors[col.factor]);
    RatPoly acc;
    for (int i = 0; i < r; ++i)
      acc = K.add(acc, K.mul(col.values_exact[i], col.values_exact[ring.dual(i)]));
    // The value is real (an eigenvalue of the symmetric matrix sum N_i N_i^T);
    // isolate it among the real roots of its minimal polynomial numerically.
    IntPoly mp = K.element_minpoly(acc);
    RatioVerdict verdict;
    verdict.column = j;
    verdict.fp_column = (j == table.fp_column);
    if (fusionkit::degree(mp) == 1) {
      verdict.value = AlgebraicNumber::from_rational(Rat(-mp[0], mp[1]));
    } else {
      Cplx approx = 0;
      for (int i = 0; i < r; ++i) approx += col.values[i] * col.values[ring.dual(i)];
      Real err = col.error * 4 * r + Real("1e-42");
      Rat pad(1, Int(1) << 36);
      Rat lo = Rat((approx.real() - err).convert_to<double>()) - pad;
      Rat hi = Rat((approx.real() + err).convert_to<double>()) + pad;
      verdict.value = AlgebraicNumber::root_of(mp, lo, hi);
    }
    verdict.algebraic_integer = verdict.value.is_algebraic_integer();
    out.push_back(std::move(verdict));
  }
  return out;
}

GaloisSymmetryResult galois_symmetry(const ModularDatum& datum, const FusionRing& ring) {
  const int r = datum.rank;
  GaloisSymmetryResult res;
  const Real tol = datum.error * 1000 + Real("1e-30");

  // exact factor annotation: matrix position -> irreducible factor of the
  // character it carries
  std::vector<int> factor_of(r, 0);
  {
    CharacterTable table = character_table(ring);
    for (int j = 0; j < r; ++j)
      factor_of[j] = table.columns[datum.column_character[j]].factor;
  }

  auto consistent = [&](const std::vector<int>& perm, const std::vector<int>& sign) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Cplx lhs = Cplx(Real(sign[i])) * datum.s[perm[i]][j];
        Cplx rhs = Cplx(Real(sign[j])) * datum.s[i][perm[j]];
        if (abs(lhs - rhs) > tol) return false;
      }
    return true;
  };

  std::map<std::vector<int>, std::vector<int>> found;  // perm -> minimal sign
  std::vector<int> perm(r, -1), used(r, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == r) {
      // derive signs from row 0: eps(i) * s_{perm(i),0} = eps(0) * s_{i,perm(0)}
      for (int e0 : {1, -1}) {
        std::vector<int> sign(r, 0);
        sign[0] = e0;
        bool ok = true;
        for (int k = 0; k < r && ok; ++k) {
          Cplx ratio = Cplx(Real(e0)) * datum.s[k][perm[0]] / datum.s[perm[k]][0];
          if (abs(ratio.imag()) > tol) {
            ok = false;
            break;
          }
          Real re = ratio.real();
          if (abs(re - 1) < tol)
            sign[k] = 1;
          else if (abs(re + 1) < tol)
            sign[k] = -1;
          else
            ok = false;
        }
        if (!ok || sign[0] != e0) continue;
        if (!consistent(perm, sign)) continue;
        auto it = found.find(perm);
        if (it == found.end() || sign < it->second) found[perm] = sign;
      }
      return;
    }
    for (int cand = 0; cand < r; ++cand) {
      if (used[cand]) continue;
      // the induced root map must stay within one irreducible factor
      if (factor_of[cand] != factor_of[i]) continue;
      perm[i] = cand;
      used[cand] = 1;
      rec(i + 1);
      used[cand] = 0;
      perm[i] = -1;
    }
  };
  rec(0);

  for (auto& [p, sgn] : found) res.symmetries.push_back({p, sgn});

  // group-theoretic properties
  res.dual_compatible = true;
  for (const auto& s : res.symmetries)
    for (int i = 0; i < r; ++i)
      if (s.perm[ring.dual(i)] != ring.dual(s.perm[i])) res.dual_compatible = false;
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(r);
    for (int i = 0; i < r; ++i) c[i] = a[b[i]];
    return c;
  };
  res.closed = true;
  for (const auto& s1 : res.symmetries)
    for (const auto& s2 : res.symmetries) {
      auto c = compose(s1.perm, s2.perm);
      bool present = std::any_of(res.symmetries.begin(), res.symmetries.end(),
                                 [&](const GaloisSymmetry& s) { return s.perm == c; });
      if (!present) res.closed = false;
    }
  res.abelian = true;
  for (const auto& s1 : res.symmetries)
    for (const auto& s2 : res.symmetries)
      if (compose(s1.perm, s2.perm) != compose(s2.perm, s1.perm)) res.abelian = false;
  return res;
}

}  // namespace fusionkit
