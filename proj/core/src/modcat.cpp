#include "fusionkit/modcat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

namespace fusionkit {

namespace {

std::int64_t norm(std::int64_t v, std::int64_t m) {
  v %= m;
  if (v < 0) v += m;
  return v;
}

}  // namespace

int count_regular_classes(const FiniteGroup& h, const Cochain& psi) {
  if (psi.degree != 2 || psi.group_order != h.order())
    throw ShapeError("count_regular_classes: need a 2-cochain on the group");
  int count = 0;
  for (const auto& cls : h.conjugacy_classes()) {
    int g = cls.front();
    bool regular = true;
    for (int x = 0; x < h.order() && regular; ++x) {
      if (h.mul(g, x) != h.mul(x, g)) continue;  // x must centralize g
      if (psi.at({g, x}) != psi.at({x, g})) regular = false;
    }
    if (regular) ++count;
  }
  return count;
}

std::vector<int> twisted_group_algebra_irreps(const FiniteGroup& h, const Cochain& psi) {
  if (!is_cocycle(h, psi))
    throw ShapeError("twisted_group_algebra_irreps: psi is not a 2-cocycle");
  const int n = h.order();
  const std::int64_t M = psi.modulus;
  const int k = count_regular_classes(h, psi);

  // regular representation: L_g e_h = zeta^psi(g,h) e_{gh}
  const Real pi = 4 * atan(Real(1));
  std::vector<Cplx> zeta_pow(M);
  for (std::int64_t e = 0; e < M; ++e) {
    Real ang = 2 * pi * static_cast<long>(e) / static_cast<long>(M);
    zeta_pow[e] = Cplx(cos(ang), sin(ang));
  }

  std::uint64_t seed = 0x8899aabbccddeeffull;
  auto next_coef = [&seed]() {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long>((seed >> 40) % 89 + 1);
  };

  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<std::vector<Cplx>> a(n, std::vector<Cplx>(n, Cplx(0)));
    for (int g = 0; g < n; ++g) {
      // complex coefficients: real ones would force conjugate character
      // blocks to share eigenvalues
      Real cre(next_coef()), cim(next_coef());
      Cplx c(cre, cim);
      for (int x = 0; x < n; ++x) {
        Cplx v = c * zeta_pow[psi.at({g, x})];
        int row = h.mul(g, x);
        a[row][x] += v;           // c * L_g
        a[x][row] += conj(v);     // conj(c) * L_g^dagger
      }
    }
    std::vector<Real> ev = hermitian_eigenvalues(a);
    const Real tol("1e-25");
    std::vector<int> clusters;
    int cur = 1;
    for (int i = 1; i < n; ++i) {
      if (ev[i] - ev[i - 1] < tol) {
        ++cur;
      } else {
        clusters.push_back(cur);
        cur = 1;
      }
    }
    clusters.push_back(cur);
    std::map<int, int> by_size;
    for (int c : clusters) ++by_size[c];
    std::vector<int> dims;
    bool ok = true;
    for (auto [size, cnt] : by_size) {
      if (cnt % size != 0) {
        ok = false;
        break;
      }
      for (int b = 0; b < cnt / size; ++b) dims.push_back(size);
    }
    if (!ok) continue;
    long long sumsq = 0;
    for (int d : dims) sumsq += static_cast<long long>(d) * d;
    if (sumsq != n || static_cast<int>(dims.size()) != k) continue;
    std::sort(dims.begin(), dims.end());
    return dims;
  }
  throw InternalError(
      "twisted_group_algebra_irreps: numeric decomposition disagrees with the "
      "psi-regular class count");
}

bool is_nondegenerate(const FiniteGroup& h, const Cochain& psi) {
  const int n = h.order();
  int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (s * s != n) return false;
  if (!is_cocycle(h, psi)) throw ShapeError("is_nondegenerate: psi is not a 2-cocycle");
  return count_regular_classes(h, psi) == 1;
}

namespace {

struct Pair {
  std::vector<int> subgroup;  // sorted elements in G
  Cochain psi;                // modulus M, on the subgroup's own indexing
  int class_index;            // position within its subgroup's class list
};

// psi conjugated by x plus the omega correction; defined on x H x^{-1}.
// kappa_x(a', b') = omega(x, a, b) + omega(a', b', x) - omega(a', x, b)
// with a = x^{-1} a' x. Verified against d(psi') = omega|_{H'} by callers.
Cochain conjugate_psi(const FiniteGroup& g, const Cochain& omega, std::int64_t M,
                      const std::vector<int>& elems, const Cochain& psi, int x,
                      std::vector<int>& conj_elems) {
  const int xi = g.inv(x);
  conj_elems.clear();
  for (int e : elems) conj_elems.push_back(g.mul(g.mul(x, e), xi));
  std::sort(conj_elems.begin(), conj_elems.end());
  FiniteGroup sub = g.subgroup_group(elems);
  FiniteGroup csub = g.subgroup_group(conj_elems);
  std::vector<int> back(g.order(), -1);  // G element -> index in elems
  for (size_t i = 0; i < elems.size(); ++i) back[elems[i]] = static_cast<int>(i);
  std::int64_t scale = M / omega.modulus;
  Cochain out = Cochain::zero(csub, 2, M);
  const int m = csub.order();
  for (int ia = 0; ia < m; ++ia)
    for (int ib = 0; ib < m; ++ib) {
      int ap = conj_elems[ia], bp = conj_elems[ib];
      int a = g.mul(g.mul(xi, ap), x), b = g.mul(g.mul(xi, bp), x);
      std::int64_t v = psi.at({back[a], back[b]});
      std::int64_t kappa =
          omega.at({x, a, b}) + omega.at({ap, bp, x}) - omega.at({ap, x, b});
      out.at({ia, ib}) = norm(v + scale * kappa, M);
    }
  return out;
}

Cochain cochain_diff(const Cochain& a, const Cochain& b) {
  Cochain d = a;
  for (size_t i = 0; i < d.values.size(); ++i)
    d.values[i] = norm(a.values[i] - b.values[i], a.modulus);
  return d;
}

}  // namespace

std::vector<ModuleCategoryDatum> enumerate_module_categories(const FiniteGroup& g,
                                                             const Cochain& omega) {
  if (omega.degree != 3 || omega.group_order != g.order())
    throw ShapeError("enumerate_module_categories: need a 3-cochain on the group");
  if (!is_cocycle(g, omega))
    throw ShapeError("enumerate_module_categories: omega is not a 3-cocycle");
  const int n = g.order();
  const std::int64_t M = omega.modulus * n;

  std::vector<Pair> pairs;
  std::map<std::vector<int>, std::vector<size_t>> by_subgroup;  // elems -> pair ids
  for (const auto& elems : g.subgroups()) {
    FiniteGroup sub = g.subgroup_group(elems);
    Cochain omega_h = restrict_cochain(g, omega, elems);
    auto base = [&]() -> std::optional<Cochain> {
      Cochain lifted = omega_h.include_into(M);
      return is_coboundary(sub, lifted);
    }();
    if (!base) continue;
    CohomologyGroup h2 = cohomology(sub, 2, sub.order());
    // enumerate all elements of H^2 as tuples over the cyclic factors
    std::vector<std::vector<std::int64_t>> tuples{{}};
    for (std::int64_t ord : h2.factor_orders) {
      std::vector<std::vector<std::int64_t>> next;
      for (const auto& t : tuples)
        for (std::int64_t v = 0; v < ord; ++v) {
          auto t2 = t;
          t2.push_back(v);
          next.push_back(std::move(t2));
        }
      tuples = std::move(next);
    }
    int cls = 0;
    for (const auto& t : tuples) {
      Cochain psi = *base;
      for (size_t f = 0; f < t.size(); ++f) {
        if (t[f] == 0) continue;
        Cochain inc = h2.representatives[f].include_into(M);
        for (size_t i = 0; i < psi.values.size(); ++i)
          psi.values[i] = norm(psi.values[i] + t[f] * inc.values[i], M);
      }
      by_subgroup[elems].push_back(pairs.size());
      pairs.push_back({elems, std::move(psi), cls++});
    }
  }

  // union-find over conjugation
  std::vector<size_t> parent(pairs.size());
  std::iota(parent.begin(), parent.end(), size_t(0));
  std::function<size_t(size_t)> find = [&](size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](size_t a, size_t b) { parent[find(a)] = find(b); };

  std::vector<int> conj_elems;
  for (size_t p = 0; p < pairs.size(); ++p) {
    for (int x = 0; x < n; ++x) {
      Cochain psi_x =
          conjugate_psi(g, omega, M, pairs[p].subgroup, pairs[p].psi, x, conj_elems);
      FiniteGroup csub = g.subgroup_group(conj_elems);
      // the conjugated pair must still trivialize omega on the new subgroup
      {
        Cochain target = restrict_cochain(g, omega, conj_elems).include_into(M);
        Cochain check = coboundary(csub, psi_x);
        if (check.values != target.values)
          throw InternalError("enumerate_module_categories: conjugation correction failed");
      }
      auto it = by_subgroup.find(conj_elems);
      if (it == by_subgroup.end())
        throw InternalError("enumerate_module_categories: conjugate subgroup missing");
      size_t match = pairs.size();
      for (size_t cand : it->second) {
        Cochain diff = cochain_diff(psi_x, pairs[cand].psi);
        if (is_coboundary_cx(csub, diff)) {
          match = cand;
          break;
        }
      }
      if (match == pairs.size())
        throw InternalError("enumerate_module_categories: conjugate class not found");
      unite(p, match);
    }
  }

  std::map<size_t, std::vector<size_t>> orbits;
  for (size_t p = 0; p < pairs.size(); ++p) orbits[find(p)].push_back(p);
  std::vector<ModuleCategoryDatum> out;
  for (auto& [root, members] : orbits) {
    size_t best = members.front();
    for (size_t m : members) {
      if (std::make_pair(pairs[m].subgroup, pairs[m].class_index) <
          std::make_pair(pairs[best].subgroup, pairs[best].class_index))
        best = m;
    }
    ModuleCategoryDatum d;
    d.subgroup = pairs[best].subgroup;
    d.psi = pairs[best].psi;
    d.orbit_size = static_cast<int>(members.size());
    FiniteGroup sub = g.subgroup_group(d.subgroup);
    d.nondegenerate = is_nondegenerate(sub, d.psi);
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const ModuleCategoryDatum& a, const ModuleCategoryDatum& b) {
    if (a.subgroup.size() != b.subgroup.size()) return a.subgroup.size() < b.subgroup.size();
    if (a.subgroup != b.subgroup) return a.subgroup < b.subgroup;
    return a.psi.values < b.psi.values;
  });
  return out;
}

FiberFunctorCount count_fiber_functors(const FiniteGroup& g) {
  Cochain trivial = Cochain::zero(g, 3, g.order());
  FiberFunctorCount res;
  for (auto& d : enumerate_module_categories(g, trivial)) {
    if (!d.nondegenerate) continue;
    ++res.count;
    res.witnesses.push_back(std::move(d));
  }
  return res;
}

}  // namespace fusionkit
