#include "fusionkit/characters.hpp"

#include <algorithm>
#include <sstream>

namespace fusionkit {

CharacterTable character_table(const FusionRing& ring) {
  const int r = ring.rank();
  if (!ring.commutative())
    throw UnsupportedError("character_table: ring is not commutative");

  // Semisimplicity of the ring algebra over Q: nondegenerate trace form.
  {
    IntMat gram(r, std::vector<Int>(r, Int(0)));
    std::vector<IntMat> mats;
    mats.reserve(r);
    for (int i = 0; i < r; ++i) mats.push_back(left_mult_matrix(ring, i));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Int tr = 0;
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) tr += mats[i][a][b] * mats[j][b][a];
        gram[i][j] = tr;
      }
    if (det(gram) == 0) {
      std::ostringstream w;
      w << "trace form of the ring algebra is degenerate (fewer than " << r
        << " one-dimensional characters); a true fusion ring of a fusion "
           "category has semisimple ring algebra";
      throw DegeneracyError("character_table: degenerate ring algebra", w.str());
    }
  }

  // Generator with squarefree characteristic polynomial.
  std::uint64_t seed = 0x51ed270b1f2c3d4eull;
  auto next_weight = [&seed]() {
    seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int>((seed >> 33) % 23);
  };
  IntMat nc;
  IntPoly cp;
  std::vector<Int> weights;
  bool found = false;
  for (int attempt = 0; attempt < 64 && !found; ++attempt) {
    weights.assign(r, Int(0));
    for (int i = 1; i < r; ++i)
      weights[i] = attempt == 0 ? Int(i) : Int(next_weight());
    nc.assign(r, std::vector<Int>(r, Int(0)));
    for (int i = 0; i < r; ++i) {
      if (weights[i] == 0) continue;
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) nc[j][k] += weights[i] * ring.n(i, j, k);
    }
    cp = charpoly(nc);
    if (degree(ip_gcd(cp, ip_derivative(cp))) == 0) found = true;
  }
  if (!found)
    throw InternalError("character_table: no squarefree generator found");

  CharacterTable table;
  table.rank = r;
  table.generator_charpoly = cp;
  table.factors = factor_squarefree(ip_normalize(cp));

  // Express each basis element as a polynomial in the generator c.
  // P columns are the coordinates of c^k in the distinguished basis.
  IntMat p(r, std::vector<Int>(r, Int(0)));
  {
    BasisVector cur(r, Int(0));
    cur[0] = 1;
    BasisVector cvec(r, Int(0));
    for (int i = 0; i < r; ++i) cvec[i] = weights[i];
    cvec[0] += 0;
    for (int k = 0; k < r; ++k) {
      for (int i = 0; i < r; ++i) p[i][k] = cur[i];
      cur = multiply(ring, cur, cvec);
    }
  }
  std::vector<RatPoly> h(r);  // X_i = h_i(c)
  for (int i = 0; i < r; ++i) {
    std::vector<Rat> e(r, Rat(0)), x;
    e[i] = 1;
    if (!solve_rational(p, e, x))
      throw InternalError("character_table: powers of the generator are dependent");
    h[i] = rp_trim(std::move(x));
  }

  // Complex roots per factor, in a deterministic order.
  for (const auto& f : table.factors) {
    auto roots = complex_roots(f);
    std::sort(roots.begin(), roots.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
      if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
      return a.value.imag() < b.value.imag();
    });
    table.factor_roots.push_back(std::move(roots));
  }

  for (size_t fk = 0; fk < table.factors.size(); ++fk) {
    NumberField K(table.factors[fk]);
    std::vector<RatPoly> reduced(r);
    for (int i = 0; i < r; ++i) reduced[i] = K.reduce(h[i]);
    for (size_t ri = 0; ri < table.factor_roots[fk].size(); ++ri) {
      const ComplexRoot& root = table.factor_roots[fk][ri];
      CharacterColumn col;
      col.factor = static_cast<int>(fk);
      col.root_index = static_cast<int>(ri);
      col.values_exact = reduced;
      col.values.resize(r);
      Real errmax = 0;
      for (int i = 0; i < r; ++i) {
        Cplx acc = 0;
        Real dacc = 0;  // bound on |h'| near the root
        Real mag = abs(root.value) + 1;
        for (auto it = reduced[i].rbegin(); it != reduced[i].rend(); ++it)
          acc = acc * root.value + Cplx(to_real(*it));
        for (size_t kdeg = 1; kdeg < reduced[i].size(); ++kdeg) {
          Real ak = abs(to_real(reduced[i][kdeg]));
          dacc += Real(static_cast<long>(kdeg)) * ak * pow(mag, static_cast<int>(kdeg - 1));
        }
        col.values[i] = acc;
        Real err = root.radius * (dacc + 1);
        if (err > errmax) errmax = err;
      }
      col.error = errmax;
      table.columns.push_back(std::move(col));
    }
  }
  if (static_cast<int>(table.columns.size()) != r)
    throw InternalError("character_table: wrong number of characters");

  // FP column: the factor and root of the largest real eigenvalue.
  AlgebraicNumber mu = AlgebraicNumber::largest_real_root(cp);
  mu.refine_to(Rat(1, boost::multiprecision::pow(Int(10), 40)));
  Real mulo = to_real(mu.interval().first), muhi = to_real(mu.interval().second);
  for (size_t c = 0; c < table.columns.size(); ++c) {
    const auto& col = table.columns[c];
    if (table.factors[col.factor] != mu.minpoly()) continue;
    const ComplexRoot& root = table.factor_roots[col.factor][col.root_index];
    if (abs(root.value.imag()) > root.radius + Real("1e-40")) continue;
    if (root.value.real() + root.radius >= mulo - Real("1e-40") &&
        root.value.real() - root.radius <= muhi + Real("1e-40")) {
      table.fp_column = static_cast<int>(c);
      break;
    }
  }
  if (table.fp_column < 0)
    throw InternalError("character_table: FP column not identified");
  return table;
}

}  // namespace fusionkit
