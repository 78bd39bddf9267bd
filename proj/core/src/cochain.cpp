#include "fusionkit/cochain.hpp"

#include <algorithm>
#include <cmath>

namespace fusionkit {

namespace {

size_t pow_size(int base, int exp) {
  size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<size_t>(base);
  return r;
}

std::int64_t norm(std::int64_t v, std::int64_t m) {
  v %= m;
  if (v < 0) v += m;
  return v;
}

// Enumerate tuple from flat index (row-major, first coordinate slowest).
void decode(size_t idx, int n, int d, std::vector<int>& tuple) {
  tuple.resize(d);
  for (int i = d - 1; i >= 0; --i) {
    tuple[i] = static_cast<int>(idx % n);
    idx /= n;
  }
}

// Sparse row of the bar differential from degree d to d+1, as (column,
// coefficient) pairs for the row indexed by the (d+1)-tuple.
void differential_row(const FiniteGroup& g, int d, const std::vector<int>& tuple,
                      std::vector<std::pair<size_t, int>>& out) {
  const int n = g.order();
  out.clear();
  auto encode = [n](const std::vector<int>& t) {
    size_t idx = 0;
    for (int v : t) idx = idx * n + v;
    return idx;
  };
  std::vector<int> sub(d);
  // drop first
  for (int i = 0; i < d; ++i) sub[i] = tuple[i + 1];
  out.emplace_back(encode(sub), 1);
  // merge neighbours
  int sign = -1;
  for (int i = 0; i < d; ++i) {
    int w = 0;
    for (int j = 0; j <= d; ++j) {
      if (j == i) {
        sub[w++] = g.mul(tuple[i], tuple[i + 1]);
        ++j;
      } else {
        sub[w++] = tuple[j];
      }
    }
    out.emplace_back(encode(sub), sign);
    sign = -sign;
  }
  // drop last
  for (int i = 0; i < d; ++i) sub[i] = tuple[i];
  out.emplace_back(encode(sub), sign);
}

}  // namespace

Cochain Cochain::zero(const FiniteGroup& g, int degree, std::int64_t modulus) {
  if (degree < 0) throw ShapeError("Cochain: negative degree");
  if (modulus < 1) throw ShapeError("Cochain: modulus must be positive");
  Cochain c;
  c.degree = degree;
  c.modulus = modulus;
  c.group_order = g.order();
  c.values.assign(pow_size(g.order(), degree), 0);
  return c;
}

size_t Cochain::index_of(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != degree)
    throw ShapeError("Cochain: tuple arity mismatch");
  size_t idx = 0;
  for (int v : tuple) {
    if (v < 0 || v >= group_order) throw ShapeError("Cochain: element out of range");
    idx = idx * group_order + v;
  }
  return idx;
}

std::int64_t& Cochain::at(const std::vector<int>& tuple) { return values[index_of(tuple)]; }
std::int64_t Cochain::at(const std::vector<int>& tuple) const { return values[index_of(tuple)]; }

Cochain Cochain::include_into(std::int64_t larger_modulus) const {
  if (larger_modulus % modulus != 0)
    throw ShapeError("include_into: modulus must be a multiple");
  Cochain c = *this;
  std::int64_t f = larger_modulus / modulus;
  c.modulus = larger_modulus;
  for (auto& v : c.values) v = norm(v * f, larger_modulus);
  return c;
}

Cochain coboundary(const FiniteGroup& g, const Cochain& c) {
  if (c.group_order != g.order()) throw ShapeError("coboundary: group mismatch");
  Cochain out = Cochain::zero(g, c.degree + 1, c.modulus);
  const int n = g.order();
  std::vector<int> tuple;
  std::vector<std::pair<size_t, int>> row;
  for (size_t idx = 0; idx < out.values.size(); ++idx) {
    decode(idx, n, c.degree + 1, tuple);
    differential_row(g, c.degree, tuple, row);
    std::int64_t acc = 0;
    for (const auto& [col, coef] : row) acc += coef * c.values[col];
    out.values[idx] = norm(acc, c.modulus);
  }
  return out;
}

bool is_cocycle(const FiniteGroup& g, const Cochain& c) {
  Cochain d = coboundary(g, c);
  return std::all_of(d.values.begin(), d.values.end(),
                     [](std::int64_t v) { return v == 0; });
}

namespace {

std::optional<Cochain> solve_coboundary(const FiniteGroup& g, const Cochain& c,
                                        std::int64_t work_modulus) {
  // solve d(eta) = iota(c) over mu_{work_modulus}
  const int n = g.order();
  const int d = c.degree;
  if (d < 1) return std::nullopt;
  const size_t rows = c.values.size();
  const size_t cols = pow_size(n, d - 1);
  ModMat a(rows, ModRow(cols, 0));
  std::vector<int> tuple;
  std::vector<std::pair<size_t, int>> row;
  for (size_t idx = 0; idx < rows; ++idx) {
    decode(idx, n, d, tuple);
    differential_row(g, d - 1, tuple, row);
    for (const auto& [col, coef] : row)
      a[idx][col] = norm(a[idx][col] + coef, work_modulus);
  }
  std::int64_t scale = work_modulus / c.modulus;
  ModRow b(rows);
  for (size_t i = 0; i < rows; ++i) b[i] = norm(c.values[i] * scale, work_modulus);
  ModRow x;
  if (!solve_mod(a, b, work_modulus, x)) return std::nullopt;
  Cochain witness = Cochain::zero(g, d - 1, work_modulus);
  witness.values.assign(x.begin(), x.end());
  return witness;
}

}  // namespace

std::optional<Cochain> is_coboundary(const FiniteGroup& g, const Cochain& c) {
  return solve_coboundary(g, c, c.modulus);
}

std::optional<Cochain> is_coboundary_cx(const FiniteGroup& g, const Cochain& c) {
  return solve_coboundary(g, c, c.modulus * g.order());
}

CohomologyGroup cohomology(const FiniteGroup& g, int degree, std::int64_t modulus) {
  const int n = g.order();
  if (degree != 2 && degree != 3)
    throw UnsupportedError("cohomology: only degrees 2 and 3 are supported");
  if (degree == 3 && n > 16)
    throw UnsupportedError("cohomology: degree 3 limited to groups of order <= 16");
  if (degree == 2 && n > 24)
    throw UnsupportedError("cohomology: degree 2 limited to groups of order <= 24");
  std::int64_t m = modulus > 0 ? modulus : n;
  if (m == 1) {
    CohomologyGroup trivial;
    trivial.degree = degree;
    trivial.modulus = m;
    return trivial;
  }
  const std::int64_t M = m * n;  // coboundary witnesses live in mu_M

  // Cocycles mod m: kernel of the (d -> d+1) differential. The differential
  // is streamed row by row through a Howell reduction so the full n^(d+1) by
  // n^d matrix never materializes.
  const size_t nd = pow_size(n, degree);
  const size_t ndp = pow_size(n, degree + 1);
  ModMat gens;
  {
    ModRowSpan span(m);
    std::vector<int> tuple;
    std::vector<std::pair<size_t, int>> row;
    for (size_t idx = 0; idx < ndp; ++idx) {
      decode(idx, n, degree + 1, tuple);
      differential_row(g, degree, tuple, row);
      ModRow dense(nd, 0);
      bool nonzero = false;
      for (const auto& [col, coef] : row) {
        dense[col] = norm(dense[col] + coef, m);
        if (dense[col] != 0) nonzero = true;
      }
      if (nonzero) span.insert(std::move(dense));
    }
    ModMat reduced = span.rows();
    if (reduced.empty()) {
      // zero differential: every cochain is a cocycle
      gens.assign(nd, ModRow(nd, 0));
      for (size_t i = 0; i < nd; ++i) gens[i][i] = 1;
    } else {
      gens = kernel_mod(reduced, m);
    }
  }
  const size_t s = gens.size();

  CohomologyGroup H;
  H.degree = degree;
  H.modulus = m;
  if (s == 0) return H;

  // Relations: (a, eta) with (M/m) * V^T a = D1 eta (mod M), projected to a.
  const size_t ndm = pow_size(n, degree - 1);
  ModMat big(nd, ModRow(s + ndm, 0));
  std::int64_t scale = M / m;
  for (size_t i = 0; i < nd; ++i)
    for (size_t k = 0; k < s; ++k)
      big[i][k] = norm(gens[k][i] * scale, M);
  {
    std::vector<int> tuple;
    std::vector<std::pair<size_t, int>> row;
    for (size_t idx = 0; idx < nd; ++idx) {
      decode(idx, n, degree, tuple);
      differential_row(g, degree - 1, tuple, row);
      for (const auto& [col, coef] : row)
        big[idx][s + col] = norm(big[idx][s + col] - coef, M);
    }
  }
  ModMat rel = kernel_mod(big, M);

  // Presentation Z^s / <projected relations, M e_i>; Smith normal form.
  IntMat relmat(s, std::vector<Int>(rel.size() + s, Int(0)));
  for (size_t c = 0; c < rel.size(); ++c)
    for (size_t i = 0; i < s; ++i) relmat[i][c] = Int(rel[c][i]);
  for (size_t i = 0; i < s; ++i) relmat[i][rel.size() + i] = Int(M);
  SmithResult snf = smith_normal_form(relmat, true);

  for (size_t t = 0; t < snf.diag.size(); ++t) {
    if (snf.diag[t] == 0)
      throw InternalError("cohomology: infinite factor in finite quotient");
    if (snf.diag[t] == 1) continue;
    std::int64_t order = snf.diag[t].convert_to<std::int64_t>();
    Cochain rep = Cochain::zero(g, degree, m);
    for (size_t j = 0; j < s; ++j) {
      Int coef = snf.left_inverse[j][t] % Int(m);
      std::int64_t cj = coef.convert_to<std::int64_t>();
      for (size_t i = 0; i < nd; ++i)
        rep.values[i] = norm(rep.values[i] + cj * gens[j][i], m);
    }
    H.factor_orders.push_back(order);
    H.representatives.push_back(std::move(rep));
  }
  return H;
}

Cochain standard_3cocycle(int n, std::int64_t q) {
  FiniteGroup g = FiniteGroup::cyclic(n);
  Cochain c = Cochain::zero(g, 3, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int cc = 0; cc < n; ++cc)
        c.at({a, b, cc}) = norm(q * a * ((b + cc) / n), n);
  return c;
}

Cochain restrict_cochain(const FiniteGroup& g, const Cochain& c,
                         const std::vector<int>& elements) {
  if (c.group_order != g.order()) throw ShapeError("restrict_cochain: group mismatch");
  std::vector<int> elems = elements;
  std::sort(elems.begin(), elems.end());
  FiniteGroup sub = g.subgroup_group(elems);
  Cochain out = Cochain::zero(sub, c.degree, c.modulus);
  std::vector<int> tuple, mapped(c.degree);
  for (size_t idx = 0; idx < out.values.size(); ++idx) {
    decode(idx, sub.order(), c.degree, tuple);
    for (int i = 0; i < c.degree; ++i) mapped[i] = elems[tuple[i]];
    out.values[idx] = c.at(mapped);
  }
  return out;
}

}  // namespace fusionkit
