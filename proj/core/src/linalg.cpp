#include "fusionkit/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fusionkit {

IntPoly charpoly(const IntMat& a) {
  const size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw ShapeError("charpoly: matrix not square");
  // Berkowitz: leading-first coefficient vector, updated one principal
  // submatrix at a time by Toeplitz convolution.
  std::vector<Int> poly{Int(1)};
  for (size_t i = 0; i < n; ++i) {
    std::vector<Int> t(i + 2);
    t[0] = 1;
    t[1] = -a[i][i];
    if (i > 0) {
      std::vector<Int> v(i);
      for (size_t j = 0; j < i; ++j) v[j] = a[j][i];
      for (size_t k = 2; k <= i + 1; ++k) {
        Int dot = 0;
        for (size_t j = 0; j < i; ++j) dot += a[i][j] * v[j];
        t[k] = -dot;
        if (k <= i) {
          std::vector<Int> w(i, Int(0));
          for (size_t p = 0; p < i; ++p)
            for (size_t q = 0; q < i; ++q) w[p] += a[p][q] * v[q];
          v = std::move(w);
        }
      }
    }
    std::vector<Int> next(i + 2, Int(0));
    for (size_t j = 0; j < next.size(); ++j)
      for (size_t k = 0; k <= j && k < t.size(); ++k)
        if (j - k < poly.size()) next[j] += t[k] * poly[j - k];
    poly = std::move(next);
  }
  std::reverse(poly.begin(), poly.end());
  return ip_trim(std::move(poly));
}

Int det(const IntMat& a) {
  const size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw ShapeError("det: matrix not square");
  if (n == 0) return 1;
  IntMat m = a;
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
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

bool solve_rational(const IntMat& a, const std::vector<Rat>& b, std::vector<Rat>& x) {
  const size_t n = a.size();
  if (b.size() != n) throw ShapeError("solve_rational: dimension mismatch");
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw ShapeError("solve_rational: matrix not square");
    for (size_t j = 0; j < n; ++j) m[i][j] = Rat(a[i][j]);
    m[i][n] = b[i];
  }
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return false;
    std::swap(m[k], m[piv]);
    Rat inv = Rat(1) / m[k][k];
    for (size_t j = k; j <= n; ++j) m[k][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rat c = m[i][k];
      for (size_t j = k; j <= n; ++j) m[i][j] -= c * m[k][j];
    }
  }
  x.resize(n);
  for (size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return true;
}

// ---------------------------------------------------------------------------
// Smith normal form

SmithResult smith_normal_form(IntMat a, bool want_left_inverse) {
  const size_t r = a.size();
  const size_t c = r == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != c) throw ShapeError("smith_normal_form: ragged matrix");
  SmithResult res;
  if (want_left_inverse) {
    res.left_inverse.assign(r, std::vector<Int>(r, Int(0)));
    for (size_t i = 0; i < r; ++i) res.left_inverse[i][i] = 1;
  }
  auto swap_rows = [&](size_t i, size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (want_left_inverse)
      for (size_t k = 0; k < r; ++k) std::swap(res.left_inverse[k][i], res.left_inverse[k][j]);
  };
  auto addmul_row = [&](size_t i, size_t j, const Int& q) {
    // row_i -= q * row_j; U^{-1}: col_j += q * col_i
    if (q == 0) return;
    for (size_t k = 0; k < c; ++k) a[i][k] -= q * a[j][k];
    if (want_left_inverse)
      for (size_t k = 0; k < r; ++k) res.left_inverse[k][j] += q * res.left_inverse[k][i];
  };
  auto negate_row = [&](size_t i) {
    for (size_t k = 0; k < c; ++k) a[i][k] = -a[i][k];
    if (want_left_inverse)
      for (size_t k = 0; k < r; ++k) res.left_inverse[k][i] = -res.left_inverse[k][i];
  };
  auto swap_cols = [&](size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < r; ++k) std::swap(a[k][i], a[k][j]);
  };
  auto addmul_col = [&](size_t i, size_t j, const Int& q) {
    if (q == 0) return;
    for (size_t k = 0; k < r; ++k) a[k][i] -= q * a[k][j];
  };
  auto negate_col = [&](size_t i) {
    for (size_t k = 0; k < r; ++k) a[k][i] = -a[k][i];
  };

  const size_t steps = std::min(r, c);
  for (size_t t = 0; t < steps; ++t) {
    // locate a smallest-magnitude nonzero pivot in the trailing block
    size_t pi = r, pj = c;
    Int best = 0;
    for (size_t i = t; i < r; ++i)
      for (size_t j = t; j < c; ++j) {
        if (a[i][j] == 0) continue;
        Int m = boost::multiprecision::abs(a[i][j]);
        if (best == 0 || m < best) {
          best = m;
          pi = i;
          pj = j;
        }
      }
    if (pi == r) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        addmul_row(i, t, q);
        if (a[i][t] != 0) {
          swap_rows(t, i);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < c; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        addmul_col(j, t, q);
        if (a[t][j] != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
    }
    if (a[t][t] < 0) {
      negate_row(t);
    }
    (void)negate_col;
  }
  // enforce the divisibility chain d1 | d2 | ...
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t t = 0; t + 1 < steps; ++t) {
      if (a[t][t] == 0) continue;
      for (size_t u = t + 1; u < steps; ++u) {
        if (a[u][u] % a[t][t] != 0) {
          // fold row u into row t and re-eliminate the 2x2 block
          addmul_row(t, u, Int(-1));
          // now a[t][u] = a[u][u]; clear via the standard gcd dance
          while (a[t][u] != 0 || a[u][t] != 0) {
            if (a[t][t] == 0) {
              swap_rows(t, u);
              continue;
            }
            Int q1 = a[u][t] / a[t][t];
            addmul_row(u, t, q1);
            if (a[u][t] != 0) {
              swap_rows(t, u);
              continue;
            }
            Int q2 = a[t][u] / a[t][t];
            addmul_col(u, t, q2);
            if (a[t][u] != 0) {
              swap_cols(t, u);
              continue;
            }
          }
          if (a[t][t] < 0) negate_row(t);
          if (a[u][u] < 0) negate_row(u);
          changed = true;
        }
      }
    }
  }
  res.diag.resize(steps);
  for (size_t t = 0; t < steps; ++t) res.diag[t] = a[t][t] < 0 ? -a[t][t] : a[t][t];
  return res;
}

// ---------------------------------------------------------------------------
// Howell forms mod N

namespace {

using i64 = std::int64_t;

i64 norm_mod(i64 v, i64 N) {
  v %= N;
  if (v < 0) v += N;
  return v;
}

i64 xgcd(i64 a, i64 b, i64& x, i64& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  i64 x1, y1;
  i64 g = xgcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

i64 modinv(i64 a, i64 N) {
  i64 x, y;
  i64 g = xgcd(norm_mod(a, N), N, x, y);
  if (g != 1) throw InternalError("modinv: not invertible");
  return norm_mod(x, N);
}

// unit u with u*v == gcd(v, N) (mod N); v must be nonzero mod N
i64 unit_for(i64 v, i64 N) {
  v = norm_mod(v, N);
  if (v == 0) return 1;
  i64 g = std::gcd(v, N);
  i64 v1 = v / g, N1 = N / g;
  if (N1 == 1) throw InternalError("unit_for: zero input");
  i64 c0 = modinv(v1 % N1, N1);
  for (i64 t = 0; t <= N; ++t) {
    i64 cand = norm_mod(c0 + t * N1, N);
    if (cand != 0 && std::gcd(cand, N) == 1) return cand;
  }
  throw InternalError("unit_for: no unit found");
}

struct Howell {
  i64 N;
  std::map<size_t, ModRow> pivots;  // leading column -> row

  explicit Howell(i64 n) : N(n) {}

  static size_t lead(const ModRow& r) {
    for (size_t i = 0; i < r.size(); ++i)
      if (r[i] != 0) return i;
    return r.size();
  }

  void insert(ModRow first) {
    std::vector<ModRow> work;
    work.push_back(std::move(first));
    while (!work.empty()) {
      ModRow row = std::move(work.back());
      work.pop_back();
      for (auto& v : row) v = norm_mod(v, N);
      while (true) {
        size_t j = lead(row);
        if (j == row.size()) break;
        auto it = pivots.find(j);
        if (it == pivots.end()) {
          i64 u = unit_for(row[j], N);
          for (auto& v : row) v = norm_mod(v * u % N, N);
          i64 g = row[j];
          i64 mult = (N / std::gcd(g, N)) % N;
          ModRow ann(row.size(), 0);
          bool ann_nonzero = false;
          for (size_t k = j; k < row.size(); ++k) {
            ann[k] = norm_mod(row[k] * mult % N, N);
            if (ann[k] != 0) ann_nonzero = true;
          }
          pivots.emplace(j, std::move(row));
          if (ann_nonzero) work.push_back(std::move(ann));
          break;
        }
        ModRow& piv = it->second;
        i64 g = piv[j];
        if (row[j] % g == 0) {
          i64 q = (row[j] / g) % N;
          for (size_t k = j; k < row.size(); ++k)
            row[k] = norm_mod(row[k] - q * piv[k] % N, N);
          continue;
        }
        i64 x, y;
        i64 g2 = xgcd(g, row[j], x, y);
        (void)g2;
        ModRow comb(row.size(), 0);
        for (size_t k = j; k < row.size(); ++k)
          comb[k] = norm_mod(norm_mod(x, N) * piv[k] % N +
                                 norm_mod(y, N) * row[k] % N,
                             N);
        ModRow old = std::move(it->second);
        pivots.erase(it);
        work.push_back(std::move(old));
        work.push_back(std::move(row));
        work.push_back(std::move(comb));
        break;
      }
    }
  }
};

}  // namespace

ModMat kernel_mod(const ModMat& a, std::int64_t N) {
  const size_t r = a.size();
  const size_t c = r == 0 ? 0 : a[0].size();
  Howell H(N);
  for (size_t i = 0; i < c; ++i) {
    ModRow row(r + c, 0);
    for (size_t k = 0; k < r; ++k) row[k] = norm_mod(a[k][i], N);
    row[r + i] = 1;
    H.insert(std::move(row));
  }
  ModMat gens;
  for (auto& [col, row] : H.pivots) {
    if (col < r) continue;
    ModRow x(row.begin() + r, row.end());
    gens.push_back(std::move(x));
  }
  return gens;
}

bool solve_mod(const ModMat& a, const ModRow& b, std::int64_t N, ModRow& x) {
  const size_t r = a.size();
  const size_t c = r == 0 ? 0 : a[0].size();
  if (b.size() != r) throw ShapeError("solve_mod: dimension mismatch");
  Howell H(N);
  for (size_t i = 0; i < c; ++i) {
    ModRow row(r + c, 0);
    for (size_t k = 0; k < r; ++k) row[k] = norm_mod(a[k][i], N);
    row[r + i] = 1;
    H.insert(std::move(row));
  }
  ModRow acc(r + c, 0);
  for (size_t k = 0; k < r; ++k) acc[k] = norm_mod(b[k], N);
  while (true) {
    size_t j = Howell::lead(acc);
    if (j >= r) break;
    auto it = H.pivots.find(j);
    if (it == H.pivots.end()) return false;
    i64 g = it->second[j];
    if (acc[j] % g != 0) return false;
    i64 q = (acc[j] / g) % N;
    for (size_t k = j; k < acc.size(); ++k)
      acc[k] = norm_mod(acc[k] - q * it->second[k] % N, N);
  }
  x.assign(c, 0);
  for (size_t i = 0; i < c; ++i) x[i] = norm_mod(N - acc[r + i], N);
  return true;
}

struct ModRowSpan::Impl {
  Howell h;
  explicit Impl(std::int64_t N) : h(N) {}
};

ModRowSpan::ModRowSpan(std::int64_t N) : impl_(new Impl(N)) {}
ModRowSpan::~ModRowSpan() = default;
ModRowSpan::ModRowSpan(ModRowSpan&&) noexcept = default;

void ModRowSpan::insert(ModRow row) { impl_->h.insert(std::move(row)); }

ModMat ModRowSpan::rows() const {
  ModMat out;
  for (const auto& [col, row] : impl_->h.pivots) out.push_back(row);
  return out;
}

// ---------------------------------------------------------------------------
// Complex Hermitian Jacobi

std::vector<Real> hermitian_eigenvalues(std::vector<std::vector<Cplx>> a) {
  const size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw ShapeError("hermitian_eigenvalues: not square");
  const Real eps("1e-45");
  for (int sweep = 0; sweep < 100; ++sweep) {
    Real off = 0;
    for (size_t p = 0; p < n; ++p)
      for (size_t q = p + 1; q < n; ++q) off += norm(a[p][q]);
    if (off < eps * eps) break;
    for (size_t p = 0; p < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) {
        Real apq = abs(a[p][q]);
        if (apq < eps) continue;
        Cplx phase = a[p][q] / Cplx(apq);
        Real theta = (a[q][q].real() - a[p][p].real()) / (2 * apq);
        Real t = (theta >= 0 ? Real(1) : Real(-1)) /
                 (abs(theta) + sqrt(theta * theta + 1));
        Real cr = 1 / sqrt(t * t + 1);
        Cplx s = conj(phase) * Cplx(t * cr);
        Cplx c(cr);
        // rows/cols p, q rotation: G = [[c, conj(s)], [-s, c]] applied both sides
        for (size_t k = 0; k < n; ++k) {
          Cplx akp = a[k][p], akq = a[k][q];
          a[k][p] = akp * c - akq * s;
          a[k][q] = akp * conj(s) + akq * c;
        }
        for (size_t k = 0; k < n; ++k) {
          Cplx apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - conj(s) * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<Real> ev(n);
  for (size_t i = 0; i < n; ++i) ev[i] = a[i][i].real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace fusionkit
