#include "fusionkit/group.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace fusionkit {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name)
    : n_(static_cast<int>(table.size())), table_(std::move(table)), name_(std::move(name)) {
  if (n_ == 0) throw ShapeError("FiniteGroup: empty table");
  for (const auto& row : table_)
    if (static_cast<int>(row.size()) != n_)
      throw ShapeError("FiniteGroup: table is not square");
  for (const auto& row : table_)
    for (int v : row)
      if (v < 0 || v >= n_) throw ShapeError("FiniteGroup: entry out of range");
  for (int a = 0; a < n_; ++a)
    if (table_[0][a] != a || table_[a][0] != a)
      throw ShapeError("FiniteGroup: index 0 is not an identity");
  // rows and columns must be permutations
  for (int a = 0; a < n_; ++a) {
    std::vector<bool> row_seen(n_, false), col_seen(n_, false);
    for (int b = 0; b < n_; ++b) {
      if (row_seen[table_[a][b]]) throw ShapeError("FiniteGroup: row not a permutation");
      if (col_seen[table_[b][a]]) throw ShapeError("FiniteGroup: column not a permutation");
      row_seen[table_[a][b]] = true;
      col_seen[table_[b][a]] = true;
    }
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw ShapeError("FiniteGroup: table is not associative");
  inverse_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (table_[a][b] == 0) inverse_[a] = b;
  for (int a = 0; a < n_; ++a)
    if (inverse_[a] < 0) throw ShapeError("FiniteGroup: missing inverse");
}

bool FiniteGroup::abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

int FiniteGroup::element_order(int g) const {
  int ord = 1, cur = g;
  while (cur != 0) {
    cur = mul(cur, g);
    ++ord;
  }
  return ord;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(n_, false);
  for (int g = 0; g < n_; ++g) {
    if (seen[g]) continue;
    std::set<int> cls;
    for (int x = 0; x < n_; ++x) cls.insert(conjugate(g, x));
    for (int e : cls) seen[e] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
  auto close = [this](std::vector<int> seed) {
    std::set<int> s(seed.begin(), seed.end());
    s.insert(0);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(s.begin(), s.end());
      for (int a : cur) {
        if (s.insert(inv(a)).second) grew = true;
        for (int b : cur)
          if (s.insert(mul(a, b)).second) grew = true;
      }
    }
    return std::vector<int>(s.begin(), s.end());
  };
  std::set<std::vector<int>> found;
  found.insert(close({}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(found.begin(), found.end());
    for (const auto& s : cur)
      for (int x = 0; x < n_; ++x) {
        if (std::binary_search(s.begin(), s.end(), x)) continue;
        std::vector<int> seed = s;
        seed.push_back(x);
        if (found.insert(close(std::move(seed))).second) grew = true;
      }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

FiniteGroup FiniteGroup::subgroup_group(const std::vector<int>& elements) const {
  std::vector<int> elems = elements;
  std::sort(elems.begin(), elems.end());
  if (elems.empty() || elems[0] != 0)
    throw ShapeError("subgroup_group: subset must contain the identity");
  std::vector<int> pos(n_, -1);
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  const int m = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int p = mul(elems[a], elems[b]);
      if (pos[p] < 0) throw ShapeError("subgroup_group: subset not closed");
      t[a][b] = pos[p];
    }
  return FiniteGroup(std::move(t), name_ + "_sub" + std::to_string(m));
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({{0}}, "trivial"); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n <= 0) throw ShapeError("cyclic: order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t), "z" + std::to_string(n));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  const int n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  auto fuse = [nb](int x, int y) { return x * nb + y; };
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          t[fuse(x1, y1)][fuse(x2, y2)] = fuse(a.mul(x1, x2), b.mul(y1, y2));
  return FiniteGroup(std::move(t), a.name() + "x" + b.name());
}

FiniteGroup FiniteGroup::dihedral8() {
  // r^a s^b, index a + 4b; s r s = r^{-1}
  auto idx = [](int a, int b) { return a + 4 * b; };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a1 = 0; a1 < 4; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 4; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          int a = ((b1 ? a1 - a2 : a1 + a2) % 4 + 4) % 4;
          int b = b1 ^ b2;
          t[idx(a1, b1)][idx(a2, b2)] = idx(a, b);
        }
  return FiniteGroup(std::move(t), "d8");
}

FiniteGroup FiniteGroup::quaternion8() {
  // elements 1,-1,i,-i,j,-j,k,-k at indices 0..7
  auto enc = [](int unit, int sign) { return 2 * unit + (sign < 0 ? 1 : 0); };
  // unit: 0=1, 1=i, 2=j, 3=k
  // multiplication of units with sign
  auto base_mul = [](int u1, int u2, int& sign) -> int {
    if (u1 == 0) { sign = 1; return u2; }
    if (u2 == 0) { sign = 1; return u1; }
    if (u1 == u2) { sign = -1; return 0; }
    // i*j=k, j*k=i, k*i=j and anticommute
    static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    sign = sgn[u1][u2];
    return prod[u1][u2];
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int u1 = 0; u1 < 4; ++u1)
    for (int s1 : {1, -1})
      for (int u2 = 0; u2 < 4; ++u2)
        for (int s2 : {1, -1}) {
          int sign;
          int u = base_mul(u1, u2, sign);
          t[enc(u1, s1)][enc(u2, s2)] = enc(u, sign * s1 * s2);
        }
  return FiniteGroup(std::move(t), "q8");
}

FiniteGroup FiniteGroup::symmetric3() {
  // permutations of {0,1,2}: id, (01), (02), (12), (012), (021)
  const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto compose_idx = [&](int a, int b) {
    int c[3];
    for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
    for (int p = 0; p < 6; ++p)
      if (perms[p][0] == c[0] && perms[p][1] == c[1] && perms[p][2] == c[2]) return p;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t[a][b] = compose_idx(a, b);
  return FiniteGroup(std::move(t), "s3");
}

FiniteGroup FiniteGroup::from_spec(const std::string& spec) {
  std::string s;
  for (char c : spec) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "trivial" || s == "z1" || s == "1") return trivial();
  if (s == "d8") return dihedral8();
  if (s == "q8") return quaternion8();
  if (s == "s3") return symmetric3();
  // zA or zAxzBx...
  size_t i = 0;
  std::vector<int> orders;
  while (i < s.size()) {
    if (s[i] != 'z') throw ShapeError("unknown group spec '" + spec + "'");
    ++i;
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw ShapeError("unknown group spec '" + spec + "'");
    orders.push_back(std::stoi(s.substr(start, i - start)));
    if (i < s.size()) {
      if (s[i] != 'x') throw ShapeError("unknown group spec '" + spec + "'");
      ++i;
    }
  }
  if (orders.empty()) throw ShapeError("unknown group spec '" + spec + "'");
  FiniteGroup g = cyclic(orders[0]);
  for (size_t k = 1; k < orders.size(); ++k) g = product(g, cyclic(orders[k]));
  return g;
}

}  // namespace fusionkit
