#include "fusionkit/library.hpp"

#include <algorithm>

namespace fusionkit {

namespace {

struct TensorBuilder {
  int r;
  std::vector<Int> t;
  explicit TensorBuilder(int rank) : r(rank), t(static_cast<size_t>(rank) * rank * rank, Int(0)) {}
  Int& at(int i, int j, int k) { return t[(static_cast<size_t>(i) * r + j) * r + k]; }
};

}  // namespace

FusionRing group_ring(const FiniteGroup& g) {
  const int n = g.order();
  TensorBuilder b(n);
  std::vector<int> dual(n);
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    dual[x] = g.inv(x);
    labels[x] = x == 0 ? "1" : "g" + std::to_string(x);
    for (int y = 0; y < n; ++y) b.at(x, y, g.mul(x, y)) = 1;
  }
  return FusionRing(n, std::move(labels), std::move(dual), std::move(b.t),
                    "group_ring:" + g.name());
}

FusionRing sl2_verlinde(int level) {
  if (level < 0) throw ShapeError("sl2_verlinde: level must be nonnegative");
  const int r = level + 1;
  TensorBuilder b(r);
  std::vector<int> dual(r);
  std::vector<std::string> labels(r);
  for (int i = 0; i < r; ++i) {
    dual[i] = i;
    labels[i] = "V" + std::to_string(i);
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int hi = std::min(i + j, 2 * level - i - j);
      for (int k = std::abs(i - j); k <= hi; k += 2) b.at(i, j, k) = 1;
    }
  return FusionRing(r, std::move(labels), std::move(dual), std::move(b.t),
                    "sl2:" + std::to_string(level));
}

FusionRing a_n(int n) {
  if (n < 0) throw ShapeError("a_n: parameter must be nonnegative");
  TensorBuilder b(2);
  b.at(0, 0, 0) = 1;
  b.at(0, 1, 1) = 1;
  b.at(1, 0, 1) = 1;
  b.at(1, 1, 0) = 1;
  b.at(1, 1, 1) = n;
  return FusionRing(2, {"1", "X"}, {0, 1}, std::move(b.t), "a_n:" + std::to_string(n));
}

FusionRing b_n(int n) {
  if (n < 1) throw ShapeError("b_n: parameter must be positive");
  const int r = n + 1;  // X_0..X_{n-1}, Y at index n
  TensorBuilder b(r);
  std::vector<int> dual(r);
  std::vector<std::string> labels(r);
  for (int i = 0; i < n; ++i) {
    dual[i] = (n - i) % n;
    labels[i] = i == 0 ? "1" : "X" + std::to_string(i);
  }
  dual[n] = n;
  labels[n] = "Y";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.at(i, j, (i + j) % n) = 1;
  for (int i = 0; i < n; ++i) {
    b.at(i, n, n) = 1;
    b.at(n, i, n) = 1;
  }
  b.at(n, n, n) = n - 1;
  for (int i = 0; i < n; ++i) b.at(n, n, i) = 1;
  return FusionRing(r, std::move(labels), std::move(dual), std::move(b.t),
                    "b_n:" + std::to_string(n));
}

FusionRing tambara_yamagami(const FiniteGroup& g) {
  const int n = g.order();
  const int r = n + 1;  // group elements, then X at index n
  TensorBuilder b(r);
  std::vector<int> dual(r);
  std::vector<std::string> labels(r);
  for (int x = 0; x < n; ++x) {
    dual[x] = g.inv(x);
    labels[x] = x == 0 ? "1" : "g" + std::to_string(x);
    for (int y = 0; y < n; ++y) b.at(x, y, g.mul(x, y)) = 1;
    b.at(x, n, n) = 1;
    b.at(n, x, n) = 1;
    b.at(n, n, x) = 1;
  }
  dual[n] = n;
  labels[n] = "X";
  FusionRing ring(r, std::move(labels), std::move(dual), std::move(b.t), "ty:" + g.name());
  if (!g.abelian())
    ring = ring.with_annotation(
        "not realizable: Tambara-Yamagami rings are realizable iff the group is abelian");
  return ring;
}

FusionRing rep_s3() {
  // basis 1, chi, V with chi^2 = 1, chi V = V chi = V, V^2 = 1 + chi + V
  TensorBuilder b(3);
  b.at(0, 0, 0) = 1;
  b.at(0, 1, 1) = 1;
  b.at(0, 2, 2) = 1;
  b.at(1, 0, 1) = 1;
  b.at(1, 1, 0) = 1;
  b.at(1, 2, 2) = 1;
  b.at(2, 0, 2) = 1;
  b.at(2, 1, 2) = 1;
  b.at(2, 2, 0) = 1;
  b.at(2, 2, 1) = 1;
  b.at(2, 2, 2) = 1;
  return FusionRing(3, {"1", "chi", "V"}, {0, 1, 2}, std::move(b.t), "rep_s3");
}

FusionRing ising() {
  // 1, g, X with g^2 = 1, gX = Xg = X, X^2 = 1 + g
  TensorBuilder b(3);
  b.at(0, 0, 0) = 1;
  b.at(0, 1, 1) = 1;
  b.at(0, 2, 2) = 1;
  b.at(1, 0, 1) = 1;
  b.at(1, 1, 0) = 1;
  b.at(1, 2, 2) = 1;
  b.at(2, 0, 2) = 1;
  b.at(2, 1, 2) = 1;
  b.at(2, 2, 0) = 1;
  b.at(2, 2, 1) = 1;
  return FusionRing(3, {"1", "g", "X"}, {0, 1, 2}, std::move(b.t), "ising");
}

FusionRing yang_lee() { return a_n(1).renamed("yang_lee"); }

FusionRing builtin_ring(const std::string& name) {
  std::string base = name, arg;
  size_t colon = name.find(':');
  if (colon != std::string::npos) {
    base = name.substr(0, colon);
    arg = name.substr(colon + 1);
  }
  if (base == "yang_lee") return yang_lee();
  if (base == "ising") return ising();
  if (base == "rep_s3") return rep_s3();
  if (base == "a_n") return a_n(std::stoi(arg));
  if (base == "b_n") return b_n(std::stoi(arg));
  if (base == "sl2") return sl2_verlinde(std::stoi(arg));
  if (base == "ty") return tambara_yamagami(FiniteGroup::from_spec(arg));
  if (base == "group_ring") return group_ring(FiniteGroup::from_spec(arg));
  throw ShapeError("unknown builtin ring '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"yang_lee",   "ising", "rep_s3", "a_n:<n>",
          "b_n:<n>",    "sl2:<level>",     "ty:<group>",
          "group_ring:<group>"};
}

std::vector<FusionRing> builtin_test_set() {
  std::vector<FusionRing> rings;
  rings.push_back(yang_lee());
  rings.push_back(ising());
  rings.push_back(rep_s3());
  for (int n = 0; n <= 3; ++n) rings.push_back(a_n(n));
  for (int n = 1; n <= 4; ++n) rings.push_back(b_n(n));
  for (int l = 0; l <= 5; ++l) rings.push_back(sl2_verlinde(l));
  rings.push_back(tambara_yamagami(FiniteGroup::cyclic(2)));
  rings.push_back(tambara_yamagami(FiniteGroup::cyclic(3)));
  rings.push_back(tambara_yamagami(FiniteGroup::from_spec("z2xz2")));
  rings.push_back(group_ring(FiniteGroup::cyclic(2)));
  rings.push_back(group_ring(FiniteGroup::cyclic(4)));
  rings.push_back(group_ring(FiniteGroup::symmetric3()));
  rings.push_back(group_ring(FiniteGroup::from_spec("z2xz2")));
  return rings;
}

}  // namespace fusionkit
