#include "fusionkit/ring.hpp"

#include <algorithm>
#include <set>

namespace fusionkit {

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::unit: return "unit";
    case Axiom::duality: return "duality";
    case Axiom::associativity: return "associativity";
    case Axiom::antiautomorphism: return "antiautomorphism";
  }
  return "?";
}

FusionRing::FusionRing(int rank, std::vector<std::string> labels, std::vector<int> dual,
                       std::vector<Int> tensor, std::string name)
    : rank_(rank),
      labels_(std::move(labels)),
      dual_(std::move(dual)),
      tensor_(std::move(tensor)),
      name_(std::move(name)) {
  if (rank_ <= 0) throw ShapeError("FusionRing: rank must be positive");
  if (labels_.empty()) {
    labels_.resize(rank_);
    for (int i = 0; i < rank_; ++i) labels_[i] = "X" + std::to_string(i);
  }
  if (static_cast<int>(labels_.size()) != rank_)
    throw ShapeError("FusionRing: label count does not match rank");
  if (static_cast<int>(dual_.size()) != rank_)
    throw ShapeError("FusionRing: dual permutation size does not match rank");
  std::vector<bool> seen(rank_, false);
  for (int d : dual_) {
    if (d < 0 || d >= rank_ || seen[d])
      throw ShapeError("FusionRing: dual is not a permutation");
    seen[d] = true;
  }
  if (tensor_.size() != static_cast<size_t>(rank_) * rank_ * rank_)
    throw ShapeError("FusionRing: tensor has wrong shape");
  for (const Int& v : tensor_)
    if (v < 0) throw ShapeError("FusionRing: negative structure constant");
}

bool FusionRing::commutative() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      for (int k = 0; k < rank_; ++k)
        if (n(i, j, k) != n(j, i, k)) return false;
  return true;
}

FusionRing FusionRing::with_annotation(std::string note) const {
  FusionRing r = *this;
  r.annotations_.push_back(std::move(note));
  return r;
}

FusionRing FusionRing::renamed(std::string name) const {
  FusionRing r = *this;
  r.name_ = std::move(name);
  return r;
}

AxiomReport verify_axioms(const FusionRing& ring) {
  AxiomReport report;
  const int r = ring.rank();
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) {
      Int want = (j == k) ? 1 : 0;
      if (ring.n(0, j, k) != want) report.push_back({Axiom::unit, {0, j, k}});
    }
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      if (i == 0) continue;  // covered above
      Int want = (i == k) ? 1 : 0;
      if (ring.n(i, 0, k) != want) report.push_back({Axiom::unit, {i, 0, k}});
    }
  if (ring.dual(0) != 0) report.push_back({Axiom::duality, {0}});
  for (int i = 0; i < r; ++i)
    if (ring.dual(ring.dual(i)) != i) report.push_back({Axiom::duality, {i}});
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Int want = (i == ring.dual(j)) ? 1 : 0;
      if (ring.n(i, j, 0) != want) report.push_back({Axiom::duality, {i, j}});
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          Int lhs = 0, rhs = 0;
          for (int m = 0; m < r; ++m) {
            lhs += ring.n(i, j, m) * ring.n(m, k, l);
            rhs += ring.n(j, k, m) * ring.n(i, m, l);
          }
          if (lhs != rhs) report.push_back({Axiom::associativity, {i, j, k, l}});
        }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (ring.n(i, j, k) != ring.n(ring.dual(j), ring.dual(i), ring.dual(k)))
          report.push_back({Axiom::antiautomorphism, {i, j, k}});
  return report;
}

bool is_valid(const FusionRing& ring) { return verify_axioms(ring).empty(); }

BasisVector basis_vector(const FusionRing& ring, int i) {
  if (i < 0 || i >= ring.rank()) throw ShapeError("basis_vector: index out of range");
  BasisVector v(ring.rank(), Int(0));
  v[i] = 1;
  return v;
}

BasisVector multiply(const FusionRing& ring, const BasisVector& a, const BasisVector& b) {
  const int r = ring.rank();
  if (static_cast<int>(a.size()) != r || static_cast<int>(b.size()) != r)
    throw ShapeError("multiply: vector length does not match rank");
  BasisVector out(r, Int(0));
  for (int i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < r; ++j) {
      if (b[j] == 0) continue;
      Int c = a[i] * b[j];
      for (int k = 0; k < r; ++k) {
        const Int& nijk = ring.n(i, j, k);
        if (nijk != 0) out[k] += c * nijk;
      }
    }
  }
  return out;
}

IntMat left_mult_matrix(const FusionRing& ring, int i) {
  const int r = ring.rank();
  if (i < 0 || i >= r) throw ShapeError("left_mult_matrix: index out of range");
  IntMat m(r, std::vector<Int>(r));
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) m[j][k] = ring.n(i, j, k);
  return m;
}

ReciprocityResult check_reciprocity(const FusionRing& ring) {
  ReciprocityResult res;
  const int r = ring.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (ring.n(ring.dual(i), j, k) != ring.n(i, k, j)) {
          res.holds = false;
          res.witnesses.push_back({i, j, k});
        }
  return res;
}

InvertiblesResult invertibles(const FusionRing& ring) {
  InvertiblesResult res;
  const int r = ring.rank();
  for (int i = 0; i < r; ++i) {
    BasisVector prod = multiply(ring, basis_vector(ring, i), basis_vector(ring, ring.dual(i)));
    bool unit = prod[0] == 1;
    for (int k = 1; unit && k < r; ++k)
      if (prod[k] != 0) unit = false;
    if (unit) res.indices.push_back(i);
  }
  std::vector<int> pos(r, -1);
  for (size_t p = 0; p < res.indices.size(); ++p) pos[res.indices[p]] = static_cast<int>(p);
  const size_t g = res.indices.size();
  res.table.assign(g, std::vector<int>(g, -1));
  for (size_t a = 0; a < g; ++a)
    for (size_t b = 0; b < g; ++b) {
      BasisVector prod =
          multiply(ring, basis_vector(ring, res.indices[a]), basis_vector(ring, res.indices[b]));
      int target = -1;
      for (int k = 0; k < r; ++k) {
        if (prod[k] == 0) continue;
        if (prod[k] != 1 || target != -1)
          throw InternalError("invertibles: product of invertibles is not a basis element");
        target = k;
      }
      if (target < 0 || pos[target] < 0)
        throw InternalError("invertibles: set not closed under multiplication");
      res.table[a][b] = pos[target];
    }
  return res;
}

FusionRing product_ring(const FusionRing& a, const FusionRing& b) {
  const int ra = a.rank(), rb = b.rank();
  const int r = ra * rb;
  auto fuse = [rb](int i, int ip) { return i * rb + ip; };
  std::vector<std::string> labels(r);
  std::vector<int> dual(r);
  std::vector<Int> tensor(static_cast<size_t>(r) * r * r, Int(0));
  for (int i = 0; i < ra; ++i)
    for (int ip = 0; ip < rb; ++ip) {
      labels[fuse(i, ip)] = "(" + a.labels()[i] + "," + b.labels()[ip] + ")";
      dual[fuse(i, ip)] = fuse(a.dual(i), b.dual(ip));
    }
  for (int i = 0; i < ra; ++i)
    for (int ip = 0; ip < rb; ++ip)
      for (int j = 0; j < ra; ++j)
        for (int jp = 0; jp < rb; ++jp)
          for (int k = 0; k < ra; ++k)
            for (int kp = 0; kp < rb; ++kp) {
              Int v = a.n(i, j, k) * b.n(ip, jp, kp);
              if (v != 0)
                tensor[(static_cast<size_t>(fuse(i, ip)) * r + fuse(j, jp)) * r + fuse(k, kp)] = v;
            }
  std::string name = a.name().empty() || b.name().empty() ? std::string()
                                                          : a.name() + "_x_" + b.name();
  return FusionRing(r, std::move(labels), std::move(dual), std::move(tensor), std::move(name));
}

namespace {

std::vector<int> close_subset(const FusionRing& ring, std::vector<int> seed) {
  std::set<int> s(seed.begin(), seed.end());
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur) {
      if (s.insert(ring.dual(a)).second) grew = true;
      for (int b : cur)
        for (int k = 0; k < ring.rank(); ++k)
          if (ring.n(a, b, k) != 0 && s.insert(k).second) grew = true;
    }
  }
  return {s.begin(), s.end()};
}

}  // namespace

SubringSearch find_subrings(const FusionRing& ring) {
  SubringSearch res;
  std::set<std::vector<int>> found;
  found.insert(close_subset(ring, {}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(found.begin(), found.end());
    for (const auto& s : cur) {
      for (int x = 0; x < ring.rank(); ++x) {
        if (std::binary_search(s.begin(), s.end(), x)) continue;
        std::vector<int> seed = s;
        seed.push_back(x);
        if (found.insert(close_subset(ring, std::move(seed))).second) grew = true;
      }
    }
  }
  res.subrings.assign(found.begin(), found.end());
  std::sort(res.subrings.begin(), res.subrings.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::vector<int> adjoint_seed;
  for (int i = 0; i < ring.rank(); ++i)
    for (int k = 0; k < ring.rank(); ++k)
      if (ring.n(i, ring.dual(i), k) != 0) adjoint_seed.push_back(k);
  res.adjoint = close_subset(ring, std::move(adjoint_seed));
  return res;
}

bool tables_equal(const FusionRing& a, const FusionRing& b) {
  return a.rank() == b.rank() && a.dual_perm() == b.dual_perm() && a.tensor() == b.tensor();
}

}  // namespace fusionkit
