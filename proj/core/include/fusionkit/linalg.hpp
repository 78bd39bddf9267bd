#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fusionkit/numeric.hpp"
#include "fusionkit/poly.hpp"

namespace fusionkit {

using IntMat = std::vector<std::vector<Int>>;  // row major

// det(xI - A), monic, exact (division-free Berkowitz algorithm).
IntPoly charpoly(const IntMat& a);
Int det(const IntMat& a);  // fraction-free Bareiss

// Solve A x = b over Q. Requires A square nonsingular; returns false when
// singular.
bool solve_rational(const IntMat& a, const std::vector<Rat>& b, std::vector<Rat>& x);

// Smith normal form over Z. diag holds the invariant factors d1 | d2 | ...
// (nonnegative). When requested, left_inverse holds U^{-1} for the row
// transform U (U A V = D): its columns express the new basis in the old one.
struct SmithResult {
  std::vector<Int> diag;
  IntMat left_inverse;
};
SmithResult smith_normal_form(IntMat a, bool want_left_inverse);

// Linear algebra mod N (2 <= N < 2^31), dense int64 rows, via Howell forms.
using ModRow = std::vector<std::int64_t>;
using ModMat = std::vector<ModRow>;

// Generators of {x : A x = 0 (mod N)} as rows.
ModMat kernel_mod(const ModMat& a, std::int64_t N);
// Solve A x = b (mod N); returns false if inconsistent.
bool solve_mod(const ModMat& a, const ModRow& b, std::int64_t N, ModRow& x);

// Incremental Howell reduction of a row space mod N; lets callers stream
// rows of large sparse matrices without materializing them.
class ModRowSpan {
 public:
  explicit ModRowSpan(std::int64_t N);
  ~ModRowSpan();
  ModRowSpan(ModRowSpan&&) noexcept;
  void insert(ModRow row);
  ModMat rows() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi sweeps.
std::vector<Real> hermitian_eigenvalues(std::vector<std::vector<Cplx>> a);

}  // namespace fusionkit
