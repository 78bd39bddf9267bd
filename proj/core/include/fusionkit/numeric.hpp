#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <stdexcept>
#include <string>

namespace fusionkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Working precision for the certified numeric paths: 60 decimal digits
// (~200 bits), comfortably above the 128-bit default the engines assume.
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;
using Cplx = boost::multiprecision::cpp_complex<60>;

inline Rat rat(const Int& num, const Int& den) { return Rat(num, den); }
inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Real to_real(const Rat& q) {
  return Real(num(q)) / Real(den(q));
}

// Malformed input (wrong tensor shape, bad permutation, non-group table).
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation is well defined but outside the supported range
// (noncommutative ring for character tables, cohomology size bounds, ...).
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A theorem-guaranteed identity failed to verify: indicates a bug, never
// a property of the input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Commutative ring algebra with fewer than rank one-dimensional characters.
// Carries the repeated-eigenvalue witness.
struct DegeneracyError : std::runtime_error {
  explicit DegeneracyError(const std::string& what, std::string witness_)
      : std::runtime_error(what), witness(std::move(witness_)) {}
  std::string witness;
};

}  // namespace fusionkit
