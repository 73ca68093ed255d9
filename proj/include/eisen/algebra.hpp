#pragma once

// Resultants, discriminants and the two explicit size bounds used by the
// shift search.

#include "eisen/poly.hpp"

#include <vector>

namespace eisen {

/// Row-major square matrix of integers.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  [[nodiscard]] std::size_t size() const { return n_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Integer> data_;
};

/// Fraction-free Gaussian elimination (Bareiss). Exact.
Integer determinant(IntMatrix m);

/// Sylvester matrix of f and g: deg g rows of shifted f coefficients (leading
/// coefficient first), then deg f rows of shifted g coefficients.
IntMatrix sylvester_matrix(const IntPoly& f, const IntPoly& g);

/// Res(f, g) as the determinant of the Sylvester matrix.
Integer resultant_sylvester(const IntPoly& f, const IntPoly& g);

/// Res(f, g) by the subresultant pseudo-remainder sequence.
Integer resultant_subresultant(const IntPoly& f, const IntPoly& g);

inline Integer resultant(const IntPoly& f, const IntPoly& g) { return resultant_subresultant(f, g); }

struct Discriminant {
  Integer value;
  friend bool operator==(const Discriminant&, const Discriminant&) = default;
};

/// D(f) = (-1)^{n(n-1)/2} Res(f, f') / a_n, for deg f >= 2.
Discriminant discriminant(const IntPoly& f);

/// Same normalization, with the resultant taken from the Sylvester
/// determinant. Used to cross-check discriminant().
Discriminant discriminant_via_sylvester(const IntPoly& f);

/// n^n L(f)^(2n-2): upper bound on |D(f)|.
Integer mahler_bound(const IntPoly& f);

/// ceil(n^(n/(n-1))) * L(f)^2: every Eisenstein shift has a representative
/// in [0, max_shift_bound(f)].
Integer max_shift_bound(const IntPoly& f);

}  // namespace eisen
