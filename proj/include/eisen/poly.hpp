#pragma once

// Dense univariate polynomials over Z with GMP coefficients.
//
// Coefficients are stored in ascending order: coeffs()[i] is the coefficient
// of x^i. The zero polynomial is the single coefficient 0; every other
// polynomial has a nonzero last entry.

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eisen {

using Integer = mpz_class;

/// Raised when an operation is applied outside its mathematical domain
/// (zero polynomial, degree too small, non-prime modulus, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a configured work cap (enumeration size, scan bound) would be
/// exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntPoly {
 public:
  /// The zero polynomial.
  IntPoly() : coeffs_{Integer(0)} {}
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly from_i64(std::span<const long> coeffs);

  [[nodiscard]] const std::vector<Integer>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  /// Index of the last nonzero coefficient; 0 for constants (including zero).
  [[nodiscard]] std::size_t degree() const { return coeffs_.size() - 1; }

  [[nodiscard]] const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  [[nodiscard]] const Integer& leading() const { return coeffs_.back(); }
  [[nodiscard]] const Integer& constant() const { return coeffs_.front(); }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

/// max |a_i|. Throws DomainError on the zero polynomial.
Integer height(const IntPoly& f);

/// sum |a_i|. Throws DomainError on the zero polynomial.
Integer length(const IntPoly& f);

Integer evaluate(const IntPoly& f, const Integer& x);

/// Coefficients of f(x + s), by repeated synthetic division.
IntPoly taylor_shift(const IntPoly& f, const Integer& s);

/// Formal derivative. Throws DomainError on constants.
IntPoly derivative(const IntPoly& f);

/// Parses "a0,a1,...,an" (ascending, optional leading '-' / '+' and
/// surrounding whitespace per entry). Throws std::invalid_argument on
/// malformed input.
IntPoly parse_poly(std::string_view text);

/// Inverse of parse_poly.
std::string format_poly(const IntPoly& f);

/// Human-readable form, highest degree first, e.g. "x^2 + 4*x + 5".
std::string pretty_poly(const IntPoly& f);

}  // namespace eisen
