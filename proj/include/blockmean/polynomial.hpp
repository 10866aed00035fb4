#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace blockmean {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense polynomial with arbitrary-precision coefficients; coefficient i is the
// number of qualifying subgraphs of order i. Trailing zeros are trimmed so
// equality is coefficientwise.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial monomial(int degree, const Integer& coeff = 1);
  static IntPolynomial one() { return monomial(0); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(int i) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }

  Integer at_one() const;             // N
  Integer derivative_at_one() const;  // W

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  IntPolynomial shifted(int k) const;  // times x^k
  // Exact division by x^k; throws std::domain_error if a low coefficient is nonzero.
  IntPolynomial divided_by_x(int k) const;

  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const;  // e.g. "3x + 2x^2 + x^3"

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

}  // namespace blockmean
