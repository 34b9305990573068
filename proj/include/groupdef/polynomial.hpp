#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "groupdef/bigint.hpp"

namespace groupdef {

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients.  A monomial is a sorted list of (variable, exponent > 0)
// pairs; the zero polynomial stores no terms, so representations are
// canonical and comparable.
class IntPolynomial {
public:
  using Monomial = std::vector<std::pair<std::string, int>>;

  IntPolynomial() = default; // zero
  static IntPolynomial constant(Int c);
  static IntPolynomial variable(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Int>& terms() const { return terms_; }
  std::set<std::string> variables() const;
  // Largest total degree of a monomial; -1 for the zero polynomial.
  int total_degree() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial pow(int e) const; // e >= 0

  // Replaces one variable by a polynomial everywhere.
  IntPolynomial substitute(const std::string& name, const IntPolynomial& value) const;
  // Full evaluation; every variable of the polynomial must be assigned.
  Int evaluate(const std::map<std::string, Int>& values) const;

  std::string format() const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
  std::map<Monomial, Int> terms_;
  void add_term(const Monomial& m, const Int& c);
};

} // namespace groupdef
