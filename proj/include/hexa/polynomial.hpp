#pragma once

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace hexa {

using BigInt = boost::multiprecision::cpp_int;

// Sparse polynomial in x and y with exact integer coefficients.
// Zero coefficients are never stored.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<int, int>;  // (x degree, y degree)

  BivariatePolynomial() = default;
  static BivariatePolynomial constant(const BigInt& c);
  static BivariatePolynomial monomial(int i, int j, const BigInt& c = 1);
  static BivariatePolynomial x() { return monomial(1, 0); }
  static BivariatePolynomial y() { return monomial(0, 1); }

  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  BigInt coefficient(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }
  int x_degree() const;
  int y_degree() const;

  void add_term(int i, int j, const BigInt& c);
  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  BivariatePolynomial pow(int n) const;

  BigInt evaluate(const BigInt& x, const BigInt& y) const;
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  std::map<Exponents, BigInt> terms_;
};

// "x^2 + x + y"; highest x degree first.
std::string to_string(const BivariatePolynomial& p);

}  // namespace hexa
