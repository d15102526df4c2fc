#include "hexa/polynomial.hpp"

#include <algorithm>

namespace hexa {

BivariatePolynomial BivariatePolynomial::constant(const BigInt& c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(int i, int j, const BigInt& c) {
  BivariatePolynomial p;
  p.add_term(i, j, c);
  return p;
}

BigInt BivariatePolynomial::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int BivariatePolynomial::x_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BivariatePolynomial::y_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

void BivariatePolynomial::add_term(int i, int j, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace({i, j}, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

BivariatePolynomial BivariatePolynomial::pow(int n) const {
  BivariatePolynomial result = constant(1), base = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) result = result * base;
    if (n > 1) base = base * base;
  }
  return result;
}

BigInt BivariatePolynomial::evaluate(const BigInt& x, const BigInt& y) const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c * boost::multiprecision::pow(x, e.first) * boost::multiprecision::pow(y, e.second);
  return sum;
}

std::string to_string(const BivariatePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    auto [i, j] = it->first;
    BigInt c = it->second;
    bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    std::string mono;
    if (i) mono += i == 1 ? "x" : "x^" + std::to_string(i);
    if (j) mono += j == 1 ? "y" : "y^" + std::to_string(j);
    if (mono.empty()) out += c.str();
    else if (c == 1) out += mono;
    else out += c.str() + "*" + mono;
  }
  return out;
}

}  // namespace hexa
