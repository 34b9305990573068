#include "groupdef/polynomial.hpp"

#include <algorithm>

#include "groupdef/error.hpp"

namespace groupdef {

IntPolynomial IntPolynomial::constant(Int c) {
  IntPolynomial p;
  if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
  return p;
}

IntPolynomial IntPolynomial::variable(const std::string& name) {
  if (name.empty()) throw Error("polynomial variable name is empty");
  IntPolynomial p;
  p.terms_.emplace(Monomial{{name, 1}}, 1);
  return p;
}

std::set<std::string> IntPolynomial::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m) out.insert(name);
  return out;
}

int IntPolynomial::total_degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (const auto& [name, e] : m) d += e;
    best = std::max(best, d);
  }
  return best;
}

void IntPolynomial::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {

IntPolynomial::Monomial merge_monomials(const IntPolynomial::Monomial& a,
                                        const IntPolynomial::Monomial& b) {
  IntPolynomial::Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) out.push_back(a[i++]);
    else if (b[j].first < a[i].first) out.push_back(b[j++]);
    else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return out;
}

} // namespace

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(merge_monomials(ma, mb), ca * cb);
  return out;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  *this = *this * o;
  return *this;
}

IntPolynomial IntPolynomial::pow(int e) const {
  if (e < 0) throw Error("polynomial exponent must be nonnegative");
  IntPolynomial out = constant(1);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

IntPolynomial IntPolynomial::substitute(const std::string& name,
                                        const IntPolynomial& value) const {
  IntPolynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    int e = 0;
    for (const auto& [v, k] : m) {
      if (v == name) e = k;
      else rest.emplace_back(v, k);
    }
    IntPolynomial term;
    term.add_term(rest, c);
    if (e > 0) term *= value.pow(e);
    out += term;
  }
  return out;
}

Int IntPolynomial::evaluate(const std::map<std::string, Int>& values) const {
  Int out = 0;
  for (const auto& [m, c] : terms_) {
    Int t = c;
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      if (it == values.end()) throw Error("evaluate: variable '" + v + "' has no value");
      Int p = 1;
      for (int i = 0; i < e; ++i) p *= it->second;
      t *= p;
    }
    out += t;
  }
  return out;
}

std::string IntPolynomial::format() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    Int a = c;
    if (out.empty()) {
      if (a < 0) { out += "-"; a = -a; }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    bool need_coeff = a != 1 || m.empty();
    if (need_coeff) out += a.str();
    bool first = !need_coeff;
    for (const auto& [v, e] : m) {
      if (!first) out += "*";
      first = false;
      out += v;
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

} // namespace groupdef
