#include "groupdef/nilpotent.hpp"

#include <algorithm>

#include "groupdef/error.hpp"

namespace groupdef {

int Class2Presentation::pair_index(int k, int kp, int s) {
  if (k < 0 || kp <= k || kp >= s) throw Error("pair_index: need 0 <= k < k' < s");
  // pairs in lexicographic order (0,1), (0,2), ..., (s-2, s-1)
  return k * s - k * (k + 1) / 2 + (kp - k - 1);
}

void Class2Presentation::validate() const {
  if (s < 0 || r < 0) throw Error("presentation sizes must be nonnegative");
  std::size_t pairs = static_cast<std::size_t>(s) * (s - 1) / 2;
  if (kappa.size() != pairs)
    throw Error("kappa must have one row per generator pair (" + std::to_string(pairs) +
                " expected, " + std::to_string(kappa.size()) + " given)");
  for (const auto& row : kappa)
    if (row.size() != static_cast<std::size_t>(r))
      throw Error("kappa rows must have one entry per central generator");
}

Class2Presentation Class2Presentation::heisenberg() {
  Class2Presentation p;
  p.s = 2;
  p.r = 1;
  p.kappa = {{1}};
  return p;
}

Class2Presentation Class2Presentation::free_class2(int s) {
  if (s < 1) throw Error("free_class2: need at least one generator");
  Class2Presentation p;
  p.s = s;
  p.r = s * (s - 1) / 2;
  p.kappa.assign(p.r, std::vector<long long>(p.r, 0));
  for (int i = 0; i < p.r; ++i) p.kappa[i][i] = 1;
  return p;
}

namespace {

std::string coord_var(int input_index, int t) {
  return "k" + std::to_string(input_index) + "_" + std::to_string(t);
}

void require_same(const SymbolicElement& a, const SymbolicElement& b) {
  if (!(a.pres == b.pres)) throw Error("elements belong to different presentations");
}

void check_shape(const Class2Presentation& p, std::size_t js, std::size_t ks) {
  if (js != static_cast<std::size_t>(p.s) || ks != static_cast<std::size_t>(p.r))
    throw Error("element coordinates do not match the presentation");
}

} // namespace

SymbolicElement class2_identity(const Class2Presentation& p) {
  p.validate();
  return SymbolicElement{p, std::vector<IntPolynomial>(p.s), std::vector<IntPolynomial>(p.r)};
}

SymbolicElement class2_generic(const Class2Presentation& p, int input_index) {
  SymbolicElement e = class2_identity(p);
  for (int t = 0; t < p.s; ++t) e.j[t] = IntPolynomial::variable(coord_var(input_index, t + 1));
  for (int t = 0; t < p.r; ++t)
    e.k[t] = IntPolynomial::variable(coord_var(input_index, p.s + t + 1));
  return e;
}

SymbolicElement class2_generic_noncentral(const Class2Presentation& p, int input_index) {
  SymbolicElement e = class2_identity(p);
  for (int t = 0; t < p.s; ++t) e.j[t] = IntPolynomial::variable(coord_var(input_index, t + 1));
  return e;
}

SymbolicElement class2_multiply(const SymbolicElement& a, const SymbolicElement& b) {
  require_same(a, b);
  const Class2Presentation& p = a.pres;
  check_shape(p, a.j.size(), a.k.size());
  check_shape(p, b.j.size(), b.k.size());
  SymbolicElement out = class2_identity(p);
  for (int t = 0; t < p.s; ++t) out.j[t] = a.j[t] + b.j[t];
  for (int l = 0; l < p.r; ++l) {
    IntPolynomial k = a.k[l] + b.k[l];
    for (int x = 0; x < p.s; ++x)
      for (int y = x + 1; y < p.s; ++y) {
        long long coef = p.kappa[Class2Presentation::pair_index(x, y, p.s)][l];
        if (coef == 0) continue;
        k -= IntPolynomial::constant(coef) * a.j[y] * b.j[x];
      }
    out.k[l] = k;
  }
  return out;
}

SymbolicElement class2_inverse(const SymbolicElement& a) {
  const Class2Presentation& p = a.pres;
  check_shape(p, a.j.size(), a.k.size());
  SymbolicElement out = class2_identity(p);
  for (int t = 0; t < p.s; ++t) out.j[t] = -a.j[t];
  for (int l = 0; l < p.r; ++l) {
    IntPolynomial k = -a.k[l];
    for (int x = 0; x < p.s; ++x)
      for (int y = x + 1; y < p.s; ++y) {
        long long coef = p.kappa[Class2Presentation::pair_index(x, y, p.s)][l];
        if (coef == 0) continue;
        k -= IntPolynomial::constant(coef) * a.j[y] * a.j[x];
      }
    out.k[l] = k;
  }
  return out;
}

SymbolicElement class2_power(const SymbolicElement& a, long long e) {
  SymbolicElement base = e < 0 ? class2_inverse(a) : a;
  if (e < 0) e = -e;
  SymbolicElement out = class2_identity(a.pres);
  for (long long i = 0; i < e; ++i) out = class2_multiply(out, base);
  return out;
}

ConcreteElement class2_identity_concrete(const Class2Presentation& p) {
  p.validate();
  return ConcreteElement{std::vector<Int>(p.s, 0), std::vector<Int>(p.r, 0)};
}

ConcreteElement class2_multiply(const Class2Presentation& p, const ConcreteElement& a,
                                const ConcreteElement& b) {
  check_shape(p, a.j.size(), a.k.size());
  check_shape(p, b.j.size(), b.k.size());
  ConcreteElement out = class2_identity_concrete(p);
  for (int t = 0; t < p.s; ++t) out.j[t] = a.j[t] + b.j[t];
  for (int l = 0; l < p.r; ++l) {
    Int k = a.k[l] + b.k[l];
    for (int x = 0; x < p.s; ++x)
      for (int y = x + 1; y < p.s; ++y) {
        long long coef = p.kappa[Class2Presentation::pair_index(x, y, p.s)][l];
        if (coef == 0) continue;
        k -= coef * a.j[y] * b.j[x];
      }
    out.k[l] = k;
  }
  return out;
}

ConcreteElement class2_inverse(const Class2Presentation& p, const ConcreteElement& a) {
  check_shape(p, a.j.size(), a.k.size());
  ConcreteElement out = class2_identity_concrete(p);
  for (int t = 0; t < p.s; ++t) out.j[t] = -a.j[t];
  for (int l = 0; l < p.r; ++l) {
    Int k = -a.k[l];
    for (int x = 0; x < p.s; ++x)
      for (int y = x + 1; y < p.s; ++y) {
        long long coef = p.kappa[Class2Presentation::pair_index(x, y, p.s)][l];
        if (coef == 0) continue;
        k -= coef * a.j[y] * a.j[x];
      }
    out.k[l] = k;
  }
  return out;
}

ConcreteElement class2_power(const Class2Presentation& p, const ConcreteElement& a, long long e) {
  ConcreteElement base = e < 0 ? class2_inverse(p, a) : a;
  if (e < 0) e = -e;
  ConcreteElement out = class2_identity_concrete(p);
  for (long long i = 0; i < e; ++i) out = class2_multiply(p, out, base);
  return out;
}

namespace {

template <typename Element, typename Mul, typename Pow>
Element eval_word_with(const Word& w, const std::vector<std::string>& letters,
                       const std::vector<Element>& inputs, Element id, Mul mul, Pow pow) {
  Element out = std::move(id);
  for (const auto& syl : w.syllables()) {
    auto it = std::lower_bound(letters.begin(), letters.end(), syl.letter);
    std::size_t idx = static_cast<std::size_t>(it - letters.begin());
    out = mul(out, pow(inputs[idx], syl.exponent));
  }
  return out;
}

std::vector<std::string> sorted_support(const Word& w, std::size_t inputs) {
  LetterSet sup = w.support();
  if (sup.size() != inputs)
    throw Error("word uses " + std::to_string(sup.size()) + " letters but " +
                std::to_string(inputs) + " inputs were given");
  return {sup.begin(), sup.end()};
}

} // namespace

SymbolicElement evaluate_word(const Class2Presentation& p, const Word& w,
                              const std::vector<SymbolicElement>& inputs) {
  auto letters = sorted_support(w, inputs.size());
  return eval_word_with(
      w, letters, inputs, class2_identity(p),
      [](const SymbolicElement& a, const SymbolicElement& b) { return class2_multiply(a, b); },
      [](const SymbolicElement& a, long long e) { return class2_power(a, e); });
}

ConcreteElement evaluate_word(const Class2Presentation& p, const Word& w,
                              const std::vector<ConcreteElement>& inputs) {
  auto letters = sorted_support(w, inputs.size());
  return eval_word_with(
      w, letters, inputs, class2_identity_concrete(p),
      [&p](const ConcreteElement& a, const ConcreteElement& b) {
        return class2_multiply(p, a, b);
      },
      [&p](const ConcreteElement& a, long long e) { return class2_power(p, a, e); });
}

std::vector<IntPolynomial> hall_polynomials(const Class2Presentation& p, const Word& w, int m) {
  p.validate();
  if (static_cast<int>(w.support().size()) != m)
    throw Error("hall_polynomials: word has " + std::to_string(w.support().size()) +
                " letters, expected " + std::to_string(m));
  std::vector<SymbolicElement> inputs;
  inputs.reserve(m);
  for (int i = 1; i <= m; ++i) inputs.push_back(class2_generic(p, i));
  SymbolicElement e = evaluate_word(p, w, inputs);
  std::vector<IntPolynomial> out;
  out.reserve(p.s + p.r);
  for (auto& q : e.j) out.push_back(std::move(q));
  for (auto& q : e.k) out.push_back(std::move(q));
  return out;
}

std::vector<IntPolynomial> central_partial(const Class2Presentation& p, const Word& w) {
  const int m = static_cast<int>(w.support().size());
  std::vector<IntPolynomial> coords = hall_polynomials(p, w, m);
  IntPolynomial zero;
  for (auto& q : coords)
    for (int i = 1; i <= m; ++i)
      for (int t = p.s + 1; t <= p.s + p.r; ++t)
        q = q.substitute("k" + std::to_string(i) + "_" + std::to_string(t), zero);
  return {coords.begin() + p.s, coords.end()};
}

bool verify_homogeneity_degree2(const Class2Presentation& p, const Word& w) {
  std::vector<IntPolynomial> partials = central_partial(p, w);
  for (const auto& q : partials) {
    auto vars = q.variables();
    std::string t = "t";
    while (vars.count(t)) t += "_";
    IntPolynomial scaled = q;
    IntPolynomial tv = IntPolynomial::variable(t);
    for (const auto& v : vars) scaled = scaled.substitute(v, tv * IntPolynomial::variable(v));
    if (scaled != tv * tv * q) return false;
  }
  return true;
}

} // namespace groupdef
