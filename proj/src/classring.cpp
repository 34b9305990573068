#include "groupdef/classring.hpp"

#include <numeric>
#include <string>

#include "groupdef/error.hpp"

namespace groupdef {

namespace {
constexpr long long kDefaultLambdaBudget = 10'000'000;
}

ClassRing::ClassRing(const FiniteGroup& g) : g_(&g) {
  classes_ = conjugacy_classes(g);
  class_of_.assign(g.order(), -1);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (int e : classes_[c]) class_of_[e] = static_cast<int>(c);
  structure_.resize(classes_.size());
  for (auto& row : structure_) row.resize(classes_.size());
}

int ClassRing::class_of(int element) const {
  if (element < 0 || element >= g_->order())
    throw Error("class_of: element index out of range");
  return class_of_[element];
}

int ClassRing::representative(int c) const {
  require_class(c, "representative");
  return classes_[c].front();
}

int ClassRing::class_power(int c, long long m) const {
  require_class(c, "class_power");
  int image = class_of_[g_->power(classes_[c].front(), m)];
  for (int e : classes_[c])
    if (class_of_[g_->power(e, m)] != image)
      throw Error("class_power: powering by " + std::to_string(m) +
                  " splits class " + std::to_string(c));
  return image;
}

CenterElement ClassRing::zero() const {
  return CenterElement{g_->id(), std::vector<Int>(classes_.size(), 0)};
}

CenterElement ClassRing::class_sum(int c) const {
  require_class(c, "class_sum");
  CenterElement out = zero();
  out.coeff[c] = 1;
  return out;
}

CenterElement ClassRing::from_coefficients(std::vector<Int> coeff) const {
  if (coeff.size() != classes_.size())
    throw Error("from_coefficients: expected " + std::to_string(classes_.size()) +
                " coefficients, got " + std::to_string(coeff.size()));
  return CenterElement{g_->id(), std::move(coeff)};
}

CenterElement ClassRing::add(const CenterElement& a, const CenterElement& b) const {
  require_same_group(a, "add");
  require_same_group(b, "add");
  CenterElement out = a;
  for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] += b.coeff[i];
  return out;
}

const std::vector<Int>& ClassRing::structure_row(int c, int d) const {
  auto& row = structure_[c][d];
  if (!row.empty()) return row;
  // coefficient vector of class_sum(c) * class_sum(d): convolve the two
  // classes over group elements, then read off at representatives
  std::vector<Int> by_element(g_->order(), 0);
  for (int x : classes_[c])
    for (int y : classes_[d]) ++by_element[g_->mul(x, y)];
  row.assign(classes_.size(), 0);
  for (std::size_t e = 0; e < classes_.size(); ++e)
    row[e] = by_element[classes_[e].front()];
  return row;
}

CenterElement ClassRing::multiply(const CenterElement& a, const CenterElement& b) const {
  require_same_group(a, "multiply");
  require_same_group(b, "multiply");
  CenterElement out = zero();
  const int k = class_count();
  for (int c = 0; c < k; ++c) {
    if (a.coeff[c] == 0) continue;
    for (int d = 0; d < k; ++d) {
      if (b.coeff[d] == 0) continue;
      const auto& row = structure_row(c, d);
      Int scale = a.coeff[c] * b.coeff[d];
      for (int e = 0; e < k; ++e)
        if (row[e] != 0) out.coeff[e] += scale * row[e];
    }
  }
  return out;
}

std::vector<Int> ClassRing::element_coefficients(const CenterElement& a) const {
  std::vector<Int> out(g_->order(), 0);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (a.coeff[c] == 0) continue;
    for (int e : classes_[c]) out[e] = a.coeff[c];
  }
  return out;
}

CenterElement ClassRing::from_element_coefficients(const std::vector<Int>& by_element,
                                                   const char* op) const {
  CenterElement out = zero();
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const auto& members = classes_[c];
    out.coeff[c] = by_element[members.front()];
    for (int e : members)
      if (by_element[e] != out.coeff[c])
        throw Error(std::string(op) + ": result is not constant on class " + std::to_string(c));
  }
  return out;
}

CenterElement ClassRing::multiply_convolution(const CenterElement& a,
                                              const CenterElement& b) const {
  require_same_group(a, "multiply_convolution");
  require_same_group(b, "multiply_convolution");
  std::vector<Int> av = element_coefficients(a), bv = element_coefficients(b);
  std::vector<Int> prod(g_->order(), 0);
  for (int x = 0; x < g_->order(); ++x) {
    if (av[x] == 0) continue;
    for (int y = 0; y < g_->order(); ++y) {
      if (bv[y] == 0) continue;
      prod[g_->mul(x, y)] += av[x] * bv[y];
    }
  }
  return from_element_coefficients(prod, "multiply_convolution");
}

Int ClassRing::lambda(const std::vector<int>& class_tuple, int target, long long budget) const {
  if (budget <= 0) budget = kDefaultLambdaBudget;
  long long tuples = 1;
  bool fits = true;
  for (int c : class_tuple) {
    require_class(c, "lambda");
    int size = classes_[c].size();
    if (tuples > budget / std::max(size, 1)) { fits = false; break; }
    tuples *= size;
  }
  if (fits && tuples <= budget) return lambda_enumerated(class_tuple, target, budget);
  long long conv_cost = static_cast<long long>(class_tuple.size()) *
                        static_cast<long long>(g_->order()) * g_->order();
  if (conv_cost > budget)
    throw BudgetError("lambda: class tuple exceeds the evaluation budget");
  return lambda_convolved(class_tuple, target);
}

Int ClassRing::lambda_enumerated(const std::vector<int>& class_tuple, int target,
                                 long long budget) const {
  if (budget <= 0) budget = kDefaultLambdaBudget;
  require_class(target, "lambda");
  if (class_tuple.empty())
    return representative(target) == g_->identity() ? 1 : 0;
  long long tuples = 1;
  for (int c : class_tuple) {
    require_class(c, "lambda");
    int size = classes_[c].size();
    if (size > 0 && tuples > budget / size)
      throw BudgetError("lambda: class tuple exceeds the evaluation budget");
    tuples *= size;
  }
  const int rep = representative(target);
  const int l = static_cast<int>(class_tuple.size());
  std::vector<int> pos(l, 0);
  Int count = 0;
  for (;;) {
    int prod = g_->identity();
    for (int i = 0; i < l; ++i)
      prod = g_->mul(prod, classes_[class_tuple[i]][pos[i]]);
    if (prod == rep) ++count;
    int i = l - 1;
    while (i >= 0) {
      if (++pos[i] < static_cast<int>(classes_[class_tuple[i]].size())) break;
      pos[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return count;
}

Int ClassRing::lambda_convolved(const std::vector<int>& class_tuple, int target) const {
  require_class(target, "lambda");
  std::vector<Int> acc(g_->order(), 0);
  acc[g_->identity()] = 1;
  for (int c : class_tuple) {
    require_class(c, "lambda");
    std::vector<Int> next(g_->order(), 0);
    for (int x = 0; x < g_->order(); ++x) {
      if (acc[x] == 0) continue;
      for (int y : classes_[c]) next[g_->mul(x, y)] += acc[x];
    }
    acc = std::move(next);
  }
  return acc[representative(target)];
}

CenterElement ClassRing::psi(long long m, const CenterElement& a) const {
  require_same_group(a, "psi");
  require_coprime(m, "psi");
  CenterElement out = zero();
  for (int c = 0; c < class_count(); ++c)
    out.coeff[class_power(c, m)] += a.coeff[c];
  return out;
}

bool ClassRing::verify_burnside(long long m) const {
  require_coprime(m, "verify_burnside");
  const int k = class_count();
  // bijection on the basis
  std::vector<bool> hit(k, false);
  for (int c = 0; c < k; ++c) {
    int image = class_power(c, m);
    if (hit[image]) return false;
    hit[image] = true;
  }
  // multiplicative on every basis pair
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < k; ++d) {
      CenterElement lhs = psi(m, multiply(class_sum(c), class_sum(d)));
      CenterElement rhs = multiply(psi(m, class_sum(c)), psi(m, class_sum(d)));
      if (lhs != rhs) return false;
    }
  return true;
}

bool ClassRing::verify_lambda_invariance(long long m, int len) const {
  require_coprime(m, "verify_lambda_invariance");
  if (len < 1 || len > 3)
    throw Error("verify_lambda_invariance: tuple length must be between 1 and 3");
  const int k = class_count();
  std::vector<int> tuple;
  // iterate all tuples of length 1..len by odometer over a fixed length,
  // shorter tuples first
  for (int l = 1; l <= len; ++l) {
    tuple.assign(l, 0);
    for (;;) {
      std::vector<int> powered(l);
      for (int i = 0; i < l; ++i) powered[i] = class_power(tuple[i], m);
      for (int target = 0; target < k; ++target)
        if (lambda_convolved(tuple, target) !=
            lambda_convolved(powered, class_power(target, m)))
          return false;
      int i = l - 1;
      while (i >= 0) {
        if (++tuple[i] < k) break;
        tuple[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }
  return true;
}

void ClassRing::require_same_group(const CenterElement& a, const char* op) const {
  if (a.group != g_->id() || a.coeff.size() != classes_.size())
    throw Error(std::string(op) + ": operand belongs to a different group");
}

void ClassRing::require_class(int c, const char* op) const {
  if (c < 0 || c >= class_count())
    throw Error(std::string(op) + ": class index " + std::to_string(c) + " out of range");
}

void ClassRing::require_coprime(long long m, const char* op) const {
  if (std::gcd(m, static_cast<long long>(g_->order())) != 1)
    throw Error(std::string(op) + ": " + std::to_string(m) +
                " is not coprime to the group order");
}

bool verify_burnside(const FiniteGroup& g, long long m) {
  return ClassRing(g).verify_burnside(m);
}

bool verify_lambda_invariance(const FiniteGroup& g, long long m, int len) {
  return ClassRing(g).verify_lambda_invariance(m, len);
}

} // namespace groupdef
