#pragma once

#include <cstdint>
#include <vector>

#include "groupdef/bigint.hpp"
#include "groupdef/groups.hpp"

namespace groupdef {

// An element of the centre of the integral group ring ZZ[G], written in the
// class-sum basis: coeff[c] multiplies the sum of the elements of the c-th
// conjugacy class (classes in conjugacy_classes() order).
struct CenterElement {
  std::uint64_t group = 0;
  std::vector<Int> coeff;

  friend bool operator==(const CenterElement&, const CenterElement&) = default;
};

// Caches the conjugacy-class structure of one group and provides arithmetic
// in the centre of its integral group ring.  The ring and its structure
// constants are exact (arbitrary-precision coefficients).
class ClassRing {
public:
  explicit ClassRing(const FiniteGroup& g);

  const FiniteGroup& group() const { return *g_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int element) const;
  // Minimal member of the class (classes are sorted, so this is members[0]).
  int representative(int c) const;
  // Index of the class {g^m : g in class c}.  Throws if powering does not
  // send the class onto a single class (cannot happen for gcd(m,|G|)=1).
  int class_power(int c, long long m) const;

  CenterElement zero() const;
  CenterElement class_sum(int c) const;
  CenterElement from_coefficients(std::vector<Int> coeff) const;
  CenterElement add(const CenterElement& a, const CenterElement& b) const;

  // Product in the centre, computed through the structure constants
  // lambda((C,D); E).  Bilinear in both arguments.
  CenterElement multiply(const CenterElement& a, const CenterElement& b) const;
  // Same product via a full |G|^2 group-ring convolution; independent path
  // kept for cross-checking.
  CenterElement multiply_convolution(const CenterElement& a, const CenterElement& b) const;

  // Number of tuples (g_1, ..., g_l) in C_1 x ... x C_l whose product is a
  // fixed representative of the target class.  The count is independent of
  // the representative chosen.  Picks direct tuple enumeration when the
  // product of the class sizes fits the budget, otherwise an element-wise
  // convolution.  budget = 0 means the 10^7 default.
  Int lambda(const std::vector<int>& class_tuple, int target, long long budget = 0) const;
  Int lambda_enumerated(const std::vector<int>& class_tuple, int target,
                        long long budget = 0) const;
  Int lambda_convolved(const std::vector<int>& class_tuple, int target) const;

  // The power map sum n_g g -> sum n_g g^m restricted to the centre: class
  // sums permute, coefficients are transported.  Requires gcd(m, |G|) = 1.
  CenterElement psi(long long m, const CenterElement& a) const;

  // Checks that psi(m, .) permutes the class-sum basis and is multiplicative
  // on every basis pair.  Exact.
  bool verify_burnside(long long m) const;

  // Exhaustive check of lambda(C_1..C_l; C) = lambda(C_1^m..C_l^m; C^m) over
  // all class tuples of length 1..len and all target classes.
  bool verify_lambda_invariance(long long m, int len) const;

private:
  const FiniteGroup* g_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  // structure_[c][d][e] = lambda((c,d); e); filled on first use
  mutable std::vector<std::vector<std::vector<Int>>> structure_;

  void require_same_group(const CenterElement& a, const char* op) const;
  void require_class(int c, const char* op) const;
  void require_coprime(long long m, const char* op) const;
  const std::vector<Int>& structure_row(int c, int d) const;
  std::vector<Int> element_coefficients(const CenterElement& a) const;
  CenterElement from_element_coefficients(const std::vector<Int>& by_element,
                                          const char* op) const;
};

// Convenience wrappers used by batch verification.
bool verify_burnside(const FiniteGroup& g, long long m);
bool verify_lambda_invariance(const FiniteGroup& g, long long m, int len);

} // namespace groupdef
