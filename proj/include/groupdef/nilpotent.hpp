#pragma once

#include <string>
#include <vector>

#include "groupdef/bigint.hpp"
#include "groupdef/polynomial.hpp"
#include "groupdef/words.hpp"

namespace groupdef {

// A finitely generated torsion-free class-2 nilpotent presentation in
// Mal'cev coordinates: s non-central generators b_1..b_s, r central
// generators c_1..c_r, and commutation data [b_k, b_k'] = prod_l
// c_l^{kappa[pair][l]} for k < k'.  Every element is written uniquely as
// prod b_i^{J_i} * prod c_l^{K_l}.
struct Class2Presentation {
  int s = 0;
  int r = 0;
  // (s choose 2) rows in pair_index order, r columns
  std::vector<std::vector<long long>> kappa;

  // Row of the pair (k, k') with 0 <= k < k' < s.
  static int pair_index(int k, int kp, int s);
  void validate() const;

  // s = 2, r = 1, kappa = [[1]]: the integer Heisenberg group.
  static Class2Presentation heisenberg();
  // Free class-2 on s generators: one central generator per pair.
  static Class2Presentation free_class2(int s);

  friend bool operator==(const Class2Presentation&, const Class2Presentation&) = default;
};

// An element with polynomial coordinates (used to compute multiplication
// identities symbolically).
struct SymbolicElement {
  Class2Presentation pres;
  std::vector<IntPolynomial> j; // s non-central exponents
  std::vector<IntPolynomial> k; // r central exponents
};

// An element with concrete integer coordinates.
struct ConcreteElement {
  std::vector<Int> j;
  std::vector<Int> k;

  friend bool operator==(const ConcreteElement&, const ConcreteElement&) = default;
};

SymbolicElement class2_identity(const Class2Presentation& p);
// Coordinates are fresh variables "k{i}_{t}" for input index i >= 1 and
// coordinate t in [1, s + r] (non-central first).
SymbolicElement class2_generic(const Class2Presentation& p, int input_index);
// As above but with the central coordinates set to zero.
SymbolicElement class2_generic_noncentral(const Class2Presentation& p, int input_index);

// Collection rule: (J1, K1)(J2, K2) = (J1 + J2, K1 + K2 + D(J1, J2)) with
// D_l = -sum_{k<k'} kappa[(k,k')][l] * J1_{k'} * J2_{k}.  The sign and
// factor order are pinned by the 3x3 unitriangular matrix model of the
// Heisenberg group under J1 = a, J2 = b, K = c - a*b.
SymbolicElement class2_multiply(const SymbolicElement& a, const SymbolicElement& b);
SymbolicElement class2_inverse(const SymbolicElement& a);
SymbolicElement class2_power(const SymbolicElement& a, long long e);

ConcreteElement class2_identity_concrete(const Class2Presentation& p);
ConcreteElement class2_multiply(const Class2Presentation& p, const ConcreteElement& a,
                                const ConcreteElement& b);
ConcreteElement class2_inverse(const Class2Presentation& p, const ConcreteElement& a);
ConcreteElement class2_power(const Class2Presentation& p, const ConcreteElement& a, long long e);

// Evaluates a word on symbolic inputs; the word's support letters are bound
// to the inputs in ascending letter order.
SymbolicElement evaluate_word(const Class2Presentation& p, const Word& w,
                              const std::vector<SymbolicElement>& inputs);
ConcreteElement evaluate_word(const Class2Presentation& p, const Word& w,
                              const std::vector<ConcreteElement>& inputs);

// Output coordinate polynomials of w on m generic inputs: s + r polynomials
// in the m * (s + r) variables "k{i}_{t}", non-central coordinates first.
std::vector<IntPolynomial> hall_polynomials(const Class2Presentation& p, const Word& w, int m);

// Hall polynomials with every central input variable substituted to zero,
// restricted to the r central output coordinates.
std::vector<IntPolynomial> central_partial(const Class2Presentation& p, const Word& w);

// Checks each central partial polynomial q: scaling every variable by a
// fresh variable t multiplies q by exactly t^2.  The zero polynomial passes
// (it is homogeneous of every degree by convention).
bool verify_homogeneity_degree2(const Class2Presentation& p, const Word& w);

} // namespace groupdef
