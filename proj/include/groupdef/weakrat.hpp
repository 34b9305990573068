#ifndef GROUPDEF_WEAKRAT_HPP
#define GROUPDEF_WEAKRAT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groupdef/bigint.hpp"
#include "groupdef/formulae.hpp"
#include "groupdef/groups.hpp"
#include "groupdef/words.hpp"

namespace groupdef {

// X is weakly rational in G when g^m stays in X for every g in X and every m
// in [1, |G|] coprime to |G| (larger m are redundant modulo |G|).  The first
// violation in (element index, m) lexicographic order is reported.
struct WrViolation {
  int element = 0;
  long long m = 0;
  friend bool operator==(const WrViolation&, const WrViolation&) = default;
};
std::optional<WrViolation> wr_violation(const FiniteGroup& g, const ElementSubset& x);
bool is_weakly_rational_set(const FiniteGroup& g, const ElementSubset& x);

// The coprime-to-|G| criterion and the coprime-to-order(g) criterion must
// agree; returns true when they do on this subset.
bool check_wr_equivalence(const FiniteGroup& g, const ElementSubset& x);

// Quantitative bounds (exact, arbitrary precision where they can grow).
unsigned long long euler_phi(unsigned long long n);
// Largest order an element of a weakly rational set of this size can have.
Int phi_order_bound(long long n_size); // 2 * n^2
// Order bound for the subgroup generated by a normal set of s elements whose
// orders are at most k: (s!)^2 * k^s.  (An abelian group on s generators of
// order <= k has at most k^s elements; the derived subgroup is covered by
// the (s!)^2 factor.)
Int schur_bound(long long s_size, long long k);
// The two previous bounds chained: schur_bound(n, 2n^2).
Int f_bound(long long n);

// Surjectivity of the word map on g.
bool is_ore_word_on(const FiniteGroup& g, const Word& w, long long budget = 0);

// A collection of letter sets admits an order when every member has an
// element outside the union of the earlier members.
struct IndependentChoiceSystem {
  LetterSet ground;
  std::vector<LetterSet> collection;
  std::optional<std::vector<int>> order; // indices into collection
};

bool ics_order_valid(const IndependentChoiceSystem& sys, const std::vector<int>& order);
// Greedy from the end: repeatedly pick a member (lowest index on ties) that
// has an element outside the union of all other remaining members and place
// it last.  Finds an order exactly when one exists.
std::optional<std::vector<int>> ics_find_order(const IndependentChoiceSystem& sys);
// All valid orders, in lexicographic order of index permutations.
std::vector<std::vector<int>> ics_all_orders(const IndependentChoiceSystem& sys);

// Solves d_k(assignment) = gamma_k for all k simultaneously, where each d_k
// is a product of distinct single letters with exponent +-1 whose support is
// collection[k].  Follows the constructive proof: non-pivot letters default
// to the identity, pivots are isolated and solved in a valid order.  The
// result is re-evaluated against gamma before returning.
std::map<std::string, GroupElement> ics_solve(const FiniteGroup& g,
                                              const IndependentChoiceSystem& sys,
                                              const std::vector<Word>& d,
                                              const std::vector<GroupElement>& gamma);

// Data for the product construction z = prod_k (w_{t(k)}^{mu(k)})^{d_k} with
// d_k = prod_q v_{j[k][q]}.
struct ZWordSpec {
  std::vector<Word> wr_words;       // w_i, pairwise disjoint supports
  std::vector<Word> ore_words;      // v_j, disjoint from each other and the w_i
  std::vector<int> t;               // size n, values index wr_words
  std::vector<long long> mu;        // size n
  std::vector<std::vector<int>> j;  // size n; j[k] lists ore-word indices
};

// Validates the spec (disjoint supports; selections for different target
// words use disjoint ore-word sets; per target word the selection supports
// form an independent-choice system) and builds the reduced product word.
// Empty selections are normalized by conjugating with a fresh letter, one
// per distinct target word ("a1", "a2", ... skipping taken names).
Word build_z(const ZWordSpec& spec);

// For an ena formula psi = exists x...: w != 1 with free variable y, the
// witness set is G_psi together with one non-identity word value w(h(g), g)
// per psi-value g, with h(g) the lexicographically first such tuple.
ElementSubset witness_set_ena(const FiniteGroup& g, const Formula& psi, long long budget = 0);

enum class SetComparison { Equal, StrictSubset, StrictSuperset, Incomparable };
std::string to_string(SetComparison c);

// Compares (G_phi)^pi against (G/N)_phi for the canonical projection pi.
SetComparison check_residuality(const FiniteGroup& g, const ElementSubset& n, const Formula& phi,
                                long long budget = 0);

// Searches for the factorization [g,h] = prod_{i=1..k} [g_i, h^m]^{c_i} with
// k the multiplicative inverse of m modulo order(h); m must be coprime to
// |G|.  Returns true when some factorization exists.
bool property_star_holds(const FiniteGroup& g, int g_index, int h_index, long long m);

} // namespace groupdef

#endif
