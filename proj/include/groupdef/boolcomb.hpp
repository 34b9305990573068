#ifndef GROUPDEF_BOOLCOMB_HPP
#define GROUPDEF_BOOLCOMB_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace groupdef {

// An element of the free boolean algebra on named generators: generators
// combined with '&', '|' and '!'.  There are no constants; every node
// ultimately rests on a generator.  Immutable; copies share structure.
class BoolComb {
public:
  static BoolComb gen(const std::string& name);
  // Grammar: IDENT, '&', '|', '!', parentheses; '!' binds tighter than '&',
  // '&' tighter than '|'.
  static BoolComb parse(const std::string& text);
  static BoolComb negation(BoolComb a);
  static BoolComb conjunction(BoolComb a, BoolComb b);
  static BoolComb disjunction(BoolComb a, BoolComb b);

  enum class Kind { Gen, Not, And, Or };
  Kind kind() const;
  const std::string& gen_name() const; // Gen only
  BoolComb child(int i = 0) const;     // Not: 0; And/Or: 0 or 1

  // Generator names, sorted.
  std::set<std::string> support() const;

  // Evaluation in the two-element algebra.  Every generator in the support
  // must be assigned.
  bool evaluate(const std::map<std::string, bool>& assignment) const;

  // Evaluation in the power-set algebra of {0..universe_size-1}: '&' is
  // intersection, '|' union, '!' complement.  Returns a sorted subset.
  std::vector<int> evaluate_sets(int universe_size,
                                 const std::map<std::string, std::vector<int>>& assignment) const;

  // No negations anywhere in the tree.
  bool is_positive() const;

  std::string format() const;
  bool equals(const BoolComb& other) const; // structural
  friend bool operator==(const BoolComb& a, const BoolComb& b) { return a.equals(b); }

private:
  struct Node;
  explicit BoolComb(std::shared_ptr<const Node> n) : root_(std::move(n)) {}
  std::shared_ptr<const Node> root_;
};

// Monotonicity in every generator: flipping any generator from false to true
// never flips the value from true to false.  Exhaustive over all assignments
// for up to 16 generators; beyond that, `trials` random assignments per the
// given seed, each perturbed one generator at a time.
bool check_monotonicity(const BoolComb& p, long long trials = 1000, std::uint64_t seed = 0);

} // namespace groupdef

#endif
