#ifndef GROUPDEF_WORDS_HPP
#define GROUPDEF_WORDS_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "groupdef/groups.hpp"

namespace groupdef {

// One syllable of a reduced word: a letter raised to a nonzero power.
struct Syllable {
  std::string letter;
  long long exponent = 0;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

using LetterSet = std::set<std::string>;

// An element of a free group on named letters, kept freely reduced at all
// times: adjacent syllables always have distinct letters and no syllable has
// exponent zero.  The empty word is the identity.
//
// Conventions: x^y = y^-1*x*y and [x,y] = x^-1*y^-1*x*y.
class Word {
public:
  Word() = default;

  // Single letter; names match [A-Za-z_][A-Za-z0-9_]* and may not be the
  // keywords "exists"/"forall".
  static Word letter(const std::string& name, long long exponent = 1);

  // Grammar: juxtaposition or '*' for products, '^' for integer powers and
  // conjugation by the following atom, '[w1,w2]' for commutators, '1' for the
  // identity, parentheses for grouping.  Identifiers use maximal munch, so
  // "xy" is one letter; write "x*y" or "x y" for a product.
  static Word parse(const std::string& text);

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }
  int length() const { return static_cast<int>(syl_.size()); }

  Word operator*(const Word& rhs) const;
  Word inverse() const;
  Word pow(long long e) const;
  Word conjugated_by(const Word& u) const; // u^-1 * this * u
  static Word commutator(const Word& a, const Word& b);

  LetterSet support() const;
  long long exponent_sum(const std::string& letter) const;

  // Canonical text: syllables joined by '*', "1" for the identity.
  // Reparses to an equal word.
  std::string format() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b) { return a.syl_ < b.syl_; }

private:
  std::vector<Syllable> syl_;
  void append(const std::string& letter, long long exponent);
};

// Evaluation budget for exhaustive enumerations (assignment tuples).
// Defaults to 10^7 and can be overridden with the GROUPDEF_BUDGET
// environment variable.
long long eval_budget();

using Assignment = std::map<std::string, GroupElement>;

// Substitutes group elements for letters.  Every letter in the support must
// be assigned, and every assigned element must belong to g.
GroupElement evaluate(const FiniteGroup& g, const Word& w, const Assignment& a);

// A word pre-resolved against a slot layout for fast repeated evaluation.
class CompiledWord {
public:
  CompiledWord() = default;
  // slot_of must cover the word's support.
  CompiledWord(const Word& w, const std::map<std::string, int>& slot_of);
  int eval(const FiniteGroup& g, const int* slots) const;

private:
  std::vector<std::pair<int, long long>> ops_;
};

// Exact image of the word map: {w(a) : a assigns group elements to letters}.
// The word is factored into consecutive blocks with pairwise disjoint
// supports and the image is composed as a product of block images, so the
// enumeration cost is sum over blocks of |G|^(letters in block); that total
// must stay within the budget (pass 0 for the configured default).
ElementSubset word_values(const FiniteGroup& g, const Word& w, long long budget = 0);

// Monte-Carlo subset of the image: evaluates the word on `trials` uniform
// random assignments.  Always a subset of the true image, not necessarily all
// of it.
ElementSubset word_values_sampled(const FiniteGroup& g, const Word& w, long long trials,
                                  std::uint64_t seed);

// Membership in the smallest family of words that contains every single
// letter (exponent +1) and is closed under [v, u] for v in the family and u
// an arbitrary word with support disjoint from v.  When w is a member,
// `letters` carries the distinguished letter set P(w): P(x) = {x} and
// P([v,u]) = P(v), extended by P(u) when u is itself a member.
struct IdealMembership {
  bool member = false;
  LetterSet letters;
};
IdealMembership ideal_membership(const Word& w);
bool is_outer_commutator_word(const Word& w);

} // namespace groupdef

#endif
