#ifndef GROUPDEF_FORMULAE_HPP
#define GROUPDEF_FORMULAE_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groupdef/boolcomb.hpp"
#include "groupdef/groups.hpp"
#include "groupdef/words.hpp"

namespace groupdef {

// First-order formula over the language of groups.  Atoms are kept in the
// normalized shape "w = 1" / "w != 1" (an equation lhs = rhs is stored as
// lhs*rhs^-1 = 1).  Variables are the word letters; a variable is free when
// no enclosing quantifier binds it.  Immutable; copies share structure.
class Formula {
public:
  enum class Kind { Atom, Not, And, Or, Implies, Exists, Forall };

  // Grammar: word grammar plus '=' / '!=' relations, connectives '&', '|',
  // '!', '->' (right-associative), and 'exists x:' / 'forall x:' whose body
  // extends as far right as possible.  'exists x, z:' abbreviates nested
  // quantifiers.  A variable bound again in a nested scope is renamed with
  // a numeric suffix ("x" -> "x_1", ...).
  static Formula parse(const std::string& text);

  static Formula atom(const Word& lhs, bool equal, const Word& rhs);
  static Formula atom_is_identity(const Word& w, bool equal); // w = 1 / w != 1
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula exists(const std::string& var, Formula body);
  static Formula forall(const std::string& var, Formula body);

  Kind kind() const;
  const Word& atom_word() const; // Atom: the normalized word
  bool atom_equal() const;       // Atom: '=' vs '!='
  Formula child(int i = 0) const;
  const std::string& quantified_var() const; // Exists/Forall

  // Free variables in first-occurrence order (left-to-right).
  std::vector<std::string> free_variables() const;

  std::string format() const; // reparses to an equal formula
  bool equals(const Formula& other) const;
  friend bool operator==(const Formula& a, const Formula& b) { return a.equals(b); }

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : root_(std::move(n)) {}
  std::shared_ptr<const Node> root_;
};

struct QuantifierStep {
  bool universal = false;
  std::string var;
  friend bool operator==(const QuantifierStep&, const QuantifierStep&) = default;
};

struct PrenexAtom {
  Word word;
  bool negated = false;
  friend bool operator==(const PrenexAtom&, const PrenexAtom&) = default;
};

// Prenex form: a quantifier prefix over a quantifier-free matrix.  The matrix
// is a boolean combination whose generator "a<i>" stands for atoms[i].
struct PrenexFormula {
  std::vector<QuantifierStep> prefix;
  std::vector<PrenexAtom> atoms;
  BoolComb matrix;

  std::string format() const;
};

// Classically equivalent prenex form: implications eliminated, negations
// pushed into atom relations, bound variables renamed apart (deterministic
// numeric suffixes in left-to-right order), quantifiers pulled left-to-right.
PrenexFormula to_prenex(const Formula& f);

// Syntactic rebuild of a prenex formula as a Formula.
Formula from_prenex(const PrenexFormula& p);

struct Classification {
  bool existential = false; // no universal quantifier in the prenex prefix
  bool universal = false;   // no existential quantifier
  bool positive = false;    // positive matrix over '=' atoms only
  bool negative = false;    // positive matrix over '!=' atoms only
  int q_length = 0;         // number of maximal alternating quantifier blocks
};
Classification classify(const Formula& f);

// Brute-force semantics: quantifiers iterate over all of G.  The enumeration
// cost (product of |G| over nested quantifiers) must stay within the budget
// (0 = configured default, see eval_budget()).
bool evaluate(const FiniteGroup& g, const Formula& f, const Assignment& a, long long budget = 0);
bool evaluate(const FiniteGroup& g, const Formula& f, const GroupElement& value,
              long long budget = 0);

// { g in G : f(g) }; f must have exactly one free variable.
ElementSubset definable_set(const FiniteGroup& g, const Formula& f, long long budget = 0);

// { (g1..gk) : f(g1..gk) } over the free variables in first-occurrence
// order; tuples come out in lexicographic index order.
std::vector<std::vector<int>> definable_set_multi(const FiniteGroup& g, const Formula& f,
                                                  long long budget = 0);

// exists (letters of w, sorted): w = target  — the image formula of the word
// map; target must not occur in w.
Formula word_formula(const Word& w, const std::string& target);

// exists (other letters of w, sorted): w != 1  — existential negative atomic
// formula with the given letter left free.
Formula ena_formula(const Word& w, const std::string& free_letter);

struct EnaParts {
  Word word;
  std::string free_var;
  std::vector<std::string> bound; // quantifier order, outermost first
};
// Recognizes a chain of existential quantifiers over a single '!=' atom with
// exactly one free variable occurring in the word.
std::optional<EnaParts> ena_parts(const Formula& f);

// Elementary abelian shapes, written multiplicatively: y^m = 1 and
// exists x: x^n = y.
Formula torsion_formula(long long m, const std::string& var = "y");
Formula divisibility_formula(long long n, const std::string& var = "y");

// Existentially quantifies every free variable except `keep`.
Formula projection_formula(const Formula& f, const std::string& keep);

// For abelian G: the divisible set D of "exists x: x^n = y" satisfies
// (1) <g> subset of D for each g in D, and (2) every g outside D admits a
// k > 1 with g^m outside D for all m in [1, |G|] not divisible by k.
struct MultiplesLemmaReport {
  bool ok = false;
  ElementSubset divisible;
  // (element index, smallest k that works) for each element outside D
  std::vector<std::pair<int, int>> outside_k;
};
MultiplesLemmaReport multiples_lemma_check(const FiniteGroup& g, long long n);

} // namespace groupdef

#endif
