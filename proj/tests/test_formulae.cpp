#include <algorithm>

#include "doctest.h"
#include "groupdef/error.hpp"
#include "groupdef/formulae.hpp"
#include "groupdef/groups.hpp"

using namespace groupdef;

namespace {
int idx(const FiniteGroup& g, const std::string& name) {
  auto i = g.index_of(name);
  REQUIRE(i.has_value());
  return *i;
}
} // namespace

TEST_CASE("classification of parsed formulae") {
  Classification c = classify(Formula::parse("exists x: [x,y] != 1"));
  CHECK(c.existential);
  CHECK_FALSE(c.universal);
  CHECK(c.negative);
  CHECK_FALSE(c.positive);
  CHECK(c.q_length == 1);

  c = classify(Formula::parse("forall x: [x,y] = 1"));
  CHECK(c.universal);
  CHECK_FALSE(c.existential);
  CHECK(c.positive);
  CHECK(c.q_length == 1);

  c = classify(Formula::parse("forall x1: exists x2: [x1,x2] = y"));
  CHECK_FALSE(c.existential);
  CHECK_FALSE(c.universal);
  CHECK(c.q_length == 2);

  c = classify(Formula::parse("y = 1"));
  CHECK(c.existential); // quantifier-free is both
  CHECK(c.universal);
  CHECK(c.positive);
  CHECK(c.q_length == 0);

  // adjacent same-kind quantifiers form one block
  c = classify(Formula::parse("exists x1, x2: [x1,x2] = y"));
  CHECK(c.q_length == 1);
}

TEST_CASE("truth evaluation") {
  auto s3 = FiniteGroup::catalog("S3");
  CHECK(evaluate(s3, Formula::parse("exists x, y: [x,y] != 1"), Assignment{}));
  CHECK_FALSE(evaluate(FiniteGroup::catalog("C6"),
                       Formula::parse("exists x, y: [x,y] != 1"), Assignment{}));
  Formula ena = Formula::parse("exists x: [y,x] != 1");
  CHECK(evaluate(s3, ena, s3.element(idx(s3, "(1 2)"))));
  CHECK_FALSE(evaluate(s3, ena, s3.element(0)));
  // free variables must all be assigned
  CHECK_THROWS_AS(evaluate(s3, ena, Assignment{}), Error);
}

TEST_CASE("definable sets") {
  auto c4 = FiniteGroup::catalog("C4");
  CHECK(definable_set(c4, torsion_formula(2)).members == std::vector<int>{0, 2});
  CHECK(definable_set(FiniteGroup::catalog("C6"), divisibility_formula(2)).members ==
        std::vector<int>{0, 2, 4});
  auto s3 = FiniteGroup::catalog("S3");
  CHECK(definable_set(s3, Formula::parse("exists x: [y,x] != 1")).members ==
        std::vector<int>{1, 2, 3, 4, 5});
  CHECK(definable_set(s3, word_formula(Word::parse("[x,y]"), "t")) ==
        word_values(s3, Word::parse("[x,y]")));
  // wrong number of free variables
  CHECK_THROWS_AS(definable_set(s3, Formula::parse("x = y")), Error);
  CHECK_THROWS_AS(definable_set(s3, Formula::parse("exists x: x = 1")), Error);
}

TEST_CASE("definable tuple sets") {
  auto s3 = FiniteGroup::catalog("S3");
  auto pairs = definable_set_multi(s3, Formula::parse("[x,y] = 1"));
  CHECK(pairs.size() == 18); // sum of centralizer orders = classes * |G|
  CHECK(pairs.front() == std::vector<int>{0, 0});
  CHECK(std::is_sorted(pairs.begin(), pairs.end()));
  for (const auto& p : pairs) CHECK(s3.mul(p[0], p[1]) == s3.mul(p[1], p[0]));
}

TEST_CASE("word image formula") {
  Word w = Word::parse("[x,y]");
  for (const char* name : {"S3", "D4", "A4"}) {
    FiniteGroup g = FiniteGroup::catalog(name);
    CHECK(definable_set(g, word_formula(w, "t")) == word_values(g, w));
  }
  CHECK_THROWS_AS(word_formula(Word::parse("[t,y]"), "t"), Error);
}

TEST_CASE("existential negative atomic formulae") {
  Formula psi = ena_formula(Word::parse("[y,x]"), "y");
  auto parts = ena_parts(psi);
  REQUIRE(parts.has_value());
  CHECK(parts->word == Word::parse("[y,x]"));
  CHECK(parts->free_var == "y");
  CHECK(parts->bound == std::vector<std::string>{"x"});

  parts = ena_parts(ena_formula(Word::parse("[[y,x1],[x2,x3]]"), "x2"));
  REQUIRE(parts.has_value());
  CHECK(parts->free_var == "x2");
  CHECK(parts->bound == std::vector<std::string>{"x1", "x3", "y"}); // sorted

  CHECK_FALSE(ena_parts(Formula::parse("forall x: [x,y] != 1")).has_value());
  CHECK_FALSE(ena_parts(Formula::parse("exists x: [x,y] = 1")).has_value());
  CHECK_FALSE(ena_parts(Formula::parse("exists x: [x,y] != 1 & y != 1")).has_value());
  CHECK_THROWS_AS(ena_formula(Word::parse("[y,x]"), "z"), Error); // z not in the word
}

TEST_CASE("prenex transformation") {
  // pulling a quantifier out of an implication antecedent flips it
  Formula f = Formula::parse("(exists x: x^2 = y) -> y != 1");
  Classification c = classify(f);
  CHECK(c.universal);
  CHECK_FALSE(c.existential);
  CHECK(c.q_length == 1);

  // prenexing preserves definable sets, with bound variables renamed apart
  auto c12 = FiniteGroup::catalog("C12");
  for (const char* text : {"(exists x: x^2 = y) & (exists x: x^3 = y)",
                           "(forall x: [x,y] = 1) | (exists x: x^2 = y)",
                           "!(exists x: x^2 = y)"}) {
    Formula g = Formula::parse(text);
    CHECK(definable_set(c12, from_prenex(to_prenex(g))) == definable_set(c12, g));
  }
  PrenexFormula p = to_prenex(Formula::parse("(exists x: x^2 = y) & (exists x: x^3 = y)"));
  CHECK(from_prenex(p).free_variables() == std::vector<std::string>{"y"});
}

TEST_CASE("formula construction helpers") {
  auto c2 = FiniteGroup::catalog("C2");
  CHECK(definable_set(c2, Formula::atom_is_identity(Word::parse("y"), false)).members ==
        std::vector<int>{1});
  CHECK(definable_set(c2, torsion_formula(2, "z")).members == std::vector<int>{0, 1});
}

TEST_CASE("evaluation budget") {
  auto s4 = FiniteGroup::catalog("S4");
  Formula deep = Formula::parse("forall x1: forall x2: forall x3: [x1,[x2,x3]] = y");
  CHECK_THROWS_AS(evaluate(s4, deep, s4.element(0), 10), BudgetError);
}

TEST_CASE("multiples lemma on abelian groups") {
  auto c4 = FiniteGroup::catalog("C4");
  MultiplesLemmaReport r = multiples_lemma_check(c4, 2);
  CHECK(r.ok);
  CHECK(r.divisible.members == std::vector<int>{0, 2});
  REQUIRE(r.outside_k.size() == 2);
  CHECK(r.outside_k[0] == std::pair<int, int>{1, 2});
  CHECK(r.outside_k[1] == std::pair<int, int>{3, 2});

  CHECK(multiples_lemma_check(FiniteGroup::catalog("C6"), 2).ok);
  CHECK(multiples_lemma_check(FiniteGroup::catalog("C6"), 3).ok);
  CHECK(multiples_lemma_check(FiniteGroup::catalog("C2 x C2"), 2).ok);
  CHECK_THROWS_AS(multiples_lemma_check(FiniteGroup::catalog("S3"), 2), Error);
}
