#include "doctest.h"
#include "groupdef/error.hpp"
#include "groupdef/groups.hpp"
#include "groupdef/words.hpp"

using namespace groupdef;

namespace {
int idx(const FiniteGroup& g, const std::string& name) {
  auto i = g.index_of(name);
  REQUIRE(i.has_value());
  return *i;
}
} // namespace

TEST_CASE("parsing, reduction and canonical format") {
  CHECK(Word::parse("x").format() == "x");
  CHECK(Word::parse("x^-1").format() == "x^-1");
  CHECK(Word::parse("x*x").format() == "x^2");
  CHECK(Word::parse("x*x^-1").format() == "1");
  CHECK(Word::parse("[x,y]").format() == "x^-1*y^-1*x*y");
  CHECK(Word::parse("x^y").format() == "y^-1*x*y");
  CHECK(Word::parse("(x*y)^2").format() == "x*y*x*y");
  CHECK(Word::parse("(x*y)^-1").format() == "y^-1*x^-1");
  CHECK(Word::parse("[[y,x1],x2]").format() ==
        "x1^-1*y^-1*x1*y*x2^-1*y^-1*x1^-1*y*x1*x2");
  // identifiers use maximal munch: xy is one letter, not x*y
  CHECK(Word::parse("xy").support() == LetterSet{"xy"});
  CHECK(Word::parse("x*y").support() == LetterSet{"x", "y"});
  CHECK(Word::parse("x*y*y^-1") == Word::parse("x"));
  CHECK_THROWS_AS(Word::parse("x*"), ParseError);
  CHECK_THROWS_AS(Word::parse("[x y]"), ParseError);
}

TEST_CASE("support, exponent sums and powers") {
  Word w = Word::parse("[x,y]");
  CHECK(w.support() == LetterSet{"x", "y"});
  CHECK(w.exponent_sum("x") == 0);
  CHECK(Word::parse("x^2*y").exponent_sum("x") == 2);
  CHECK(Word::parse("x^2*y").exponent_sum("y") == 1);
  CHECK(Word::parse("x^2*y").exponent_sum("z") == 0);
  CHECK(Word::parse("x*y").pow(0).format() == "1");
  CHECK(Word::parse("x*y").pow(-1).format() == "y^-1*x^-1");
  CHECK(Word::parse("x*y").pow(2).format() == "x*y*x*y");
  CHECK(Word::commutator(Word::parse("x"), Word::parse("y")) == Word::parse("[x,y]"));
  CHECK(Word::letter("u", -3).format() == "u^-3");
}

TEST_CASE("evaluation with an assignment") {
  auto s3 = FiniteGroup::catalog("S3");
  Assignment a;
  a["x"] = s3.element(idx(s3, "(1 2)"));
  a["y"] = s3.element(idx(s3, "(1 3)"));
  CHECK(evaluate(s3, Word::parse("[x,y]"), a).index == idx(s3, "(1 3 2)"));
  CHECK(evaluate(s3, Word::parse("x*x"), a).index == 0);
  // unassigned letters are an error, not a silent default
  CHECK_THROWS_AS(evaluate(s3, Word::parse("x*z"), a), Error);
}

TEST_CASE("word images") {
  auto c4 = FiniteGroup::catalog("C4");
  CHECK(word_values(c4, Word::parse("x^2")).members == std::vector<int>{0, 2});
  auto s3 = FiniteGroup::catalog("S3");
  ElementSubset comm = word_values(s3, Word::parse("[x,y]"));
  CHECK(comm.size() == 3);
  CHECK(comm.contains(0));
  CHECK(comm.contains(idx(s3, "(1 2 3)")));
  CHECK(word_values(FiniteGroup::catalog("Q8"), Word::parse("[x,y]")).size() == 2);
  // in S4 the commutator image is exactly the even permutations
  CHECK(word_values(FiniteGroup::catalog("S4"), Word::parse("[x,y]")).size() == 12);
  CHECK(word_values(FiniteGroup::catalog("C6"), Word::parse("[x,y]")).members ==
        std::vector<int>{0});
  CHECK(word_values(c4, Word::parse("x*x^-1")).members == std::vector<int>{0});
}

TEST_CASE("word image cost control") {
  auto s4 = FiniteGroup::catalog("S4");
  // two disjoint blocks: the budget sees 24^2 + 24^2, not 24^4
  Word w = Word::parse("[x1,y1]*[x2,y2]");
  CHECK(word_values(s4, w, 2000).size() == 12); // A4 . A4 = A4
  CHECK_THROWS_AS(word_values(s4, w, 10), BudgetError);
}

TEST_CASE("sampled image is a subset of the exact image and is deterministic") {
  auto s4 = FiniteGroup::catalog("S4");
  Word w = Word::parse("[x,y]");
  ElementSubset exact = word_values(s4, w);
  ElementSubset sampled = word_values_sampled(s4, w, 64, 7);
  CHECK(subset_includes(exact, sampled));
  CHECK(sampled == word_values_sampled(s4, w, 64, 7));
}

TEST_CASE("outer commutator recognition") {
  struct Case {
    const char* text;
    bool member;
    LetterSet letters;
  };
  const Case corpus[] = {
      {"x", true, {"x"}},
      {"[y,x]", true, {"x", "y"}},
      {"[[y,x1],x2]", true, {"x1", "x2", "y"}},
      {"[[y,x1],[x2,x3]]", true, {"x1", "x2", "x3", "y"}},
      {"[[x1,x2],[x3,x4]]", true, {"x1", "x2", "x3", "x4"}},
      {"[x,y^2]", true, {"x"}},       // right side need not be in the family
      {"[x,y*z]", true, {"x"}},
      {"[[x,y],z^-1]", true, {"x", "y"}},
      {"x^-1", false, {}},
      {"x^2", false, {}},
      {"x*x^-1", false, {}},          // the empty word
      {"x1*x2", false, {}},
      {"[x1*x2,x3]", false, {}},      // left side must itself be in the family
      {"[y,x]^2", false, {}},
      {"x^-1*y^-1*x*y*z", false, {}},
      {"[x,x]", false, {}},           // reduces to the empty word
  };
  for (const auto& c : corpus) {
    CAPTURE(c.text);
    IdealMembership m = ideal_membership(Word::parse(c.text));
    CHECK(m.member == c.member);
    CHECK(is_outer_commutator_word(Word::parse(c.text)) == c.member);
    if (c.member) CHECK(m.letters == c.letters);
  }
}
