#include <random>

#include "doctest.h"
#include "groupdef/error.hpp"
#include "groupdef/nilpotent.hpp"
#include "groupdef/polynomial.hpp"
#include "groupdef/words.hpp"

using namespace groupdef;

namespace {

IntPolynomial var(const std::string& n) { return IntPolynomial::variable(n); }

// independent oracle: 3x3 unitriangular integer matrices [[1,a,c],[0,1,b],[0,0,1]]
struct Tri {
  Int a, b, c;
  friend bool operator==(const Tri&, const Tri&) = default;
};
Tri tri_mul(const Tri& x, const Tri& y) { return {x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b}; }
// coordinates (J1, J2, K) correspond to (a, b, c - a*b)
Tri tri_of(const ConcreteElement& e) { return {e.j[0], e.j[1], e.j[0] * e.j[1] + e.k[0]}; }
ConcreteElement coords_of(const Tri& m) { return {{m.a, m.b}, {m.c - m.a * m.b}}; }

} // namespace

TEST_CASE("presentation shapes") {
  Class2Presentation h = Class2Presentation::heisenberg();
  CHECK(h.s == 2);
  CHECK(h.r == 1);
  CHECK(h.kappa == std::vector<std::vector<long long>>{{1}});
  Class2Presentation f3 = Class2Presentation::free_class2(3);
  CHECK(f3.s == 3);
  CHECK(f3.r == 3);
  CHECK(Class2Presentation::pair_index(0, 1, 3) == 0);
  CHECK(Class2Presentation::pair_index(0, 2, 3) == 1);
  CHECK(Class2Presentation::pair_index(1, 2, 3) == 2);
  for (int row = 0; row < 3; ++row)
    for (int col = 0; col < 3; ++col) CHECK(f3.kappa[row][col] == (row == col ? 1 : 0));
  Class2Presentation bad{2, 1, {}};
  CHECK_THROWS_AS(bad.validate(), Error); // kappa must have (s choose 2) rows
}

TEST_CASE("concrete arithmetic matches the unitriangular matrix model") {
  Class2Presentation h = Class2Presentation::heisenberg();
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> coord(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    ConcreteElement e1{{coord(rng), coord(rng)}, {coord(rng)}};
    ConcreteElement e2{{coord(rng), coord(rng)}, {coord(rng)}};
    CHECK(class2_multiply(h, e1, e2) == coords_of(tri_mul(tri_of(e1), tri_of(e2))));
    CHECK(class2_multiply(h, e1, class2_inverse(h, e1)) == class2_identity_concrete(h));
    ConcreteElement cube = class2_multiply(h, class2_multiply(h, e1, e1), e1);
    CHECK(class2_power(h, e1, 3) == cube);
    CHECK(class2_power(h, e1, -1) == class2_inverse(h, e1));
    CHECK(class2_power(h, e1, 0) == class2_identity_concrete(h));
  }
}

TEST_CASE("symbolic multiplication is associative and inverts") {
  Class2Presentation h = Class2Presentation::heisenberg();
  SymbolicElement g1 = class2_generic(h, 1);
  SymbolicElement g2 = class2_generic(h, 2);
  SymbolicElement g3 = class2_generic(h, 3);
  SymbolicElement left = class2_multiply(class2_multiply(g1, g2), g3);
  SymbolicElement right = class2_multiply(g1, class2_multiply(g2, g3));
  for (int i = 0; i < h.s; ++i) CHECK(left.j[i] == right.j[i]);
  for (int l = 0; l < h.r; ++l) CHECK(left.k[l] == right.k[l]);
  SymbolicElement prod = class2_multiply(g1, class2_inverse(g1));
  for (int i = 0; i < h.s; ++i) CHECK(prod.j[i].is_zero());
  for (int l = 0; l < h.r; ++l) CHECK(prod.k[l].is_zero());
  CHECK(g1.j[0] == var("k1_1"));
  CHECK(g1.k[0] == var("k1_3"));
  CHECK(class2_generic_noncentral(h, 1).k[0].is_zero());
}

TEST_CASE("word evaluation in coordinates") {
  Class2Presentation h = Class2Presentation::heisenberg();
  ConcreteElement u{{2, 0}, {0}};  // a = 2
  ConcreteElement v{{0, 3}, {0}};  // b = 3
  // [u,v] in the Heisenberg group is central with c = a*b
  ConcreteElement comm = evaluate_word(h, Word::parse("[x1,x2]"), {u, v});
  CHECK(comm == ConcreteElement{{0, 0}, {6}});
  CHECK(evaluate_word(h, Word::parse("[x2,x1]"), {u, v}) == ConcreteElement{{0, 0}, {-6}});
  // in a class-2 group inverting both entries fixes the commutator
  CHECK(evaluate_word(h, Word::parse("x1*x2*x1^-1*x2^-1"), {u, v}) ==
        ConcreteElement{{0, 0}, {6}});
  CHECK_THROWS_AS(evaluate_word(h, Word::parse("[x1,x2]"), {u}), Error);
}

TEST_CASE("word polynomials on the heisenberg presentation") {
  Class2Presentation h = Class2Presentation::heisenberg();
  auto polys = hall_polynomials(h, Word::parse("x1*x2"), 2);
  REQUIRE(polys.size() == 3); // s + r outputs
  CHECK(polys[0] == var("k1_1") + var("k2_1"));
  CHECK(polys[1] == var("k1_2") + var("k2_2"));
  CHECK(polys[2] == var("k1_3") + var("k2_3") - var("k1_2") * var("k2_1"));
  CHECK_THROWS_AS(hall_polynomials(h, Word::parse("x1*x2"), 3), Error);

  // the commutator's central coordinate is the determinant of the j-block
  auto comm = hall_polynomials(h, Word::parse("[x1,x2]"), 2);
  CHECK(comm[0].is_zero());
  CHECK(comm[1].is_zero());
  CHECK(comm[2] == var("k1_1") * var("k2_2") - var("k1_2") * var("k2_1"));
}

TEST_CASE("central partials") {
  auto det = central_partial(Class2Presentation::free_class2(2), Word::parse("[x1,x2]"));
  REQUIRE(det.size() == 1);
  CHECK(det[0] == var("k1_1") * var("k2_2") - var("k1_2") * var("k2_1"));

  // on the free rank-3 presentation the commutator yields all three 2x2 minors
  auto minors = central_partial(Class2Presentation::free_class2(3), Word::parse("[x1,x2]"));
  REQUIRE(minors.size() == 3);
  CHECK(minors[0] == var("k1_1") * var("k2_2") - var("k1_2") * var("k2_1"));
  CHECK(minors[1] == var("k1_1") * var("k2_3") - var("k1_3") * var("k2_1"));
  CHECK(minors[2] == var("k1_2") * var("k2_3") - var("k1_3") * var("k2_2"));

  // squares pick up the correction term, with central inputs suppressed
  auto square = central_partial(Class2Presentation::free_class2(2), Word::parse("x1^2"));
  REQUIRE(square.size() == 1);
  CHECK(square[0] == IntPolynomial() - var("k1_1") * var("k1_2"));
}

TEST_CASE("central partials are homogeneous of degree two") {
  const std::pair<const char*, int> corpus[] = {
      {"[x1,x2]", 2},      {"[x1,x2][x3,x4]", 4},    {"x1", 2},
      {"x1*x2", 2},        {"x1^2*x2^2", 2},         {"[x1,x2]^3", 3},
      {"[x1,x2]*x3", 3},   {"x1*x2*x1^-1*x2^-1", 2}, {"x1^3*x2", 2},
      {"[x1,x2^2]*x3^2", 4}};
  for (const auto& [text, s] : corpus) {
    CAPTURE(text);
    CHECK(verify_homogeneity_degree2(Class2Presentation::free_class2(s), Word::parse(text)));
  }
}

TEST_CASE("hall polynomials agree with concrete evaluation") {
  Class2Presentation f3 = Class2Presentation::free_class2(3);
  Word w = Word::parse("[x1,x2^2]*x3^2");
  auto polys = hall_polynomials(f3, w, 3);
  std::mt19937_64 rng(321);
  std::uniform_int_distribution<int> coord(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ConcreteElement> inputs;
    std::map<std::string, Int> values;
    for (int i = 1; i <= 3; ++i) {
      ConcreteElement e{{coord(rng), coord(rng), coord(rng)},
                        {coord(rng), coord(rng), coord(rng)}};
      for (int t = 0; t < 3; ++t) {
        values["k" + std::to_string(i) + "_" + std::to_string(t + 1)] = e.j[t];
        values["k" + std::to_string(i) + "_" + std::to_string(t + 4)] = e.k[t];
      }
      inputs.push_back(std::move(e));
    }
    ConcreteElement direct = evaluate_word(f3, w, inputs);
    for (int t = 0; t < 3; ++t) {
      CHECK(polys[t].evaluate(values) == direct.j[t]);
      CHECK(polys[t + 3].evaluate(values) == direct.k[t]);
    }
  }
}
