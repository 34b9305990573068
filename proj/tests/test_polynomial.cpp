#include "doctest.h"
#include "groupdef/error.hpp"
#include "groupdef/polynomial.hpp"

using namespace groupdef;

namespace {
IntPolynomial var(const std::string& n) { return IntPolynomial::variable(n); }
} // namespace

TEST_CASE("arithmetic") {
  IntPolynomial x = var("x"), y = var("y");
  CHECK((x + y).pow(2) == x * x + IntPolynomial::constant(2) * x * y + y * y);
  CHECK((x + IntPolynomial::constant(2)) * (x - IntPolynomial::constant(2)) ==
        x * x - IntPolynomial::constant(4));
  CHECK(x - x == IntPolynomial());
  CHECK(x.pow(0) == IntPolynomial::constant(1));
  CHECK((x * y) * x == x.pow(2) * y);
}

TEST_CASE("formatting") {
  IntPolynomial x = var("x"), y = var("y");
  CHECK(IntPolynomial().format() == "0");
  CHECK(IntPolynomial::constant(-3).format() == "-3");
  CHECK((x + y).pow(2).format() == "2*x*y + x^2 + y^2");
  CHECK((x - y).format() == "x - y");
  CHECK((IntPolynomial::constant(1) - x).format() == "1 - x");
  CHECK((x * x * x).format() == "x^3");
  CHECK((IntPolynomial::constant(-1) * x * y).format() == "-x*y");
}

TEST_CASE("degrees and variables") {
  IntPolynomial x = var("x"), y = var("y"), z = var("z");
  CHECK(IntPolynomial().total_degree() == -1);
  CHECK(IntPolynomial::constant(5).total_degree() == 0);
  CHECK((x.pow(2) * y + z).total_degree() == 3);
  CHECK((x * y + z).variables() == std::set<std::string>{"x", "y", "z"});
  CHECK(IntPolynomial().variables().empty());
}

TEST_CASE("substitution") {
  IntPolynomial x = var("x"), y = var("y");
  IntPolynomial p = x.pow(2) + x;
  IntPolynomial q = p.substitute("x", y + IntPolynomial::constant(1));
  CHECK(q == y.pow(2) + IntPolynomial::constant(3) * y + IntPolynomial::constant(2));
  // substituting a missing variable is the identity
  CHECK(p.substitute("w", y) == p);
}

TEST_CASE("evaluation") {
  IntPolynomial x = var("x"), y = var("y");
  IntPolynomial p = (x + IntPolynomial::constant(1)).pow(3);
  CHECK(p.evaluate({{"x", Int(2)}}) == 27);
  CHECK((x * y).evaluate({{"x", Int(-4)}, {"y", Int(5)}}) == -20);
  CHECK_THROWS_AS(p.evaluate({}), Error);
  CHECK(IntPolynomial::constant(7).evaluate({}) == 7);
  // coefficients and values are arbitrary precision
  Int big = Int("100000000000000000000");
  CHECK(x.pow(2).evaluate({{"x", big}}) == big * big);
}
