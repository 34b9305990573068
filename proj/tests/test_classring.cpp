#include <numeric>
#include <random>

#include "doctest.h"
#include "groupdef/classring.hpp"
#include "groupdef/error.hpp"
#include "groupdef/groups.hpp"

using namespace groupdef;

namespace {
int idx(const FiniteGroup& g, const std::string& name) {
  auto i = g.index_of(name);
  REQUIRE(i.has_value());
  return *i;
}
} // namespace

TEST_CASE("class bookkeeping") {
  auto s3 = FiniteGroup::catalog("S3");
  ClassRing ring(s3);
  CHECK(ring.class_count() == 3);
  CHECK(ring.class_of(0) == 0);
  CHECK(ring.representative(0) == 0);
  int t = ring.class_of(idx(s3, "(1 2)"));
  CHECK(ring.classes()[t].size() == 3);
  CHECK(ring.class_of(idx(s3, "(1 3)")) == t);
  CHECK(ring.class_of(idx(s3, "(1 2 3)")) == ring.class_of(idx(s3, "(1 3 2)")));
  CHECK_THROWS_AS(ring.class_of(17), Error);
}

TEST_CASE("transposition class squared in S3") {
  auto s3 = FiniteGroup::catalog("S3");
  ClassRing ring(s3);
  int t = ring.class_of(idx(s3, "(1 2)"));
  int rot = ring.class_of(idx(s3, "(1 2 3)"));
  CenterElement product = ring.multiply(ring.class_sum(t), ring.class_sum(t));
  // hand count over the nine ordered pairs of transpositions: three reach the
  // identity, three reach each 3-cycle
  std::vector<Int> expected(3);
  expected[ring.class_of(0)] = 3;
  expected[rot] = 3;
  expected[t] = 0;
  CHECK(product == ring.from_coefficients(expected));
  CHECK(product == ring.multiply_convolution(ring.class_sum(t), ring.class_sum(t)));
  CHECK(ring.lambda({t, t}, ring.class_of(0)) == 3);
  CHECK(ring.lambda({t, t}, rot) == 3);
  CHECK(ring.lambda({t, t}, t) == 0);
  CHECK(ring.lambda_enumerated({t, t}, rot) == 3);
  CHECK(ring.lambda_convolved({t, t}, rot) == 3);
}

TEST_CASE("both multiplication paths agree on random centre elements") {
  auto s4 = FiniteGroup::catalog("S4");
  ClassRing ring(s4);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Int> a(ring.class_count()), b(ring.class_count());
    for (auto& x : a) x = coeff(rng);
    for (auto& x : b) x = coeff(rng);
    CenterElement ea = ring.from_coefficients(a);
    CenterElement eb = ring.from_coefficients(b);
    CHECK(ring.multiply(ea, eb) == ring.multiply_convolution(ea, eb));
    // the centre is commutative
    CHECK(ring.multiply(ea, eb) == ring.multiply(eb, ea));
  }
  // additive structure
  CenterElement z = ring.zero();
  CHECK(ring.add(z, ring.class_sum(1)) == ring.class_sum(1));
  CHECK(ring.multiply(z, ring.class_sum(1)) == z);
}

TEST_CASE("empty tuples and lambda budget") {
  auto s4 = FiniteGroup::catalog("S4");
  ClassRing ring(s4);
  CHECK(ring.lambda({}, ring.class_of(0)) == 1);
  CHECK(ring.lambda({}, ring.class_of(idx(s4, "(1 2)"))) == 0);
  int big = ring.class_of(idx(s4, "(1 2 3 4)")); // class of size 6
  std::vector<int> six(6, big);                  // 6^6 tuples
  CHECK_THROWS_AS(ring.lambda_enumerated(six, big, 100), BudgetError);
  // the adaptive path falls back to convolution instead
  CHECK(ring.lambda(six, big, 10000) == ring.lambda_convolved(six, big));
}

TEST_CASE("power map on class sums") {
  auto s3 = FiniteGroup::catalog("S3");
  ClassRing ring(s3);
  for (int c = 0; c < ring.class_count(); ++c)
    CHECK(ring.psi(5, ring.class_sum(c)) == ring.class_sum(ring.class_power(c, 5)));
  // in C4 the classes are singletons and powering moves them around
  auto c4 = FiniteGroup::catalog("C4");
  ClassRing rc4(c4);
  CHECK(rc4.class_power(rc4.class_of(1), 3) == rc4.class_of(3));
  CHECK_THROWS_AS(ring.psi(2, ring.class_sum(0)), Error); // 2 divides |S3|
}

TEST_CASE("power map is a ring automorphism for every coprime exponent") {
  for (const char* name : {"S3", "S4", "A4", "D4", "Q8", "C12", "D6"}) {
    FiniteGroup g = FiniteGroup::catalog(name);
    ClassRing ring(g);
    for (long long m = 1; m <= g.order(); ++m) {
      if (std::gcd(m, static_cast<long long>(g.order())) != 1) continue;
      CAPTURE(name);
      CAPTURE(m);
      CHECK(ring.verify_burnside(m));
      CHECK(verify_burnside(g, m));
    }
    CHECK_THROWS_AS(ring.verify_burnside(0), Error);
  }
}

TEST_CASE("structure constants survive the power map") {
  for (const char* name : {"S3", "A4", "Q8"}) {
    FiniteGroup g = FiniteGroup::catalog(name);
    ClassRing ring(g);
    for (long long m = 1; m <= g.order(); ++m) {
      if (std::gcd(m, static_cast<long long>(g.order())) != 1) continue;
      CAPTURE(name);
      CAPTURE(m);
      CHECK(ring.verify_lambda_invariance(m, 2));
    }
  }
  CHECK(verify_lambda_invariance(FiniteGroup::catalog("S3"), 5, 3));
  CHECK_THROWS_AS(verify_lambda_invariance(FiniteGroup::catalog("S3"), 5, 4), Error);
}

TEST_CASE("elements of different rings do not mix") {
  ClassRing r3(FiniteGroup::catalog("C3"));
  ClassRing r2(FiniteGroup::catalog("C2"));
  CHECK_THROWS_AS(r3.add(r3.zero(), r2.zero()), Error);
  CHECK_THROWS_AS(r3.multiply(r3.zero(), r2.class_sum(1)), Error);
  CHECK_THROWS_AS(r3.from_coefficients({1, 2}), Error); // wrong length
}

TEST_CASE("trivial group") {
  FiniteGroup one = FiniteGroup::from_table({{0}});
  ClassRing ring(one);
  CHECK(ring.class_count() == 1);
  CHECK(ring.multiply(ring.class_sum(0), ring.class_sum(0)) == ring.class_sum(0));
  CHECK(ring.verify_burnside(1));
}
