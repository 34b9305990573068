#include <algorithm>
#include <map>

#include "doctest.h"
#include "groupdef/error.hpp"
#include "groupdef/groups.hpp"

using namespace groupdef;

namespace {
int idx(const FiniteGroup& g, const std::string& name) {
  auto i = g.index_of(name);
  REQUIRE(i.has_value());
  return *i;
}

std::vector<int> sorted_sizes(const std::vector<std::vector<int>>& classes) {
  std::vector<int> sizes;
  for (const auto& c : classes) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}
} // namespace

TEST_CASE("table constructor validates shape and identity position") {
  FiniteGroup c2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
  CHECK(c2.order() == 2);
  CHECK(c2.mul(1, 1) == 0);
  CHECK(c2.inverse(1) == 1);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), Error);  // not Latin
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), Error);  // identity not first
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}}), Error);          // not square
  // associative but checked: a non-associative Latin square must be rejected
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                           {1, 0, 3, 4, 2},
                                           {2, 4, 0, 1, 3},
                                           {3, 2, 4, 0, 1},
                                           {4, 3, 1, 2, 0}}),
                  Error);
}

TEST_CASE("catalog covers the standard list with the right orders") {
  const std::map<std::string, int> expected = {
      {"C2", 2},       {"C3", 3},     {"C4", 4},      {"C5", 5},      {"C6", 6},
      {"C7", 7},       {"C8", 8},     {"C9", 9},      {"C10", 10},    {"C11", 11},
      {"C12", 12},     {"C2 x C2", 4}, {"C4 x C2", 8}, {"C3 x C3", 9}, {"S3", 6},
      {"D4", 8},       {"Q8", 8},     {"D5", 10},     {"A4", 12},     {"D6", 12},
      {"S3 x C2", 12}, {"Q8 x C2", 16}, {"S4", 24},   {"A4 x C2", 24},
      {"C5 x C5", 25}, {"C6 x C6", 36}};
  auto names = FiniteGroup::catalog_names();
  CHECK(names.size() == expected.size());
  for (const auto& name : names) {
    REQUIRE(expected.count(name) == 1);
    CHECK(FiniteGroup::catalog(name).order() == expected.at(name));
  }
  CHECK_THROWS_AS(FiniteGroup::catalog("F20"), Error);
}

TEST_CASE("alternating and symmetric groups beyond the catalog list") {
  FiniteGroup a5 = FiniteGroup::catalog("A5");
  CHECK(a5.order() == 60);
  CHECK_FALSE(a5.is_abelian());
  CHECK(normal_subgroups(a5).size() == 2); // simple
}

TEST_CASE("permutations compose left to right") {
  FiniteGroup s3 = FiniteGroup::catalog("S3");
  CHECK(s3.mul(idx(s3, "(1 2)"), idx(s3, "(1 3)")) == idx(s3, "(1 2 3)"));
  CHECK(s3.power(idx(s3, "(1 2 3)"), -1) == idx(s3, "(1 3 2)"));
  CHECK(s3.power(idx(s3, "(1 2 3)"), 3) == 0);
  CHECK(s3.name_of(0) == "e");
  CHECK_FALSE(s3.index_of("(1 4)").has_value());
}

TEST_CASE("conjugacy classes are sorted and have known sizes") {
  auto s3 = FiniteGroup::catalog("S3");
  auto classes = conjugacy_classes(s3);
  CHECK(sorted_sizes(classes) == std::vector<int>{1, 2, 3});
  CHECK(classes.front() == std::vector<int>{0}); // identity class first
  CHECK(sorted_sizes(conjugacy_classes(FiniteGroup::catalog("S4"))) ==
        std::vector<int>{1, 3, 6, 6, 8});
  CHECK(sorted_sizes(conjugacy_classes(FiniteGroup::catalog("Q8"))) ==
        std::vector<int>{1, 1, 2, 2, 2});
}

TEST_CASE("centre") {
  auto s3 = FiniteGroup::catalog("S3");
  CHECK(centre(s3).members == std::vector<int>{0});
  auto q8 = FiniteGroup::catalog("Q8");
  ElementSubset z = centre(q8);
  CHECK(z.size() == 2);
  CHECK(z.contains(idx(q8, "-1")));
  CHECK(centre(FiniteGroup::catalog("D4")).size() == 2);
  CHECK(centre(FiniteGroup::catalog("C12")).size() == 12);
}

TEST_CASE("subgroup closure and normality") {
  auto s3 = FiniteGroup::catalog("S3");
  ElementSubset one_swap = make_subset(s3.id(), {idx(s3, "(1 2)")});
  CHECK(subgroup_closure(s3, one_swap).size() == 2);
  ElementSubset two_swaps = make_subset(s3.id(), {idx(s3, "(1 2)"), idx(s3, "(1 3)")});
  CHECK(subgroup_closure(s3, two_swaps).size() == 6);
  CHECK_FALSE(is_normal_subset(s3, one_swap));
  // a full conjugacy class is normal as a subset
  auto classes = conjugacy_classes(s3);
  for (const auto& c : classes) CHECK(is_normal_subset(s3, make_subset(s3.id(), c)));
  CHECK_FALSE(is_normal_subgroup(s3, subgroup_closure(s3, one_swap)));
}

TEST_CASE("normal subgroup enumeration") {
  auto s3 = FiniteGroup::catalog("S3");
  std::vector<int> sizes;
  for (const auto& n : normal_subgroups(s3)) sizes.push_back(n.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 3, 6});
  // every subgroup of Q8 is normal
  sizes.clear();
  for (const auto& n : normal_subgroups(FiniteGroup::catalog("Q8"))) sizes.push_back(n.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 2, 4, 4, 4, 8});
}

TEST_CASE("quotients") {
  auto s4 = FiniteGroup::catalog("S4");
  ElementSubset v4;
  for (const auto& n : normal_subgroups(s4))
    if (n.size() == 4) v4 = n;
  REQUIRE(v4.size() == 4);
  Quotient q = quotient(s4, v4);
  CHECK(q.group.order() == 6);
  CHECK_FALSE(q.group.is_abelian()); // S4 / V4 is S3
  CHECK(q.projection[0] == 0);

  auto c6 = FiniteGroup::catalog("C6");
  ElementSubset n3 = make_subset(c6.id(), {0, 2, 4});
  REQUIRE(is_normal_subgroup(c6, n3));
  CHECK(quotient(c6, n3).group.order() == 2);

  // cosets are named by minimal members; projection respects products
  ElementSubset n2 = make_subset(c6.id(), {0, 3});
  Quotient q2 = quotient(c6, n2);
  CHECK(q2.group.order() == 3);
  CHECK(project_subset(q2, make_subset(c6.id(), {1, 4})).members == std::vector<int>{1});
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(q2.projection[c6.mul(a, b)] == q2.group.mul(q2.projection[a], q2.projection[b]));
}

TEST_CASE("quotient rejects non-normal subsets") {
  auto s3 = FiniteGroup::catalog("S3");
  ElementSubset h = subgroup_closure(s3, make_subset(s3.id(), {idx(s3, "(1 2)")}));
  CHECK_THROWS_AS(quotient(s3, h), Error);
}

TEST_CASE("direct products") {
  auto g = FiniteGroup::direct_product(FiniteGroup::catalog("C2"), FiniteGroup::catalog("C3"));
  CHECK(g.order() == 6);
  CHECK(g.is_abelian());
  CHECK_FALSE(FiniteGroup::direct_product(FiniteGroup::catalog("S3"),
                                          FiniteGroup::catalog("C2"))
                  .is_abelian());
}

TEST_CASE("subset algebra") {
  auto c4 = FiniteGroup::catalog("C4");
  ElementSubset a = make_subset(c4.id(), {3, 1, 3});
  CHECK(a.members == std::vector<int>{1, 3}); // sorted, deduplicated
  ElementSubset b = make_subset(c4.id(), {0, 1});
  CHECK(subset_union(a, b).members == std::vector<int>{0, 1, 3});
  CHECK(subset_intersection(a, b).members == std::vector<int>{1});
  CHECK(subset_complement(c4, a).members == std::vector<int>{0, 2});
  CHECK(subset_includes(subset_union(a, b), a));
  CHECK_FALSE(subset_includes(b, a));
  CHECK(c4.all_elements().size() == 4);
  // cross-group operands are rejected
  auto c2 = FiniteGroup::catalog("C2");
  CHECK_THROWS_AS(subset_union(a, make_subset(c2.id(), {0})), Error);
}

TEST_CASE("permutation generator constructor") {
  FiniteGroup d4 = FiniteGroup::from_permutation_generators(4, {"(1 2 3 4)", "(1 3)"});
  CHECK(d4.order() == 8);
  CHECK(d4.element(3).group == d4.id());
  CHECK_THROWS_AS(FiniteGroup::from_permutation_generators(4, {"(1 5)"}), Error);
}
