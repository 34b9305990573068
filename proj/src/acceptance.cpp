#include "groupdef/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "groupdef/classring.hpp"
#include "groupdef/error.hpp"
#include "groupdef/formulae.hpp"
#include "groupdef/nilpotent.hpp"
#include "groupdef/weakrat.hpp"
#include "groupdef/words.hpp"

namespace groupdef {

namespace {

std::vector<FiniteGroup> groups_upto(int cap, int extra_cap) {
  int limit = extra_cap > 0 ? std::min(cap, extra_cap) : cap;
  std::vector<FiniteGroup> out;
  for (const auto& name : FiniteGroup::catalog_names()) {
    FiniteGroup g = FiniteGroup::catalog(name);
    if (g.order() <= limit) out.push_back(std::move(g));
  }
  return out;
}

std::string plural(std::size_t n, const char* what) {
  return std::to_string(n) + " " + what + (n == 1 ? "" : "s");
}

// ---- 1: the commutator word's image is weakly rational ----

CriterionResult check_commutator_regression(int extra_cap) {
  CriterionResult r{1, "commutator image weakly rational", false, 0, ""};
  Word comm = Word::parse("[x,y]");
  int cases = 0;
  for (const auto& g : groups_upto(24, extra_cap)) {
    ElementSubset values = word_values(g, comm);
    if (auto v = wr_violation(g, values)) {
      r.detail = g.label() + ": " + g.name_of(v->element) + "^" + std::to_string(v->m) +
                 " leaves the commutator image";
      return r;
    }
    ++cases;
  }
  r.passed = true;
  r.detail = plural(cases, "group") + " checked";
  return r;
}

// ---- 2: the coprime power map is a ring automorphism of the centre ----

CriterionResult check_burnside(int extra_cap) {
  CriterionResult r{2, "power map automorphism of the class ring", false, 0, ""};
  int cases = 0;
  for (const auto& g : groups_upto(24, extra_cap)) {
    ClassRing ring(g);
    for (long long m = 1; m <= g.order(); ++m) {
      if (std::gcd(m, static_cast<long long>(g.order())) != 1) continue;
      if (!ring.verify_burnside(m)) {
        r.detail = g.label() + ", m = " + std::to_string(m);
        return r;
      }
      ++cases;
    }
  }
  r.passed = true;
  r.detail = plural(cases, "(group, m) pair") + " verified";
  return r;
}

// ---- 3: structure constants are invariant under the power map ----

CriterionResult check_lambda_invariance(int extra_cap) {
  CriterionResult r{3, "structure-constant invariance", false, 0, ""};
  int cases = 0;
  for (const char* name : {"S3", "S4", "A4", "D4", "Q8"}) {
    FiniteGroup g = FiniteGroup::catalog(name);
    if (extra_cap > 0 && g.order() > extra_cap) continue;
    ClassRing ring(g);
    for (long long m = 1; m <= g.order(); ++m) {
      if (std::gcd(m, static_cast<long long>(g.order())) != 1) continue;
      if (!ring.verify_lambda_invariance(m, 2)) {
        r.detail = std::string(name) + ", m = " + std::to_string(m);
        return r;
      }
      ++cases;
    }
  }
  // hand-derived values in S3: with T the transposition class, counting the
  // nine ordered products of two transpositions gives 3 landing on the
  // identity and 3 landing on each fixed 3-cycle
  {
    FiniteGroup s3 = FiniteGroup::catalog("S3");
    ClassRing ring(s3);
    int t = ring.class_of(*s3.index_of("(1 2)"));
    int id_class = ring.class_of(s3.identity());
    int rot = ring.class_of(*s3.index_of("(1 2 3)"));
    // independent oracle: direct enumeration over the class members
    auto count_products = [&](int target_rep) {
      int count = 0;
      for (int a : ring.classes()[t])
        for (int b : ring.classes()[t])
          if (s3.mul(a, b) == target_rep) ++count;
      return count;
    };
    bool ok = count_products(ring.representative(id_class)) == 3 &&
              count_products(ring.representative(rot)) == 3 &&
              ring.lambda({t, t}, id_class) == 3 && ring.lambda({t, t}, rot) == 3 &&
              ring.lambda_enumerated({t, t}, id_class) == 3 &&
              ring.lambda_convolved({t, t}, rot) == 3;
    if (!ok) {
      r.detail = "S3 transposition-pair counts differ from 3";
      return r;
    }
  }
  r.passed = true;
  r.detail = plural(cases, "(group, m) pair") + " + S3 hand counts";
  return r;
}

// ---- 4: assembled z-words have weakly rational images ----

std::vector<ZWordSpec> fixed_zword_specs() {
  Word c12 = Word::parse("[x1,x2]");
  Word c34 = Word::parse("[x3,x4]");
  std::vector<ZWordSpec> specs;
  // two disjoint commutators, no conjugators
  specs.push_back({{c12, c34}, {}, {0, 1}, {1, 1}, {{}, {}}});
  // a conjugated square: ([x1,x2]^2)^u
  specs.push_back({{c12}, {Word::letter("u")}, {0}, {2}, {{0}}});
  // a bare cube
  specs.push_back({{c12}, {}, {0}, {3}, {{}}});
  // one base word conjugated by nested products u1 and u1*u2
  specs.push_back({{c12}, {Word::letter("u1"), Word::letter("u2")}, {0, 0}, {1, 1},
                   {{0}, {0, 1}}});
  // two base words, separate conjugators, one inverted power
  specs.push_back({{c12, c34}, {Word::letter("u1"), Word::letter("u2")}, {0, 1}, {1, -1},
                   {{0}, {1}}});
  // mixed: one empty selection and one explicit conjugator
  specs.push_back({{c12}, {Word::letter("u")}, {0, 0}, {1, 1}, {{}, {0}}});
  return specs;
}

CriterionResult check_zword_suite(int extra_cap) {
  CriterionResult r{4, "z-word images weakly rational", false, 0, ""};
  auto specs = fixed_zword_specs();
  auto groups = groups_upto(24, extra_cap);
  int cases = 0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    Word z = build_z(specs[i]);
    for (const auto& g : groups) {
      ElementSubset values = word_values(g, z);
      if (auto v = wr_violation(g, values)) {
        r.detail = "spec " + std::to_string(i + 1) + " (" + z.format() + ") on " + g.label() +
                   ": element " + g.name_of(v->element) + ", m = " + std::to_string(v->m);
        return r;
      }
      ++cases;
    }
  }
  r.passed = true;
  r.detail = plural(specs.size(), "z-word") + " x " + plural(groups.size(), "group");
  return r;
}

// ---- 5: existential negative formulae of iterated commutators ----

CriterionResult check_ena_suite(int extra_cap) {
  CriterionResult r{5, "iterated-commutator ena sets weakly rational", false, 0, ""};
  auto groups = groups_upto(16, extra_cap);
  int cases = 0;
  for (const char* text : {"[y,x]", "[[y,x1],x2]", "[[y,x1],[x2,x3]]"}) {
    Word w = Word::parse(text);
    IdealMembership membership = ideal_membership(w);
    if (!membership.member) {
      r.detail = std::string(text) + " unexpectedly outside the outer-commutator ideal";
      return r;
    }
    for (const auto& letter : membership.letters) {
      Formula psi = ena_formula(w, letter);
      for (const auto& g : groups) {
        ElementSubset set = definable_set(g, psi);
        if (auto v = wr_violation(g, set)) {
          r.detail = std::string(text) + " at " + letter + " on " + g.label() + ": element " +
                     g.name_of(v->element) + ", m = " + std::to_string(v->m);
          return r;
        }
        ++cases;
      }
    }
  }
  r.passed = true;
  r.detail = plural(cases, "definable set") + " checked";
  return r;
}

// ---- 6: class-2 symbolic arithmetic against the matrix model ----

struct Tri {
  Int a, b, c; // [[1,a,c],[0,1,b],[0,0,1]]
};

Tri tri_mul(const Tri& x, const Tri& y) { return {x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b}; }

Tri tri_of(const ConcreteElement& e) { return {e.j[0], e.j[1], e.j[0] * e.j[1] + e.k[0]}; }

ConcreteElement coords_of(const Tri& m) { return {{m.a, m.b}, {m.c - m.a * m.b}}; }

CriterionResult check_hall_oracle(int extra_cap) {
  (void)extra_cap;
  CriterionResult r{6, "class-2 polynomials vs matrix model", false, 0, ""};
  Class2Presentation h = Class2Presentation::heisenberg();

  // symbolic multiplication evaluated at 100 seeded coordinate pairs must
  // match 3x3 unitriangular matrix multiplication
  SymbolicElement generic = class2_multiply(class2_generic(h, 1), class2_generic(h, 2));
  std::mt19937_64 rng(20240614);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    ConcreteElement e1{{coord(rng), coord(rng)}, {coord(rng)}};
    ConcreteElement e2{{coord(rng), coord(rng)}, {coord(rng)}};
    ConcreteElement direct = class2_multiply(h, e1, e2);
    ConcreteElement via_matrix = coords_of(tri_mul(tri_of(e1), tri_of(e2)));
    std::map<std::string, Int> values{
        {"k1_1", e1.j[0]}, {"k1_2", e1.j[1]}, {"k1_3", e1.k[0]},
        {"k2_1", e2.j[0]}, {"k2_2", e2.j[1]}, {"k2_3", e2.k[0]}};
    ConcreteElement via_polys{{generic.j[0].evaluate(values), generic.j[1].evaluate(values)},
                              {generic.k[0].evaluate(values)}};
    if (!(direct == via_matrix) || !(direct == via_polys)) {
      r.detail = "trial " + std::to_string(trial) + " disagrees with the matrix model";
      return r;
    }
  }

  // central partial of [x1,x2] is the 2x2 determinant of the non-central
  // input coordinates
  {
    auto partial = central_partial(Class2Presentation::free_class2(2), Word::parse("[x1,x2]"));
    IntPolynomial expected =
        IntPolynomial::variable("k1_1") * IntPolynomial::variable("k2_2") -
        IntPolynomial::variable("k1_2") * IntPolynomial::variable("k2_1");
    if (partial.size() != 1 || !(partial[0] == expected)) {
      r.detail = "central partial of [x1,x2] is not the determinant form";
      return r;
    }
  }

  // degree-2 homogeneity over a fixed 10-word corpus
  const std::vector<std::pair<const char*, int>> corpus = {
      {"[x1,x2]", 2},        {"[x1,x2][x3,x4]", 4}, {"x1", 2},
      {"x1*x2", 2},          {"x1^2*x2^2", 2},      {"[x1,x2]^3", 3},
      {"[x1,x2]*x3", 3},     {"x1*x2*x1^-1*x2^-1", 2}, {"x1^3*x2", 2},
      {"[x1,x2^2]*x3^2", 4}};
  for (const auto& [text, s] : corpus) {
    if (!verify_homogeneity_degree2(Class2Presentation::free_class2(s), Word::parse(text))) {
      r.detail = std::string("central partials of ") + text + " are not homogeneous";
      return r;
    }
  }
  r.passed = true;
  r.detail = "100 matrix trials, determinant identity, 10-word homogeneity corpus";
  return r;
}

// ---- 7: systems of independent choice ----

LetterSet mask_to_member(unsigned mask) {
  LetterSet out;
  for (int bit = 0; bit < 5; ++bit)
    if (mask & (1u << bit)) out.insert(std::string(1, static_cast<char>('a' + bit)));
  return out;
}

IndependentChoiceSystem worked_example_system() {
  IndependentChoiceSystem sys;
  sys.ground = {"x1", "x2", "x3", "x4"};
  sys.collection = {{"x1"}, {"x1", "x2", "x3"}, {"x1", "x3", "x4"}};
  return sys;
}

CriterionResult check_independent_choice(int extra_cap) {
  (void)extra_cap;
  CriterionResult r{7, "independent choice systems", false, 0, ""};
  // greedy order search agrees with exhaustive enumeration on every
  // collection of at most 4 distinct members over a 5-element ground set
  IndependentChoiceSystem sys;
  sys.ground = mask_to_member(31);
  long long checked = 0;
  std::vector<unsigned> masks;
  for (unsigned size = 0; size <= 4; ++size) {
    masks.assign(size, 0);
    // combinations m0 < m1 < ... over masks 1..31
    bool more = true;
    if (size > 0)
      for (unsigned i = 0; i < size; ++i) masks[i] = i + 1;
    while (more) {
      sys.collection.clear();
      for (unsigned m : masks) sys.collection.push_back(mask_to_member(m));
      auto greedy = ics_find_order(sys);
      auto all = ics_all_orders(sys);
      bool valid_exists = !all.empty();
      if (greedy.has_value() != valid_exists ||
          (greedy && !ics_order_valid(sys, *greedy))) {
        r.detail = "greedy and exhaustive order search disagree on a " +
                   std::to_string(size) + "-member collection";
        return r;
      }
      ++checked;
      if (size == 0) break;
      int i = static_cast<int>(size) - 1;
      while (i >= 0 && masks[i] == 31 - (size - 1 - i)) --i;
      if (i < 0) {
        more = false;
      } else {
        ++masks[i];
        for (unsigned j = i + 1; j < size; ++j) masks[j] = masks[j - 1] + 1;
      }
    }
  }

  // the worked three-member example accepts its indexation order
  IndependentChoiceSystem example = worked_example_system();
  if (!ics_order_valid(example, {0, 1, 2})) {
    r.detail = "indexation order rejected on the worked example";
    return r;
  }

  // solve d_k = gamma_k for 100 seeded random targets and re-evaluate
  std::vector<Word> d = {Word::parse("x1"), Word::parse("x1*x2*x3"), Word::parse("x1*x3*x4")};
  std::mt19937_64 rng(971);
  for (const char* name : {"S3", "S4"}) {
    FiniteGroup g = FiniteGroup::catalog(name);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<GroupElement> gamma;
      for (int k = 0; k < 3; ++k)
        gamma.push_back(g.element(static_cast<int>(rng() % g.order())));
      auto assignment = ics_solve(g, example, d, gamma);
      Assignment values;
      for (const auto& [letter, value] : assignment) values[letter] = value;
      for (int k = 0; k < 3; ++k)
        if (evaluate(g, d[k], values).index != gamma[k].index) {
          r.detail = std::string("solution fails re-evaluation on ") + name;
          return r;
        }
    }
  }
  r.passed = true;
  r.detail = std::to_string(checked) + " collections, worked example, 100 solved targets";
  return r;
}

// ---- 8: evaluator laws and prenex invariance ----

std::vector<Formula> law_corpus() {
  const char* texts[] = {
      "y = 1",
      "y != 1",
      "y^2 = 1",
      "y^3 = 1",
      "exists x: [x,y] != 1",
      "forall x: [x,y] = 1",
      "exists x: x^2 = y",
      "exists x: x^3 = y",
      "exists x1, x2: [x1,x2] = y",
      "forall x: x^2 = 1 -> [x,y] = 1",
      "exists x: x != 1 & x^2 = y",
      "y = 1 | y^2 != 1",
      "!(y^2 = 1)",
      "exists x: y = x^-1*y*x & x != 1",
      "forall x1: exists x2: [x1,x2] = y | y != 1",
      "exists x1: forall x2: [x1,x2] = y^2",
      "y^4 = 1 & y^2 != 1",
      "exists x: (x*y)^2 = 1",
      "(exists x: x^2 = y) -> y != 1",
      "exists x, z: x*z = y & z*x != y",
  };
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(Formula::parse(t));
  return out;
}

CriterionResult check_evaluator_laws(int extra_cap) {
  CriterionResult r{8, "evaluator laws and prenex invariance", false, 0, ""};
  auto corpus = law_corpus();
  auto groups = groups_upto(12, extra_cap);
  long long cases = 0;
  for (const auto& g : groups) {
    std::vector<ElementSubset> sets;
    sets.reserve(corpus.size());
    for (const auto& f : corpus) sets.push_back(definable_set(g, f));
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      // complement law
      ElementSubset negated = definable_set(g, Formula::negation(corpus[i]));
      if (!(negated == subset_complement(g, sets[i]))) {
        r.detail = "complement law fails on " + g.label() + ", formula " + std::to_string(i);
        return r;
      }
      // prenex invariance
      ElementSubset prenexed = definable_set(g, from_prenex(to_prenex(corpus[i])));
      if (!(prenexed == sets[i])) {
        r.detail = "prenex changes the definable set on " + g.label() + ", formula " +
                   std::to_string(i);
        return r;
      }
      cases += 2;
      for (std::size_t j = 0; j < corpus.size(); ++j) {
        ElementSubset disj = definable_set(g, Formula::disjunction(corpus[i], corpus[j]));
        if (!(disj == subset_union(sets[i], sets[j]))) {
          r.detail = "union law fails on " + g.label() + " at pair (" + std::to_string(i) +
                     ", " + std::to_string(j) + ")";
          return r;
        }
        ElementSubset conj = definable_set(g, Formula::conjunction(corpus[i], corpus[j]));
        if (!(conj == subset_intersection(sets[i], sets[j]))) {
          r.detail = "intersection law fails on " + g.label() + " at pair (" +
                     std::to_string(i) + ", " + std::to_string(j) + ")";
          return r;
        }
        cases += 2;
      }
    }
  }
  r.passed = true;
  r.detail = std::to_string(cases) + " law instances over " + plural(groups.size(), "group");
  return r;
}

// ---- 9: quantitative bounds ----

CriterionResult check_bounds(int extra_cap) {
  CriterionResult r{9, "quantitative bounds", false, 0, ""};
  if (schur_bound(2, 2) != 16 || phi_order_bound(3) != 18) {
    r.detail = "pinned bound values are off";
    return r;
  }
  for (unsigned long long n = 1; n <= 1000000; ++n) {
    unsigned long long phi = euler_phi(n);
    if (2 * phi * phi < n) {
      r.detail = "euler_phi(" + std::to_string(n) + ") below sqrt(n/2)";
      return r;
    }
  }
  // seeded random weakly rational normal subsets: the generated subgroup
  // obeys the absolute bound
  auto groups = groups_upto(24, extra_cap);
  std::mt19937_64 rng(1729);
  for (int sample = 0; sample < 50; ++sample) {
    const FiniteGroup& g = groups[rng() % groups.size()];
    auto classes = conjugacy_classes(g);
    ClassRing ring(g);
    std::vector<bool> in(classes.size(), false);
    for (std::size_t c = 0; c < classes.size(); ++c) in[c] = rng() % 2 == 0;
    // close under every coprime power so the union is weakly rational
    std::vector<bool> closed(classes.size(), false);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (!in[c]) continue;
      for (long long m = 1; m <= g.order(); ++m) {
        if (std::gcd(m, static_cast<long long>(g.order())) != 1) continue;
        closed[ring.class_power(static_cast<int>(c), m)] = true;
      }
    }
    std::vector<int> members;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (closed[c]) members.insert(members.end(), classes[c].begin(), classes[c].end());
    ElementSubset n_set = make_subset(g.id(), std::move(members));
    if (!is_weakly_rational_set(g, n_set) || !is_normal_subset(g, n_set)) {
      r.detail = "random subset generator produced a non-conforming subset";
      return r;
    }
    ElementSubset generated = subgroup_closure(g, n_set);
    if (Int(generated.size()) > f_bound(n_set.size())) {
      r.detail = g.label() + ": |<N>| = " + std::to_string(generated.size()) +
                 " exceeds f(" + std::to_string(n_set.size()) + ")";
      return r;
    }
  }
  r.passed = true;
  r.detail = "pinned values, totient inequality to 10^6, 50 random normal subsets";
  return r;
}

// ---- 10: witness sets transfer definable sets to separating quotients ----

CriterionResult check_witness_sets(int extra_cap) {
  CriterionResult r{10, "witness sets and separating quotients", false, 0, ""};
  auto groups = groups_upto(16, extra_cap);
  int cases = 0;
  for (const char* text : {"[y,x]", "[[y,x1],x2]", "[[y,x1],[x2,x3]]"}) {
    Word w = Word::parse(text);
    for (const auto& letter : ideal_membership(w).letters) {
      Formula psi = ena_formula(w, letter);
      for (const auto& g : groups) {
        ElementSubset witness = witness_set_ena(g, psi);
        for (const auto& n : normal_subgroups(g)) {
          Quotient q = quotient(g, n);
          if (project_subset(q, witness).size() != witness.size()) continue;
          if (check_residuality(g, n, psi) != SetComparison::Equal) {
            r.detail = std::string(text) + " at " + letter + " on " + g.label() +
                       ": separating quotient by |N| = " + std::to_string(n.size()) +
                       " moves the definable set";
            return r;
          }
          ++cases;
        }
      }
    }
  }
  r.passed = true;
  r.detail = plural(cases, "separating quotient") + " checked";
  return r;
}

// ---- 11: divisible sets in abelian groups ----

CriterionResult check_abelian_lemma(int extra_cap) {
  CriterionResult r{11, "multiples lemma on abelian groups", false, 0, ""};
  int cases = 0;
  for (const auto& g : groups_upto(36, extra_cap)) {
    if (!g.is_abelian()) continue;
    for (long long n = 2; n <= 4; ++n) {
      MultiplesLemmaReport report = multiples_lemma_check(g, n);
      if (!report.ok) {
        r.detail = g.label() + ", n = " + std::to_string(n);
        return r;
      }
      ++cases;
    }
  }
  r.passed = true;
  r.detail = plural(cases, "(group, n) pair") + " passed";
  return r;
}

// ---- 12: power sets inside a conjunction of word-image formulae ----

CriterionResult check_power_containment(int extra_cap) {
  CriterionResult r{12, "a-th powers inside word-image conjunction", false, 0, ""};
  Word w1 = Word::parse("x^2*y");
  Word w2 = Word::parse("x*y^3");
  long long a = std::lcm(w1.exponent_sum("x"), w2.exponent_sum("y"));
  if (a != 6) {
    r.detail = "chosen exponent sums no longer give lcm 6";
    return r;
  }
  Formula conj = Formula::conjunction(word_formula(w1, "t"), word_formula(w2, "t"));
  Word power = Word::letter("p").pow(a);
  int cases = 0;
  for (const auto& g : groups_upto(24, extra_cap)) {
    ElementSubset powers = word_values(g, power);
    ElementSubset definable = definable_set(g, conj);
    if (!subset_includes(definable, powers)) {
      r.detail = g.label() + ": some " + std::to_string(a) +
                 "-th power escapes the conjunction";
      return r;
    }
    ++cases;
  }
  r.passed = true;
  r.detail = plural(cases, "group") + " checked with a = " + std::to_string(a);
  return r;
}

} // namespace

std::vector<CriterionResult> run_acceptance(int max_order) {
  using Check = CriterionResult (*)(int);
  const Check checks[] = {
      check_commutator_regression, check_burnside,      check_lambda_invariance,
      check_zword_suite,           check_ena_suite,     check_hall_oracle,
      check_independent_choice,    check_evaluator_laws, check_bounds,
      check_witness_sets,          check_abelian_lemma, check_power_containment,
  };
  std::vector<CriterionResult> results;
  int number = 1;
  for (Check check : checks) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = check(max_order);
    } catch (const std::exception& e) {
      r.number = number;
      r.name = "criterion " + std::to_string(number);
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
    ++number;
  }
  return results;
}

} // namespace groupdef
