#include "groupdef/weakrat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "groupdef/error.hpp"

namespace groupdef {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

} // namespace

std::optional<WrViolation> wr_violation(const FiniteGroup& g, const ElementSubset& x) {
  if (x.group != g.id()) throw Error("wr_violation: subset belongs to a different group");
  const long long n = g.order();
  for (int e : x.members)
    for (long long m = 1; m <= n; ++m) {
      if (gcd_ll(m, n) != 1) continue;
      if (!x.contains(g.power(e, m))) return WrViolation{e, m};
    }
  return std::nullopt;
}

bool is_weakly_rational_set(const FiniteGroup& g, const ElementSubset& x) {
  return !wr_violation(g, x).has_value();
}

bool check_wr_equivalence(const FiniteGroup& g, const ElementSubset& x) {
  bool by_group_order = is_weakly_rational_set(g, x);
  bool by_element_order = true;
  for (int e : x.members) {
    long long ord = g.element_order(e);
    for (long long m = 1; m <= ord && by_element_order; ++m) {
      if (gcd_ll(m, ord) != 1) continue;
      if (!x.contains(g.power(e, m))) by_element_order = false;
    }
    if (!by_element_order) break;
  }
  return by_group_order == by_element_order;
}

unsigned long long euler_phi(unsigned long long n) {
  if (n == 0) throw Error("euler_phi(0) is undefined");
  unsigned long long result = n, m = n;
  for (unsigned long long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

Int phi_order_bound(long long n_size) {
  if (n_size < 0) throw Error("bound argument must be nonnegative");
  Int n = n_size;
  return 2 * n * n;
}

Int schur_bound(long long s_size, long long k) {
  if (s_size < 0 || k < 0) throw Error("bound arguments must be nonnegative");
  Int fact = 1;
  for (long long i = 2; i <= s_size; ++i) fact *= i;
  Int power = 1;
  // k^s with the empty-product convention k^0 = 1
  for (long long i = 0; i < s_size; ++i) power *= k;
  return fact * fact * power;
}

Int f_bound(long long n) {
  if (n < 0) throw Error("bound argument must be nonnegative");
  if (n > 100000) throw Error("f_bound argument too large");
  return schur_bound(n, 2 * n * n);
}

bool is_ore_word_on(const FiniteGroup& g, const Word& w, long long budget) {
  return word_values(g, w, budget).size() == g.order();
}

// ---- independent choice systems ----

namespace {

void validate_ics(const IndependentChoiceSystem& sys) {
  for (const auto& member : sys.collection) {
    if (member.empty()) throw Error("independent choice system has an empty member");
    for (const auto& x : member)
      if (!sys.ground.count(x))
        throw Error("member element '" + x + "' is outside the ground set");
  }
}

} // namespace

bool ics_order_valid(const IndependentChoiceSystem& sys, const std::vector<int>& order) {
  validate_ics(sys);
  const int c = static_cast<int>(sys.collection.size());
  if (static_cast<int>(order.size()) != c) return false;
  std::vector<bool> seen(c, false);
  for (int i : order) {
    if (i < 0 || i >= c || seen[i]) return false;
    seen[i] = true;
  }
  LetterSet taken;
  for (int i : order) {
    bool has_new = false;
    for (const auto& x : sys.collection[i])
      if (!taken.count(x)) { has_new = true; break; }
    if (!has_new) return false;
    taken.insert(sys.collection[i].begin(), sys.collection[i].end());
  }
  return true;
}

std::optional<std::vector<int>> ics_find_order(const IndependentChoiceSystem& sys) {
  validate_ics(sys);
  const int c = static_cast<int>(sys.collection.size());
  std::vector<int> remaining(c);
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<int> order(c);
  for (int slot = c - 1; slot >= 0; --slot) {
    int chosen = -1;
    for (std::size_t pick = 0; pick < remaining.size() && chosen < 0; ++pick) {
      // does remaining[pick] own an element outside all other remaining members?
      LetterSet others;
      for (std::size_t o = 0; o < remaining.size(); ++o) {
        if (o == pick) continue;
        const auto& m = sys.collection[remaining[o]];
        others.insert(m.begin(), m.end());
      }
      for (const auto& x : sys.collection[remaining[pick]])
        if (!others.count(x)) { chosen = static_cast<int>(pick); break; }
    }
    if (chosen < 0) return std::nullopt;
    order[slot] = remaining[chosen];
    remaining.erase(remaining.begin() + chosen);
  }
  return order;
}

std::vector<std::vector<int>> ics_all_orders(const IndependentChoiceSystem& sys) {
  validate_ics(sys);
  const int c = static_cast<int>(sys.collection.size());
  std::vector<int> perm(c);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    LetterSet taken;
    bool ok = true;
    for (int i : perm) {
      bool has_new = false;
      for (const auto& x : sys.collection[i])
        if (!taken.count(x)) { has_new = true; break; }
      if (!has_new) { ok = false; break; }
      taken.insert(sys.collection[i].begin(), sys.collection[i].end());
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::map<std::string, GroupElement> ics_solve(const FiniteGroup& g,
                                              const IndependentChoiceSystem& sys,
                                              const std::vector<Word>& d,
                                              const std::vector<GroupElement>& gamma) {
  validate_ics(sys);
  const int c = static_cast<int>(sys.collection.size());
  if (static_cast<int>(d.size()) != c || static_cast<int>(gamma.size()) != c)
    throw Error("ics_solve: d and gamma must match the collection size");
  for (const auto& target : gamma) g.require_member(target, "ics_solve");
  for (int k = 0; k < c; ++k) {
    LetterSet seen;
    for (const auto& s : d[k].syllables()) {
      if (s.exponent != 1 && s.exponent != -1)
        throw Error("ics_solve: d words must be products of letters with exponent +-1");
      if (!seen.insert(s.letter).second)
        throw Error("ics_solve: letter '" + s.letter + "' repeats in a d word");
    }
    if (seen != sys.collection[k])
      throw Error("ics_solve: support of d word " + std::to_string(k) +
                  " does not match its member set");
  }
  std::vector<int> order;
  if (sys.order) {
    if (!ics_order_valid(sys, *sys.order)) throw Error("ics_solve: supplied order is not valid");
    order = *sys.order;
  } else {
    auto found = ics_find_order(sys);
    if (!found) throw Error("ics_solve: the system admits no valid order");
    order = *found;
  }

  std::map<std::string, int> value; // letters fixed so far
  LetterSet consumed;               // union of earlier members
  for (int k : order) {
    // pivot: lexicographically smallest letter not seen in earlier members
    std::string pivot;
    for (const auto& x : sys.collection[k])
      if (!consumed.count(x)) { pivot = x; break; }
    if (pivot.empty()) throw Error("ics_solve: internal: order lost its choice element");
    // default everything else in this member, then isolate the pivot
    for (const auto& s : d[k].syllables())
      if (s.letter != pivot && !value.count(s.letter)) value[s.letter] = g.identity();
    int before = g.identity(), after = g.identity();
    long long eps = 0;
    bool passed_pivot = false;
    for (const auto& s : d[k].syllables()) {
      if (s.letter == pivot) {
        eps = s.exponent;
        passed_pivot = true;
        continue;
      }
      int v = g.power(value.at(s.letter), s.exponent);
      if (passed_pivot) after = g.mul(after, v);
      else before = g.mul(before, v);
    }
    // before * pivot^eps * after = gamma_k
    int rhs = g.mul(g.mul(g.inverse(before), gamma[k].index), g.inverse(after));
    value[pivot] = eps == 1 ? rhs : g.inverse(rhs);
    consumed.insert(sys.collection[k].begin(), sys.collection[k].end());
  }
  for (const auto& x : sys.ground)
    if (!value.count(x)) value[x] = g.identity();

  std::map<std::string, GroupElement> assignment;
  Assignment eval_assignment;
  for (const auto& [name, v] : value) {
    assignment[name] = GroupElement{g.id(), v};
    eval_assignment[name] = GroupElement{g.id(), v};
  }
  for (int k = 0; k < c; ++k)
    if (evaluate(g, d[k], eval_assignment).index != gamma[k].index)
      throw Error("ics_solve: internal: solution failed re-evaluation");
  return assignment;
}

// ---- the z-word construction ----

Word build_z(const ZWordSpec& spec) {
  const int n = static_cast<int>(spec.t.size());
  if (static_cast<int>(spec.mu.size()) != n || static_cast<int>(spec.j.size()) != n)
    throw Error("build_z: t, mu and j must have the same length");
  if (n == 0) throw Error("build_z: empty specification");
  const int wi = static_cast<int>(spec.wr_words.size());
  const int vj = static_cast<int>(spec.ore_words.size());
  for (int k = 0; k < n; ++k) {
    if (spec.t[k] < 0 || spec.t[k] >= wi)
      throw Error("build_z: t(" + std::to_string(k) + ") is out of range");
    for (int idx : spec.j[k])
      if (idx < 0 || idx >= vj)
        throw Error("build_z: selection j_" + std::to_string(k) + " is out of range");
  }
  for (const auto& w : spec.wr_words)
    if (w.is_identity()) throw Error("build_z: empty base word");
  for (const auto& v : spec.ore_words)
    if (v.is_identity()) throw Error("build_z: empty conjugating word");

  // pairwise disjoint supports across all base and conjugating words
  LetterSet used;
  auto claim = [&used](const Word& w, const char* what) {
    for (const auto& letter : w.support())
      if (!used.insert(letter).second)
        throw Error(std::string("build_z: supports not disjoint: letter '") + letter +
                    "' reused by " + what);
  };
  for (const auto& w : spec.wr_words) claim(w, "a base word");
  for (const auto& v : spec.ore_words) claim(v, "a conjugating word");

  // condition (1): selections for different base words use disjoint ore sets
  for (int k = 0; k < n; ++k)
    for (int k2 = k + 1; k2 < n; ++k2) {
      if (spec.t[k] == spec.t[k2]) continue;
      for (int a : spec.j[k])
        for (int b : spec.j[k2])
          if (a == b)
            throw Error("build_z: selections for different base words share conjugator " +
                        std::to_string(a));
    }

  // normalize empty selections: one fresh conjugating letter per base word
  std::map<int, std::string> fresh;
  {
    int counter = 1;
    for (int k = 0; k < n; ++k) {
      int i = spec.t[k];
      if (!spec.j[k].empty() || fresh.count(i)) continue;
      std::string name;
      do {
        name = "a" + std::to_string(counter++);
      } while (used.count(name));
      used.insert(name);
      fresh[i] = name;
    }
  }
  std::vector<Word> d(n);
  for (int k = 0; k < n; ++k) {
    if (spec.j[k].empty()) {
      d[k] = Word::letter(fresh.at(spec.t[k]));
    } else {
      for (int idx : spec.j[k]) d[k] = d[k] * spec.ore_words[idx];
    }
  }

  // condition (2): per base word, the selection supports form an
  // independent-choice system
  for (int i = 0; i < wi; ++i) {
    IndependentChoiceSystem sys;
    bool any = false;
    for (int k = 0; k < n; ++k) {
      if (spec.t[k] != i) continue;
      any = true;
      LetterSet sup = d[k].support();
      sys.ground.insert(sup.begin(), sup.end());
      sys.collection.push_back(std::move(sup));
    }
    if (!any || sys.collection.size() <= 1) continue;
    if (!ics_find_order(sys))
      throw Error("build_z: selections for base word " + std::to_string(i) +
                  " do not form an independent choice system");
  }

  Word z;
  for (int k = 0; k < n; ++k)
    z = z * spec.wr_words[spec.t[k]].pow(spec.mu[k]).conjugated_by(d[k]);
  return z;
}

// ---- witness sets and residuality ----

ElementSubset witness_set_ena(const FiniteGroup& g, const Formula& psi, long long budget) {
  auto parts = ena_parts(psi);
  if (!parts) throw Error("witness_set_ena: formula is not an ena formula");
  ElementSubset base = definable_set(g, psi, budget);
  std::vector<int> members = base.members;

  std::vector<std::string> vars = parts->bound;
  std::map<std::string, int> slot_of;
  for (std::size_t i = 0; i < vars.size(); ++i) slot_of[vars[i]] = static_cast<int>(i);
  slot_of[parts->free_var] = static_cast<int>(vars.size());
  CompiledWord cw(parts->word, slot_of);
  const int n = g.order();
  std::vector<int> slots(vars.size() + 1, 0);
  for (int e : base.members) {
    std::fill(slots.begin(), slots.end(), 0);
    slots[vars.size()] = e;
    // lexicographically first tuple (outermost variable most significant)
    bool found = false;
    for (;;) {
      int v = cw.eval(g, slots.data());
      if (v != g.identity()) {
        members.push_back(v);
        found = true;
        break;
      }
      int i = static_cast<int>(vars.size()) - 1;
      while (i >= 0) {
        if (++slots[i] < n) break;
        slots[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
    if (!found)
      throw Error("witness_set_ena: internal: no witness tuple for a definable element");
  }
  return make_subset(g.id(), std::move(members));
}

std::string to_string(SetComparison c) {
  switch (c) {
    case SetComparison::Equal: return "equal";
    case SetComparison::StrictSubset: return "strict-subset";
    case SetComparison::StrictSuperset: return "strict-superset";
    default: return "incomparable";
  }
}

SetComparison check_residuality(const FiniteGroup& g, const ElementSubset& n, const Formula& phi,
                                long long budget) {
  if (!is_normal_subgroup(g, n)) throw Error("check_residuality: subset is not a normal subgroup");
  Quotient q = quotient(g, n);
  ElementSubset projected = project_subset(q, definable_set(g, phi, budget));
  ElementSubset direct = definable_set(q.group, phi, budget);
  bool sub = subset_includes(direct, projected);
  bool super = subset_includes(projected, direct);
  if (sub && super) return SetComparison::Equal;
  if (sub) return SetComparison::StrictSubset;
  if (super) return SetComparison::StrictSuperset;
  return SetComparison::Incomparable;
}

bool property_star_holds(const FiniteGroup& g, int g_index, int h_index, long long m) {
  const int n = g.order();
  if (g_index < 0 || g_index >= n || h_index < 0 || h_index >= n)
    throw Error("property_star_holds: element index out of range");
  if (std::gcd(m, static_cast<long long>(n)) != 1)
    throw Error("property_star_holds: m must be coprime to the group order");
  const long long ord = g.element_order(h_index);
  long long k = 0, mm = ((m % ord) + ord) % ord;
  for (long long cand = 1; cand <= ord; ++cand)
    if ((cand * mm) % ord == 1 % ord) { k = cand; break; }
  if (k == 0) throw Error("property_star_holds: internal: no inverse of m modulo order(h)");

  const int hm = g.power(h_index, m);
  std::vector<char> d1(n, 0);
  for (int a = 0; a < n; ++a) {
    int base = g.commutator(a, hm);
    for (int c = 0; c < n; ++c) d1[g.conjugate(base, c)] = 1;
  }
  std::vector<char> dk = d1;
  for (long long step = 2; step <= k; ++step) {
    std::vector<char> next(n, 0);
    for (int a = 0; a < n; ++a) {
      if (!dk[a]) continue;
      for (int b = 0; b < n; ++b)
        if (d1[b]) next[g.mul(a, b)] = 1;
    }
    dk = std::move(next);
  }
  return dk[g.commutator(g_index, h_index)] != 0;
}

} // namespace groupdef
