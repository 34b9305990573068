#include "groupdef/groups.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <random>
#include <set>

#include "groupdef/error.hpp"

namespace groupdef {

namespace {

std::uint64_t next_group_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

using Perm = std::vector<int>; // 0-based images

Perm compose(const Perm& p, const Perm& q) { // p then q
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
  return r;
}

Perm parse_cycles(const std::string& text, int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  std::vector<bool> seen(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw Error("bad cycle notation '" + text + "': expected '('");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
      if (i >= text.size()) throw Error("bad cycle notation '" + text + "': unterminated cycle");
      if (text[i] == ')') { ++i; break; }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error("bad cycle notation '" + text + "': expected point number");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree)
        throw Error("cycle point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
      if (seen[v - 1]) throw Error("point " + std::to_string(v) + " repeated in '" + text + "'");
      seen[v - 1] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (done[s] || p[s] == static_cast<int>(s)) continue;
    out += '(';
    std::size_t x = s;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      done[x] = true;
      first = false;
      x = static_cast<std::size_t>(p[x]);
    } while (x != s);
    out += ')';
  }
  return out.empty() ? "e" : out;
}

struct CatalogAtom {
  char kind;
  int n;
};

CatalogAtom parse_catalog_atom(const std::string& tok) {
  if (tok.empty()) throw Error("empty group name");
  char k = tok[0];
  if (k != 'C' && k != 'D' && k != 'S' && k != 'A' && k != 'Q')
    throw Error("unknown group name '" + tok + "'");
  if (tok.size() < 2) throw Error("group name '" + tok + "' is missing its order parameter");
  int n = 0;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw Error("unknown group name '" + tok + "'");
    n = n * 10 + (tok[i] - '0');
    if (n > 1000000) throw Error("group name '" + tok + "': parameter too large");
  }
  return {k, n};
}

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

FiniteGroup build_cyclic(int n) {
  if (n < 1) throw Error("C" + std::to_string(n) + ": order must be at least 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup build_quaternion8() {
  // index = 2*unit + (negative ? 1 : 0), units ordered e,i,j,k
  auto idx = [](int unit, int sign) { return unit * 2 + (sign < 0 ? 1 : 0); };
  // unit multiplication with sign: u*v = sgn * w
  auto unit_mul = [](int u, int v, int& sgn) -> int {
    if (u == 0) { sgn = 1; return v; }
    if (v == 0) { sgn = 1; return u; }
    if (u == v) { sgn = -1; return 0; }
    // i=1, j=2, k=3: cyclic i*j=k etc., anticommutative
    static const int prod[4][4] = {{0,0,0,0},{0,0,3,2},{0,3,0,1},{0,2,1,0}};
    static const int sign[4][4] = {{1,1,1,1},{1,1,1,-1},{1,-1,1,1},{1,1,-1,1}};
    sgn = sign[u][v];
    return prod[u][v];
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int u = 0; u < 4; ++u)
    for (int su : {1, -1})
      for (int v = 0; v < 4; ++v)
        for (int sv : {1, -1}) {
          int sgn = 1;
          int w = unit_mul(u, v, sgn);
          table[idx(u, su)][idx(v, sv)] = idx(w, su * sv * sgn);
        }
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup::from_table(std::move(table), std::move(names));
}

FiniteGroup build_catalog_atom(const CatalogAtom& a) {
  switch (a.kind) {
    case 'C':
      return build_cyclic(a.n);
    case 'Q':
      if (a.n != 8) throw Error("only Q8 is supported");
      return build_quaternion8();
    case 'D': {
      if (a.n < 2) throw Error("D" + std::to_string(a.n) + ": need n >= 2");
      if (a.n == 2) // Klein four as <(1 2),(3 4)>
        return FiniteGroup::from_permutation_generators(4, {"(1 2)", "(3 4)"});
      std::string rot = "(";
      for (int i = 1; i <= a.n; ++i) rot += (i > 1 ? " " : "") + std::to_string(i);
      rot += ")";
      std::string refl; // fixes 1, swaps i <-> n+2-i
      for (int i = 2; i < a.n + 2 - i; ++i)
        refl += "(" + std::to_string(i) + " " + std::to_string(a.n + 2 - i) + ")";
      return FiniteGroup::from_permutation_generators(a.n, {rot, refl});
    }
    case 'S': {
      if (a.n < 1 || a.n > 5) throw Error("S" + std::to_string(a.n) + ": only n in 1..5 supported");
      if (a.n == 1) return FiniteGroup::from_permutation_generators(1, {});
      std::string cyc = "(";
      for (int i = 1; i <= a.n; ++i) cyc += (i > 1 ? " " : "") + std::to_string(i);
      cyc += ")";
      return FiniteGroup::from_permutation_generators(a.n, {"(1 2)", cyc});
    }
    case 'A': {
      if (a.n < 1 || a.n > 5) throw Error("A" + std::to_string(a.n) + ": only n in 1..5 supported");
      if (a.n <= 2) return FiniteGroup::from_permutation_generators(std::max(1, a.n), {});
      if (a.n == 3) return FiniteGroup::from_permutation_generators(3, {"(1 2 3)"});
      if (a.n == 4) return FiniteGroup::from_permutation_generators(4, {"(1 2 3)", "(2 3 4)"});
      return FiniteGroup::from_permutation_generators(5, {"(1 2 3)", "(3 4 5)"});
    }
    default:
      throw Error("unknown group kind");
  }
}

long long expected_catalog_order(const CatalogAtom& a) {
  switch (a.kind) {
    case 'C': return a.n;
    case 'Q': return 8;
    case 'D': return 2LL * a.n;
    case 'S': { long long f = 1; for (int i = 2; i <= a.n; ++i) f *= i; return f; }
    case 'A': { long long f = 1; for (int i = 2; i <= a.n; ++i) f *= i; return a.n <= 2 ? 1 : f / 2; }
    default: return -1;
  }
}

} // namespace

bool ElementSubset::contains(int index) const {
  return std::binary_search(members.begin(), members.end(), index);
}

ElementSubset make_subset(std::uint64_t group_id, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return ElementSubset{group_id, std::move(indices)};
}

namespace {
void require_same_group(const ElementSubset& a, const ElementSubset& b, const char* what) {
  if (a.group != b.group) throw Error(std::string(what) + ": subsets belong to different groups");
}
} // namespace

ElementSubset subset_union(const ElementSubset& a, const ElementSubset& b) {
  require_same_group(a, b, "subset_union");
  std::vector<int> out;
  std::set_union(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                 std::back_inserter(out));
  return ElementSubset{a.group, std::move(out)};
}

ElementSubset subset_intersection(const ElementSubset& a, const ElementSubset& b) {
  require_same_group(a, b, "subset_intersection");
  std::vector<int> out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out));
  return ElementSubset{a.group, std::move(out)};
}

ElementSubset subset_complement(const FiniteGroup& g, const ElementSubset& a) {
  if (a.group != g.id()) throw Error("subset_complement: subset belongs to a different group");
  std::vector<int> out;
  std::size_t k = 0;
  for (int i = 0; i < g.order(); ++i) {
    if (k < a.members.size() && a.members[k] == i) { ++k; continue; }
    out.push_back(i);
  }
  return ElementSubset{g.id(), std::move(out)};
}

bool subset_includes(const ElementSubset& outer, const ElementSubset& inner) {
  require_same_group(outer, inner, "subset_includes");
  return std::includes(outer.members.begin(), outer.members.end(), inner.members.begin(),
                       inner.members.end());
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error("multiplication table is empty");
  FiniteGroup g;
  g.n_ = n;
  g.id_ = next_group_id();
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw Error("multiplication table is not square");
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n)
        throw Error("table entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
      g.table_[static_cast<std::size_t>(i) * n + j] = v;
    }
  }
  // identity pinned at index 0
  for (int j = 0; j < n; ++j)
    if (g.mul(0, j) != j || g.mul(j, 0) != j)
      throw Error("element 0 is not a two-sided identity");
  // Latin square: rows and columns are permutations
  std::vector<bool> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (int j = 0; j < n; ++j) {
      int v = g.mul(i, j);
      if (seen[v]) throw Error("row " + std::to_string(i) + " is not a permutation");
      seen[v] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (int j = 0; j < n; ++j) {
      int v = g.mul(j, i);
      if (seen[v]) throw Error("column " + std::to_string(i) + " is not a permutation");
      seen[v] = true;
    }
  }
  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) {
        if (g.mul(b, a) != 0)
          throw Error("element " + std::to_string(a) + " has no two-sided inverse");
        g.inverse_[a] = b;
        break;
      }
    if (g.inverse_[a] < 0) throw Error("element " + std::to_string(a) + " has no inverse");
  }
  // associativity: exhaustive for small orders, sampled above that
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw Error("table is not associative at (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
  } else {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 100000; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
        throw Error("table is not associative at (" + std::to_string(a) + "," +
                    std::to_string(b) + "," + std::to_string(c) + ")");
    }
  }
  if (names.empty()) {
    names.resize(n);
    for (int i = 0; i < n; ++i) names[i] = "g" + std::to_string(i);
  }
  if (static_cast<int>(names.size()) != n) throw Error("name list size does not match order");
  {
    std::set<std::string> uniq(names.begin(), names.end());
    if (static_cast<int>(uniq.size()) != n) throw Error("element names are not unique");
  }
  g.names_ = std::move(names);
  return g;
}

FiniteGroup FiniteGroup::from_permutation_generators(int degree,
                                                     const std::vector<std::string>& cycles,
                                                     int order_cap) {
  if (degree < 1) throw Error("permutation degree must be at least 1");
  if (order_cap < 1) throw Error("order cap must be positive");
  std::vector<Perm> gens;
  gens.reserve(cycles.size());
  for (const auto& c : cycles) gens.push_back(parse_cycles(c, degree));

  Perm idp(degree);
  for (int i = 0; i < degree; ++i) idp[i] = i;

  std::vector<Perm> elems{idp};
  std::map<Perm, int> index{{idp, 0}};
  std::vector<int> parent{-1}, via{-1}; // BFS tree: elems[k] = elems[parent[k]] * gens[via[k]]
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Perm next = compose(elems[head], gens[s]);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        parent.push_back(static_cast<int>(head));
        via.push_back(static_cast<int>(s));
        if (static_cast<int>(elems.size()) > order_cap)
          throw Error("group too large: closure exceeded order cap " + std::to_string(order_cap));
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  // columns for generators, then complete through the BFS tree
  std::vector<std::vector<int>> gen_col(gens.size(), std::vector<int>(n));
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (int a = 0; a < n; ++a) gen_col[s][a] = index.at(compose(elems[a], gens[s]));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    table[a][0] = a;
    for (int h = 1; h < n; ++h) table[a][h] = gen_col[via[h]][table[a][parent[h]]];
  }
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = cycle_notation(elems[i]);
  return from_table(std::move(table), std::move(names));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < nb; ++j1) {
      int x = i1 * nb + j1;
      names[x] = "(" + a.name_of(i1) + "," + b.name_of(j1) + ")";
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2)
          table[x][i2 * nb + j2] = a.mul(i1, i2) * nb + b.mul(j1, j2);
    }
  FiniteGroup g = from_table(std::move(table), std::move(names));
  std::string la = a.label().empty() ? "?" : a.label();
  std::string lb = b.label().empty() ? "?" : b.label();
  g.label_ = la + " x " + lb;
  return g;
}

FiniteGroup FiniteGroup::catalog(const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : name) {
    if (ch == 'x') {
      parts.push_back(trimmed(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(trimmed(cur));
  if (parts.empty()) throw Error("empty group name");

  FiniteGroup g;
  bool first = true;
  std::string label;
  for (const auto& p : parts) {
    CatalogAtom atom = parse_catalog_atom(p);
    FiniteGroup h = build_catalog_atom(atom);
    if (h.order() != expected_catalog_order(atom))
      throw Error("internal: catalog group " + p + " has wrong order");
    h.label_ = p;
    if (first) {
      g = std::move(h);
      label = p;
      first = false;
    } else {
      g = direct_product(g, h);
      label += " x " + p;
    }
  }
  g.label_ = label;
  return g;
}

std::vector<std::string> FiniteGroup::catalog_names() {
  return {
      "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12",
      "C2 x C2", "C4 x C2", "C3 x C3",
      "S3", "D4", "Q8", "D5", "A4", "D6", "S3 x C2", "Q8 x C2",
      "S4", "A4 x C2",
      "C5 x C5", "C6 x C6",
  };
}

int FiniteGroup::power(int a, long long e) const {
  if (e < 0) {
    // reduce modulo the element order instead of negating (safe at LLONG_MIN)
    int ord = element_order(a);
    e %= ord;
    if (e < 0) e += ord;
  }
  int acc = 0, base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::conjugate(int a, int b) const { return mul(mul(inverse(b), a), b); }

int FiniteGroup::commutator(int a, int b) const {
  return mul(mul(inverse(a), inverse(b)), mul(a, b));
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
    if (k > n_) throw Error("internal: element order exceeds group order");
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<int> FiniteGroup::index_of(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

GroupElement FiniteGroup::element(int index) const {
  if (index < 0 || index >= n_) throw Error("element index out of range");
  return GroupElement{id_, index};
}

void FiniteGroup::require_member(const GroupElement& g, const char* what) const {
  if (g.group != id_)
    throw Error(std::string(what) + ": element belongs to a different group");
  if (g.index < 0 || g.index >= n_)
    throw Error(std::string(what) + ": element index out of range");
}

ElementSubset FiniteGroup::all_elements() const {
  std::vector<int> m(n_);
  for (int i = 0; i < n_; ++i) m[i] = i;
  return ElementSubset{id_, std::move(m)};
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<bool> done(n, false);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (done[a]) continue;
    std::vector<int> cls;
    std::vector<bool> in(n, false);
    for (int b = 0; b < n; ++b) {
      int c = g.conjugate(a, b);
      if (!in[c]) {
        in[c] = true;
        cls.push_back(c);
        done[c] = true;
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

ElementSubset centre(const FiniteGroup& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b)
      if (g.mul(a, b) != g.mul(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return ElementSubset{g.id(), std::move(z)};
}

ElementSubset subgroup_closure(const FiniteGroup& g, const ElementSubset& seed) {
  if (seed.group != g.id()) throw Error("subgroup_closure: subset belongs to a different group");
  std::vector<bool> in(g.order(), false);
  std::vector<int> queue{0};
  in[0] = true;
  for (int x : seed.members) {
    if (x < 0 || x >= g.order()) throw Error("subgroup_closure: element index out of range");
    if (!in[x]) { in[x] = true; queue.push_back(x); }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int a = queue[head];
    int ia = g.inverse(a);
    if (!in[ia]) { in[ia] = true; queue.push_back(ia); }
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (int p : {g.mul(a, queue[k]), g.mul(queue[k], a)})
        if (!in[p]) { in[p] = true; queue.push_back(p); }
    }
  }
  std::sort(queue.begin(), queue.end());
  return ElementSubset{g.id(), std::move(queue)};
}

bool is_subgroup(const FiniteGroup& g, const ElementSubset& h) {
  if (h.group != g.id()) throw Error("is_subgroup: subset belongs to a different group");
  if (!h.contains(0)) return false;
  for (int a : h.members) {
    if (!h.contains(g.inverse(a))) return false;
    for (int b : h.members)
      if (!h.contains(g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, const ElementSubset& h) {
  return is_subgroup(g, h) && is_normal_subset(g, h);
}

bool is_normal_subset(const FiniteGroup& g, const ElementSubset& x) {
  if (x.group != g.id()) throw Error("is_normal_subset: subset belongs to a different group");
  for (int a : x.members)
    for (int b = 0; b < g.order(); ++b)
      if (!x.contains(g.conjugate(a, b))) return false;
  return true;
}

std::vector<ElementSubset> normal_subgroups(const FiniteGroup& g) {
  auto classes = conjugacy_classes(g);
  const int c = static_cast<int>(classes.size());
  if (c - 1 > 20) throw Error("normal_subgroups: too many conjugacy classes for enumeration");
  std::vector<ElementSubset> result;
  const int n = g.order();
  std::vector<bool> in(n);
  for (std::uint32_t mask = 0; mask < (1u << (c - 1)); ++mask) {
    std::fill(in.begin(), in.end(), false);
    std::vector<int> members = classes[0];
    in[0] = true;
    for (int k = 0; k < c - 1; ++k)
      if (mask & (1u << k))
        for (int e : classes[k + 1]) { members.push_back(e); in[e] = true; }
    bool closed = true;
    for (std::size_t i = 0; i < members.size() && closed; ++i)
      for (std::size_t j = 0; j < members.size() && closed; ++j)
        if (!in[g.mul(members[i], members[j])]) closed = false;
    if (!closed) continue;
    std::sort(members.begin(), members.end());
    result.push_back(ElementSubset{g.id(), std::move(members)});
  }
  std::sort(result.begin(), result.end(), [](const ElementSubset& a, const ElementSubset& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return result;
}

Quotient quotient(const FiniteGroup& g, const ElementSubset& n) {
  if (n.group != g.id()) throw Error("quotient: subset belongs to a different group");
  if (!is_subgroup(g, n)) throw Error("quotient: subset is not a subgroup");
  if (!is_normal_subset(g, n)) throw Error("quotient: subgroup is not normal");
  const int order = g.order();
  std::vector<int> rep(order, -1); // minimal member of the coset of each element
  for (int a = 0; a < order; ++a) {
    if (rep[a] >= 0) continue;
    std::vector<int> coset;
    for (int x : n.members) coset.push_back(g.mul(a, x));
    int m = *std::min_element(coset.begin(), coset.end());
    for (int y : coset) rep[y] = m;
  }
  std::vector<int> reps;
  for (int a = 0; a < order; ++a)
    if (rep[a] == a) reps.push_back(a);
  std::sort(reps.begin(), reps.end());
  std::vector<int> coset_index(order, -1);
  for (std::size_t i = 0; i < reps.size(); ++i) coset_index[reps[i]] = static_cast<int>(i);
  std::vector<int> projection(order);
  for (int a = 0; a < order; ++a) projection[a] = coset_index[rep[a]];

  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  std::vector<std::string> names(q);
  for (int i = 0; i < q; ++i) {
    names[i] = "[" + g.name_of(reps[i]) + "]";
    for (int j = 0; j < q; ++j) table[i][j] = projection[g.mul(reps[i], reps[j])];
  }
  Quotient result{FiniteGroup::from_table(std::move(table), std::move(names)), std::move(projection)};
  return result;
}

ElementSubset project_subset(const Quotient& q, const ElementSubset& x) {
  std::vector<int> img;
  img.reserve(x.members.size());
  for (int a : x.members) {
    if (a < 0 || a >= static_cast<int>(q.projection.size()))
      throw Error("project_subset: element index out of range");
    img.push_back(q.projection[a]);
  }
  return make_subset(q.group.id(), std::move(img));
}

} // namespace groupdef
