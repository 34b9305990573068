#include "groupdef/formulae.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "groupdef/error.hpp"
#include "lexer.hpp"
#include "word_parser.hpp"

namespace groupdef {

struct Formula::Node {
  Kind kind;
  Word word;  // Atom
  bool equal = true;
  std::string var; // Exists/Forall
  std::shared_ptr<const Node> a, b;
};

namespace {

Word rename_letters(const Word& w, const std::map<std::string, std::string>& m) {
  if (m.empty()) return w;
  Word out;
  for (const auto& s : w.syllables()) {
    auto it = m.find(s.letter);
    out = out * Word::letter(it == m.end() ? s.letter : it->second, s.exponent);
  }
  return out;
}

} // namespace

Formula Formula::atom(const Word& lhs, bool equal, const Word& rhs) {
  return atom_is_identity(lhs * rhs.inverse(), equal);
}

Formula Formula::atom_is_identity(const Word& w, bool equal) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->word = w;
  n->equal = equal;
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->a = std::move(f.root_);
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->a = std::move(a.root_);
  n->b = std::move(b.root_);
  return Formula(std::move(n));
}

Formula Formula::disjunction(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->a = std::move(a.root_);
  n->b = std::move(b.root_);
  return Formula(std::move(n));
}

Formula Formula::implication(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->a = std::move(a.root_);
  n->b = std::move(b.root_);
  return Formula(std::move(n));
}

Formula Formula::exists(const std::string& var, Formula body) {
  Word::letter(var); // validates the name
  auto n = std::make_shared<Node>();
  n->kind = Kind::Exists;
  n->var = var;
  n->a = std::move(body.root_);
  return Formula(std::move(n));
}

Formula Formula::forall(const std::string& var, Formula body) {
  Word::letter(var);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Forall;
  n->var = var;
  n->a = std::move(body.root_);
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return root_->kind; }

const Word& Formula::atom_word() const {
  if (root_->kind != Kind::Atom) throw Error("not an atom");
  return root_->word;
}

bool Formula::atom_equal() const {
  if (root_->kind != Kind::Atom) throw Error("not an atom");
  return root_->equal;
}

Formula Formula::child(int i) const {
  switch (root_->kind) {
    case Kind::Atom: throw Error("atom has no children");
    case Kind::Not:
    case Kind::Exists:
    case Kind::Forall:
      if (i != 0) throw Error("node has a single child");
      return Formula(root_->a);
    default:
      if (i == 0) return Formula(root_->a);
      if (i == 1) return Formula(root_->b);
      throw Error("child index out of range");
  }
}

const std::string& Formula::quantified_var() const {
  if (root_->kind != Kind::Exists && root_->kind != Kind::Forall)
    throw Error("not a quantifier");
  return root_->var;
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound,
                  std::vector<std::string>& out, std::set<std::string>& seen) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (const auto& s : f.atom_word().syllables()) {
        if (std::find(bound.begin(), bound.end(), s.letter) != bound.end()) continue;
        if (seen.insert(s.letter).second) out.push_back(s.letter);
      }
      break;
    case Formula::Kind::Not:
      collect_free(f.child(), bound, out, seen);
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      bound.push_back(f.quantified_var());
      collect_free(f.child(), bound, out, seen);
      bound.pop_back();
      break;
    default:
      collect_free(f.child(0), bound, out, seen);
      collect_free(f.child(1), bound, out, seen);
  }
}

} // namespace

std::vector<std::string> Formula::free_variables() const {
  std::vector<std::string> bound, out;
  std::set<std::string> seen;
  collect_free(*this, bound, out, seen);
  return out;
}

namespace {

// precedence: quantifier 0 < '->' 1 < '|' 2 < '&' 3 < '!' 4 < atom 5
int formula_precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: return 0;
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    default: return 5;
  }
}

void format_node(const Formula& f, int parent, std::string& out) {
  int prec = formula_precedence(f.kind());
  bool parens = prec < parent;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.atom_word().format();
      out += f.atom_equal() ? " = 1" : " != 1";
      break;
    case Formula::Kind::Not:
      out += '!';
      format_node(f.child(), 4, out);
      break;
    case Formula::Kind::And:
      format_node(f.child(0), 3, out);
      out += " & ";
      format_node(f.child(1), 4, out);
      break;
    case Formula::Kind::Or:
      format_node(f.child(0), 2, out);
      out += " | ";
      format_node(f.child(1), 3, out);
      break;
    case Formula::Kind::Implies:
      format_node(f.child(0), 2, out);
      out += " -> ";
      format_node(f.child(1), 1, out);
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out += f.kind() == Formula::Kind::Exists ? "exists " : "forall ";
      out += f.quantified_var();
      out += ": ";
      format_node(f.child(), 0, out);
      break;
  }
  if (parens) out += ')';
}

} // namespace

std::string Formula::format() const {
  std::string out;
  format_node(*this, 0, out);
  return out;
}

bool Formula::equals(const Formula& other) const {
  if (root_ == other.root_) return true;
  if (root_->kind != other.root_->kind) return false;
  switch (root_->kind) {
    case Kind::Atom:
      return root_->equal == other.root_->equal && root_->word == other.root_->word;
    case Kind::Not:
      return Formula(root_->a).equals(Formula(other.root_->a));
    case Kind::Exists:
    case Kind::Forall:
      return root_->var == other.root_->var && Formula(root_->a).equals(Formula(other.root_->a));
    default:
      return Formula(root_->a).equals(Formula(other.root_->a)) &&
             Formula(root_->b).equals(Formula(other.root_->b));
  }
}

// ---- parsing ----

namespace {

using detail::Lexer;
using detail::Token;

struct FormulaParser {
  Lexer& lx;
  std::set<std::string> used; // every identifier in the input + generated names
  std::vector<std::pair<std::string, std::string>> scope; // (source name, active name)

  std::string fresh(const std::string& base) {
    for (int k = 1;; ++k) {
      std::string cand = base + "_" + std::to_string(k);
      if (used.insert(cand).second) return cand;
    }
  }

  bool currently_bound(const std::string& v) const {
    for (const auto& [orig, active] : scope)
      if (orig == v) return true;
    return false;
  }

  std::map<std::string, std::string> active_map() const {
    std::map<std::string, std::string> m;
    for (const auto& [orig, active] : scope) m[orig] = active; // innermost wins
    return m;
  }

  Formula parse_implies() {
    Formula l = parse_or();
    if (lx.eat_sym("->")) return Formula::implication(std::move(l), parse_implies());
    return l;
  }

  Formula parse_or() {
    Formula l = parse_and();
    while (lx.eat_sym("|")) l = Formula::disjunction(std::move(l), parse_and());
    return l;
  }

  Formula parse_and() {
    Formula l = parse_unary();
    while (lx.eat_sym("&")) l = Formula::conjunction(std::move(l), parse_unary());
    return l;
  }

  bool at_quantifier() const {
    const Token& t = lx.peek();
    return t.kind == Token::Ident && (t.text == "exists" || t.text == "forall");
  }

  Formula parse_unary() {
    if (lx.eat_sym("!")) return Formula::negation(parse_unary());
    if (at_quantifier()) return parse_quantifier();
    return parse_primary();
  }

  Formula parse_quantifier() {
    bool universal = lx.next().text == "forall";
    std::vector<std::pair<std::string, std::string>> vars;
    for (;;) {
      const Token t = lx.peek();
      if (t.kind != Token::Ident || t.text == "exists" || t.text == "forall")
        throw ParseError("expected a variable name", t.pos);
      lx.next();
      std::string active = t.text;
      bool pending = false;
      for (const auto& [o, a] : vars) pending = pending || o == t.text;
      if (currently_bound(t.text) || pending) active = fresh(t.text);
      used.insert(active);
      vars.emplace_back(t.text, active);
      if (!lx.eat_sym(",")) break;
    }
    lx.expect_sym(":");
    for (const auto& v : vars) scope.push_back(v);
    Formula body = parse_implies();
    for (std::size_t i = 0; i < vars.size(); ++i) scope.pop_back();
    Formula f = std::move(body);
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      f = universal ? Formula::forall(it->second, std::move(f))
                    : Formula::exists(it->second, std::move(f));
    return f;
  }

  Formula parse_primary() {
    const std::size_t snap = lx.save();
    try {
      Word lhs = detail::parse_word_expr(lx);
      if (lx.is_sym("=") || lx.is_sym("!=")) {
        bool equal = lx.next().text == "=";
        Word rhs = detail::parse_word_expr(lx);
        auto m = active_map();
        return Formula::atom(rename_letters(lhs, m), equal, rename_letters(rhs, m));
      }
      throw ParseError("expected '=' or '!='", lx.peek().pos);
    } catch (const ParseError&) {
      lx.restore(snap);
    }
    if (lx.eat_sym("(")) {
      Formula f = parse_implies();
      lx.expect_sym(")");
      return f;
    }
    throw ParseError("expected a formula", lx.peek().pos);
  }
};

} // namespace

Formula Formula::parse(const std::string& text) {
  Lexer lx(text);
  std::set<std::string> used;
  {
    Lexer scan(text);
    while (!scan.at_end()) {
      Token t = scan.next();
      if (t.kind == Token::Ident) used.insert(t.text);
    }
  }
  FormulaParser p{lx, std::move(used), {}};
  Formula f = p.parse_implies();
  if (!lx.at_end()) throw ParseError("unexpected trailing input", lx.peek().pos);
  return f;
}

// ---- prenex ----

namespace {

Formula to_nnf(const Formula& f, bool positive) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return positive ? f : Formula::atom_is_identity(f.atom_word(), !f.atom_equal());
    case Formula::Kind::Not:
      return to_nnf(f.child(), !positive);
    case Formula::Kind::And:
      return positive
                 ? Formula::conjunction(to_nnf(f.child(0), true), to_nnf(f.child(1), true))
                 : Formula::disjunction(to_nnf(f.child(0), false), to_nnf(f.child(1), false));
    case Formula::Kind::Or:
      return positive
                 ? Formula::disjunction(to_nnf(f.child(0), true), to_nnf(f.child(1), true))
                 : Formula::conjunction(to_nnf(f.child(0), false), to_nnf(f.child(1), false));
    case Formula::Kind::Implies:
      return positive
                 ? Formula::disjunction(to_nnf(f.child(0), false), to_nnf(f.child(1), true))
                 : Formula::conjunction(to_nnf(f.child(0), true), to_nnf(f.child(1), false));
    case Formula::Kind::Exists:
      return positive ? Formula::exists(f.quantified_var(), to_nnf(f.child(), true))
                      : Formula::forall(f.quantified_var(), to_nnf(f.child(), false));
    default:
      return positive ? Formula::forall(f.quantified_var(), to_nnf(f.child(), true))
                      : Formula::exists(f.quantified_var(), to_nnf(f.child(), false));
  }
}

void collect_all_names(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      for (const auto& s : f.atom_word().syllables()) out.insert(s.letter);
      break;
    case Formula::Kind::Not:
      collect_all_names(f.child(), out);
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out.insert(f.quantified_var());
      collect_all_names(f.child(), out);
      break;
    default:
      collect_all_names(f.child(0), out);
      collect_all_names(f.child(1), out);
  }
}

struct RenameApart {
  std::set<std::string> used;      // all names anywhere; fresh names must avoid these
  std::set<std::string> allocated; // names no longer available for binding
  std::vector<std::pair<std::string, std::string>> scope;

  Formula walk(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        std::map<std::string, std::string> m;
        for (const auto& [o, a] : scope) m[o] = a;
        return Formula::atom_is_identity(rename_letters(f.atom_word(), m), f.atom_equal());
      }
      case Formula::Kind::Not:
        return Formula::negation(walk(f.child()));
      case Formula::Kind::And:
        return Formula::conjunction(walk(f.child(0)), walk(f.child(1)));
      case Formula::Kind::Or:
        return Formula::disjunction(walk(f.child(0)), walk(f.child(1)));
      case Formula::Kind::Implies:
        return Formula::implication(walk(f.child(0)), walk(f.child(1)));
      default: {
        const std::string& var = f.quantified_var();
        std::string active = var;
        if (allocated.count(var)) {
          for (int k = 1;; ++k) {
            std::string cand = var + "_" + std::to_string(k);
            if (!used.count(cand)) { active = cand; break; }
          }
        }
        used.insert(active);
        allocated.insert(active);
        scope.emplace_back(var, active);
        Formula body = walk(f.child());
        scope.pop_back();
        return f.kind() == Formula::Kind::Exists ? Formula::exists(active, std::move(body))
                                                 : Formula::forall(active, std::move(body));
      }
    }
  }
};

struct Pulled {
  std::vector<QuantifierStep> prefix;
  Formula matrix;
};

Pulled pull_quantifiers(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return {{}, f};
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      Pulled l = pull_quantifiers(f.child(0));
      Pulled r = pull_quantifiers(f.child(1));
      l.prefix.insert(l.prefix.end(), r.prefix.begin(), r.prefix.end());
      Formula m = f.kind() == Formula::Kind::And
                      ? Formula::conjunction(std::move(l.matrix), std::move(r.matrix))
                      : Formula::disjunction(std::move(l.matrix), std::move(r.matrix));
      return {std::move(l.prefix), std::move(m)};
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      Pulled b = pull_quantifiers(f.child());
      std::vector<QuantifierStep> prefix;
      prefix.push_back(QuantifierStep{f.kind() == Formula::Kind::Forall, f.quantified_var()});
      prefix.insert(prefix.end(), b.prefix.begin(), b.prefix.end());
      return {std::move(prefix), std::move(b.matrix)};
    }
    default:
      throw Error("internal: negation or implication survived normalization");
  }
}

BoolComb matrix_to_comb(const Formula& m, std::vector<PrenexAtom>& atoms,
                        std::map<std::pair<std::string, bool>, int>& atom_index) {
  switch (m.kind()) {
    case Formula::Kind::Atom: {
      PrenexAtom a{m.atom_word(), !m.atom_equal()};
      auto key = std::make_pair(a.word.format(), a.negated);
      auto it = atom_index.find(key);
      int idx;
      if (it == atom_index.end()) {
        idx = static_cast<int>(atoms.size());
        atom_index.emplace(key, idx);
        atoms.push_back(std::move(a));
      } else {
        idx = it->second;
      }
      return BoolComb::gen("a" + std::to_string(idx));
    }
    case Formula::Kind::And:
      return BoolComb::conjunction(matrix_to_comb(m.child(0), atoms, atom_index),
                                   matrix_to_comb(m.child(1), atoms, atom_index));
    case Formula::Kind::Or:
      return BoolComb::disjunction(matrix_to_comb(m.child(0), atoms, atom_index),
                                   matrix_to_comb(m.child(1), atoms, atom_index));
    default:
      throw Error("internal: unexpected node in prenex matrix");
  }
}

} // namespace

PrenexFormula to_prenex(const Formula& f) {
  Formula nnf = to_nnf(f, true);
  RenameApart ren;
  collect_all_names(nnf, ren.used);
  for (const auto& v : nnf.free_variables()) ren.allocated.insert(v);
  Formula apart = ren.walk(nnf);
  Pulled p = pull_quantifiers(apart);
  std::vector<PrenexAtom> atoms;
  std::map<std::pair<std::string, bool>, int> atom_index;
  BoolComb matrix = matrix_to_comb(p.matrix, atoms, atom_index);
  return PrenexFormula{std::move(p.prefix), std::move(atoms), std::move(matrix)};
}

namespace {

Formula comb_to_formula(const BoolComb& c, const std::vector<PrenexAtom>& atoms) {
  switch (c.kind()) {
    case BoolComb::Kind::Gen: {
      const std::string& name = c.gen_name();
      if (name.size() < 2 || name[0] != 'a')
        throw Error("prenex matrix generator '" + name + "' does not name an atom");
      int idx = 0;
      for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
          throw Error("prenex matrix generator '" + name + "' does not name an atom");
        idx = idx * 10 + (name[i] - '0');
      }
      if (idx >= static_cast<int>(atoms.size()))
        throw Error("prenex matrix generator '" + name + "' is out of range");
      return Formula::atom_is_identity(atoms[idx].word, !atoms[idx].negated);
    }
    case BoolComb::Kind::Not:
      return Formula::negation(comb_to_formula(c.child(), atoms));
    case BoolComb::Kind::And:
      return Formula::conjunction(comb_to_formula(c.child(0), atoms),
                                  comb_to_formula(c.child(1), atoms));
    default:
      return Formula::disjunction(comb_to_formula(c.child(0), atoms),
                                  comb_to_formula(c.child(1), atoms));
  }
}

} // namespace

Formula from_prenex(const PrenexFormula& p) {
  Formula f = comb_to_formula(p.matrix, p.atoms);
  for (auto it = p.prefix.rbegin(); it != p.prefix.rend(); ++it)
    f = it->universal ? Formula::forall(it->var, std::move(f))
                      : Formula::exists(it->var, std::move(f));
  return f;
}

std::string PrenexFormula::format() const { return from_prenex(*this).format(); }

Classification classify(const Formula& f) {
  PrenexFormula p = to_prenex(f);
  Classification c;
  c.existential = std::none_of(p.prefix.begin(), p.prefix.end(),
                               [](const QuantifierStep& q) { return q.universal; });
  c.universal = std::none_of(p.prefix.begin(), p.prefix.end(),
                             [](const QuantifierStep& q) { return !q.universal; });
  c.q_length = 0;
  for (std::size_t i = 0; i < p.prefix.size(); ++i)
    if (i == 0 || p.prefix[i].universal != p.prefix[i - 1].universal) ++c.q_length;
  bool pos_matrix = p.matrix.is_positive();
  bool all_eq = std::none_of(p.atoms.begin(), p.atoms.end(),
                             [](const PrenexAtom& a) { return a.negated; });
  bool all_ne = std::all_of(p.atoms.begin(), p.atoms.end(),
                            [](const PrenexAtom& a) { return a.negated; });
  c.positive = pos_matrix && all_eq;
  c.negative = pos_matrix && all_ne;
  return c;
}

// ---- evaluation ----

namespace {

struct EvalNode {
  Formula::Kind kind;
  CompiledWord word; // Atom
  bool equal = true;
  int slot = -1; // Exists/Forall
  std::unique_ptr<EvalNode> a, b;
};

constexpr long long kCostCap = 1LL << 62;

struct EvalCompiler {
  const FiniteGroup& g;
  std::vector<std::pair<std::string, int>> scope;
  int next_slot;

  std::unique_ptr<EvalNode> compile(const Formula& f, long long& cost) {
    auto nd = std::make_unique<EvalNode>();
    nd->kind = f.kind();
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        std::map<std::string, int> slot_of;
        for (const auto& [name, slot] : scope) slot_of[name] = slot; // innermost wins
        nd->word = CompiledWord(f.atom_word(), slot_of);
        nd->equal = f.atom_equal();
        cost = 1;
        break;
      }
      case Formula::Kind::Not: {
        nd->a = compile(f.child(), cost);
        break;
      }
      case Formula::Kind::Exists:
      case Formula::Kind::Forall: {
        nd->slot = next_slot++;
        scope.emplace_back(f.quantified_var(), nd->slot);
        long long inner = 0;
        nd->a = compile(f.child(), inner);
        scope.pop_back();
        cost = inner > kCostCap / g.order() ? kCostCap : inner * g.order();
        break;
      }
      default: {
        long long ca = 0, cb = 0;
        nd->a = compile(f.child(0), ca);
        nd->b = compile(f.child(1), cb);
        cost = std::min(kCostCap, ca + cb);
        break;
      }
    }
    return nd;
  }
};

bool eval_node(const EvalNode* nd, const FiniteGroup& g, int* slots) {
  switch (nd->kind) {
    case Formula::Kind::Atom: {
      bool is_id = nd->word.eval(g, slots) == g.identity();
      return nd->equal ? is_id : !is_id;
    }
    case Formula::Kind::Not:
      return !eval_node(nd->a.get(), g, slots);
    case Formula::Kind::And:
      return eval_node(nd->a.get(), g, slots) && eval_node(nd->b.get(), g, slots);
    case Formula::Kind::Or:
      return eval_node(nd->a.get(), g, slots) || eval_node(nd->b.get(), g, slots);
    case Formula::Kind::Implies:
      return !eval_node(nd->a.get(), g, slots) || eval_node(nd->b.get(), g, slots);
    case Formula::Kind::Exists: {
      for (int v = 0; v < g.order(); ++v) {
        slots[nd->slot] = v;
        if (eval_node(nd->a.get(), g, slots)) return true;
      }
      return false;
    }
    default: {
      for (int v = 0; v < g.order(); ++v) {
        slots[nd->slot] = v;
        if (!eval_node(nd->a.get(), g, slots)) return false;
      }
      return true;
    }
  }
}

struct CompiledFormula {
  std::unique_ptr<EvalNode> root;
  std::vector<std::string> free_vars;
  int total_slots = 0;
  long long cost = 0;
};

CompiledFormula compile_formula(const FiniteGroup& g, const Formula& f) {
  CompiledFormula out;
  out.free_vars = f.free_variables();
  EvalCompiler c{g, {}, 0};
  for (const auto& v : out.free_vars)
    c.scope.emplace_back(v, c.next_slot++);
  long long cost = 0;
  out.root = c.compile(f, cost);
  out.total_slots = c.next_slot;
  out.cost = cost;
  return out;
}

long long resolve_budget(long long budget) { return budget > 0 ? budget : eval_budget(); }

} // namespace

bool evaluate(const FiniteGroup& g, const Formula& f, const Assignment& a, long long budget) {
  CompiledFormula cf = compile_formula(g, f);
  if (cf.cost > resolve_budget(budget))
    throw BudgetError("formula evaluation exceeds budget of " +
                      std::to_string(resolve_budget(budget)) + " steps");
  std::vector<int> slots(std::max(cf.total_slots, 1), 0);
  for (std::size_t i = 0; i < cf.free_vars.size(); ++i) {
    auto it = a.find(cf.free_vars[i]);
    if (it == a.end()) throw Error("free variable '" + cf.free_vars[i] + "' is not assigned");
    g.require_member(it->second, "evaluate");
    slots[i] = it->second.index;
  }
  return eval_node(cf.root.get(), g, slots.data());
}

bool evaluate(const FiniteGroup& g, const Formula& f, const GroupElement& value,
              long long budget) {
  auto fv = f.free_variables();
  if (fv.size() != 1)
    throw Error("evaluate(value) needs exactly one free variable, found " +
                std::to_string(fv.size()));
  return evaluate(g, f, Assignment{{fv[0], value}}, budget);
}

ElementSubset definable_set(const FiniteGroup& g, const Formula& f, long long budget) {
  auto fv = f.free_variables();
  if (fv.size() != 1)
    throw Error("definable_set needs exactly one free variable, found " +
                std::to_string(fv.size()) + " (use the multi-variable variant)");
  CompiledFormula cf = compile_formula(g, f);
  long long b = resolve_budget(budget);
  if (cf.cost > b / g.order())
    throw BudgetError("definable set enumeration exceeds budget of " + std::to_string(b) +
                      " steps");
  std::vector<int> slots(std::max(cf.total_slots, 1), 0);
  std::vector<int> members;
  for (int v = 0; v < g.order(); ++v) {
    slots[0] = v;
    if (eval_node(cf.root.get(), g, slots.data())) members.push_back(v);
  }
  return ElementSubset{g.id(), std::move(members)};
}

std::vector<std::vector<int>> definable_set_multi(const FiniteGroup& g, const Formula& f,
                                                  long long budget) {
  CompiledFormula cf = compile_formula(g, f);
  const int k = static_cast<int>(cf.free_vars.size());
  long long b = resolve_budget(budget);
  long long outer = 1;
  for (int i = 0; i < k; ++i) {
    if (outer > b / g.order()) throw BudgetError("tuple enumeration exceeds budget");
    outer *= g.order();
  }
  if (cf.cost > b / std::max(outer, 1LL))
    throw BudgetError("tuple enumeration exceeds budget of " + std::to_string(b) + " steps");
  std::vector<int> slots(std::max(cf.total_slots, 1), 0);
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(k, 0);
  for (;;) {
    for (int i = 0; i < k; ++i) slots[i] = tuple[i];
    if (eval_node(cf.root.get(), g, slots.data())) out.push_back(tuple);
    int i = k - 1;
    while (i >= 0) {
      if (++tuple[i] < g.order()) break;
      tuple[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

// ---- named builders ----

Formula word_formula(const Word& w, const std::string& target) {
  LetterSet sup = w.support();
  if (sup.count(target))
    throw Error("target variable '" + target + "' occurs in the word");
  Formula f = Formula::atom(w, true, Word::letter(target));
  for (auto it = sup.rbegin(); it != sup.rend(); ++it)
    f = Formula::exists(*it, std::move(f));
  return f;
}

Formula ena_formula(const Word& w, const std::string& free_letter) {
  LetterSet sup = w.support();
  if (!sup.count(free_letter))
    throw Error("letter '" + free_letter + "' does not occur in the word");
  Formula f = Formula::atom_is_identity(w, false);
  for (auto it = sup.rbegin(); it != sup.rend(); ++it)
    if (*it != free_letter) f = Formula::exists(*it, std::move(f));
  return f;
}

std::optional<EnaParts> ena_parts(const Formula& f) {
  EnaParts parts;
  Formula cur = f;
  while (cur.kind() == Formula::Kind::Exists) {
    parts.bound.push_back(cur.quantified_var());
    cur = cur.child();
  }
  if (parts.bound.empty()) return std::nullopt;
  if (cur.kind() != Formula::Kind::Atom || cur.atom_equal()) return std::nullopt;
  parts.word = cur.atom_word();
  auto fv = f.free_variables();
  if (fv.size() != 1) return std::nullopt;
  parts.free_var = fv[0];
  if (!parts.word.support().count(parts.free_var)) return std::nullopt;
  return parts;
}

Formula torsion_formula(long long m, const std::string& var) {
  if (m < 0) throw Error("torsion exponent must be nonnegative");
  return Formula::atom_is_identity(Word::letter(var).pow(m), true);
}

Formula divisibility_formula(long long n, const std::string& var) {
  if (n < 0) throw Error("divisibility exponent must be nonnegative");
  std::string bound = "x";
  for (int k = 1; bound == var; ++k) bound = "x" + std::to_string(k);
  return Formula::exists(bound,
                         Formula::atom(Word::letter(bound).pow(n), true, Word::letter(var)));
}

Formula projection_formula(const Formula& f, const std::string& keep) {
  auto fv = f.free_variables();
  if (std::find(fv.begin(), fv.end(), keep) == fv.end())
    throw Error("'" + keep + "' is not a free variable of the formula");
  Formula out = f;
  for (auto it = fv.rbegin(); it != fv.rend(); ++it)
    if (*it != keep) out = Formula::exists(*it, std::move(out));
  return out;
}

MultiplesLemmaReport multiples_lemma_check(const FiniteGroup& g, long long n) {
  if (!g.is_abelian()) throw Error("multiples lemma check requires an abelian group");
  MultiplesLemmaReport report;
  report.divisible = definable_set(g, divisibility_formula(n));
  const auto& d = report.divisible;
  bool ok = true;
  // (1) the divisible set contains the cyclic subgroup of each of its members
  for (int x : d.members) {
    int p = x;
    while (p != g.identity()) {
      if (!d.contains(p)) { ok = false; break; }
      p = g.mul(p, x);
    }
  }
  // (2) each outside element has a k > 1 so that powers with exponent not
  // divisible by k stay outside
  for (int x = 0; x < g.order(); ++x) {
    if (d.contains(x)) continue;
    int found = 0;
    int ord = g.element_order(x);
    for (int k = 2; k <= ord && !found; ++k) {
      bool works = true;
      for (int m = 1; m <= g.order() && works; ++m)
        if (m % k != 0 && d.contains(g.power(x, m))) works = false;
      if (works) found = k;
    }
    if (!found) ok = false;
    report.outside_k.emplace_back(x, found);
  }
  report.ok = ok;
  return report;
}

} // namespace groupdef
