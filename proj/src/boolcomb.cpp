#include "groupdef/boolcomb.hpp"

#include <algorithm>
#include <random>

#include "groupdef/error.hpp"
#include "lexer.hpp"

namespace groupdef {

struct BoolComb::Node {
  Kind kind;
  std::string name;
  std::shared_ptr<const Node> a, b;
};

BoolComb BoolComb::gen(const std::string& name) {
  if (name.empty()) throw Error("generator name must be nonempty");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Gen;
  n->name = name;
  return BoolComb(std::move(n));
}

BoolComb BoolComb::negation(BoolComb a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->a = std::move(a.root_);
  return BoolComb(std::move(n));
}

BoolComb BoolComb::conjunction(BoolComb a, BoolComb b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->a = std::move(a.root_);
  n->b = std::move(b.root_);
  return BoolComb(std::move(n));
}

BoolComb BoolComb::disjunction(BoolComb a, BoolComb b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->a = std::move(a.root_);
  n->b = std::move(b.root_);
  return BoolComb(std::move(n));
}

BoolComb::Kind BoolComb::kind() const { return root_->kind; }

const std::string& BoolComb::gen_name() const {
  if (root_->kind != Kind::Gen) throw Error("not a generator node");
  return root_->name;
}

BoolComb BoolComb::child(int i) const {
  if (root_->kind == Kind::Gen) throw Error("generator node has no children");
  if (root_->kind == Kind::Not) {
    if (i != 0) throw Error("negation has a single child");
    return BoolComb(root_->a);
  }
  if (i == 0) return BoolComb(root_->a);
  if (i == 1) return BoolComb(root_->b);
  throw Error("child index out of range");
}

namespace {

using detail::Lexer;
using detail::Token;

BoolComb parse_or(Lexer& lx);

BoolComb parse_unary(Lexer& lx) {
  if (lx.eat_sym("!")) return BoolComb::negation(parse_unary(lx));
  if (lx.eat_sym("(")) {
    BoolComb c = parse_or(lx);
    lx.expect_sym(")");
    return c;
  }
  const Token t = lx.peek();
  if (t.kind == Token::Ident) {
    lx.next();
    return BoolComb::gen(t.text);
  }
  throw ParseError("expected a generator, '!' or '('", t.pos);
}

BoolComb parse_and(Lexer& lx) {
  BoolComb c = parse_unary(lx);
  while (lx.eat_sym("&")) c = BoolComb::conjunction(std::move(c), parse_unary(lx));
  return c;
}

BoolComb parse_or(Lexer& lx) {
  BoolComb c = parse_and(lx);
  while (lx.eat_sym("|")) c = BoolComb::disjunction(std::move(c), parse_and(lx));
  return c;
}

} // namespace

BoolComb BoolComb::parse(const std::string& text) {
  Lexer lx(text);
  BoolComb c = parse_or(lx);
  if (!lx.at_end()) throw ParseError("unexpected trailing input", lx.peek().pos);
  return c;
}

namespace {

void collect_support(const BoolComb& c, std::set<std::string>& out) {
  switch (c.kind()) {
    case BoolComb::Kind::Gen: out.insert(c.gen_name()); break;
    case BoolComb::Kind::Not: collect_support(c.child(), out); break;
    default:
      collect_support(c.child(0), out);
      collect_support(c.child(1), out);
  }
}

} // namespace

std::set<std::string> BoolComb::support() const {
  std::set<std::string> out;
  collect_support(*this, out);
  return out;
}

bool BoolComb::evaluate(const std::map<std::string, bool>& assignment) const {
  switch (root_->kind) {
    case Kind::Gen: {
      auto it = assignment.find(root_->name);
      if (it == assignment.end()) throw Error("generator '" + root_->name + "' is not assigned");
      return it->second;
    }
    case Kind::Not: return !BoolComb(root_->a).evaluate(assignment);
    case Kind::And: return BoolComb(root_->a).evaluate(assignment) && BoolComb(root_->b).evaluate(assignment);
    case Kind::Or: return BoolComb(root_->a).evaluate(assignment) || BoolComb(root_->b).evaluate(assignment);
  }
  throw Error("corrupt boolean combination");
}

namespace {

std::vector<char> eval_mask(const BoolComb& c, int n,
                            const std::map<std::string, std::vector<int>>& assignment) {
  switch (c.kind()) {
    case BoolComb::Kind::Gen: {
      auto it = assignment.find(c.gen_name());
      if (it == assignment.end()) throw Error("generator '" + c.gen_name() + "' is not assigned");
      std::vector<char> m(n, 0);
      for (int x : it->second) {
        if (x < 0 || x >= n) throw Error("subset element out of range");
        m[x] = 1;
      }
      return m;
    }
    case BoolComb::Kind::Not: {
      std::vector<char> m = eval_mask(c.child(), n, assignment);
      for (auto& b : m) b = !b;
      return m;
    }
    case BoolComb::Kind::And: {
      std::vector<char> m = eval_mask(c.child(0), n, assignment);
      std::vector<char> r = eval_mask(c.child(1), n, assignment);
      for (int i = 0; i < n; ++i) m[i] = m[i] && r[i];
      return m;
    }
    default: {
      std::vector<char> m = eval_mask(c.child(0), n, assignment);
      std::vector<char> r = eval_mask(c.child(1), n, assignment);
      for (int i = 0; i < n; ++i) m[i] = m[i] || r[i];
      return m;
    }
  }
}

} // namespace

std::vector<int> BoolComb::evaluate_sets(
    int universe_size, const std::map<std::string, std::vector<int>>& assignment) const {
  if (universe_size < 0) throw Error("universe size must be nonnegative");
  std::vector<char> m = eval_mask(*this, universe_size, assignment);
  std::vector<int> out;
  for (int i = 0; i < universe_size; ++i)
    if (m[i]) out.push_back(i);
  return out;
}

bool BoolComb::is_positive() const {
  switch (root_->kind) {
    case Kind::Gen: return true;
    case Kind::Not: return false;
    default: return BoolComb(root_->a).is_positive() && BoolComb(root_->b).is_positive();
  }
}

namespace {

int precedence(BoolComb::Kind k) {
  switch (k) {
    case BoolComb::Kind::Or: return 1;
    case BoolComb::Kind::And: return 2;
    case BoolComb::Kind::Not: return 3;
    default: return 4;
  }
}

void format_node(const BoolComb& c, int parent_prec, std::string& out) {
  int prec = precedence(c.kind());
  bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (c.kind()) {
    case BoolComb::Kind::Gen: out += c.gen_name(); break;
    case BoolComb::Kind::Not:
      out += '!';
      format_node(c.child(), precedence(BoolComb::Kind::Not) + 1, out);
      break;
    case BoolComb::Kind::And:
      format_node(c.child(0), prec, out);
      out += " & ";
      format_node(c.child(1), prec + 1, out);
      break;
    case BoolComb::Kind::Or:
      format_node(c.child(0), prec, out);
      out += " | ";
      format_node(c.child(1), prec + 1, out);
      break;
  }
  if (parens) out += ')';
}

} // namespace

std::string BoolComb::format() const {
  std::string out;
  format_node(*this, 0, out);
  return out;
}

bool BoolComb::equals(const BoolComb& other) const {
  if (root_ == other.root_) return true;
  if (root_->kind != other.root_->kind) return false;
  switch (root_->kind) {
    case Kind::Gen: return root_->name == other.root_->name;
    case Kind::Not: return BoolComb(root_->a).equals(BoolComb(other.root_->a));
    default:
      return BoolComb(root_->a).equals(BoolComb(other.root_->a)) &&
             BoolComb(root_->b).equals(BoolComb(other.root_->b));
  }
}

bool check_monotonicity(const BoolComb& p, long long trials, std::uint64_t seed) {
  const std::set<std::string> sup = p.support();
  std::vector<std::string> gens(sup.begin(), sup.end());
  const std::size_t k = gens.size();
  auto value = [&](const std::vector<char>& bits) {
    std::map<std::string, bool> a;
    for (std::size_t i = 0; i < k; ++i) a[gens[i]] = bits[i] != 0;
    return p.evaluate(a);
  };
  // flipping one generator up must never flip the value down; that local
  // condition is equivalent to full monotonicity
  if (k <= 16) {
    std::vector<char> bits(k, 0);
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
      for (std::size_t i = 0; i < k; ++i) bits[i] = (mask >> i) & 1;
      bool v = value(bits);
      if (!v) continue;
      for (std::size_t i = 0; i < k; ++i) {
        if (bits[i]) continue;
        bits[i] = 1;
        bool up = value(bits);
        bits[i] = 0;
        if (!up) return false;
      }
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::vector<char> bits(k, 0);
  for (long long t = 0; t < trials; ++t) {
    for (std::size_t i = 0; i < k; ++i) bits[i] = static_cast<char>(rng() & 1);
    bool v = value(bits);
    if (!v) continue;
    for (std::size_t i = 0; i < k; ++i) {
      if (bits[i]) continue;
      bits[i] = 1;
      bool up = value(bits);
      bits[i] = 0;
      if (!up) return false;
    }
  }
  return true;
}

} // namespace groupdef
