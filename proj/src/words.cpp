#include "groupdef/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <random>

#include "groupdef/error.hpp"
#include "word_parser.hpp"

namespace groupdef {

namespace {

bool valid_letter_name(const std::string& s) {
  if (s.empty()) return false;
  if (s == "exists" || s == "forall") return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

constexpr long long kMaxWordSyllables = 1000000;

} // namespace

void Word::append(const std::string& letter, long long exponent) {
  if (exponent == 0) return;
  if (!syl_.empty() && syl_.back().letter == letter) {
    syl_.back().exponent += exponent;
    if (syl_.back().exponent == 0) syl_.pop_back();
    return;
  }
  syl_.push_back(Syllable{letter, exponent});
}

Word Word::letter(const std::string& name, long long exponent) {
  if (!valid_letter_name(name)) throw Error("invalid letter name '" + name + "'");
  Word w;
  w.append(name, exponent);
  return w;
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  if (static_cast<long long>(w.syl_.size()) + rhs.syl_.size() > kMaxWordSyllables)
    throw Error("word too long");
  for (const auto& s : rhs.syl_) w.append(s.letter, s.exponent);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.syl_.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
    w.syl_.push_back(Syllable{it->letter, -it->exponent});
  return w;
}

Word Word::pow(long long e) const {
  if (e == 0 || syl_.empty()) return Word();
  if (syl_.size() == 1) return Word::letter(syl_[0].letter, syl_[0].exponent * e);
  long long reps = e < 0 ? -e : e;
  if (reps > kMaxWordSyllables / static_cast<long long>(syl_.size()))
    throw Error("word power too long");
  const Word base = e < 0 ? inverse() : *this;
  Word w;
  for (long long i = 0; i < reps; ++i) w = w * base;
  return w;
}

Word Word::conjugated_by(const Word& u) const { return u.inverse() * *this * u; }

Word Word::commutator(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

LetterSet Word::support() const {
  LetterSet s;
  for (const auto& syl : syl_) s.insert(syl.letter);
  return s;
}

long long Word::exponent_sum(const std::string& letter) const {
  long long sum = 0;
  for (const auto& syl : syl_)
    if (syl.letter == letter) sum += syl.exponent;
  return sum;
}

std::string Word::format() const {
  if (syl_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < syl_.size(); ++i) {
    if (i) out += '*';
    out += syl_[i].letter;
    if (syl_[i].exponent != 1) out += "^" + std::to_string(syl_[i].exponent);
  }
  return out;
}

// ---- parsing ----

namespace detail {

namespace {

Word parse_word_atom(Lexer& lx) {
  const Token t = lx.peek();
  if (t.kind == Token::Ident) {
    if (t.text == "exists" || t.text == "forall")
      throw ParseError("'" + t.text + "' cannot be used as a letter", t.pos);
    lx.next();
    return Word::letter(t.text);
  }
  if (t.kind == Token::Number) {
    if (t.value == 1) {
      lx.next();
      return Word();
    }
    throw ParseError("unexpected number in word (only '1' denotes the identity)", t.pos);
  }
  if (lx.eat_sym("(")) {
    Word w = parse_word_expr(lx);
    lx.expect_sym(")");
    return w;
  }
  if (lx.eat_sym("[")) {
    Word a = parse_word_expr(lx);
    lx.expect_sym(",");
    Word b = parse_word_expr(lx);
    lx.expect_sym("]");
    return Word::commutator(a, b);
  }
  throw ParseError("expected a word", t.pos);
}

Word parse_word_factor(Lexer& lx) {
  Word w = parse_word_atom(lx);
  while (lx.is_sym("^")) {
    lx.next();
    bool neg = false;
    if (lx.eat_sym("-")) neg = true;
    else if (lx.eat_sym("+")) neg = false;
    else if (lx.peek().kind != Token::Number) {
      // conjugation by the next atom
      Word u = parse_word_atom(lx);
      w = w.conjugated_by(u);
      continue;
    }
    const Token t = lx.peek();
    if (t.kind != Token::Number) throw ParseError("expected an exponent", t.pos);
    lx.next();
    w = w.pow(neg ? -t.value : t.value);
  }
  return w;
}

} // namespace

bool starts_word(const Lexer& lx) {
  const Token& t = lx.peek();
  if (t.kind == Token::Ident) return t.text != "exists" && t.text != "forall";
  if (t.kind == Token::Number) return t.value == 1;
  if (t.kind == Token::Sym) return t.text == "(" || t.text == "[";
  return false;
}

Word parse_word_expr(Lexer& lx) {
  Word w = parse_word_factor(lx);
  for (;;) {
    if (lx.eat_sym("*")) {
      w = w * parse_word_factor(lx);
    } else if (starts_word(lx)) {
      w = w * parse_word_factor(lx);
    } else {
      break;
    }
  }
  return w;
}

} // namespace detail

Word Word::parse(const std::string& text) {
  detail::Lexer lx(text);
  Word w = detail::parse_word_expr(lx);
  if (!lx.at_end()) throw ParseError("unexpected trailing input", lx.peek().pos);
  return w;
}

// ---- evaluation ----

long long eval_budget() {
  static const long long cached = [] {
    const char* s = std::getenv("GROUPDEF_BUDGET");
    if (!s || !*s) return 10000000LL;
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (!end || *end != '\0' || v <= 0)
      throw Error("GROUPDEF_BUDGET must be a positive integer");
    return v;
  }();
  return cached;
}

GroupElement evaluate(const FiniteGroup& g, const Word& w, const Assignment& a) {
  int acc = g.identity();
  for (const auto& syl : w.syllables()) {
    auto it = a.find(syl.letter);
    if (it == a.end()) throw Error("letter '" + syl.letter + "' is not assigned");
    g.require_member(it->second, "evaluate");
    acc = g.mul(acc, g.power(it->second.index, syl.exponent));
  }
  return GroupElement{g.id(), acc};
}

CompiledWord::CompiledWord(const Word& w, const std::map<std::string, int>& slot_of) {
  ops_.reserve(w.syllables().size());
  for (const auto& syl : w.syllables()) {
    auto it = slot_of.find(syl.letter);
    if (it == slot_of.end()) throw Error("letter '" + syl.letter + "' has no slot");
    ops_.emplace_back(it->second, syl.exponent);
  }
}

int CompiledWord::eval(const FiniteGroup& g, const int* slots) const {
  int acc = 0;
  for (const auto& [slot, e] : ops_) {
    int x = slots[slot];
    int t;
    if (e == 1) t = x;
    else if (e == -1) t = g.inverse(x);
    else t = g.power(x, e);
    acc = g.mul(acc, t);
  }
  return acc;
}

namespace {

// Splits w into the finest sequence of consecutive syllable blocks whose
// supports are pairwise disjoint.  The word map then factors through
// independent assignments per block, so the image is the product of the
// block images.
std::vector<std::pair<int, int>> disjoint_blocks(const Word& w) {
  const auto& syl = w.syllables();
  std::map<std::string, int> last;
  for (int i = 0; i < static_cast<int>(syl.size()); ++i) last[syl[i].letter] = i;
  std::vector<std::pair<int, int>> blocks;
  int begin = 0, end = 0;
  for (int i = 0; i < static_cast<int>(syl.size()); ++i) {
    end = std::max(end, last[syl[i].letter]);
    if (i == end) {
      blocks.emplace_back(begin, i + 1);
      begin = i + 1;
    }
  }
  return blocks;
}

Word slice_word(const Word& w, int b, int e) {
  Word out;
  for (int i = b; i < e; ++i)
    out = out * Word::letter(w.syllables()[i].letter, w.syllables()[i].exponent);
  return out;
}

// Image of a word all of whose letters are enumerated jointly.
std::vector<char> enumerate_image(const FiniteGroup& g, const Word& w) {
  const LetterSet sup = w.support();
  std::vector<std::string> letters(sup.begin(), sup.end());
  std::map<std::string, int> slot_of;
  for (std::size_t i = 0; i < letters.size(); ++i) slot_of[letters[i]] = static_cast<int>(i);
  CompiledWord cw(w, slot_of);
  const int n = g.order();
  std::vector<char> hit(n, 0);
  std::vector<int> slots(std::max<std::size_t>(letters.size(), 1), 0);
  for (;;) {
    hit[cw.eval(g, slots.data())] = 1;
    std::size_t k = 0;
    while (k < letters.size()) {
      if (++slots[k] < n) break;
      slots[k] = 0;
      ++k;
    }
    if (k == letters.size()) break;
  }
  return hit;
}

} // namespace

ElementSubset word_values(const FiniteGroup& g, const Word& w, long long budget) {
  if (budget <= 0) budget = eval_budget();
  if (w.is_identity()) return ElementSubset{g.id(), {g.identity()}};
  const int n = g.order();
  auto blocks = disjoint_blocks(w);
  // total enumeration cost: sum over blocks of |G|^(letters in block)
  long long total = 0;
  std::vector<Word> block_words;
  for (auto [b, e] : blocks) {
    Word bw = slice_word(w, b, e);
    long long cost = 1;
    for (std::size_t i = 0; i < bw.support().size(); ++i) {
      if (cost > budget / n) {
        cost = budget + 1;
        break;
      }
      cost *= n;
    }
    total = std::min(budget + 1, total + cost);
    block_words.push_back(std::move(bw));
  }
  if (total > budget)
    throw BudgetError("word value enumeration exceeds budget of " + std::to_string(budget) +
                      " evaluations; use sampling for an approximate subset");
  std::vector<char> acc;
  for (const auto& bw : block_words) {
    std::vector<char> img = enumerate_image(g, bw);
    if (acc.empty()) {
      acc = std::move(img);
      continue;
    }
    std::vector<char> next(n, 0);
    for (int a = 0; a < n; ++a)
      if (acc[a])
        for (int b = 0; b < n; ++b)
          if (img[b]) next[g.mul(a, b)] = 1;
    acc = std::move(next);
  }
  std::vector<int> members;
  for (int i = 0; i < n; ++i)
    if (acc[i]) members.push_back(i);
  return ElementSubset{g.id(), std::move(members)};
}

ElementSubset word_values_sampled(const FiniteGroup& g, const Word& w, long long trials,
                                  std::uint64_t seed) {
  if (trials <= 0) throw Error("sample count must be positive");
  const LetterSet sup = w.support();
  std::vector<std::string> letters(sup.begin(), sup.end());
  std::map<std::string, int> slot_of;
  for (std::size_t i = 0; i < letters.size(); ++i) slot_of[letters[i]] = static_cast<int>(i);
  CompiledWord cw(w, slot_of);
  const int n = g.order();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<char> hit(n, 0);
  std::vector<int> slots(std::max<std::size_t>(letters.size(), 1), 0);
  for (long long t = 0; t < trials; ++t) {
    for (std::size_t i = 0; i < letters.size(); ++i) slots[i] = pick(rng);
    hit[cw.eval(g, slots.data())] = 1;
  }
  std::vector<int> members;
  for (int i = 0; i < n; ++i)
    if (hit[i]) members.push_back(i);
  return ElementSubset{g.id(), std::move(members)};
}

// ---- outer-commutator ideal ----

namespace {

using SylVec = std::vector<Syllable>;

// [b, e) slice viewed as a word; input stays reduced under slicing.
std::optional<LetterSet> ideal_letters(const SylVec& s, int b, int e);

bool slice_is_inverse_of(const SylVec& s, int pb, int pe, int vb, int ve) {
  if (pe - pb != ve - vb) return false;
  for (int i = 0; i < pe - pb; ++i) {
    const Syllable& p = s[pb + i];
    const Syllable& v = s[ve - 1 - i];
    if (p.letter != v.letter || p.exponent != -v.exponent) return false;
  }
  return true;
}

LetterSet slice_support(const SylVec& s, int b, int e) {
  LetterSet out;
  for (int i = b; i < e; ++i) out.insert(s[i].letter);
  return out;
}

bool disjoint(const LetterSet& a, const LetterSet& b) {
  for (const auto& x : a)
    if (b.count(x)) return false;
  return true;
}

std::optional<LetterSet> ideal_letters(const SylVec& s, int b, int e) {
  const int len = e - b;
  if (len == 1) {
    if (s[b].exponent == 1) return LetterSet{s[b].letter};
    return std::nullopt;
  }
  if (len < 4 || len % 2 != 0) return std::nullopt;
  const int half = len / 2;
  // candidate split w = v^-1 u^-1 v u with |v| = a; shortest v wins
  for (int a = 1; a <= half - 1; ++a) {
    const int vb = b + half, ve = b + half + a;
    const int ub = ve, ue = e;
    if (!slice_is_inverse_of(s, b, b + a, vb, ve)) continue;
    if (!slice_is_inverse_of(s, b + a, b + half, ub, ue)) continue;
    LetterSet vs = slice_support(s, vb, ve);
    LetterSet us = slice_support(s, ub, ue);
    if (!disjoint(vs, us)) continue;
    auto vletters = ideal_letters(s, vb, ve);
    if (!vletters) continue;
    LetterSet out = *vletters;
    if (auto uletters = ideal_letters(s, ub, ue))
      out.insert(uletters->begin(), uletters->end());
    return out;
  }
  return std::nullopt;
}

} // namespace

IdealMembership ideal_membership(const Word& w) {
  if (w.is_identity()) return {};
  auto r = ideal_letters(w.syllables(), 0, w.length());
  if (!r) return {};
  return IdealMembership{true, std::move(*r)};
}

bool is_outer_commutator_word(const Word& w) { return ideal_membership(w).member; }

} // namespace groupdef
