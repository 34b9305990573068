#include "groupdef/json_io.hpp"

#include <fstream>
#include <sstream>

#include "groupdef/error.hpp"

namespace groupdef {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string resolve_spec_text(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return read_text_file(arg.substr(1));
  return arg;
}

namespace {

bool looks_like_json_object(const std::string& s) {
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string(what) + ": invalid JSON: " + e.what());
  }
}

} // namespace

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object()) throw Error("group spec: expected a JSON object");
  if (j.contains("table")) {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("order") &&
        j.at("order").get<std::size_t>() != table.size())
      throw Error("group spec: 'order' disagrees with the table size");
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return FiniteGroup::from_table(std::move(table), std::move(names));
  }
  if (j.contains("cycles")) {
    int degree = j.at("degree").get<int>();
    auto cycles = j.at("cycles").get<std::vector<std::string>>();
    return FiniteGroup::from_permutation_generators(degree, cycles);
  }
  throw Error("group spec: need either 'table' or 'cycles'");
}

FiniteGroup group_from_spec(const std::string& arg) {
  std::string text = resolve_spec_text(arg);
  if (looks_like_json_object(text)) return group_from_json(parse_json(text, "group spec"));
  return FiniteGroup::catalog(text);
}

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (const auto& s : w.syllables()) out.push_back(Json::array({s.letter, s.exponent}));
  return out;
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw Error("word spec: expected a JSON array of [letter, exponent]");
  Word w;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw Error("word spec: each entry must be a [letter, exponent] pair");
    w = w * Word::letter(pair.at(0).get<std::string>()).pow(pair.at(1).get<long long>());
  }
  return w;
}

Word word_from_spec(const std::string& arg) {
  std::string text = resolve_spec_text(arg);
  // '[' could open either a commutator or a JSON list; JSON wins if it parses
  if (!text.empty()) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '[') {
      Json j = Json::parse(text, nullptr, false);
      if (!j.is_discarded()) return word_from_json(j);
    }
  }
  return Word::parse(text);
}

Json formula_to_json(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return Json{{"kind", "atom"},
                  {"word", word_to_json(f.atom_word())},
                  {"equal", f.atom_equal()}};
    case Formula::Kind::Not:
      return Json{{"kind", "not"}, {"child", formula_to_json(f.child())}};
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      const char* kind = f.kind() == Formula::Kind::And   ? "and"
                         : f.kind() == Formula::Kind::Or  ? "or"
                                                          : "implies";
      return Json{{"kind", kind},
                  {"left", formula_to_json(f.child(0))},
                  {"right", formula_to_json(f.child(1))}};
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
    default: {
      const char* kind = f.kind() == Formula::Kind::Exists ? "exists" : "forall";
      return Json{{"kind", kind},
                  {"var", f.quantified_var()},
                  {"body", formula_to_json(f.child())}};
    }
  }
}

Formula formula_from_spec(const std::string& arg) {
  return Formula::parse(resolve_spec_text(arg));
}

Json subset_to_json(const FiniteGroup& g, const ElementSubset& s) {
  if (s.group != g.id()) throw Error("subset_to_json: subset belongs to a different group");
  Json names = Json::array();
  for (int e : s.members) names.push_back(g.name_of(e));
  return Json{{"indices", s.members}, {"names", names}};
}

Json ics_to_json(const IndependentChoiceSystem& sys) {
  Json collection = Json::array();
  for (const auto& member : sys.collection)
    collection.push_back(std::vector<std::string>(member.begin(), member.end()));
  Json out{{"ground", std::vector<std::string>(sys.ground.begin(), sys.ground.end())},
           {"collection", collection}};
  if (sys.order) out["order"] = *sys.order;
  return out;
}

IndependentChoiceSystem ics_from_json(const Json& j) {
  if (!j.is_object()) throw Error("ics spec: expected a JSON object");
  IndependentChoiceSystem sys;
  for (const auto& x : j.at("ground").get<std::vector<std::string>>()) sys.ground.insert(x);
  for (const auto& member : j.at("collection")) {
    LetterSet m;
    for (const auto& x : member.get<std::vector<std::string>>()) m.insert(x);
    sys.collection.push_back(std::move(m));
  }
  if (j.contains("order")) sys.order = j.at("order").get<std::vector<int>>();
  return sys;
}

IndependentChoiceSystem ics_from_spec(const std::string& arg) {
  return ics_from_json(parse_json(resolve_spec_text(arg), "ics spec"));
}

namespace {

Word word_from_json_or_text(const Json& j, const char* what) {
  if (j.is_string()) return Word::parse(j.get<std::string>());
  if (j.is_array()) return word_from_json(j);
  throw Error(std::string(what) + ": words must be text or [letter, exponent] lists");
}

} // namespace

Json zword_spec_to_json(const ZWordSpec& spec) {
  Json wr = Json::array(), ore = Json::array();
  for (const auto& w : spec.wr_words) wr.push_back(w.format());
  for (const auto& v : spec.ore_words) ore.push_back(v.format());
  return Json{{"wr_words", wr}, {"ore_words", ore}, {"t", spec.t}, {"mu", spec.mu},
              {"j", spec.j}};
}

ZWordSpec zword_spec_from_json(const Json& j) {
  if (!j.is_object()) throw Error("z-word spec: expected a JSON object");
  ZWordSpec spec;
  for (const auto& w : j.at("wr_words"))
    spec.wr_words.push_back(word_from_json_or_text(w, "z-word spec"));
  if (j.contains("ore_words"))
    for (const auto& w : j.at("ore_words"))
      spec.ore_words.push_back(word_from_json_or_text(w, "z-word spec"));
  spec.t = j.at("t").get<std::vector<int>>();
  spec.mu = j.at("mu").get<std::vector<long long>>();
  spec.j = j.at("j").get<std::vector<std::vector<int>>>();
  return spec;
}

ZWordSpec zword_spec_from_spec(const std::string& arg) {
  return zword_spec_from_json(parse_json(resolve_spec_text(arg), "z-word spec"));
}

} // namespace groupdef
