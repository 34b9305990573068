#pragma once

#include <string>

#include "json.hpp"

#include "groupdef/formulae.hpp"
#include "groupdef/groups.hpp"
#include "groupdef/weakrat.hpp"
#include "groupdef/words.hpp"

namespace groupdef {

using Json = nlohmann::json;

// Reads a whole file; throws Error with the path on failure.
std::string read_text_file(const std::string& path);

// Resolves a command-line spec argument: a leading '@' loads the rest as a
// file path; the result (or the argument itself) is then interpreted by the
// relevant parser.
std::string resolve_spec_text(const std::string& arg);

// Group specs: a catalog name, or JSON with either {"order", "table",
// "names"?} (full multiplication table) or {"degree", "cycles"} (permutation
// generators in cycle notation).
FiniteGroup group_from_json(const Json& j);
FiniteGroup group_from_spec(const std::string& arg);

// Words: text in the word grammar, or a JSON list of [letter, exponent]
// pairs.
Json word_to_json(const Word& w);
Word word_from_json(const Json& j);
Word word_from_spec(const std::string& arg);

// Formulae: text in the formula grammar (JSON export is an AST).
Json formula_to_json(const Formula& f);
Formula formula_from_spec(const std::string& arg);

// Subsets serialize to sorted index arrays plus element names.
Json subset_to_json(const FiniteGroup& g, const ElementSubset& s);

// Independent choice systems: {"ground": [..], "collection": [[..]],
// "order"?: [..]}.
Json ics_to_json(const IndependentChoiceSystem& sys);
IndependentChoiceSystem ics_from_json(const Json& j);
IndependentChoiceSystem ics_from_spec(const std::string& arg);

// Z-word specs mirror the ZWordSpec fields: {"wr_words": [word], "ore_words":
// [word], "t": [int], "mu": [int], "j": [[int]]}.
Json zword_spec_to_json(const ZWordSpec& spec);
ZWordSpec zword_spec_from_json(const Json& j);
ZWordSpec zword_spec_from_spec(const std::string& arg);

} // namespace groupdef
