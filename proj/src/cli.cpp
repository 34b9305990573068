#include "groupdef/cli.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "groupdef/acceptance.hpp"
#include "groupdef/classring.hpp"
#include "groupdef/error.hpp"
#include "groupdef/formulae.hpp"
#include "groupdef/json_io.hpp"
#include "groupdef/nilpotent.hpp"
#include "groupdef/weakrat.hpp"
#include "groupdef/words.hpp"

namespace groupdef {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

void emit_json(std::ostream& out, Json payload) {
  payload["schema"] = 1;
  out << payload.dump() << "\n";
}

std::string join_names(const FiniteGroup& g, const std::vector<int>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    out += i ? ", " : " ";
    out += g.name_of(members[i]);
  }
  out += members.empty() ? "}" : " }";
  return out;
}

// Splits on top-level commas only, so product element names like "(e,0)"
// survive.
std::vector<std::string> split_class_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& s : out) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  }
  return out;
}

int element_by_name(const FiniteGroup& g, const std::string& name) {
  auto idx = g.index_of(name);
  if (!idx) throw Error("no element named '" + name + "'");
  return *idx;
}

int resolve_class(const ClassRing& ring, const std::string& token) {
  if (token.empty()) throw Error("empty class reference");
  if (std::all_of(token.begin(), token.end(),
                  [](unsigned char c) { return std::isdigit(c); })) {
    int c = std::stoi(token);
    if (c < 0 || c >= ring.class_count())
      throw Error("class index " + token + " out of range");
    return c;
  }
  return ring.class_of(element_by_name(ring.group(), token));
}

struct Options {
  std::string group, word, formula, system, spec, preset, presentation, lambda;
  std::vector<std::string> d_words, gamma;
  long long m = 0;
  long long budget = 0;
  long long sampled = 0;
  long long seed = 0;
  int max_order = 0;
  bool json = false;
  bool verify_burnside_flag = false;
  bool central_only = false;
  bool check_homogeneity = false;
  bool all_orders = false;
};

int cmd_groups_list(const Options& opt, std::ostream& out) {
  Json list = Json::array();
  for (const auto& name : FiniteGroup::catalog_names()) {
    FiniteGroup g = FiniteGroup::catalog(name);
    if (opt.json) {
      list.push_back(Json{{"name", name}, {"order", g.order()}, {"abelian", g.is_abelian()}});
    } else {
      out << std::left << std::setw(10) << name << " order " << std::setw(4) << g.order()
          << (g.is_abelian() ? " abelian" : "") << "\n";
    }
  }
  if (opt.json) emit_json(out, Json{{"groups", list}});
  return kOk;
}

int cmd_groups_info(const Options& opt, std::ostream& out) {
  FiniteGroup g = group_from_spec(opt.group);
  auto classes = conjugacy_classes(g);
  ElementSubset z = centre(g);
  if (opt.json) {
    Json class_list = Json::array();
    for (const auto& c : classes) {
      Json names = Json::array();
      for (int e : c) names.push_back(g.name_of(e));
      class_list.push_back(Json{{"representative", g.name_of(c.front())},
                                {"size", c.size()},
                                {"members", names}});
    }
    emit_json(out, Json{{"label", g.label()},
                        {"order", g.order()},
                        {"abelian", g.is_abelian()},
                        {"classes", class_list},
                        {"centre", subset_to_json(g, z)}});
    return kOk;
  }
  out << (g.label().empty() ? std::string("(unnamed)") : g.label()) << ": order " << g.order()
      << (g.is_abelian() ? ", abelian" : ", non-abelian") << "\n";
  out << "conjugacy classes (" << classes.size() << "):\n";
  for (const auto& c : classes)
    out << "  [" << g.name_of(c.front()) << "] size " << c.size() << "\n";
  out << "centre: " << join_names(g, z.members) << "\n";
  return kOk;
}

int cmd_eval(const Options& opt, std::ostream& out) {
  FiniteGroup g = group_from_spec(opt.group);
  Formula f = formula_from_spec(opt.formula);
  auto free_vars = f.free_variables();
  if (free_vars.empty()) {
    bool value = evaluate(g, f, Assignment{}, opt.budget);
    if (opt.json) emit_json(out, Json{{"value", value}});
    else out << (value ? "true" : "false") << "\n";
    return kOk;
  }
  if (free_vars.size() == 1) {
    ElementSubset set = definable_set(g, f, opt.budget);
    if (opt.json)
      emit_json(out, Json{{"free", free_vars}, {"set", subset_to_json(g, set)}});
    else out << join_names(g, set.members) << "\n";
    return kOk;
  }
  auto tuples = definable_set_multi(g, f, opt.budget);
  if (opt.json) {
    Json rows = Json::array();
    for (const auto& t : tuples) {
      Json row = Json::array();
      for (int e : t) row.push_back(g.name_of(e));
      rows.push_back(row);
    }
    emit_json(out, Json{{"free", free_vars}, {"tuples", rows}});
    return kOk;
  }
  for (const auto& t : tuples) {
    out << "(";
    for (std::size_t i = 0; i < t.size(); ++i) out << (i ? ", " : "") << g.name_of(t[i]);
    out << ")\n";
  }
  return kOk;
}

int cmd_words_values(const Options& opt, std::ostream& out) {
  FiniteGroup g = group_from_spec(opt.group);
  Word w = word_from_spec(opt.word);
  bool exact = opt.sampled <= 0;
  ElementSubset set = exact ? word_values(g, w, opt.budget)
                            : word_values_sampled(g, w, opt.sampled, opt.seed);
  if (opt.json)
    emit_json(out, Json{{"word", w.format()}, {"exact", exact}, {"set", subset_to_json(g, set)}});
  else
    out << join_names(g, set.members) << (exact ? "" : "  (sampled)") << "\n";
  return kOk;
}

int cmd_wr_check(const Options& opt, std::ostream& out) {
  FiniteGroup g = group_from_spec(opt.group);
  ElementSubset set = make_subset(g.id(), {});
  std::string subject;
  if (!opt.word.empty()) {
    Word w = word_from_spec(opt.word);
    subject = w.format();
    set = word_values(g, w, opt.budget);
  } else {
    Formula f = formula_from_spec(opt.formula);
    subject = f.format();
    set = definable_set(g, f, opt.budget);
  }
  auto violation = wr_violation(g, set);
  if (opt.json) {
    Json payload{{"subject", subject}, {"set", subset_to_json(g, set)},
                 {"status", violation ? "violation" : "ok"}};
    if (violation)
      payload["counterexample"] = Json{{"element", g.name_of(violation->element)},
                                       {"m", violation->m},
                                       {"power", g.name_of(g.power(violation->element,
                                                                   violation->m))}};
    emit_json(out, payload);
  } else if (violation) {
    out << "violation: " << g.name_of(violation->element) << "^" << violation->m << " = "
        << g.name_of(g.power(violation->element, violation->m)) << " leaves the set\n";
  } else {
    out << "ok: value set of " << subject << " is weakly rational (" << set.size()
        << " elements)\n";
  }
  return violation ? kViolation : kOk;
}

int cmd_classring(const Options& opt, std::ostream& out) {
  FiniteGroup g = group_from_spec(opt.group);
  ClassRing ring(g);
  if (opt.verify_burnside_flag) {
    if (opt.m == 0) throw Error("--verify-burnside needs --m");
    bool ok = ring.verify_burnside(opt.m);
    if (opt.json) emit_json(out, Json{{"m", opt.m}, {"burnside", ok}});
    else out << "power map by " << opt.m << ": " << (ok ? "ring automorphism" : "FAILED") << "\n";
    return ok ? kOk : kViolation;
  }
  if (!opt.lambda.empty()) {
    auto arrow = opt.lambda.find("->");
    if (arrow == std::string::npos) throw Error("--lambda expects 'C1,...,Cl->C'");
    std::vector<int> tuple;
    for (const auto& token : split_class_list(opt.lambda.substr(0, arrow)))
      tuple.push_back(resolve_class(ring, token));
    std::string target_token = opt.lambda.substr(arrow + 2);
    int target = resolve_class(ring, split_class_list(target_token).at(0));
    Int value = ring.lambda(tuple, target, opt.budget);
    if (opt.json) {
      emit_json(out, Json{{"classes", tuple}, {"target", target}, {"lambda", value.str()}});
    } else {
      out << value.str() << "\n";
    }
    return kOk;
  }
  // no flag: describe the class-sum basis
  if (opt.json) {
    Json list = Json::array();
    for (int c = 0; c < ring.class_count(); ++c)
      list.push_back(Json{{"index", c},
                          {"representative", g.name_of(ring.representative(c))},
                          {"size", ring.classes()[c].size()}});
    emit_json(out, Json{{"order", g.order()}, {"classes", list}});
  } else {
    for (int c = 0; c < ring.class_count(); ++c)
      out << c << ": [" << g.name_of(ring.representative(c)) << "] size "
          << ring.classes()[c].size() << "\n";
  }
  return kOk;
}

Class2Presentation presentation_from_options(const Options& opt) {
  if (!opt.preset.empty()) {
    if (opt.preset == "heisenberg") return Class2Presentation::heisenberg();
    if (opt.preset.rfind("free2:", 0) == 0)
      return Class2Presentation::free_class2(std::stoi(opt.preset.substr(6)));
    throw Error("unknown preset '" + opt.preset + "' (use heisenberg or free2:<s>)");
  }
  if (opt.presentation.empty()) throw Error("need --preset or --presentation");
  Json j = Json::parse(resolve_spec_text(opt.presentation));
  Class2Presentation p;
  p.s = j.at("s").get<int>();
  p.r = j.at("r").get<int>();
  p.kappa = j.at("kappa").get<std::vector<std::vector<long long>>>();
  p.validate();
  return p;
}

int cmd_hall(const Options& opt, std::ostream& out) {
  Class2Presentation p = presentation_from_options(opt);
  Word w = word_from_spec(opt.word);
  auto coord_name = [&p](int i) {
    return i < p.s ? "b" + std::to_string(i + 1) : "c" + std::to_string(i - p.s + 1);
  };
  if (opt.check_homogeneity) {
    bool ok = verify_homogeneity_degree2(p, w);
    if (opt.json) emit_json(out, Json{{"word", w.format()}, {"homogeneous_degree2", ok}});
    else out << "central partials homogeneous of degree 2: " << (ok ? "yes" : "NO") << "\n";
    return ok ? kOk : kViolation;
  }
  std::vector<IntPolynomial> polys;
  int first_index = 0;
  if (opt.central_only) {
    polys = central_partial(p, w);
    first_index = p.s;
  } else {
    polys = hall_polynomials(p, w, static_cast<int>(w.support().size()));
  }
  if (opt.json) {
    Json list = Json::array();
    for (std::size_t i = 0; i < polys.size(); ++i)
      list.push_back(Json{{"coordinate", coord_name(first_index + static_cast<int>(i))},
                          {"polynomial", polys[i].format()}});
    emit_json(out, Json{{"word", w.format()}, {"coordinates", list}});
  } else {
    for (std::size_t i = 0; i < polys.size(); ++i)
      out << coord_name(first_index + static_cast<int>(i)) << ": " << polys[i].format() << "\n";
  }
  return kOk;
}

int cmd_ics_check(const Options& opt, std::ostream& out) {
  IndependentChoiceSystem sys = ics_from_spec(opt.system);
  auto order = ics_find_order(sys);
  Json payload{{"valid", order.has_value()}};
  if (order) payload["order"] = *order;
  if (opt.all_orders) {
    auto all = ics_all_orders(sys);
    payload["orders"] = all;
  }
  if (opt.json) {
    emit_json(out, payload);
  } else if (order) {
    out << "valid; order:";
    for (int i : *order) out << " " << i;
    out << "\n";
    if (opt.all_orders) {
      for (const auto& o : ics_all_orders(sys)) {
        out << "  order:";
        for (int i : o) out << " " << i;
        out << "\n";
      }
    }
  } else {
    out << "not a system of independent choice (no valid order)\n";
  }
  return order ? kOk : kViolation;
}

int cmd_ics_solve(const Options& opt, std::ostream& out) {
  IndependentChoiceSystem sys = ics_from_spec(opt.system);
  FiniteGroup g = group_from_spec(opt.group);
  std::vector<Word> d;
  for (const auto& text : opt.d_words) d.push_back(word_from_spec(text));
  std::vector<GroupElement> gamma;
  for (const auto& name : opt.gamma) gamma.push_back(g.element(element_by_name(g, name)));
  auto assignment = ics_solve(g, sys, d, gamma);
  if (opt.json) {
    Json map = Json::object();
    for (const auto& [letter, value] : assignment) map[letter] = g.name_of(value.index);
    emit_json(out, Json{{"assignment", map}, {"verified", true}});
  } else {
    for (const auto& [letter, value] : assignment)
      out << letter << " = " << g.name_of(value.index) << "\n";
  }
  return kOk;
}

int cmd_build_z(const Options& opt, std::ostream& out) {
  ZWordSpec spec = zword_spec_from_spec(opt.spec);
  Word z = build_z(spec);
  if (opt.json) emit_json(out, Json{{"word", z.format()}, {"letters", z.support().size()}});
  else out << z.format() << "\n";
  return kOk;
}

int cmd_witness(const Options& opt, std::ostream& out) {
  FiniteGroup g = group_from_spec(opt.group);
  Formula f = formula_from_spec(opt.formula);
  ElementSubset w = witness_set_ena(g, f, opt.budget);
  if (opt.json)
    emit_json(out, Json{{"formula", f.format()}, {"witness_set", subset_to_json(g, w)}});
  else
    out << join_names(g, w.members) << "\n";
  return kOk;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  Formula f = formula_from_spec(opt.formula);
  Classification c = classify(f);
  if (opt.json) {
    emit_json(out, Json{{"existential", c.existential},
                        {"universal", c.universal},
                        {"positive", c.positive},
                        {"negative", c.negative},
                        {"q_length", c.q_length}});
  } else {
    out << "existential: " << (c.existential ? "yes" : "no")
        << "\nuniversal: " << (c.universal ? "yes" : "no")
        << "\npositive: " << (c.positive ? "yes" : "no")
        << "\nnegative: " << (c.negative ? "yes" : "no") << "\nq-length: " << c.q_length << "\n";
  }
  return kOk;
}

int cmd_search_non_commutators(const Options& opt, std::ostream& out) {
  int max_order = opt.max_order > 0 ? opt.max_order : 48;
  if (max_order > 48) throw Error("--max-order is capped at 48 (catalog scope)");
  Word comm = Word::parse("[x,y]");
  Json rows = Json::array();
  for (const auto& name : FiniteGroup::catalog_names()) {
    FiniteGroup g = FiniteGroup::catalog(name);
    if (g.order() > max_order) continue;
    ElementSubset values = word_values(g, comm);
    int missing = g.order() - values.size();
    bool flagged = missing == 1 && g.order() > 2;
    bool boundary = missing == 1 && g.order() == 2;
    if (opt.json) {
      rows.push_back(Json{{"group", name},
                          {"order", g.order()},
                          {"non_commutators", missing},
                          {"flagged", flagged},
                          {"known_boundary_case", boundary}});
    } else {
      out << std::left << std::setw(10) << name << " non-commutators: " << std::setw(4)
          << missing;
      if (flagged) out << "  << exactly one non-commutator";
      if (boundary) out << "  (known boundary case)";
      out << "\n";
    }
  }
  if (opt.json) emit_json(out, Json{{"max_order", max_order}, {"report", rows}});
  return kOk;
}

int cmd_verify_all(const Options& opt, std::ostream& out) {
  auto results = run_acceptance(opt.max_order);
  bool all_passed = true;
  Json rows = Json::array();
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    if (opt.json) {
      rows.push_back(Json{{"number", r.number},
                          {"name", r.name},
                          {"passed", r.passed},
                          {"seconds", static_cast<long long>(r.seconds * 1000) / 1000.0},
                          {"detail", r.detail}});
    } else {
      out << "criterion " << std::setw(2) << r.number << " [" << r.name << "]: "
          << (r.passed ? "pass" : "FAIL") << " (" << std::fixed << std::setprecision(2)
          << r.seconds << " s)";
      if (!r.detail.empty()) out << " — " << r.detail;
      out << "\n";
    }
  }
  if (opt.json) emit_json(out, Json{{"criteria", rows}, {"all_passed", all_passed}});
  else out << (all_passed ? "all criteria passed" : "SOME CRITERIA FAILED") << "\n";
  return all_passed ? kOk : kViolation;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite-group calculator for word images, definability and weak rationality"};
  app.require_subcommand(1);
  app.footer("Word-image budgets default to 10^7 enumeration steps; set GROUPDEF_BUDGET to "
             "override globally, or pass --budget where available.");
  Options opt;

  auto add_json = [&opt](CLI::App* cmd) { cmd->add_flag("--json", opt.json, "JSON output"); };
  auto add_group = [&opt](CLI::App* cmd) {
    cmd->add_option("--group", opt.group,
                    "catalog name, inline JSON, or @file.json")->required();
  };
  auto add_budget = [&opt](CLI::App* cmd) {
    cmd->add_option("--budget", opt.budget, "evaluation budget override");
  };

  CLI::App* groups = app.add_subcommand("groups", "catalog access");
  groups->require_subcommand(1);
  CLI::App* groups_list = groups->add_subcommand("list", "list the group catalog");
  add_json(groups_list);
  CLI::App* groups_info = groups->add_subcommand("info", "order, classes and centre");
  groups_info->add_option("group", opt.group, "catalog name, inline JSON, or @file.json")
      ->required();
  add_json(groups_info);

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a formula over a group");
  add_group(eval_cmd);
  eval_cmd->add_option("--formula", opt.formula, "formula text or @file")->required();
  add_budget(eval_cmd);
  add_json(eval_cmd);

  CLI::App* words_cmd = app.add_subcommand("words", "word operations");
  words_cmd->require_subcommand(1);
  CLI::App* words_values = words_cmd->add_subcommand("values", "image of a word map");
  add_group(words_values);
  words_values->add_option("--word", opt.word, "word text or @file")->required();
  words_values->add_option("--sampled", opt.sampled,
                           "trial count for sampled (approximate) images");
  words_values->add_option("--seed", opt.seed, "seed for --sampled")->default_val(0);
  add_budget(words_values);
  add_json(words_values);

  CLI::App* wr = app.add_subcommand("wr-check", "weak rationality of a value set");
  add_group(wr);
  CLI::Option* wr_word = wr->add_option("--word", opt.word, "word whose image to check");
  wr->add_option("--formula", opt.formula, "formula whose definable set to check")
      ->excludes(wr_word);
  add_budget(wr);
  add_json(wr);

  CLI::App* cr = app.add_subcommand("classring", "centre of the integral group ring");
  add_group(cr);
  cr->add_flag("--verify-burnside", opt.verify_burnside_flag,
               "check the power map is a ring automorphism of the centre");
  cr->add_option("--m", opt.m, "exponent for --verify-burnside (coprime to |G|)");
  cr->add_option("--lambda", opt.lambda,
                 "structure constant, e.g. '1,2->0' or '(1 2),(1 2)->e'");
  add_budget(cr);
  add_json(cr);

  CLI::App* hall = app.add_subcommand("hall", "class-2 multiplication polynomials");
  hall->add_option("--preset", opt.preset, "heisenberg or free2:<s>");
  hall->add_option("--presentation", opt.presentation, "JSON {s, r, kappa} or @file");
  hall->add_option("--word", opt.word, "word text or @file")->required();
  hall->add_flag("--central-only", opt.central_only,
                 "central partial polynomials (central inputs zeroed)");
  hall->add_flag("--check-homogeneity", opt.check_homogeneity,
                 "verify central partials are homogeneous of degree 2");
  add_json(hall);

  CLI::App* ics = app.add_subcommand("ics", "systems of independent choice");
  ics->require_subcommand(1);
  CLI::App* ics_check = ics->add_subcommand("check", "validate and order a system");
  ics_check->add_option("--system", opt.system, "JSON system or @file")->required();
  ics_check->add_flag("--all-orders", opt.all_orders, "enumerate every valid order");
  add_json(ics_check);
  CLI::App* ics_solve_cmd = ics->add_subcommand("solve", "solve d_k = gamma_k by choices");
  ics_solve_cmd->add_option("--system", opt.system, "JSON system or @file")->required();
  add_group(ics_solve_cmd);
  ics_solve_cmd->add_option("--d", opt.d_words, "one word per member, in collection order")
      ->required();
  ics_solve_cmd->add_option("--gamma", opt.gamma, "one target element name per member")
      ->required();
  add_json(ics_solve_cmd);

  CLI::App* build = app.add_subcommand("build-z", "assemble a product of conjugated powers");
  build->add_option("--spec", opt.spec, "JSON z-word spec or @file")->required();
  add_json(build);

  CLI::App* wit = app.add_subcommand("witness", "witness set of an ena formula");
  add_group(wit);
  wit->add_option("--formula", opt.formula, "ena formula text or @file")->required();
  add_budget(wit);
  add_json(wit);

  CLI::App* cls = app.add_subcommand("classify", "prenex shape of a formula");
  cls->add_option("--formula", opt.formula, "formula text or @file")->required();
  add_json(cls);

  CLI::App* search = app.add_subcommand("search", "catalog searches");
  search->require_subcommand(1);
  CLI::App* noncomm = search->add_subcommand("non-commutators",
                                             "elements outside the commutator-word image");
  noncomm->add_option("--max-order", opt.max_order, "largest group order to scan (<= 48)");
  add_json(noncomm);

  CLI::App* verify = app.add_subcommand("verify", "batch verification");
  verify->require_subcommand(1);
  CLI::App* verify_all = verify->add_subcommand("all", "run the full verification suite");
  verify_all->add_option("--max-order", opt.max_order,
                         "extra cap on catalog group orders (0 = per-check defaults)");
  add_json(verify_all);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (groups_list->parsed()) return cmd_groups_list(opt, out);
    if (groups_info->parsed()) return cmd_groups_info(opt, out);
    if (eval_cmd->parsed()) return cmd_eval(opt, out);
    if (words_values->parsed()) return cmd_words_values(opt, out);
    if (wr->parsed()) {
      if (opt.word.empty() && opt.formula.empty())
        throw Error("wr-check needs --word or --formula");
      return cmd_wr_check(opt, out);
    }
    if (cr->parsed()) return cmd_classring(opt, out);
    if (hall->parsed()) return cmd_hall(opt, out);
    if (ics_check->parsed()) return cmd_ics_check(opt, out);
    if (ics_solve_cmd->parsed()) return cmd_ics_solve(opt, out);
    if (build->parsed()) return cmd_build_z(opt, out);
    if (wit->parsed()) return cmd_witness(opt, out);
    if (cls->parsed()) return cmd_classify(opt, out);
    if (noncomm->parsed()) return cmd_search_non_commutators(opt, out);
    if (verify_all->parsed()) return cmd_verify_all(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

} // namespace groupdef
