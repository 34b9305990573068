#include <fstream>
#include <sstream>

#include "doctest.h"
#include "groupdef/cli.hpp"
#include "groupdef/error.hpp"
#include "groupdef/json_io.hpp"

using namespace groupdef;

namespace {
struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}
} // namespace

TEST_CASE("word serialization round trips") {
  Word w = Word::parse("[x,y]");
  Json j = word_to_json(w);
  CHECK(j == Json::parse(R"([["x",-1],["y",-1],["x",1],["y",1]])"));
  CHECK(word_from_json(j) == w);
  CHECK(word_from_spec("[x,y]") == w);           // not JSON, parsed as text
  CHECK(word_from_spec(R"([["x",2]])") == Word::parse("x^2"));
  // exponent 0 reduces away, exactly as in the text grammar
  CHECK(word_from_json(Json::parse(R"([["x",0]])")) == Word());
  CHECK_THROWS_AS(word_from_json(Json::parse(R"([["x"]])")), Error);
}

TEST_CASE("group specs") {
  CHECK(group_from_spec("S3").order() == 6);
  CHECK(group_from_spec(R"({"table":[[0,1],[1,0]]})").order() == 2);
  CHECK(group_from_spec(R"x({"degree":3,"cycles":["(1 2)","(1 2 3)"]})x").order() == 6);
  CHECK_THROWS_AS(group_from_spec(R"({"order":3,"table":[[0,1],[1,0]]})"), Error);
  CHECK_THROWS_AS(group_from_spec("NoSuchGroup"), Error);
  // '@' loads the spec from a file
  {
    std::ofstream f("/tmp/groupdef_test_group.json");
    f << R"({"table":[[0,1],[1,0]]})";
  }
  CHECK(group_from_spec("@/tmp/groupdef_test_group.json").order() == 2);
  CHECK_THROWS_AS(resolve_spec_text("@/tmp/no_such_file_here"), Error);
}

TEST_CASE("formula and subset serialization") {
  Json j = formula_to_json(Formula::parse("exists x: [x,y] != 1"));
  CHECK(j["kind"] == "exists");
  CHECK(j["body"]["kind"] == "atom");
  CHECK(j["body"]["equal"] == false);
  auto c4 = FiniteGroup::catalog("C4");
  Json s = subset_to_json(c4, make_subset(c4.id(), {2, 0}));
  CHECK(s["indices"] == Json::parse("[0,2]"));
  CHECK(s["names"].size() == 2);
}

TEST_CASE("independent choice system serialization") {
  IndependentChoiceSystem sys;
  sys.ground = {"a", "b", "c"};
  sys.collection = {{"a"}, {"a", "b"}};
  sys.order = std::vector<int>{0, 1};
  IndependentChoiceSystem back = ics_from_json(ics_to_json(sys));
  CHECK(back.ground == sys.ground);
  CHECK(back.collection == sys.collection);
  CHECK(back.order == sys.order);
  ZWordSpec spec{{Word::parse("[x1,x2]")}, {Word::letter("u")}, {0}, {2}, {{0}}};
  ZWordSpec spec_back = zword_spec_from_json(zword_spec_to_json(spec));
  CHECK(build_z(spec_back) == build_z(spec));
}

TEST_CASE("cli: groups") {
  CliRun r = run({"groups", "list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("S3") != std::string::npos);
  CHECK(r.out.find("C6 x C6") != std::string::npos);

  r = run({"groups", "info", "S3", "--json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["order"] == 6);
  CHECK(j["abelian"] == false);
  // deterministic output
  CHECK(run({"groups", "info", "S3", "--json"}).out == r.out);

  CHECK(run({"groups", "info", "NoSuchGroup"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("cli: eval") {
  CliRun r = run({"eval", "--group", "C6", "--formula", "exists x: x^2 = y", "--json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["set"]["indices"] == Json::parse("[0,2,4]"));

  // no free variables: a truth value
  r = run({"eval", "--group", "S3", "--formula", "exists x, y: [x,y] != 1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("true") != std::string::npos);

  CHECK(run({"eval", "--group", "S3", "--formula", "exists x:"}).code == 2);
}

TEST_CASE("cli: word images and weak rationality") {
  CliRun r = run({"words", "values", "--group", "C4", "--word", "x^2", "--json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["set"]["indices"] == Json::parse("[0,2]"));

  CHECK(run({"wr-check", "--group", "S4", "--word", "[x,y]"}).code == 0);
  CHECK(run({"wr-check", "--group", "S4"}).code == 2); // needs --word or --formula
  CHECK(run({"wr-check", "--group", "S4", "--word", "[x,y]", "--formula", "y = 1"}).code ==
        2);
}

TEST_CASE("cli: independent choice") {
  std::string good = R"({"ground":["x1","x2","x3","x4"],)"
                     R"("collection":[["x1"],["x1","x2","x3"],["x1","x3","x4"]]})";
  CliRun r = run({"ics", "check", "--system", good, "--all-orders", "--json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["orders"] == Json::parse("[[0,1,2],[0,2,1]]"));

  std::string bad = R"({"ground":["a"],"collection":[["a"],["a"]]})";
  CHECK(run({"ics", "check", "--system", bad}).code == 1);
}

TEST_CASE("cli: classify and hall") {
  CliRun r = run({"classify", "--formula", "exists x: [x,y] != 1", "--json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["existential"] == true);
  CHECK(j["negative"] == true);
  CHECK(j["q_length"] == 1);

  r = run({"hall", "--preset", "heisenberg", "--word", "[x1,x2]", "--central-only"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k1_1*k2_2 - k1_2*k2_1") != std::string::npos);
  CHECK(run({"hall", "--preset", "free2:3", "--word", "[x1,x2]",
             "--check-homogeneity"})
            .code == 0);
  CHECK(run({"hall", "--preset", "nope", "--word", "x1"}).code == 2);
}
