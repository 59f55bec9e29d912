#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "goldman/cli.hpp"
#include "goldman/io.hpp"

using namespace goldman;

namespace {

struct RunResult {
  int code = 0;
  std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << body;
  return path;
}

const std::string kAlphaA1 =
    R"x({"genus":1,"h0":"0/1","h1":{"alpha":["1/1","0/1"],"loops":{"genus":1,"terms":[]}},"h2":{"genus":1,"terms":[]}})x";
const std::string kAlphaB1 =
    R"x({"genus":1,"h0":"0/1","h1":{"alpha":["0/1","1/1"],"loops":{"genus":1,"terms":[]}},"h2":{"genus":1,"terms":[]}})x";
const std::string kH2Mixed =
    R"x({"genus":1,"h0":"0/1","h1":{"alpha":["0/1","0/1"],"loops":{"genus":1,"terms":[]}},"h2":{"genus":1,"terms":[{"coeff":"1/1","class":"(0,0)"},{"coeff":"2/1","class":"(1,1)"}]}})x";
const std::string kBadLoops =
    R"x({"genus":1,"h0":"0/1","h1":{"alpha":["0/1","0/1"],"loops":{"genus":1,"terms":[{"coeff":"1/1","class":"(0,0)"}]}},"h2":{"genus":1,"terms":[]}})x";

}  // namespace

TEST_CASE("class tokens") {
  CHECK(class_to_token(LoopClass::torus(2, -1)) == "(2,-1)");
  CHECK(token_to_class("(2,-1)", 1) == LoopClass::torus(2, -1));
  CHECK(token_to_class(" ( 2 , -1 ) ", 1) == LoopClass::torus(2, -1));
  CHECK(token_to_class("a1 b1 A1", 1) == LoopClass::torus(0, 1));  // abelianized
  CHECK(token_to_class("", 2).is_trivial());
  CHECK(token_to_class("b1 a1", 2) == token_to_class("a1 b1", 2));

  CHECK_THROWS_AS(token_to_class("(1,0)", 2), InputError);
  CHECK_THROWS_AS(token_to_class("(1;0)", 1), InputError);
  CHECK_THROWS_AS(token_to_class("(1,x)", 1), InputError);
  CHECK_THROWS_AS(token_to_class("a3", 2), InputError);
}

TEST_CASE("formal sum json round trip") {
  FormalSum s = FormalSum::zero(2);
  s.add(token_to_class("a1 b1", 2), Rational(-2));
  s.add(token_to_class("a2", 2), Rational(1, 3));
  const Json j = formal_sum_to_json(s);
  CHECK(j["genus"] == 2);
  CHECK(j["terms"].is_array());
  CHECK(j["terms"].size() == 2);
  CHECK(j["terms"][0]["coeff"].is_string());
  CHECK(formal_sum_from_json(j) == s);

  const FormalSum t = formal_sum_from_json(Json::parse(
      R"x({"genus":1,"terms":[{"coeff":"1/1","class":"(1,1)"},{"coeff":"-1/1","class":"(1,1)"}]})x"));
  CHECK(t.is_zero());  // coefficients merge

  CHECK_THROWS_AS(formal_sum_from_json(Json::parse(R"x({"terms":[]})x")), InputError);
  CHECK_THROWS_AS(formal_sum_from_json(Json::parse(R"x({"genus":1,"terms":{}})x")), InputError);
  CHECK_THROWS_AS(
      formal_sum_from_json(
          Json::parse(R"x({"genus":1,"terms":[{"coeff":"1.5","class":"(1,0)"}]})x")),
      InputError);
}

TEST_CASE("bv element json round trip") {
  BVElement e = BVElement::zero(2);
  e.h0 = Rational(-3, 2);
  e.h1_alpha.coords[2] = Rational(5);
  e.h1_loops.add(token_to_class("a1 b1", 2), Rational(2));
  e.h2.add(token_to_class("", 2), Rational(7));
  const Json j = bv_element_to_json(e);
  CHECK(j["h1"]["alpha"].size() == 4);
  CHECK(bv_element_from_json(j) == e);

  CHECK_THROWS_AS(bv_element_from_json(Json::parse(kBadLoops)), InputError);
  Json wrong = j;
  wrong["h1"]["alpha"] = Json::array({"1/1"});
  CHECK_THROWS_AS(bv_element_from_json(wrong), InputError);
}

TEST_CASE("sign config parsing") {
  CHECK(parse_sign_config("(+,+,-,+)") == SignConfig{1, 1, -1, 1});
  CHECK(parse_sign_config("++-+") == SignConfig{1, 1, -1, 1});
  CHECK(parse_sign_config("----") == SignConfig{-1, -1, -1, -1});
  CHECK_THROWS_AS(parse_sign_config("(+,+)"), InputError);
  CHECK_THROWS_AS(parse_sign_config("(+,+,-,*)"), InputError);
  CHECK(parse_sign_config(SignConfig{-1, 1, -1, 1}.to_string()) == SignConfig{-1, 1, -1, 1});
}

TEST_CASE("cli bracket") {
  const RunResult torus = run({"bracket", "1", "(1,0)", "(0,1)", "--json"});
  CHECK(torus.code == 0);
  const Json j = Json::parse(torus.out);
  CHECK(j["terms"].size() == 1);
  CHECK(j["terms"][0]["coeff"] == "1/1");
  CHECK(j["terms"][0]["class"] == "(1,1)");

  const RunResult text = run({"bracket", "1", "(1,0)", "(0,1)"});
  CHECK(text.code == 0);
  CHECK(text.out == "[(1,0), (0,1)] = (1/1)[(1,1)]\n");

  const RunResult self = run({"bracket", "2", "a1", "a1"});
  CHECK(self.code == 0);
  CHECK(self.out.find("= 0") != std::string::npos);

  const RunResult geo = run({"bracket", "2", "a1", "b1", "--json"});
  CHECK(geo.code == 0);
  const Json g = Json::parse(geo.out);
  CHECK(g["terms"].size() == 1);
  CHECK(g["terms"][0]["class"] == "a1 b1");

  const RunResult shallow = run({"bracket", "2", "a1", "b1", "--depth", "2"});
  CHECK(shallow.code == 3);
  CHECK(shallow.err.find("stabilize") != std::string::npos);

  const RunResult shallow_json = run({"bracket", "2", "a1", "b1", "--depth", "2", "--json"});
  CHECK(shallow_json.code == 3);
  CHECK(Json::parse(shallow_json.err)["kind"] == "geometry");
}

TEST_CASE("cli input errors and help") {
  CHECK(run({"bracket", "2", "a3", "b1"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"bracket", "1", "(1,0)"}).code == 2);
  CHECK(run({"bracket", "1", "(1,0)", "(0,1)", "--svg", "/tmp/never.svg"}).code == 2);

  const RunResult help = run({});
  CHECK(help.code == 0);
  CHECK(help.out.find("bracket") != std::string::npos);
  CHECK(run({"--help"}).code == 0);

  const RunResult bad_json = run({"bracket", "2", "a3", "b1", "--json"});
  CHECK(bad_json.code == 2);
  CHECK(Json::parse(bad_json.err)["kind"] == "input");
}

TEST_CASE("cli classes") {
  const RunResult g2 = run({"classes", "2", "1", "--json"});
  CHECK(g2.code == 0);
  const Json j = Json::parse(g2.out);
  CHECK(j["count"] == 9);
  CHECK(j["classes"][0] == "");
  CHECK(j["dims"]["hh0"] == 1);
  CHECK(j["dims"]["hh1"] == 12);
  CHECK(j["dims"]["hh2"] == 9);

  const Json g1 = Json::parse(run({"classes", "1", "1", "--json"}).out);
  CHECK(g1["count"] == 5);
  CHECK(g1["dims"]["hh1"] == 6);

  CHECK(run({"classes", "2", "-1"}).code == 2);
}

TEST_CASE("cli element operations") {
  const auto e1 = write_temp("goldman_cli_e1.json", kAlphaA1);
  const auto e2 = write_temp("goldman_cli_e2.json", kAlphaB1);
  const auto e3 = write_temp("goldman_cli_e3.json", kH2Mixed);
  const auto bad = write_temp("goldman_cli_bad.json", kBadLoops);

  const RunResult cup_r = run({"cup", "1", e1.string(), e2.string(), "--json"});
  CHECK(cup_r.code == 0);
  const Json cj = Json::parse(cup_r.out);
  CHECK(cj["h2"]["terms"].size() == 1);
  CHECK(cj["h2"]["terms"][0]["class"] == "(0,0)");
  CHECK(cj["h2"]["terms"][0]["coeff"] == "1/1");

  const RunResult delta_r = run({"delta", "1", e3.string(), "--json"});
  CHECK(delta_r.code == 0);
  const Json dj = Json::parse(delta_r.out);
  CHECK(dj["h1"]["loops"]["terms"].size() == 1);
  CHECK(dj["h1"]["loops"]["terms"][0]["class"] == "(1,1)");
  CHECK(dj["h2"]["terms"].empty());

  const RunResult ger_r = run({"gerstenhaber", "1", e1.string(), e3.string(), "--json"});
  CHECK(ger_r.code == 0);
  const Json gj = Json::parse(ger_r.out);
  CHECK(gj["h2"]["terms"].size() == 1);
  CHECK(gj["h2"]["terms"][0]["coeff"] == "-2/1");

  CHECK(run({"cup", "2", e1.string(), e2.string()}).code == 2);   // genus mismatch
  CHECK(run({"delta", "1", "/tmp/no_such_file.json"}).code == 2);
  CHECK(run({"delta", "1", bad.string()}).code == 2);             // gamma0 in h1 loops
  CHECK(run({"cup", "1", e1.string(), e2.string(), "--signs", "(+,*)"}).code == 2);
}

TEST_CASE("cli verify") {
  const RunResult bv_ok =
      run({"verify", "--suite", "bv", "--genus", "1", "--samples", "20", "--seed", "7",
           "--json"});
  CHECK(bv_ok.code == 0);
  const Json j = Json::parse(bv_ok.out);
  CHECK(j["all_passed"] == true);
  CHECK(j["checks"].size() == 6);
  CHECK(j["signs"] == "(+,+,-,+)");

  const RunResult bv_bad = run({"verify", "--suite", "bv", "--genus", "1", "--samples", "20",
                                "--seed", "7", "--signs", "(+,+,+,+)"});
  CHECK(bv_bad.code == 1);
  CHECK(bv_bad.out.find("FAIL graded_commutativity") != std::string::npos);

  const RunResult gold =
      run({"verify", "--suite", "goldman", "--genus", "1", "--samples", "40", "--seed", "3",
           "--json"});
  CHECK(gold.code == 0);
  const Json gj = Json::parse(gold.out);
  CHECK(gj["suite"] == "goldman");
  CHECK(gj["all_passed"] == true);
  CHECK(gj["checks"].size() == 3);

  const RunResult gold2 = run({"verify", "--suite", "goldman", "--genus", "2", "--samples",
                               "2", "--seed", "3"});
  CHECK(gold2.code == 0);

  CHECK(run({"verify", "--suite", "unknown"}).code == 2);
  CHECK(run({"verify", "--genus", "1"}).code == 2);  // missing suite
}

TEST_CASE("cli resolve-signs") {
  const RunResult r = run({"resolve-signs", "--samples", "12", "--seed", "7", "--json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["passing"].size() == 8);
  CHECK(j["selected"] == "(+,+,-,+)");
  CHECK(j["reports"].size() == 16);
  CHECK(j["reports"][0]["signs"] == "(+,+,+,+)");
  CHECK(j["reports"][0]["all_passed"] == false);

  const RunResult text = run({"resolve-signs", "--samples", "12", "--seed", "7"});
  CHECK(text.code == 0);
  CHECK(text.out.find("all-plus (+,+,+,+): FAIL graded_commutativity") != std::string::npos);
  CHECK(text.out.find("counterexample:") != std::string::npos);
}

TEST_CASE("cli rep-check") {
  const RunResult r2 = run({"rep-check", "2", "--json"});
  CHECK(r2.code == 0);
  const Json j = Json::parse(r2.out);
  CHECK(j["relator_residual"].get<double>() < 1e-9);
  CHECK(j["hyperbolic_generators"] == true);
  CHECK(j["generator_traces"].size() == 4);

  CHECK(run({"rep-check", "3"}).code == 0);
  CHECK(run({"rep-check", "1"}).code == 2);
}

TEST_CASE("cli svg output") {
  const auto svg = std::filesystem::temp_directory_path() / "goldman_cli_test.svg";
  std::filesystem::remove(svg);
  const RunResult r = run({"bracket", "2", "a1", "b1", "--svg", svg.string()});
  CHECK(r.code == 0);
  REQUIRE(std::filesystem::exists(svg));
  std::ifstream f(svg);
  std::stringstream body;
  body << f.rdbuf();
  const std::string s = body.str();
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("axis of a1") != std::string::npos);
  CHECK(s.find("conjugate axis of b1") != std::string::npos);
  CHECK(s.find("</svg>") != std::string::npos);
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> args{"verify", "--suite", "bv", "--genus", "1", "--samples",
                                      "15", "--seed", "9", "--json"};
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const RunResult c1 = run({"classes", "2", "2"});
  const RunResult c2 = run({"classes", "2", "2"});
  CHECK(c1.out == c2.out);
}
