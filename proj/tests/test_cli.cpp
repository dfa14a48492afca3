#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mixeddet/cli.hpp"
#include "mixeddet/generators.hpp"
#include "mixeddet/io.hpp"
#include "mixeddet/mixeddet.hpp"
#include "mixeddet/theorems.hpp"
#include "support.hpp"

using namespace testing;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = mixeddet::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() {
    dir_ = fs::temp_directory_path() / ("mixeddet_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string write_json(const std::string& name, const Json& j) { return write(name, j.dump()); }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("parse_input") {
  Scratch s;
  const auto one = parse_input(s.write("one.json", R"({"n":1, "entries":[[["2","0"]]]})"));
  REQUIRE(std::holds_alternative<HermitianMatrix>(one));
  CHECK(std::get<HermitianMatrix>(one) == diag({2}));

  const auto herm = parse_input(
      s.write("herm.json", "{\"n\":2, \"entries\":[[[\"0\",\"0\"],[\"0\",\"1\"]],[[\"0\",\"\xE2\x88\x92" "1\"],[\"0\",\"0\"]]]}"));
  REQUIRE(std::holds_alternative<HermitianMatrix>(herm));
  const auto& h = std::get<HermitianMatrix>(herm);
  CHECK(h(0, 1) == GaussianRational(Rational(0), Rational(1)));
  CHECK(h(1, 0) == GaussianRational(Rational(0), Rational(-1)));

  const std::string skew = R"({"n":2, "entries":[[["1","0"],["3","0"]],[["4","0"],["1","0"]]]})";
  try {
    parse_input(s.write("skew.json", skew));
    FAIL("accepted a non-Hermitian matrix");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("(1, 2)") != std::string::npos);
  }
  Json sym = Json::parse(skew);
  sym["symmetrize"] = true;
  CHECK(std::get<HermitianMatrix>(parse_input(s.write_json("sym.json", sym)))(0, 1) == GaussianRational(q("7/2")));

  CHECK_THROWS_AS(parse_input(s.write("bad.json", "{\"n\": 2,")), std::invalid_argument);
  CHECK_THROWS_AS(parse_input(s.write("shape.json", R"({"n":2, "entries":[[["1","0"]]]})")), std::invalid_argument);
  CHECK_THROWS_AS(parse_input((fs::temp_directory_path() / "mixeddet_missing.json").string()), std::invalid_argument);

  const Result r = run({"eta", s.write("skew2.json", skew)});
  CHECK(r.code == 2);
  CHECK(r.err.find("(1, 2)") != std::string::npos);
}

TEST_CASE("eta-char example") {
  Scratch s;
  const auto a = s.write_json("a.json", to_json(HermitianMatrix::identity(2)));
  const auto b = s.write_json("b.json", to_json(diag({2, 3})));
  const Result r = run({"eta-char", a, b});
  CHECK(r.code == 0);
  const Json j = r.json();
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "eta-char");
  CHECK(j["polynomial"] == Json::array({"6", "-5", "1"}));
  CHECK(run({"--mode", "float", "eta-char", a, b}).code == 2);
}

TEST_CASE("eta in both modes") {
  Scratch s;
  const auto a = s.write_json("a.json", to_json(HermitianMatrix::identity(2)));
  const auto b = s.write_json("b.json", to_json(diag({2, 3})));
  const Json exact = run({"eta", a, b}).json();
  CHECK(exact["value"] == "12");
  CHECK(run({"eta", "--method", "naive", a, b}).json()["value"] == "12");
  const Json fl = run({"--mode", "float", "eta", a, b}).json();
  CHECK(fl["value"].get<double>() == doctest::Approx(12.0));
  CHECK(run({"eta", a, s.write_json("c.json", to_json(HermitianMatrix::identity(3)))}).code == 2);
}

TEST_CASE("eta-pencil") {
  Scratch s;
  const auto zi = s.write_json("zi.json", to_json(HermitianMatrix::identity(2)));
  const Json ip = to_json(Pencil({HermitianMatrix::zero(2)}, HermitianMatrix::identity(2)));
  const auto id = s.write_json("id.json", ip);
  // zI alone gives z^2, with the identity pencil (1 + z)^2
  const MultiPoly z1 = MultiPoly::variable(1, 0);
  const MultiPoly sq = multipoly_from_json(run({"eta-pencil", zi}).json()["polynomial"]);
  CHECK(sq == z1 * z1);
  const MultiPoly one_plus = z1 + MultiPoly::constant(1, Rational(1));
  CHECK(multipoly_from_json(run({"eta-pencil", zi, id}).json()["polynomial"]) == one_plus * one_plus);
  CHECK(multipoly_from_json(run({"eta-pencil", "--method", "interpolation", zi, id}).json()["polynomial"]) ==
        one_plus * one_plus);

  const Result aug = run({"eta-pencil", "--augment", "1", zi});
  CHECK(aug.code == 0);
  CHECK(aug.json()["nvars"] == 2);
  CHECK(run({"eta-pencil", "--augment", "3", zi}).code == 2);
}

TEST_CASE("fischer and majorize") {
  Scratch s;
  const auto a = s.write_json("a.json", to_json(diag({1, 2})));
  const Json k1 = run({"fischer", a, "--k", "1"}).json();
  CHECK(k1["result"]["sum"] == "4");
  CHECK(k1["result"]["average"] == "2");
  CHECK(run({"fischer", a, "--alpha", "1,1"}).json()["result"]["average"] == "2");
  CHECK(run({"fischer", a}).json()["by_k"].size() == 3);
  CHECK(run({"fischer", a, "--alpha", "1,2"}).code == 2);

  CHECK(run({"majorize", "1,1,0", "2,0,0"}).code == 0);
  CHECK(run({"majorize", "2,0,0", "1,1,0"}).code == 1);
  const Json p = run({"majorize", "2,2", "3,1", "--pinch", "1", "--t", "1"}).json();
  CHECK(p["pinch"] == Json::array({2, 2}));
  CHECK(run({"majorize", "1,x", "2,0"}).code == 2);
}

TEST_CASE("stable check") {
  Scratch s;
  const MultiPoly z1 = MultiPoly::variable(2, 0), z2 = MultiPoly::variable(2, 1);
  const MultiPoly one = MultiPoly::constant(2, Rational(1));
  const auto f = s.write_json("f.json", to_json(z1 * z2 + one));
  const Result r = run({"stable", "check", "--mode", "multiaffine", f});
  CHECK(r.code == 1);
  const Json v = r.json()["verdict"];
  CHECK(v["status"] == "CERTIFIED_UNSTABLE");
  CHECK(!v["witness"].is_null());

  const auto g = s.write_json("g.json", to_json(z1 * z2 - one));
  CHECK(run({"stable", "check", "--mode", "multiaffine", g}).code == 0);
  const Json lines = run({"stable", "check", "--mode", "lines", "--trials", "50", "--seed", "9", g}).json();
  CHECK(lines["verdict"]["seed"] == 9);

  const MultiPoly cone = MultiPoly::variable(3, 0) * MultiPoly::variable(3, 0) -
                         MultiPoly::variable(3, 1) * MultiPoly::variable(3, 1) -
                         MultiPoly::variable(3, 2) * MultiPoly::variable(3, 2);
  const auto c = s.write_json("c.json", to_json(cone));
  CHECK(run({"stable", "check", "--mode", "direction", "--direction", "1,0,0", "--trials", "30", c}).code == 0);
  CHECK(run({"stable", "check", "--mode", "bogus", g}).code == 2);
}

TEST_CASE("verify example") {
  const Result r = run({"verify", "CONJ1", "--instances", "10", "--order", "4", "--seed", "7"});
  CHECK(r.code == 0);
  const Json j = r.json();
  CHECK(j["seed"] == 7);
  CHECK(j["passed"] == 10);
  CHECK(j["reports"].size() == 10);
  for (const auto& rep : j["reports"]) {
    CHECK(rep["verdict"] == "PASS");
    CHECK(rep["claim"] == "CONJ1");
  }
  CHECK(run({"verify", "NOPE"}).code == 2);
  CHECK(run({"verify", "CONJ1", "--order", "40"}).code == 2);

  const Result text = run({"--output", "text", "verify", "COR45", "--instances", "2", "--seed", "3"});
  CHECK(text.code == 0);
  CHECK(text.out.find("COR45 ") != std::string::npos);
  CHECK(text.out.find("seed: 3") != std::string::npos);
}

TEST_CASE("inertia and interlace") {
  Scratch s;
  const auto p = s.write("p.json", R"(["0","-1","0","1"])");
  const Json i = run({"inertia", p}).json();
  CHECK(i["inertia"] == Json::array({1, 1, 1}));
  CHECK(run({"inertia", s.write_json("m.json", to_json(diag({1, 0, -2})))}).json()["inertia"] == Json::array({1, 1, 1}));
  CHECK(run({"inertia", s.write("c.json", R"(["1","0","1"])")}).code == 1);

  const auto a = s.write_json("a.json", to_json(UniPoly::from_roots({Rational(1), Rational(3)})));
  const auto b = s.write_json("b.json", to_json(UniPoly::from_roots({Rational(2)})));
  const auto c = s.write_json("c2.json", to_json(UniPoly::from_roots({Rational(4)})));
  CHECK(run({"interlace", a, b}).code == 0);
  CHECK(run({"interlace", a, c}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"eta"}).code == 2);
  CHECK(run({"--output", "xml", "verify", "CONJ1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("deterministic output and round trips") {
  Scratch s;
  InstanceGenerator gen(401);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 2 + trial;
    const HermitianMatrix a = gen.psd(n), b = gen.hermitian(n);
    const auto fa = s.write_json("a.json", to_json(a));
    const auto fb = s.write_json("b.json", to_json(b));
    const Result first = run({"eta-char", fa, fb});
    CHECK(first.out == run({"eta-char", fa, fb}).out);
    CHECK(unipoly_from_json(first.json()["polynomial"]) == eta_char(a, b));
    CHECK(hermitian_from_json(to_json(a)) == a);

    const Pencil pen({gen.psd(n), gen.psd(n)}, b);
    const Pencil back = pencil_from_json(to_json(pen));
    CHECK(back.constant == pen.constant);
    CHECK(back.coeffs == pen.coeffs);
    const auto fp = s.write_json("p.json", to_json(pen));
    const Result pr = run({"eta-pencil", fp});
    CHECK(multipoly_from_json(pr.json()["polynomial"]) == eta_pencil({pen}));
  }
  for (const char* claim : {"CONJ2", "THM32", "THM41"}) {
    const Result x = run({"verify", claim, "--instances", "3", "--seed", "11"});
    CHECK(x.code == 0);
    CHECK(x.out == run({"verify", claim, "--instances", "3", "--seed", "11"}).out);
  }
  // zero polynomial survives the round trip
  const MultiPoly zero(3);
  CHECK(multipoly_from_json(to_json(zero)) == zero);
  CHECK(multipoly_from_json(to_json(zero)).nvars() == 3);
}

TEST_CASE("failure bundles reproduce the input") {
  // verify reports only carry input on FAIL; the bundle must re-parse
  const HermitianMatrix a = diag({1, -1});
  const HermitianMatrix b = real_matrix({{0, 1}, {1, 0}});
  const Json j = to_json(verify_conj1(a, b));
  REQUIRE(j["verdict"] == "FAIL");
  CHECK(eta_char(hermitian_from_json(j["input"]["A"]), hermitian_from_json(j["input"]["B"])) == eta_char(a, b));
}
