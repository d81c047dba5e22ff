#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "actlab/cli.hpp"
#include "actlab/errors.hpp"
#include "actlab/fixtures.hpp"
#include "actlab/io.hpp"

using namespace actlab;

namespace {

const std::string kData = ACTLAB_DATA_DIR;

std::string slurp_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CaptureCout {
  CaptureCout() : old(std::cout.rdbuf(buffer.rdbuf())) {}
  ~CaptureCout() { std::cout.rdbuf(old); }
  std::string text() const { return buffer.str(); }
  std::ostringstream buffer;
  std::streambuf* old;
};

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("parsing the shipped fixture files") {
  MonoidPtr S = load_monoid_file(kData + "/lz3.mon");
  CHECK(S->name() == "LZ3");
  CHECK(S->size() == 3);
  CHECK(S->labels() == std::vector<std::string>{"1", "a", "b"});
  Workspace ws;
  ws.add_monoid(S);
  FiniteAct A = load_act_file(kData + "/theta2.act", ws);
  CHECK(A.name() == "theta2");
  CHECK(A.size() == 2);
  CHECK(zeros(A).size() == 2);
}

TEST_CASE("parse errors carry positions") {
  SUBCASE("unknown monoid reference") {
    Workspace ws;
    CHECK_THROWS_AS(
        parse_act("act x over NOPE\nelements e\ntable\ne", ws),
        UnknownMonoidError);
  }
  SUBCASE("wrong arity") {
    try {
      parse_monoid("monoid M\nelements 1 a\ntable\n1 a\na");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 5);
    }
  }
  SUBCASE("unknown label in the table") {
    try {
      parse_monoid("monoid M\nelements 1 a\ntable\n1 a\na z");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 5);
      CHECK(e.col == 3);
    }
  }
  SUBCASE("duplicate labels") {
    CHECK_THROWS_AS(parse_monoid("monoid M\nelements 1 1\ntable\n1 1\n1 1"),
                    ParseError);
  }
  SUBCASE("trailing garbage") {
    CHECK_THROWS_AS(parse_monoid("monoid M\nelements 1\ntable\n1\nextra"),
                    ParseError);
  }
  SUBCASE("comments are ignored") {
    MonoidPtr S = parse_monoid("# header\nmonoid T\nelements 1 # inline\ntable\n1");
    CHECK(S->size() == 1);
  }
}

TEST_CASE("print/parse round trips") {
  int structures = 0;
  for (const MonoidPtr& S : monoids_up_to(4)) {
    MonoidPtr back = parse_monoid(print_monoid(*S));
    CHECK(back->labels() == S->labels());
    CHECK(back->flat_table() == S->flat_table());
    ++structures;
  }
  for (auto S : {fixtures::lz3(), fixtures::c2(), fixtures::n2(),
                 fixtures::rz3(), fixtures::m3(), fixtures::t1()}) {
    MonoidPtr back = parse_monoid(print_monoid(*S));
    CHECK(back->flat_table() == S->flat_table());
    Workspace ws;
    ws.add_monoid(S);
    for (const FiniteAct& A : acts_up_to(S, 4)) {
      FiniteAct round = parse_act(print_act(A), ws);
      CHECK(round.labels() == A.labels());
      CHECK(round.flat_table() == A.flat_table());
      ++structures;
    }
  }
  CHECK(structures >= 100);
}

TEST_CASE("witness problems replay from their JSON form") {
  auto lz3 = fixtures::lz3();
  FiniteAct t2 = coproduct_act({zero_act(lz3), zero_act(lz3)});
  InjectivityVerdict v = is_injective(t2);
  REQUIRE(v.witness.has_value());
  nlohmann::json j = problem_json(*v.witness);
  CHECK_FALSE(replay_problem_extendable(j));
  // a solvable problem replays as solvable
  std::vector<Idx> all{0, 1};
  auto ok = make_extension_problem(t2, all, t2, all);
  CHECK(replay_problem_extendable(problem_json(ok)));
}

TEST_CASE("cli analyze output") {
  CaptureCout cap;
  int code = run({"analyze", "monoid", kData + "/lz3.mon"});
  CHECK(code == 0);
  std::string out = cap.text();
  CHECK(out.find("left reversible: no") != std::string::npos);
  CHECK(out.find("regular: yes") != std::string::npos);
  CHECK(out.find("left zeros: a b") != std::string::npos);
  CHECK(out.find("right ideals: 4") != std::string::npos);
  CHECK(out.find("right congruences: 3") != std::string::npos);
}

TEST_CASE("cli check exit codes") {
  {
    CaptureCout cap;
    CHECK(run({"check", "injective", kData + "/theta2.act", "--monoid",
               kData + "/lz3.mon"}) == 1);
    CHECK(cap.text().find("witness") != std::string::npos);
  }
  {
    CaptureCout cap;
    CHECK(run({"check", "quasi", kData + "/theta2.act", "--monoid",
               kData + "/lz3.mon"}) == 0);
  }
  {
    CaptureCout cap;
    CHECK(run({"check", "ind", kData + "/theta2.act", "--monoid",
               kData + "/lz3.mon"}) == 0);
  }
  {
    CaptureCout cap;
    CHECK(run({"check", "pseudo", kData + "/theta2.act", "--monoid",
               kData + "/lz3.mon", "--bound", "3"}) == 1);
  }
  {
    CaptureCout cap;
    CHECK(run({"check", "c", kData + "/theta2.act", "--monoid",
               kData + "/lz3.mon", "--bound", "3"}) == 2);
  }
}

TEST_CASE("cli decompose") {
  {
    CaptureCout cap;
    CHECK(run({"decompose", kData + "/theta2.act", "--monoid",
               kData + "/lz3.mon"}) == 0);
    CHECK(cap.text().find("2 components") != std::string::npos);
  }
  {
    CaptureCout cap;
    CHECK(run({"decompose", kData + "/lz3_reg.act", "--monoid",
               kData + "/lz3.mon", "--dot"}) == 0);
    CHECK(cap.text().find("graph") != std::string::npos);
    CHECK(cap.text().find("--") != std::string::npos);
  }
}

TEST_CASE("cli enumerate and envelope") {
  {
    CaptureCout cap;
    CHECK(run({"enumerate", "monoids", "3"}) == 0);
    CHECK(cap.text().find("# 7 monoids of order 3") != std::string::npos);
  }
  {
    CaptureCout cap;
    CHECK(run({"enumerate", "acts", "2", "--monoid", kData + "/c2.mon"}) == 0);
    CHECK(cap.text().find("# 2 acts of size 2") != std::string::npos);
  }
  {
    CaptureCout cap;
    CHECK(run({"envelope", kData + "/theta2.act", "--monoid",
               kData + "/lz3.mon"}) == 0);
    CHECK(cap.text().find("embedding:") != std::string::npos);
  }
}

TEST_CASE("cli verify writes replayable reports deterministically") {
  std::string f1 = temp_path("actlab_t1_a.json");
  std::string f2 = temp_path("actlab_t1_b.json");
  {
    CaptureCout cap;
    CHECK(run({"verify", "T1", "--max-monoid", "2", "--out", f1}) == 0);
  }
  {
    CaptureCout cap;
    CHECK(run({"verify", "T1", "--max-monoid", "2", "--out", f2}) == 0);
  }
  std::string a = slurp_file(f1), b = slurp_file(f2);
  nlohmann::json ja = nlohmann::json::parse(a);
  nlohmann::json jb = nlohmann::json::parse(b);
  ja.erase("elapsed_ms");
  jb.erase("elapsed_ms");
  CHECK(ja.dump() == jb.dump());
  nlohmann::json rep = nlohmann::json::parse(a);
  CHECK(rep["claim"] == "T1");
  CHECK(rep["status"] == "verified-within-bounds");
  CHECK(rep["bounds"]["max_monoid"] == 2);
  CHECK(rep["witness"].is_null());
  std::remove(f1.c_str());
  std::remove(f2.c_str());
}

TEST_CASE("cli usage and data errors") {
  CaptureCout cap;
  CHECK(run({"analyze", "nothing", kData + "/lz3.mon"}) == 64);
  CHECK(run({"check", "bogus", kData + "/theta2.act", "--monoid",
             kData + "/lz3.mon"}) == 64);
  CHECK(run({"validate", kData + "/does_not_exist.mon"}) == 65);
  CHECK(run({"verify", "ZZ"}) == 64);
  CHECK(run({"enumerate", "monoids", "9"}) == 66);
}
