#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "support.hpp"
#include "twistlab/cli.hpp"
#include "twistlab/json_io.hpp"

using namespace twistlab;
namespace fs = std::filesystem;

namespace {

  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path scratch() {
    fs::path const p = fs::temp_directory_path() / "twistlab_cli_test";
    fs::create_directories(p);
    return p;
  }

  std::string fixture_file(std::string const& stem) {
    return std::string(TWISTLAB_SOURCE_DIR) + "/fixtures/" + stem + ".json";
  }

  bool contains(std::string const& hay, std::string const& needle) {
    return hay.find(needle) != std::string::npos;
  }

}  // namespace

TEST_CASE("paper-suite passes") {
  Result const r = run({"paper-suite"});
  CHECK(r.code == 0);
  CHECK_FALSE(contains(r.out, "FAIL"));
  for (auto const& key : {"thm:representation", "lem:filterform", "thm:sendlewski", "thm:inca",
                          "ex:five-chain", "exp:k5-redundancy"}) {
    CHECK(contains(r.out, key));
  }
  for (auto const& line : cli::paper_suite()) {
    CAPTURE(line.key);
    CAPTURE(line.detail);
    CHECK(line.pass);
  }
}

TEST_CASE("twist DOT for Tw(L3,0)") {
  Result const r = run({"twist", fixture_file("l3"), "--iota", "0", "--dot"});
  REQUIRE(r.code == 0);
  std::set<std::string> labels;
  std::regex const      re("label=\"([^\"]*)\"");
  for (auto it = std::sregex_iterator(r.out.begin(), r.out.end(), re); it != std::sregex_iterator();
       ++it) {
    labels.insert((*it)[1]);
  }
  CHECK(labels ==
        std::set<std::string>{"(0,0)", "(0,a)", "(0,1)", "(a,0)", "(a,a)", "(1,0)"});
  CHECK(contains(r.out, "shape=square"));
  CHECK(contains(r.out, "shape=diamond"));
  CHECK(run({"twist", fixture_file("l3"), "--iota", "a"}).code == 0);
}

TEST_CASE("variety checks from files") {
  Result const nt = run({"check", fixture_file("tw_g3_a"), "--variety", "nt"});
  CHECK(nt.code == 0);
  CHECK(contains(nt.out, "nt: PASS"));
  Result const npc = run({"check", fixture_file("tw_g3_a"), "--variety", "npc"});
  CHECK(npc.code == 1);
  CHECK(contains(npc.out, "npc: FAIL"));
  CHECK(contains(npc.out, "odd at ((1,a), (a,1))"));
  Result const plain = run({"check", "fixture:s3"});
  CHECK(plain.code == 0);
  CHECK(contains(plain.out, "odd"));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"twist", "fixture:l3", "--iota", "q"}).code == 2);
  CHECK(run({"morphisms", "fixture:two", "fixture:l3", "--kind", "mono"}).code == 2);
  CHECK(run({"check", "fixture:nonexistent"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  fs::path const bad = scratch() / "bad.json";
  std::ofstream(bad) << "{\"size\": 2, \"join\": [[0]]";
  CHECK(run({"check", bad.string()}).code == 2);

  fs::path const invalid = scratch() / "invalid.json";
  json           j       = to_json(fixtures::two());
  j["prod"][1][1]        = 0;
  std::ofstream(invalid) << j.dump();
  Result const r = run({"check", invalid.string()});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "validation: FAIL"));
  CHECK(contains(r.out, "residuation at (1, 1, 0)"));

  // precondition failures are verdicts, not usage errors
  CHECK(run({"twist", "fixture:g3", "--iota", "a", "--filter", invalid.string(), "--inca"})
            .code != 0);
}

TEST_CASE("export round trip") {
  fs::path const p = scratch() / "tw_l3_0.json";
  REQUIRE(run({"export", "fixture:tw_l3_0", "-o", p.string()}).code == 0);
  Algebra const A = algebra_from_json(read_json_file(p.string()));
  CHECK(A.same_tables(fixture("tw_l3_0")));
  fs::path const q = scratch() / "again.json";
  REQUIRE(run({"export", p.string(), "-o", q.string()}).code == 0);
  std::ifstream a(p), b(q);
  std::string   sa((std::istreambuf_iterator<char>(a)), {}), sb((std::istreambuf_iterator<char>(b)), {});
  CHECK(sa == sb);
  CHECK(contains(run({"export", "fixture:two", "--format", "dot"}).out, "digraph"));
  CHECK(run({"export", "fixture:two", "--format", "svg"}).code == 2);
}

TEST_CASE("enumerate") {
  Result const r = run({"enumerate", "--size", "4", "--count-only"});
  CHECK(r.code == 0);
  CHECK(r.out == "20\n");
  CHECK(run({"enumerate", "--size", "4", "--commutative", "--count-only"}).out == "16\n");
  Result const lines = run({"enumerate", "--size", "4", "--limit", "3", "--skip", "2"});
  CHECK(std::count(lines.out.begin(), lines.out.end(), '\n') == 3);
  CHECK(run({"enumerate", "--size", "9"}).code == 1);
  CHECK(run({"enumerate", "--size", "4", "--threads", "3", "--count-only"}).out == "20\n");
}

TEST_CASE("conucleus and represent") {
  CHECK(run({"conucleus", "check", "fixture:tw_l3_0", "--tau", "identity"}).code == 0);
  fs::path const tau = scratch() / "tau.json";
  REQUIRE(run({"twist", "fixture:l3", "--iota", "0", "--tau-out", tau.string(), "-o",
               (scratch() / "t.json").string()})
              .code == 0);
  Result const c = run({"conucleus", "check", "fixture:tw_l3_0", "--tau", tau.string()});
  CHECK(c.code == 0);
  CHECK(contains(c.out, "nelson-conucleus: PASS"));
  Result const img = run({"conucleus", "image", "fixture:tw_l3_0", "--tau", tau.string()});
  CHECK(json::parse(img.out)["size"] == 3);
  Result const all = run({"conucleus", "enumerate", "fixture:tw_two_1"});
  CHECK(json::parse(all.out)["conuclei"].size() >= 2);
  CHECK(run({"conucleus", "check", "fixture:l3", "--tau", "term:kalman"}).code == 0);

  fs::path const log = scratch() / "proof.json";
  Result const   r   = run({"represent", "fixture:tw_l3_0", "--tau", tau.string(),
                            "--emit-proof-log", log.string()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "thm:representation: PASS"));
  CHECK(contains(r.out, "thm:inca: PASS"));
  CHECK(read_json_file(log.string())["inca"].size() == 6);

  Result const s = run({"represent", "fixture:tw_g3_a", "--tau", "term:nelson"});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "thm:sendlewski: PASS"));
  CHECK(run({"represent", "fixture:g3", "--tau", "identity"}).code == 1);
}

TEST_CASE("morphisms and subalgebras") {
  Result const m = run({"morphisms", "fixture:g3", "fixture:two", "--signature", "brouwerian"});
  CHECK(m.code == 0);
  CHECK(contains(m.out, "2 hom(G3, 2)"));
  Result const s = run({"subalgebras", "fixture:tw_g3_0", "--signature", "irl"});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "{(0,a), (0,1), (a,0), (1,0)}"));
}

TEST_CASE("output is deterministic") {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {"paper-suite"},
           {"enumerate", "--size", "4", "--threads", "2"},
           {"subalgebras", "fixture:tw_l3_1"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
