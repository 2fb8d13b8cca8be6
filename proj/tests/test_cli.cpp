#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "braidkit/catalog.hpp"
#include "braidkit/cli.hpp"
#include "braidkit/constructions.hpp"
#include "braidkit/double.hpp"
#include "braidkit/dsl.hpp"
#include "braidkit/error.hpp"
#include "braidkit/structure_file.hpp"

using namespace braidkit;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(BRAIDKIT_FIXTURE_DIR) + "/" + name; }

fs::path scratch() {
  fs::path p = fs::temp_directory_path() / ("braidkit_test_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

void check_same(const Structure& a, const Structure& b) {
  REQUIRE(a.hopf.size() == b.hopf.size());
  for (const auto& [k, e] : a.hopf) {
    REQUIRE(b.hopf.count(k));
    const HopfData& x = e.data;
    const HopfData& y = b.hopf.at(k).data;
    CHECK(x.m() == y.m());
    CHECK(x.eta() == y.eta());
    CHECK(x.delta() == y.delta());
    CHECK(x.eps() == y.eps());
    CHECK(x.has_antipode() == y.has_antipode());
    if (x.has_antipode()) CHECK(x.S() == y.S());
    CHECK(x.carrier().degrees() == y.carrier().degrees());
    CHECK(e.rmatrix.has_value() == b.hopf.at(k).rmatrix.has_value());
    if (e.rmatrix) CHECK(e.rmatrix->r == b.hopf.at(k).rmatrix->r);
  }
  CHECK(a.pairings.size() == b.pairings.size());
  for (const auto& [k, p] : a.pairings) CHECK(p.pairing.tau == b.pairings.at(k).pairing.tau);
  CHECK(a.morphisms.size() == b.morphisms.size());
  CHECK(a.spec->root_order() == b.spec->root_order());
}

}  // namespace

TEST_CASE("structure files round trip") {
  for (const char* name : {"super_line", "anyonic_line(4)", "sweedler", "underline_group_algebra(3)"}) {
    CatalogEntry e = catalog_lookup(name);
    Structure s = structure_of(e.spec, HopfEntry{e.hopf, std::nullopt, "cop"});
    Structure t = structure_from_json(structure_to_json(s));
    INFO(name);
    check_same(s, t);
    CHECK(structure_to_json(t) == structure_to_json(s));
  }
  // the double: dual atoms, composite carriers, R-matrix and pairing
  CatalogEntry s = super_line();
  DrinfeldDouble d = drinfeld_double(*s.spec, s.hopf);
  Structure x;
  x.spec = s.spec;
  x.hopf.emplace("D", HopfEntry{d.dcp.hopf, d.rmatrix, "cop"});
  x.hopf.emplace("A", HopfEntry{d.a, std::nullopt, "cop"});
  x.hopf.emplace("H", HopfEntry{s.hopf, std::nullopt, "cop"});
  x.pairings.emplace("tau", PairingEntry{"H", "A", d.dcp.pairing, true});
  x.primary = "D";
  Structure y = structure_from_json(structure_to_json(x));
  check_same(x, y);
  CHECK(y.hopf.at("A").data.carrier() == dual_space(s.hopf.carrier()));
  CHECK(y.primary == "D");

  fs::path p = scratch() / "rt.json";
  save_structure(x, p.string());
  check_same(x, load_structure(p.string()));
}

TEST_CASE("malformed structure files") {
  using nlohmann::json;
  json good = structure_to_json(load_source("catalog:super_line"));
  CHECK_NOTHROW(structure_from_json(good));

  json a = good;
  a.erase("chi");
  CHECK_THROWS_AS(structure_from_json(a), ParseError);

  json b = good;
  b["morphisms"]["super_line.m"]["matrix"][0].erase(0);
  CHECK_THROWS_AS(structure_from_json(b), ParseError);

  json c = good;
  c["morphisms"]["super_line.m"]["matrix"][0][0] = "1 + q";
  CHECK_THROWS_AS(structure_from_json(c), ParseError);

  // an entry linking degree 0 to degree 1 violates the grading
  json d = good;
  d["morphisms"]["super_line.S"]["matrix"][0][1] = "1";
  CHECK_THROWS_AS(structure_from_json(d), DegreeError);

  json e = good;
  e["hopf"]["super_line"]["m"] = "nope";
  CHECK_THROWS_AS(structure_from_json(e), ParseError);

  json f = good;
  f["spaces"]["A2"]["degrees"] = json::array({json::array({0, 1}), json::array({1, 0})});
  CHECK_THROWS_AS(structure_from_json(f), ParseError);

  CHECK_THROWS_AS(load_structure("/nonexistent/x.json"), IoError);
}

TEST_CASE("shipped JSON fixtures are reproducible") {
  CatalogEntry s = super_line();
  Structure a = structure_of(s.spec, HopfEntry{s.hopf, std::nullopt, "cop"});
  CHECK(structure_to_json(a) == structure_to_json(load_structure(fixture("super_line.json"))));
  Structure c = a;
  c.morphisms.emplace("act", s.hopf.m());
  CHECK(structure_to_json(c) == structure_to_json(load_structure(fixture("corrupted_action.json"))));
  Structure p = load_structure(fixture("anyonic3_pairing.json"));
  CatalogEntry n = anyonic_line(3);
  CHECK(p.hopf.at("H").data.m() == n.hopf.m());
  CHECK(p.hopf.at("A").data.m() == op(*n.spec, dual_hopf(*n.spec, n.hopf)).m());
  CHECK_FALSE(p.pairings.at("tau").symmetric);
}

TEST_CASE("check command") {
  Run ok = cli({"check", "catalog:super_line", "--suite=all"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "verdict: pass"));

  Run any = cli({"check", "catalog:anyonic_line(3)", "--suite=symmetric-eval"});
  CHECK(any.code == 1);
  CHECK(contains(any.out, "witness (ξ,ξ)"));

  CHECK(cli({"check", "missing.json"}).code == 2);
  CHECK(cli({"check", "catalog:nope"}).code == 2);
  CHECK(cli({"check", "catalog:super_line", "--suite=bogus"}).code == 2);
  CHECK(cli({"check", "catalog:super_line", "--suite=qt"}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);

  for (int n = 1; n <= 6; ++n) {
    CHECK(cli({"check", "catalog:group_algebra(" + std::to_string(n) + ")", "--suite=hopf"}).code == 0);
  }
  CHECK(cli({"check", "catalog:sweedler", "--suite=algebra"}).code == 0);
  CHECK(cli({"check", "catalog:anyonic_line_unbraided(3)", "--suite=hopf"}).code == 1);
}

TEST_CASE("json records") {
  Run r = cli({"--json", "check", "catalog:anyonic_line(3)", "--suite=symmetric-eval"});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "fail");
  REQUIRE(j["records"].is_array());
  for (const auto& rec : j["records"]) {
    CHECK(rec.contains("check"));
    CHECK(rec.contains("subject"));
    CHECK(rec.contains("verdict"));
    CHECK(rec["witnesses"].is_array());
    CHECK(rec["timings"].contains("seconds"));
  }
  CHECK(j["records"].back()["witnesses"][0]["where"] == "(ξ,ξ)");

  // the human and machine renderings agree on verdicts
  Run h = cli({"check", "catalog:super_line"});
  auto k = nlohmann::json::parse(cli({"check", "catalog:super_line", "--json"}).out);
  for (const auto& rec : k["records"]) {
    std::string line = std::string(rec["verdict"] == "pass" ? "PASS " : "FAIL ") + rec["check"].get<std::string>();
    CHECK(contains(h.out, line));
  }
}

TEST_CASE("build command") {
  fs::path dir = scratch();
  std::string d = (dir / "d.json").string();
  CHECK(cli({"build", "double", "catalog:super_line", "-o", d}).code == 0);
  REQUIRE(fs::exists(d));
  CHECK(cli({"check", d, "--suite=qt"}).code == 0);
  CHECK(cli({"check", d, "--suite=pairing"}).code == 0);
  CHECK(cli({"check", d}).code == 0);

  Run dual = cli({"build", "dual", "catalog:group_algebra(3)", "--expect", "catalog:function_algebra(3)"});
  CHECK(dual.code == 0);
  CHECK(contains(dual.err, "PASS matches.delta"));
  CHECK(nlohmann::json::parse(dual.out).contains("hopf"));
  CHECK(cli({"build", "dual", "catalog:group_algebra(3)", "--expect", "catalog:group_algebra(3)"}).code == 1);

  std::string refused = (dir / "refused.json").string();
  Run any = cli({"build", "double", "catalog:anyonic_line(3)", "-o", refused});
  CHECK(any.code == 1);
  CHECK(contains(any.out, "symmetric-eval.iii"));
  CHECK(contains(any.out, "ξ⊗ξ"));
  CHECK_FALSE(fs::exists(refused));

  std::string h = (dir / "hs.json").string();
  CHECK(cli({"build", "hatstar", "catalog:sweedler", "-o", h}).code == 0);
  CHECK(cli({"check", h, "--suite=hopf"}).code == 0);

  CHECK(cli({"build", "smash", "catalog:super_line", "catalog:super_line", "--action", "adjoint"}).code == 0);
  CHECK(cli({"build", "smash", fixture("corrupted_action.json"), "catalog:super_line", "--action", "act"}).code == 1);
  CHECK(cli({"build", "bartensor", "catalog:group_algebra(3)"}).code == 0);
  CHECK(cli({"build", "dcp", d}).code == 0);

  Run dcp = cli({"build", "dcp", fixture("anyonic3_pairing.json"), "-o", refused});
  CHECK(dcp.code == 1);
  CHECK(contains(dcp.err, "refused"));
  CHECK_FALSE(fs::exists(refused));

  CHECK(cli({"build", "frobnicate", "catalog:super_line"}).code == 2);
  CHECK(cli({"build", "smash", "catalog:super_line"}).code == 2);
}

TEST_CASE("build refuses failing checks unless forced") {
  // the unbraided anyonic line at n = 3 is not a bialgebra, so its dual fails
  fs::path dir = scratch();
  std::string out = (dir / "bad_dual.json").string();
  CHECK(cli({"build", "dual", "catalog:anyonic_line_unbraided(3)", "-o", out}).code == 1);
  CHECK_FALSE(fs::exists(out));
  CHECK(cli({"build", "dual", "catalog:anyonic_line_unbraided(3)", "-o", out, "--force"}).code == 1);
  CHECK(fs::exists(out));
}

TEST_CASE("verify-duality command") {
  Run a = cli({"verify-duality", "catalog:super_line", "catalog:super_line"});
  CHECK(a.code == 0);
  CHECK(contains(a.out, "PASS duality.PhiPsi"));
  CHECK(contains(a.out, "PASS end-iso.multiplicative"));
  CHECK(cli({"verify-duality", "catalog:super_line", "catalog:super_line", "--action", "adjoint"}).code == 0);

  Run n2 = cli({"verify-duality", "catalog:super_line", "catalog:underline_group_algebra(2)"});
  CHECK(n2.code == 0);
  CHECK(contains(n2.out, "≅ M_2(R)"));

  Run bad = cli({"verify-duality", fixture("corrupted_action.json"), "catalog:super_line", "--action", "act"});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "module-algebra"));
  CHECK(cli({"verify-duality", "catalog:anyonic_line(3)", "catalog:anyonic_line(3)"}).code == 1);
  CHECK(cli({"verify-duality", "catalog:super_line", "catalog:super_line", "--action", "nope"}).code == 2);
}

TEST_CASE("eval and equate commands") {
  Run e = cli({"eval", fixture("snake_left.mor")});
  CHECK(e.code == 0);
  CHECK(contains(e.out, "= identity"));
  auto j = nlohmann::json::parse(cli({"eval", "snake_left", "--json"}).out);
  CHECK(j["identity"] == true);
  CHECK(j["matrix"] == nlohmann::json::array({nlohmann::json::array({"1", "0"}), nlohmann::json::array({"0", "1"})}));
  CHECK_FALSE(contains(cli({"eval", "lambda"}).out, "= identity"));

  CHECK(cli({"equate", fixture("exchange_lhs.mor"), fixture("exchange_rhs.mor"), "--env", "super_line"}).code == 0);
  CHECK(cli({"equate", "qt3_lhs", "qt3_rhs", "--env", "d_superline"}).code == 0);
  CHECK(cli({"equate", "qt1_lhs", "qt1_rhs"}).code == 0);
  CHECK(cli({"equate", "qt2_lhs", "qt2_rhs"}).code == 0);
  Run m = cli({"equate", "exchange_lhs", "exchange_rhs_mutated"});
  CHECK(m.code == 1);
  CHECK(contains(m.out, "    at "));

  fs::path dir = scratch();
  std::string bad = (dir / "bad.mor").string();
  std::ofstream(bad) << "id(H) ;\n  m(H)\n";
  Run t = cli({"eval", bad});
  CHECK(t.code == 2);
  CHECK(contains(t.err, "2:3"));
  std::ofstream(bad) << "id(H ;";
  Run s = cli({"eval", bad});
  CHECK(s.code == 2);
  CHECK(contains(s.err, "syntax error at 1:6"));
  CHECK(cli({"eval", "no_such.mor"}).code == 2);
  CHECK(cli({"eval", "snake_left", "--env", "nope"}).code == 2);
  CHECK(cli({"equate", "lambda", "snake_left"}).code == 2);
}

TEST_CASE("catalog list") {
  Run r = cli({"catalog", "list"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "catalog:anyonic_line(n)"));
  CHECK(nlohmann::json::parse(cli({"catalog", "list", "--json"}).out)["entries"].size() == catalog_list().size());
}

TEST_CASE("binary exit codes") {
  const char* bin = std::getenv("BRAIDKIT_BIN");
  if (!bin) {
    MESSAGE("BRAIDKIT_BIN not set, skipping subprocess checks");
    return;
  }
  auto run = [&](const std::string& args) {
    std::string cmd = std::string("BRAIDKIT_THREADS=2 ") + bin + " " + args + " >/dev/null 2>&1";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  };
  CHECK(run("check catalog:super_line --suite=all") == 0);
  CHECK(run("check 'catalog:anyonic_line(3)' --suite=symmetric-eval") == 1);
  CHECK(run("check missing.json") == 2);
  CHECK(run("eval " + fixture("snake_left.mor")) == 0);
  CHECK(run("build double 'catalog:anyonic_line(3)'") == 1);
}
