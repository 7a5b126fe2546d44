#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hopf/catalog.hpp"
#include "hopf/io.hpp"

using namespace hopf;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run hopf_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hopf_cli_test_" + name)).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("cli verify") {
  CHECK(hopf_cli({"verify", "catalog:sweedler4", "--field", "f3"}).code == 0);
  const Run j = hopf_cli({"verify", "catalog:tensor(line0:3,sweedler4)", "--field", "f3", "--json", "--jobs", "4"});
  CHECK(j.code == 0);
  CHECK(parse_json_text(j.out).at("ok") == true);
  CHECK(hopf_cli({"verify", "catalog:nothing"}).code == 3);
  CHECK(hopf_cli({"verify", "catalog:line0:3", "--field", "q"}).code == 3);

  const std::string bad = temp_path("bad.json");
  write(bad, "{\"dim\": 2,\n");
  const Run r = hopf_cli({"verify", bad});
  CHECK(r.code == 3);
  CHECK(r.err.find("byte") != std::string::npos);
  CHECK(hopf_cli({"verify", temp_path("missing.json")}).code == 3);
}

TEST_CASE("cli perturbed fixtures fail verification by name") {
  const std::string p = temp_path("perturbed.json");
  REQUIRE(hopf_cli({"perturb", "catalog:sweedler4", "--field", "f3", "--table", "antipode", "--i", "2", "--j", "2",
                    "--out", p})
              .code == 0);
  const Run r = hopf_cli({"verify", p});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL antipode") != std::string::npos);
  // other commands refuse unverified input unless told not to check
  CHECK(hopf_cli({"aut", "--algebra", p}).code == 3);
}

TEST_CASE("cli export re-reads identically") {
  const std::string p = temp_path("export.json");
  REQUIRE(hopf_cli({"export", "catalog:line1:3", "--field", "f3", "--out", p}).code == 0);
  const HopfAlgebra back = algebra_from_json(read_json_file(p));
  CHECK(structure_identical(back, catalog_algebra("line1:3", FieldSpec::prime(3))));
  CHECK(hopf_cli({"verify", p, "--field", "f5"}).code == 3);
}

TEST_CASE("cli classify") {
  const Run r = hopf_cli({"classify", "catalog:line1:3", "--field", "f3", "--json"});
  CHECK(r.code == 0);
  const Json j = parse_json_text(r.out);
  CHECK(j.at("crp_count") == 2);
  CHECK(j.at("h2").at("count") == 3);
  CHECK(j.at("complete") == true);

  const Run n = hopf_cli({"classify", "catalog:line0:3", "--field", "f3", "--json", "--jobs", "2"});
  CHECK(n.code == 0);
  CHECK(parse_json_text(n.out).at("crp_count") == 2);

  CHECK(hopf_cli({"classify", "catalog:sweedler4", "--field", "q"}).code == 0);

  const Run c = hopf_cli({"classify", "catalog:line1:3", "--field", "f3(X1,X2,X3,X4,X5)", "--reps",
                          "X1*y;X2*y;X3*y;X4*y;X5*y", "--json"});
  CHECK(c.code == 0);
  const Json cj = parse_json_text(c.out);
  CHECK(cj.at("crp_count") == 5);
  CHECK(cj.at("separations").size() == 10);
  for (const auto& s : cj.at("separations")) CHECK(s.at("decision").at("verdict") == "NotEquivalent");

  // (X1+1)/(X1+2) vs 1 has even valuations and no monomial witness
  const Run u = hopf_cli({"classify", "catalog:line1:3", "--field", "f3(X1)", "--reps", "y;(X1+1)/(X1+2)*y"});
  CHECK(u.code == 2);
  CHECK(hopf_cli({"classify", "catalog:line1:3", "--field", "f3", "--aut-model", "bogus"}).code == 3);
  CHECK(hopf_cli({"classify", "catalog:line1:3", "--field", "f3", "--reps", "1"}).code == 3);
}

TEST_CASE("cli crossed build and check") {
  const std::string p = temp_path("ay.json");
  REQUIRE(hopf_cli({"crossed", "build", "--base", "catalog:line0:3", "--field", "f3", "--param", "y", "--out", p})
              .code == 0);
  const HopfAlgebra e = algebra_from_json(read_json_file(p));
  CHECK(e.dim == 12);
  CHECK(hopf_cli({"verify", p}).code == 0);

  CHECK(hopf_cli({"crossed", "check", "--base", "catalog:line1:3", "--field", "f3", "--param", "2*y"}).code == 0);
  CHECK(hopf_cli({"crossed", "check", "--base", "catalog:line1:3", "--field", "f3", "--param", "1"}).code == 3);

  // f(x, gx) flipped breaks the cocycle condition
  const std::string sys = temp_path("system.json");
  write(sys, R"({"A": "catalog:line0:3", "H": "catalog:sweedler4", "action": "trivial",
                 "cocycle": [[0,0,0,"1"],[0,1,0,"1"],[1,0,0,"1"],[1,1,0,"1"],
                             [2,2,1,"1"],[3,2,1,"1"],[2,3,1,"1"],[3,3,1,"2"]]})");
  const Run bad = hopf_cli({"crossed", "check", "--system", sys, "--field", "f3"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(hopf_cli({"crossed", "build", "--system", sys, "--field", "f3"}).code == 1);
  CHECK(hopf_cli({"crossed", "build", "--system", sys, "--field", "f3", "--force"}).code == 3);
  CHECK(hopf_cli({"crossed", "build", "--system", sys, "--field", "f3", "--force", "--allow-invalid"}).code == 0);

  const std::string good = temp_path("good_system.json");
  write(good, R"({"A": "catalog:line0:3", "H": "catalog:sweedler4", "action": "trivial", "cocycle": "trivial"})");
  const Run g = hopf_cli({"crossed", "build", "--system", good, "--field", "f3"});
  CHECK(g.code == 0);
  CHECK(parse_json_text(g.out).at("dim") == 12);
}

TEST_CASE("cli aut") {
  const Run r = hopf_cli({"aut", "--algebra", "catalog:sweedler4", "--field", "f5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("order 4") != std::string::npos);
  const Run j = hopf_cli({"aut", "--algebra", "catalog:line1:3", "--field", "f3", "--param", "y", "--json"});
  CHECK(j.code == 0);
  CHECK(parse_json_text(j.out).at("order") == 2);
  CHECK(hopf_cli({"aut", "--algebra", "catalog:sweedler4", "--field", "q"}).code == 3);
  CHECK(hopf_cli({"aut", "--algebra", "catalog:sweedler4", "--field", "f5", "--budget", "3"}).code == 2);
}

TEST_CASE("cli equiv") {
  const Run r = hopf_cli({"equiv", "--field", "f3(X1,X2)", "--q", "X1", "--qprime", "X2", "--scalars",
                          "prime-subfield"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("NotEquivalent", 0) == 0);
  const Run w = hopf_cli({"equiv", "--field", "f3(X1)", "--q", "X1", "--qprime", "2*X1", "--scalars",
                          "prime-subfield", "--json"});
  CHECK(w.code == 0);
  const Json wj = parse_json_text(w.out);
  CHECK(wj.at("verdict") == "Equivalent");
  CHECK(wj.at("witness").contains("alpha"));
  CHECK(hopf_cli({"equiv", "--field", "f3(X1)", "--q", "X1+1", "--qprime", "X1+2", "--scalars", "prime-subfield"})
            .code == 2);
  CHECK(hopf_cli({"equiv", "--field", "f3", "--s", "0:1,1:2", "--t", "0:1,1:2"}).code == 0);
  CHECK(hopf_cli({"equiv", "--field", "f3", "--s", "0:1", "--t", "1:1"}).code == 0);
  CHECK(hopf_cli({"equiv", "--field", "f3", "--q", "1"}).code == 3);
  CHECK(hopf_cli({"equiv", "--field", "f3", "--s", "0-1", "--t", "0:1"}).code == 3);
  CHECK(hopf_cli({"equiv", "--field", "f3", "--q", "1", "--qprime", "0"}).out.rfind("NotEquivalent", 0) == 0);
}

TEST_CASE("cli morphism check") {
  const std::string id = temp_path("id.json");
  write(id, R"([["1",0,0,0],[0,"1",0,0],[0,0,"1",0],[0,0,0,"1"]])");
  CHECK(hopf_cli({"morphism", "check", "--map", id, "--source", "catalog:sweedler4", "--target",
                  "catalog:sweedler4", "--field", "f3"})
            .code == 0);
  const std::string swap = temp_path("swap.json");
  write(swap, R"([["1",0,0,0],[0,"1",0,0],[0,0,0,"1"],[0,0,"1",0]])");
  CHECK(hopf_cli({"morphism", "check", "--map", swap, "--source", "catalog:sweedler4", "--target",
                  "catalog:sweedler4", "--field", "f3"})
            .code == 1);

  // (u, r, v) = (id, trivial, v_beta) with beta = 2: A_(y) -> A_(y) since 2^2 = 1 in F3
  const std::string triple = temp_path("triple.json");
  write(triple, R"({"u": [["1",0,0],[0,"1",0],[0,0,"1"]],
                    "r": [["1","1",0,0],[0,0,0,0],[0,0,0,0]],
                    "v": [["1",0,0,0],[0,"1",0,0],[0,0,"2",0],[0,0,0,"2"]]})");
  const Run t = hopf_cli({"morphism", "check", "--map", triple, "--base", "catalog:line1:3", "--src-param", "y",
                          "--dst-param", "y", "--field", "f3", "--json"});
  CHECK(t.code == 0);
  const Json tj = parse_json_text(t.out);
  CHECK(tj.at("kind") == "triple");
  CHECK(tj.at("iso") == true);
  CHECK(tj.at("stabilizes_A") == true);
  CHECK(tj.at("costabilizes_H") == false);

  const std::string quad = temp_path("quad.json");
  write(quad, R"({"u": [["1",0,0],[0,"1",0],[0,0,"1"]],
                  "p": [["1",0,0],[0,0,0],[0,0,0],[0,0,0]],
                  "r": [["1","1",0,0],[0,0,0,0],[0,0,0,0]],
                  "v": [["1",0,0,0],[0,"1",0,0],[0,0,"1",0],[0,0,0,"1"]]})");
  const Run q = hopf_cli({"morphism", "check", "--map", quad, "--base", "catalog:line1:3", "--src-param", "y",
                          "--dst-param", "y", "--field", "f3", "--json"});
  CHECK(q.code == 0);
  CHECK(parse_json_text(q.out).at("agrees") == true);
  CHECK(hopf_cli({"morphism", "check", "--map", quad, "--field", "f3"}).code == 3);
}

TEST_CASE("cli usage errors") {
  CHECK(hopf_cli({}).code == 3);
  CHECK(hopf_cli({"frobnicate"}).code == 3);
  CHECK(hopf_cli({"verify"}).code == 3);
  CHECK(hopf_cli({"--help"}).code == 0);
}
