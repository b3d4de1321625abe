#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "formats.hpp"
#include "mlrelax/error.hpp"
#include "mlrelax/fixtures.hpp"
#include "support.hpp"

using namespace testing;
using mlrelax::cli::Json;
using mlrelax::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("mlrelax_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("bound command") {
  auto r = run({"bound", data_path("fig1_instance.json"), "--relaxation", "standard"});
  CHECK(r.code == 0);
  CHECK(r.json()["bound"] == "0");
  CHECK(r.json()["format"] == 1);

  r = run({"bound", data_path("single_edge_instance.json"), "--relaxation", "standard"});
  CHECK(r.code == 0);
  CHECK(r.json()["bound"] == "-1");

  r = run({"bound", data_path("fig2_k3_instance.json"), "--relaxation", "dynamic"});
  CHECK(r.code == 0);
  CHECK(r.json()["bound"] == "-1");
  CHECK(r.json()["variables_added"] == 1);

  r = run({"bound", data_path("fig1_instance.json"), "--lin", data_path("fig1_Dc.json"), "--lin",
           data_path("fig1_Dd.json")});
  CHECK(r.code == 0);
  CHECK(r.json()["method"] == "linearizations");

  CHECK(run({"bound", temp_file("bad.json", "{bad")}).code == 2);
  CHECK(run({"bound", data_path("fig1_instance.json"), "--relaxation", "nonsense"}).code == 2);
  CHECK(run({"bound", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("instance parsing rejects non-multilinear monomials") {
  auto path = temp_file("square.json", R"({"num_vars": 2, "objective": [{"coef": 1, "vars": [1, 1]}]})");
  auto r = run({"bound", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("ParseError") != std::string::npos);

  auto range = temp_file("range.json", R"({"num_vars": 2, "objective": [{"coef": "1/2", "vars": [1, 3]}]})");
  CHECK(run({"bound", range}).code == 2);
  auto coef = temp_file("coef.json", R"({"num_vars": 2, "objective": [{"coef": 0.5, "vars": [1, 2]}]})");
  CHECK(run({"bound", coef}).code == 2);
}

TEST_CASE("check command") {
  auto r = run({"check", "theorem", data_path("fig1_instance.json")});
  CHECK(r.code == 0);
  CHECK(r.json()["holds"] == true);

  r = run({"check", "fig3"});
  CHECK(r.code == 0);

  r = run({"check", "lemma-path", data_path("fig1_Dc.json")});
  CHECK(r.code == 0);

  r = run({"check", "lemma-projection", data_path("fig1_instance.json"), "--edge", "1,2,3"});
  CHECK(r.code == 0);
  CHECK(r.json()["reports"].size() == 1);

  r = run({"check", "lemma-projection", "--seed", "5", "--samples", "3"});
  CHECK(r.code == 0);
  CHECK(r.json()["seed"] == 5);

  CHECK(run({"check", "bogus"}).code == 2);
  CHECK(run({"check", "lemma-projection", data_path("fig4_instance.json")}).code == 2);
}

TEST_CASE("sampled checks are deterministic per seed") {
  auto a = run({"check", "theorem", "--seed", "9", "--samples", "2", "--extras", "3"});
  auto b = run({"check", "theorem", "--seed", "9", "--samples", "2", "--extras", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("seed override from the environment") {
  ::setenv("MLRELAX_SEED", "77", 1);
  auto r = run({"check", "lemma-path", "--samples", "2"});
  ::unsetenv("MLRELAX_SEED");
  CHECK(r.code == 0);
  CHECK(r.json()["seed"] == 77);
}

TEST_CASE("construct command") {
  auto dot = std::filesystem::temp_directory_path() / "mlrelax_test_fig4.dot";
  auto r = run({"construct", data_path("fig4_instance.json"), "--center", "1,2,3,4,5,6,7,8,9,10", "--neighbor", "1,2,3",
                "--neighbor", "4,5,6,11,12", "--neighbor", "7,8,13", "--neighbor", "9,10,14,15", "--dot", dot.string()});
  REQUIRE(r.code == 0);
  auto nodes = r.json()["nodes"];
  CHECK(std::find(nodes.begin(), nodes.end(), Json{1, 2, 3, 4, 5, 6}) != nodes.end());
  CHECK(std::find(nodes.begin(), nodes.end(), Json{1, 2, 3, 4, 5, 6, 7, 8}) != nodes.end());
  std::ifstream in(dot);
  std::string first;
  std::getline(in, first);
  CHECK(first == "digraph D {");

  // Round trip through the file format.
  auto g = fixtures::fig4_hypergraph();
  auto back = mlrelax::cli::linearization_from_json(r.json(), g);
  CHECK(back.digraph == mccormick_from_flower(g, fixtures::fig4_flower()));

  r = run({"construct", data_path("fig1_instance.json"), "--center", "1,2", "--neighbor", "1,2,3"});
  CHECK(r.code == 0);

  r = run({"construct", data_path("fig2_k3_instance.json"), "--center", "1,2,3", "--neighbor", "1,2,4", "--neighbor",
           "1,2,5", "--neighbor", "3"});
  CHECK(r.code == 1);
  CHECK(r.err.find("RedundantFlower") != std::string::npos);

  CHECK(run({"construct", data_path("fig1_instance.json"), "--center", "1,x", "--neighbor", "1"}).code == 2);
}

TEST_CASE("flowers command") {
  auto r = run({"flowers", data_path("fig2_k4_instance.json"), "--count-only"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["with_edge_neighbor"] == 12);
  CHECK(r.json()["all_singleton"] == 4);
  CHECK_FALSE(r.json().contains("flowers"));

  r = run({"flowers", data_path("single_edge_instance.json")});
  CHECK(r.json()["count"] == 1);
  CHECK(r.json()["flowers"][0]["center"] == Json{1, 2});
}

TEST_CASE("separate command") {
  auto r = run({"separate", data_path("fig1_instance.json"), data_path("fig1_ml_vertex.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "none\n");

  r = run({"separate", data_path("separation_instance.json"), data_path("separation_point.json")});
  CHECK(r.code == 1);
  CHECK(r.json()["center"] == Json{1, 2, 3});
  CHECK(r.json()["neighbors"] == Json{Json{1, 2}, Json{3}});
  CHECK(r.json()["violation"] == "1");

  auto missing = temp_file("missing.json", R"({"format": 1, "entries": [{"vars": [1], "value": "1"}]})");
  CHECK(run({"separate", data_path("fig1_instance.json"), missing}).code == 2);
}

TEST_CASE("bundled Fig. 1 files reproduce the membership table") {
  auto inst = mlrelax::cli::instance_from_json(mlrelax::cli::read_json(data_path("fig1_instance.json")));
  auto& g = inst.hypergraph;
  auto load = [&](const char* name) {
    return mlrelax::cli::linearization_from_json(mlrelax::cli::read_json(data_path(name)), g).digraph;
  };
  auto point = [](const char* name) { return mlrelax::cli::point_from_json(mlrelax::cli::read_json(data_path(name))); };
  CHECK(load("fig1_Db.json") == fixtures::fig1_standard());
  CHECK(load("fig1_Dc.json") == fixtures::fig1_mccormick());
  CHECK(load("fig1_Dd.json") == fixtures::fig1_nonpartitioning());
  CHECK(point("fig1_z1.json") == fixtures::fig1_z1());
  CHECK(point("fig1_z2.json") == fixtures::fig1_z2());
  CHECK(point("fig1_z3.json") == fixtures::fig1_z3());
  auto fig3a = mlrelax::cli::instance_from_json(mlrelax::cli::read_json(data_path("fig3a_instance.json")));
  CHECK(mlrelax::cli::linearization_from_json(mlrelax::cli::read_json(data_path("fig3a_D.json")), fig3a.hypergraph).digraph ==
        fixtures::fig3a_linearization());
  CHECK(mlrelax::cli::linearization_from_json(mlrelax::cli::read_json(data_path("fig3b_D.json")), Hypergraph{6, {}}).digraph ==
        fixtures::fig3b_linearization());
}

TEST_CASE("instance and point files round trip") {
  auto inst = mlrelax::cli::instance_from_json(mlrelax::cli::read_json(data_path("knapsack_instance.json")));
  auto again = mlrelax::cli::instance_from_json(mlrelax::cli::instance_to_json(inst));
  CHECK(again.hypergraph == inst.hypergraph);
  CHECK(again.constraints.size() == inst.constraints.size());
  auto p = fixtures::fig1_z2();
  CHECK(mlrelax::cli::point_from_json(mlrelax::cli::point_to_json(p)) == p);
}

TEST_CASE("help exits cleanly and usage errors exit 2") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"flowers"}).code == 2);
}
