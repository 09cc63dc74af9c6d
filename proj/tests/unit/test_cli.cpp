#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "designlab/cli.hpp"
#include "designlab/oracles.hpp"

using namespace designlab;
using nlohmann::json;

namespace {

const std::string data_dir = DESIGNLAB_TEST_DATA;

std::string data(const std::string& name) { return data_dir + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--json");
  const Run r = run(args);
  CHECK(r.code == expected_code);
  return json::parse(r.out);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("designlab-cli-test-" + name);
}

}  // namespace

TEST_CASE("check reports the classification") {
  const json j = run_json({"check", data("fano.json")});
  CHECK(j["command"] == "check");
  const json& c = j["payload"]["classification"];
  CHECK(c["uniform_k"] == 3);
  CHECK(c["regular_r"] == 3);
  CHECK(c["pbd_lambda"] == 1);
  CHECK(c["is_bibd"] == true);
  CHECK(j["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);

  const json complement = run_json({"check", data("fano_complement.txt")});
  CHECK(complement["payload"]["classification"]["pbd_lambda"] == 2);

  const json single = run_json({"check", data("empty_block.txt")});
  CHECK(single["payload"]["classification"]["is_design"] == false);
}

TEST_CASE("fisher verdicts and exit codes") {
  const json fano = run_json({"fisher", data("fano.json"), "--variant", "uniform"});
  CHECK(fano["payload"]["verdict"] == "bound-holds");
  CHECK(fano["payload"]["certificate"]["square_det"] == "576");
  CHECK(fano["payload"]["bound"] == json{{"lhs", 7}, {"rhs", 7}});
  CHECK(fano.contains("timing"));
  CHECK_FALSE(fano["payload"].contains("timing"));

  const json sun = run_json({"fisher", data("sunflower.json"), "--variant", "general"});
  CHECK(sun["payload"]["bound"] == json{{"lhs", 3}, {"rhs", 4}});

  const json odd = run_json({"fisher", data("odd_intersection.txt"), "--variant", "oddtown"}, 1);
  CHECK(odd["payload"]["verdict"] == "hypotheses-violated");

  const json rep = run_json({"fisher", data("repeated_blocks.json"), "--variant", "general"}, 1);
  CHECK(rep["payload"]["hypotheses"][0]["name"] == "distinct blocks");
  CHECK(rep["payload"]["hypotheses"][0]["passed"] == false);

  const json dual = run_json({"fisher", data("fano.json"), "--variant", "dual"});
  CHECK(dual["payload"]["verdict"] == "bound-holds");

  const Run human = run({"fisher", data("odd_intersection.txt"), "--variant", "oddtown"});
  CHECK(human.code == 1);
  CHECK(human.out.find("blocks 0 and 2: pairwise intersection 1 is odd") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
  const Run range = run({"check", data("out_of_range.txt")});
  CHECK(range.code == 2);
  CHECK(range.err.find("line 3") != std::string::npos);
  CHECK(run({"check", data("bad.json")}).code == 2);
  CHECK(run({"check", data("missing.json")}).code == 2);
  CHECK(run({"fisher", data("fano.json"), "--variant", "strong"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"enumerate", "--family", "odd-town", "--v", "9"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("format override") {
  CHECK(run({"--format", "json", "check", data("fano_complement.txt")}).code == 2);
  CHECK(run({"--format", "text", "check", data("fano_complement.txt")}).code == 0);
}

TEST_CASE("matrix output") {
  const Run r = run({"matrix", data("sunflower.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "1 1 1\n1 0 0\n0 1 0\n0 0 1\n");
}

TEST_CASE("dual and complement write designs") {
  const auto once = temp_path("dual1.json");
  const auto twice = temp_path("dual2.json");
  CHECK(run({"dual", data("fano.json"), "-o", once.string()}).code == 0);
  CHECK(run({"dual", once.string(), "-o", twice.string()}).code == 0);
  CHECK(run({"isomorphic", twice.string(), data("fano.json")}).code == 0);
  CHECK(io::read_design(twice).system == io::read_design(data("fano.json")).system);

  const auto comp = temp_path("complement.txt");
  CHECK(run({"complement", data("fano.json"), "-o", comp.string()}).code == 0);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  CHECK(slurp(comp) == slurp(data("fano_complement.txt")));
  std::filesystem::remove(comp);

  CHECK(run({"isomorphic", data("fano.json"), data("fano_complement.txt")}).code == 1);
  std::filesystem::remove(once);
  std::filesystem::remove(twice);
}

TEST_CASE("enumerate streams families and a summary") {
  const Run r = run({"enumerate", "--family", "odd-town", "--v", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "\n0\n0 | 1\n1\n");
  CHECK(r.err.find("instances") != std::string::npos);

  const json j = run_json({"enumerate", "--family", "const-intersect", "--v", "4"});
  CHECK(j["payload"]["instances_checked"] == 143);
  CHECK(j["payload"]["violations"].empty());

  const Run bibd = run({"enumerate", "--family", "bibd", "--v", "7", "--k", "3", "--limit", "1"});
  CHECK(bibd.code == 0);
  CHECK(bibd.out == "0 1 2 | 0 3 4 | 0 5 6 | 1 3 5 | 1 4 6 | 2 3 6 | 2 4 5\n");
}

TEST_CASE("reports are deterministic apart from timing") {
  auto strip = [](json j) {
    j.erase("timing");
    return j;
  };
  const json a = run_json({"fisher", data("fano.json")});
  const json b = run_json({"fisher", data("fano.json")});
  CHECK(strip(a) == strip(b));
}

TEST_CASE("quick selftest passes") {
  const Run r = run({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}
