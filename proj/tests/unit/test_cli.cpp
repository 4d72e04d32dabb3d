#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "workbench/cli.hpp"
#include "workbench/fimod.hpp"
#include "workbench/report.hpp"

using namespace workbench;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string temp_path(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_CASE("word commands") {
  CHECK(call({"words", "commutator", "x1", "x2"}).out == "x1^-1 x2^-1 x1 x2\n");
  CHECK(call({"words", "multiply", "x1 x2", "x2^-1"}).out == "x1\n");
  CHECK(call({"words", "invert", "x1 x2"}).out == "x2^-1 x1^-1\n");
  CHECK(call({"words", "reduce", "x1 x1^-1"}).out == "1\n");
  CHECK(call({"words", "reduce", "x1 y"}).code == kExitIo);
  CHECK(call({"words", "reduce", "x3", "--n", "2"}).code == kExitUsage);
  CHECK(call({"words", "apply", "x1", "--endo", temp_path("no-such-endo.txt")}).code == kExitIo);
}

TEST_CASE("stated CLI examples") {
  const Outcome cert = call({"johnson", "certify", "--n", "4", "--k", "3"});
  CHECK(cert.code == kExitPass);
  CHECK(contains(cert.out, "contraction: 1 * e2∧e3∧e4"));

  const Outcome rank = call({"--json", "-", "congruence", "rank", "--group", "sp", "--g", "2", "--p", "3"});
  CHECK(rank.code == kExitPass);
  const auto doc = nlohmann::json::parse(rank.out);
  CHECK(doc["results"]["rank"] == 10);
  CHECK(doc["summary"]["status"] == "pass");
  CHECK(doc["version"] == kArtifactVersion);

  const Outcome stab = call({"--json", "-", "fimod", "stab", "--builtin", "constant", "--N", "4"});
  CHECK(stab.code == kExitPass);
  const auto table = nlohmann::json::parse(stab.out)["results"];
  std::size_t rows = 0;
  for (const auto& row : table["table"]) {
    CHECK(row["iso"] == true);
    ++rows;
  }
  CHECK(rows == 15);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"bogus"}).code == kExitUsage);
  CHECK(call({"magnus", "zweight", "x1", "--p", "4"}).code == kExitUsage);
  CHECK(call({"fimod", "gendeg", "--in", temp_path("no-such-module.json")}).code == kExitIo);
  CHECK(call({"fimod", "validate", "--builtin", "nonsense", "--N", "3"}).code == kExitUsage);
  CHECK(call({"suite", "nonsense"}).code == kExitUsage);

  // a module file that parses but violates naturality
  FIModulePresentation m = builtin(BuiltinSpec::parse("constant"), 3);
  m.set_transposition(subset_of({1, 2}), 1, Matrix{{-1}});
  const std::string path = temp_path("workbench-broken-module.json");
  std::ofstream(path) << m.to_json().dump();
  const Outcome bad = call({"fimod", "validate", "--in", path});
  CHECK(bad.code == kExitCheckFailed);
  CHECK(contains(bad.out, "FAIL"));
  std::ofstream(path) << "{ not json";
  CHECK(call({"fimod", "validate", "--in", path}).code == kExitIo);
  std::remove(path.c_str());
}

TEST_CASE("json output to a file and determinism") {
  const std::string a = temp_path("workbench-report-a.json"), b = temp_path("workbench-report-b.json");
  const std::vector<std::string> base{"suite", "lowerbound", "--kmax", "3", "--seed", "7", "--json"};
  auto with = [&](const std::string& p) {
    auto v = base;
    v.push_back(p);
    return v;
  };
  const Outcome first = call(with(a));
  CHECK(first.code == kExitPass);
  CHECK(contains(first.out, "PASS"));
  CHECK(call(with(b)).code == kExitPass);
  std::ifstream fa(a), fb(b);
  const auto ja = nlohmann::json::parse(fa), jb = nlohmann::json::parse(fb);
  CHECK(normalized(ja) == normalized(jb));
  CHECK(ja["parameters"]["kmax"] == 3);
  CHECK(ja["checks"].size() == 6);  // lower-bound and symplectic, k = 1..3
  std::remove(a.c_str());
  std::remove(b.c_str());
}
