#include <doctest.h>

#include "cli.hpp"

#include "schurlab/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;
using schurlab::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = schurlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("schurlab_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("construct writes a scheme file and a summary") {
  TempDir dir;
  const auto r = run({"construct", "z2", "--n", "2", "--out", dir.file("s.json")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "|X| = 16, valencies 1,6,6,3, symmetric: yes"));
  const auto file = schurlab::scheme_file_from_json(Json::parse(slurp(dir.file("s.json"))));
  CHECK(file.partition.group.order() == 16);
  CHECK(file.valencies == std::vector<std::int64_t>{1, 6, 6, 3});

  const auto to_stdout = run({"construct", "z2", "--n", "2"});
  CHECK(Json::parse(to_stdout.out)["valencies"] == Json::array({1, 6, 6, 3}));
  CHECK(contains(to_stdout.err, "valencies 1,6,6,3"));
}

TEST_CASE("construct z4") {
  const auto r = run({"construct", "z4", "--n", "3", "--w", "(0,2,0);(0,0,2)"});
  CHECK(r.code == 0);
  CHECK(contains(r.err, "|X| = 64, valencies 1,28,28,7"));
  CHECK(Json::parse(r.out)["construction"]["w"] == "(0,2,0);(0,0,2)");

  const auto degenerate = run({"construct", "z4", "--n", "1"});
  CHECK(degenerate.code == 0);
  CHECK(contains(degenerate.err, "|X| = 4, valencies 1,1,1,1"));

  const auto all = run({"construct", "z4", "--n", "2", "--all-w"});
  CHECK(all.code == 0);
  CHECK(Json::parse(all.out).size() == 3);
}

TEST_CASE("explicit line assignment") {
  CHECK(run({"construct", "z2", "--n", "2", "--p1", "0,inf", "--p3", "1"}).code == 0);
  CHECK(run({"construct", "z2", "--n", "2", "--p1", "0,1"}).code == 2);
  CHECK(run({"construct", "z2", "--n", "2", "--p1", "0,1", "--p3", "1"}).code == 2);
}

TEST_CASE("chartable reports the template") {
  TempDir dir;
  REQUIRE(run({"construct", "z2", "--n", "3", "--out", dir.file("s.json")}).code == 0);
  const auto r = run({"chartable", "--scheme", dir.file("s.json")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "template: T2(theta=7)"));
  CHECK(contains(r.out, "self-dual: yes"));

  const auto j = run({"chartable", "--scheme", dir.file("s.json"), "--json"});
  CHECK(Json::parse(j.out)["template"] == "T2(theta=7)");
}

TEST_CASE("pgd on the non-symmetric 16-point scheme") {
  TempDir dir;
  REQUIRE(run({"construct", "z4", "--n", "2", "--w", "(0,2)", "--out", dir.file("s.json")}).code == 0);
  const auto r = run({"pgd", "--scheme", dir.file("s.json")});
  CHECK(r.code == 0);
  std::size_t verdicts = 0;
  for (std::size_t at = r.out.find("partial geometric"); at != std::string::npos;
       at = r.out.find("partial geometric", at + 1)) {
    ++verdicts;
  }
  CHECK(verdicts == 3);
  CHECK_FALSE(contains(r.out, "not partial"));

  const auto j = Json::parse(run({"pgd", "--scheme", dir.file("s.json"), "--json"}).out);
  CHECK(j["ok"] == true);
  CHECK(j["relations"].size() == 3);
}

TEST_CASE("verify catches a moved point") {
  TempDir dir;
  REQUIRE(run({"construct", "z2", "--n", "2", "--out", dir.file("s.json")}).code == 0);
  CHECK(run({"verify", "--scheme", dir.file("s.json")}).code == 0);

  Json doc = Json::parse(slurp(dir.file("s.json")));
  Json moved = doc["classes"][1].back();
  doc["classes"][1].erase(doc["classes"][1].size() - 1);
  doc["classes"][2].push_back(moved);
  std::ofstream(dir.file("bad.json")) << doc.dump();
  const auto r = run({"verify", "--scheme", dir.file("bad.json")});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "closure-violation"));

  Json tampered = Json::parse(slurp(dir.file("s.json")));
  tampered["valencies"][1] = 7;
  std::ofstream(dir.file("tampered.json")) << tampered.dump();
  const auto t = run({"verify", "--scheme", dir.file("tampered.json"), "--json"});
  CHECK(t.code == 1);
  CHECK(Json::parse(t.out)["ok"] == false);
}

TEST_CASE("aut") {
  TempDir dir;
  REQUIRE(run({"construct", "z4", "--n", "2", "--w", "(2,0)", "--out", dir.file("s.json")}).code == 0);
  const auto r = run({"aut", "--scheme", dir.file("s.json"), "--json", "--gens"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(std::stoll(j["order"].get<std::string>()) % 16 == 0);
  CHECK_FALSE(j["generators"].empty());
}

TEST_CASE("exit codes") {
  TempDir dir;
  CHECK(run({"construct", "z2", "--bogus"}).code == 2);
  CHECK(run({"construct", "z2"}).code == 2);
  CHECK(run({"construct", "z2", "--n", "6"}).code == 2);
  CHECK(run({"construct", "z4", "--n", "5"}).code == 2);
  CHECK(run({"construct", "z4", "--n", "3", "--w", "(0,2,0)"}).code == 2);
  CHECK(run({"construct", "z4", "--n", "3", "--w", "(0,1,0);(0,0,2)"}).code == 2);
  CHECK(run({"construct", "z4", "--n", "3", "--poly", "0xf"}).code == 2);
  CHECK(run({"chartable", "--scheme", dir.file("missing.json")}).code == 2);
  std::ofstream(dir.file("garbage.json")) << "{not json";
  CHECK(run({"verify", "--scheme", dir.file("garbage.json")}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--version"}).code == 0);
}

TEST_CASE("runs are byte-identical and the manifest records them") {
  TempDir dir;
  REQUIRE(run({"construct", "z4", "--n", "3", "--all-w", "--out", dir.file("a.json"), "--manifest", dir.file("ma.json")})
              .code == 0);
  REQUIRE(run({"construct", "z4", "--n", "3", "--all-w", "--out", dir.file("b.json"), "--manifest", dir.file("mb.json")})
              .code == 0);
  CHECK(slurp(dir.file("a.json")) == slurp(dir.file("b.json")));
  const Json ma = Json::parse(slurp(dir.file("ma.json")));
  const Json mb = Json::parse(slurp(dir.file("mb.json")));
  CHECK(ma["outputs"][0]["sha256"] == mb["outputs"][0]["sha256"]);
  CHECK(ma["version"] == schurlab::cli::kVersion);
}

TEST_CASE("reproduce-paper") {
  const auto r = run({"reproduce-paper", "--jobs", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "5376"));
  CHECK(contains(r.out, "1792"));
  CHECK(contains(r.out, "all claims hold"));
  CHECK(r.out == run({"reproduce-paper", "--jobs", "1"}).out);
}
