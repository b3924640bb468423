#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lawforge/cli.hpp"
#include "lawforge/law_builders.hpp"

using namespace lawforge;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("lawforge_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("build writes the word and the plan") {
  TempDir dir;
  const Run r = cli({"build", "master", "15", "--out", dir / "m15"});
  CHECK(r.code == kExitOk);
  const std::string plan = slurp(dir / "m15.plan");
  CHECK(plan.find("nil_class_bound=4\n") != std::string::npos);
  CHECK(plan.find("achieved_length=") != std::string::npos);
  CHECK(plan.find("budget_length=") != std::string::npos);
  CHECK(parse_plan(plan).n == 15);

  CHECK(cli({"build", "psl2:5", "--out", dir / "p5", "--format", "flat"}).code == kExitOk);
  CHECK(slurp(dir / "p5") == psl2_law(5).word().str() + "\n");
  CHECK(cli({"build", "sym:4", "--out", dir / "s4", "--format", "expr"}).code == kExitOk);
  CHECK(cli({"verify", dir / "s4", "--group", "S4"}).code == kExitOk);
}

TEST_CASE("build usage and resource errors") {
  TempDir dir;
  CHECK(cli({"build", "master", "0", "--out", dir / "x"}).code == kExitUsage);
  CHECK(cli({"build", "master", "--out", dir / "x"}).code == kExitUsage);
  CHECK(cli({"build", "abelian", "5", "--out", dir / "x"}).code == kExitUsage);
  CHECK(cli({"build", "psl2:6", "--out", dir / "x"}).code == kExitUsage);
  CHECK(cli({"build", "psl2:x", "--out", dir / "x"}).code == kExitUsage);
  CHECK(cli({"build", "master", "15"}).code == kExitUsage);
  CHECK(cli({"build", "master", "15", "--out", dir / "x", "--format", "json"}).code == kExitUsage);
  CHECK(cli({"build", "master", "15", "--out", dir / "x", "--provider", dir / "missing.so"}).code == kExitUsage);
  const Run flat = cli({"build", "master", "15", "--out", dir / "x", "--format", "flat"});
  CHECK(flat.code == kExitResource);
  CHECK(flat.err.find("flat cap") != std::string::npos);
  CHECK(cli({"build", "psl2:5", "--out", dir / "y", "--format", "flat", "--max-flat", "10"}).code == kExitResource);
  spit(dir / "cfg", "c0=2\n");
  CHECK(cli({"build", "simple", "10000", "--out", dir / "z", "--config", dir / "cfg"}).code == kExitOk);
  CHECK(slurp(dir / "z.plan").find("ladder_cutoff=20\n") != std::string::npos);
  spit(dir / "badcfg", "speed=fast\n");
  CHECK(cli({"build", "simple", "100", "--out", dir / "z", "--config", dir / "badcfg"}).code == kExitUsage);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("verify exit codes") {
  TempDir dir;
  spit(dir / "aa", "aa\n");
  const Run fail = cli({"verify", dir / "aa", "--group", "S3"});
  CHECK(fail.code == kExitLawFails);
  CHECK(fail.out.find("S3  order=6  FAILS  witness g=(") != std::string::npos);
  CHECK(cli({"verify", dir / "aa", "--group", "C2"}).code == kExitOk);
  spit(dir / "bad", "(comm a\n");
  CHECK(cli({"verify", dir / "bad", "--group", "C2"}).code == kExitUsage);
  CHECK(cli({"verify", dir / "missing", "--group", "C2"}).code == kExitUsage);
  CHECK(cli({"verify", dir / "aa"}).code == kExitUsage);
  CHECK(cli({"verify", dir / "aa", "--group", "Nope"}).code == kExitUsage);
  CHECK(cli({"verify", dir / "aa", "--group", "C2", "--all-upto", "4"}).code == kExitUsage);
  CHECK(cli({"verify", dir / "aa", "--group", "S8"}).code == kExitOk);  // skipped with a notice
  spit(dir / "empty", "\n");
  CHECK(cli({"verify", dir / "empty", "--all-upto", "15"}).code == kExitOk);
}

TEST_CASE("build then verify round trip") {
  TempDir dir;
  REQUIRE(cli({"build", "master", "15", "--out", dir / "m"}).code == kExitOk);
  const Run r = cli({"verify", dir / "m", "--all-upto", "15", "--csv", dir / "m.csv"});
  CHECK(r.code == kExitOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 28);
  const std::string csv = slurp(dir / "m.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 29);
  REQUIRE(cli({"verify", dir / "m", "--all-upto", "15", "--csv", dir / "m2.csv", "--threads", "2"}).code == 0);
  CHECK(slurp(dir / "m2.csv") == csv);
  for (const char* family : {"nilpotent", "solvable", "simple", "semisimple"}) {
    CAPTURE(family);
    REQUIRE(cli({"build", family, "60", "--out", dir / family}).code == kExitOk);
  }
  CHECK(cli({"verify", dir / "simple", "--group", "A5", "--group", "PSL2(5)"}).code == kExitOk);
  CHECK(cli({"verify", dir / "solvable", "--group", "S4", "--group", "D30"}).code == kExitOk);
  CHECK(cli({"verify", dir / "nilpotent", "--group", "Q8xC3", "--group", "D16"}).code == kExitOk);
  CHECK(cli({"verify", dir / "semisimple", "--group", "A5"}).code == kExitOk);
  // Repeated builds are byte-identical.
  REQUIRE(cli({"build", "master", "15", "--out", dir / "m_again"}).code == kExitOk);
  CHECK(slurp(dir / "m") == slurp(dir / "m_again"));
}

TEST_CASE("table") {
  TempDir dir;
  const Run r = cli({"table", "--n-from", "16", "--n-to", "1024", "--geometric-step", "2", "--out", dir / "t.csv"});
  CHECK(r.code == kExitOk);
  const std::string csv = slurp(dir / "t.csv");
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == kBudgetCsvHeader);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 5);
    CHECK(BigInt(cells[1]) > 0);
    CHECK(BigInt(cells[1]) <= BigInt(cells[2]));
  }
  CHECK(rows == 7);
  CHECK(cli({"table", "--n-from", "8", "--n-to", "64"}).code == kExitUsage);
  CHECK(cli({"table", "--n-from", "16", "--n-to", "64", "--geometric-step", "1"}).code == kExitUsage);
}

TEST_CASE("minlaw") {
  const Run psl = cli({"minlaw", "--group", "PSL2(5)", "--max-len", "4"});
  CHECK(psl.code == kExitOk);
  CHECK(psl.out == "no law of length <= 4\n");
  const Run c2 = cli({"minlaw", "--group", "C2", "--max-len", "4"});
  CHECK(c2.out == "min 2: aa\n");
  CHECK(cli({"minlaw", "--group", "C2", "--max-len", "0"}).code == kExitUsage);
  CHECK(cli({"minlaw", "--group", "C2", "--max-len", "13"}).code == kExitResource);
  CHECK(cli({"minlaw", "--group", "C2", "--max-len", "4", "--no-prune"}).out == "min 2: aa\n");
}

TEST_CASE("catalog command") {
  const Run r = cli({"catalog"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("PSL2(13)|") != std::string::npos);
}
