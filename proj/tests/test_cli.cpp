#include <doctest.h>

#include <stdexcept>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "rrfair/cli.hpp"
#include "rrfair/io.hpp"

using namespace rrfair;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("rrfair_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("generate") {
  TempDir tmp;
  auto r = run({"generate", "--n", "8", "--method", "4k", "--out", tmp.file("a.srr")});
  CHECK(r.code == exit_ok);
  CHECK(contains(r.out, "D=3121"));
  CHECK(contains(r.out, "F = 0.000 (0)"));

  r = run({"generate", "--n", "8", "--method", "cps8", "--out", tmp.file("cps8.srr")});
  CHECK(r.code == exit_ok);
  CHECK(read_file(tmp.file("cps8.srr")) == read_file(std::string(RRFAIR_GOLDEN_DIR) + "/cps8.srr"));

  r = run({"generate", "--n", "6", "--method", "4k", "--out", tmp.file("x.srr")});
  CHECK(r.code == exit_usage);
  CHECK(contains(r.err, "4k method requires n ≡ 0 mod 4"));

  r = run({"generate", "--n", "10", "--method", "cps", "--out", tmp.file("c.srr")});
  CHECK(r.code == exit_ok);
  CHECK(contains(r.out, "D=22221"));

  CHECK(run({"generate", "--n", "8", "--method", "bogus", "--out", tmp.file("y")}).code == exit_usage);
  CHECK(run({"generate", "--n", "8"}).code == exit_usage);
}

TEST_CASE("verify") {
  TempDir tmp;
  auto r = run({"verify", "--schedule", std::string(RRFAIR_GOLDEN_DIR) + "/cps8.srr"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.rfind("feasible, single-break, D=2221, ranking-fair\n", 0) == 0);

  run({"generate", "--n", "12", "--out", tmp.file("c12.srr")});
  r = run({"verify", "--schedule", tmp.file("c12.srr")});
  CHECK(r.code == exit_ok);
  CHECK(contains(r.out, "break rounds: {1,3,4,7,8,11}"));

  write_file(tmp.file("dup.srr"), "srr-schedule v1 n=4\n1 1 2\n1 3 4\n2 2 1\n2 4 3\n3 1 4\n3 2 3\n");
  r = run({"verify", "--schedule", tmp.file("dup.srr")});
  CHECK(r.code == exit_negative);
  CHECK(contains(r.out, "pair {1,2} scheduled twice"));

  write_file(tmp.file("bad.srr"), "srr-schedule v1 n=4\n1 1 2\nfoo\n");
  r = run({"verify", "--schedule", tmp.file("bad.srr")});
  CHECK(r.code == exit_usage);
  CHECK(contains(r.err, "line 3"));

  CHECK(run({"verify", "--schedule", tmp.file("missing.srr")}).code == exit_usage);

  r = run({"verify", "--schedule", tmp.file("c.srr")});
  CHECK(r.code == exit_usage);
  run({"generate", "--n", "8", "--method", "cps", "--out", tmp.file("c.srr")});
  r = run({"verify", "--schedule", tmp.file("c.srr")});
  CHECK(r.code == exit_ok);
  CHECK(contains(r.out, "not ranking-fair"));
}

TEST_CASE("score") {
  TempDir tmp;
  auto r = run({"score", "--input", "danish2008"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == "F = 0.476 (157/330)\n");

  r = run({"score", "--input", "baseball2024"});
  CHECK(r.out == "F = 0.497 (751/1512)\n");

  r = run({"score", "--input", "tata2002", "--per-team", "--emit-csv", tmp.file("tata.csv")});
  CHECK(r.code == exit_ok);
  CHECK(contains(r.out, "Adams M.         F_t = 1.000 (1)"));
  const std::string csv = read_file(tmp.file("tata.csv"));
  CHECK(csv.rfind("rank,name,F_t\n1,Morozevich A.,0.340659\n2,Adams M.,1.000000\n", 0) == 0);
  CHECK(contains(csv, "\nall,aggregate,0.573783\n"));

  run({"generate", "--n", "8", "--out", tmp.file("s.srr")});
  r = run({"score", "--input", tmp.file("s.srr")});
  CHECK(r.out == "F = 0.000 (0)\n");

  write_file(tmp.file("bad.rvm"), "ranked-venues v1 m=3 symbols=H,A\n1,a,HH\n2,b,AH\n3,c,HA\n");
  r = run({"score", "--input", tmp.file("bad.rvm")});
  CHECK(r.code == exit_negative);
  CHECK(contains(r.err, "ranks 1 and 3"));

  CHECK(run({"score", "--input", "nowhere"}).code == exit_usage);
}

TEST_CASE("solve") {
  TempDir tmp;
  auto r = run({"solve", "--dseq", "2,2,2,1", "--n", "8", "--out", tmp.file("w.srr")});
  CHECK(r.code == exit_ok);
  CHECK(r.out.rfind("feasible", 0) == 0);
  CHECK(run({"verify", "--schedule", tmp.file("w.srr")}).out.rfind("feasible, single-break, D=2221, ranking-fair", 0) ==
        0);

  r = run({"solve", "--dseq", "2,2,2,2,1", "--n", "10"});
  CHECK(r.code == exit_negative);
  CHECK(r.out.rfind("infeasible", 0) == 0);

  r = run({"solve", "--dseq", "2,2,1,2,3,1,2,1,3", "--n", "18", "--budget-nodes", "1"});
  CHECK(r.code == exit_unknown);
  CHECK(r.out.rfind("unknown", 0) == 0);

  CHECK(run({"solve", "--dseq", "2,2,2", "--n", "8"}).code == exit_usage);
  CHECK(run({"solve", "--dseq", "2,2,2,2", "--n", "8"}).code == exit_usage);
  CHECK(run({"solve", "--dseq", "2,x,2,1", "--n", "8"}).code == exit_usage);
}

TEST_CASE("usage") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"--help"}).code == exit_ok);
  CHECK(run({"frobnicate"}).code == exit_usage);
}

}  // TEST_SUITE
