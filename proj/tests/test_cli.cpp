#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "mfas/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = mfas::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("mfas_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kC6 = "n 6 m_edges 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";

}  // namespace

TEST_CASE("solve") {
  TempDir tmp;
  const auto c6 = tmp.write("c6.txt", kC6);
  const Run r = run({"solve", "--input", c6, "--m", "4"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["fas_size"] == 1);
  CHECK(j["gamma"] == 9);
  CHECK(j["girth"] == 6);
  CHECK(j["bound_value"] == 4);
  CHECK(j["certificate_ok"] == true);
  CHECK(j["fas_edges"] == json::parse("[[2,3]]"));
  CHECK(j["trace"]["kind"] == "split");
  CHECK(j["trace"]["candidate"]["ratio"] == "1/2");
  CHECK_FALSE(j.contains("wall_time_ms"));
  CHECK_FALSE(j.contains("exact_beta"));

  const Run ex = run({"solve", "--input", c6, "--m", "4", "--exact", "--timings"});
  REQUIRE(ex.code == 0);
  const json je = json::parse(ex.out);
  CHECK(je["exact_beta"] == 1);
  CHECK(je["wall_time_ms"].contains("solve"));

  CHECK(run({"solve", "--input", c6, "--m", "4", "--jobs", "4"}).out == r.out);

  const auto report = tmp.file("report.json");
  const auto trace = tmp.file("trace.json");
  CHECK(run({"solve", "--input", c6, "--m", "4", "--output", report, "--trace-output", trace}).code == 0);
  CHECK(slurp(report) == r.out);
  CHECK(json::parse(slurp(trace)) == j["trace"]);
}

TEST_CASE("solve exit codes") {
  TempDir tmp;
  const Run tri = run({"solve", "--input", tmp.write("t.txt", "n 3 m_edges 3\n0 1\n1 2\n2 0\n"), "--m", "4"});
  CHECK(tri.code == 2);
  CHECK(tri.err.find("0 -> 1 -> 2 -> 0") != std::string::npos);
  CHECK(run({"solve", "--input", tmp.write("bad.txt", "nodes 3\n"), "--m", "4"}).code == 3);
  CHECK(run({"solve", "--input", tmp.file("missing.txt"), "--m", "4"}).code == 3);
  CHECK(run({"solve", "--input", tmp.write("c6.txt", kC6), "--m", "3"}).code == 4);
  CHECK(run({"solve", "--input", tmp.file("c6.txt")}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({}).code == 64);
}

TEST_CASE("verify") {
  TempDir tmp;
  const auto c6 = tmp.write("c6.txt", kC6);
  const auto report = tmp.file("r.json");
  REQUIRE(run({"solve", "--input", c6, "--m", "4", "--output", report}).code == 0);
  const Run ok = run({"verify", "--input", c6, "--report", report});
  CHECK(ok.code == 0);
  CHECK(ok.out == "certificate ok\n");

  json j = json::parse(slurp(report));
  j["trace"]["x3"] = json::parse("[[1,2]]");
  const auto bad = tmp.write("bad.json", j.dump());
  const Run tampered = run({"verify", "--input", c6, "--report", bad});
  CHECK(tampered.code == 1);
  CHECK(tampered.out.find("X₃ ≠ E(V₁,V₂)") != std::string::npos);

  j = json::parse(slurp(report));
  j.erase("trace");
  CHECK(run({"verify", "--input", c6, "--report", tmp.write("notrace.json", j.dump())}).code == 64);
  CHECK(run({"verify", "--input", c6, "--report", tmp.write("junk.json", "{")}).code == 64);

  // the same certificate does not carry over to a different graph
  const auto other = tmp.write("c7.txt", "n 7 m_edges 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n");
  CHECK(run({"verify", "--input", other, "--report", report}).code == 1);
}

TEST_CASE("exact") {
  TempDir tmp;
  const Run c6 = run({"exact", "--input", tmp.write("c6.txt", kC6)});
  REQUIRE(c6.code == 0);
  const json j = json::parse(c6.out);
  CHECK(j["exact_beta"] == 1);
  CHECK(j["exact_edges"] == json::parse("[[0,1]]"));

  const Run two = run({"exact", "--input", tmp.write("two.txt", "n 6 m_edges 6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n")});
  CHECK(json::parse(two.out)["exact_beta"] == 2);

  CHECK(run({"exact", "--input", tmp.write("big.txt", "n 30 m_edges 0\n")}).code == 5);
  CHECK(run({"exact", "--input", tmp.file("c6.txt"), "--guard-exact", "5"}).code == 5);
}

TEST_CASE("stats") {
  TempDir tmp;
  const Run c6 = run({"stats", "--input", tmp.write("c6.txt", kC6), "--m", "4"});
  REQUIRE(c6.code == 0);
  CHECK(c6.out.find("# m=4 n=6 trimmed=0 remaining=6") != std::string::npos);
  CHECK(c6.out.find("1/2") != std::string::npos);
  CHECK(c6.out.find("min exact ratio: 1/2 at v=0 k=1 side=out") != std::string::npos);
  CHECK(c6.out.find("selected candidate: v=0 k=1 side=out ratio=1/2") != std::string::npos);

  const Run one = run({"stats", "--input", tmp.file("c6.txt"), "--m", "4", "--vertex", "3"});
  CHECK(one.code == 0);
  CHECK(one.out.find("\n3 ") != std::string::npos);
  CHECK(one.out.find("\n0 ") == std::string::npos);

  const Run empty = run({"stats", "--input", tmp.write("e.txt", "n 4 m_edges 0\n"), "--m", "4"});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("# every vertex was trimmed: the graph is acyclic") != std::string::npos);

  CHECK(run({"stats", "--input", tmp.file("c6.txt"), "--m", "4", "--vertex", "9"}).code == 64);
}

TEST_CASE("gen") {
  TempDir tmp;
  const Run c = run({"gen", "--model", "cycle", "--n", "6"});
  REQUIRE(c.code == 0);
  CHECK(c.out == "# genspec {\"model\":\"cycle\",\"n\":6,\"m\":4,\"seed\":1}\n" + kC6);

  const auto path = tmp.file("er.txt");
  CHECK(run({"gen", "--model", "er", "--n", "12", "--p", "3/10", "--seed", "1", "--output", path}).code == 0);
  CHECK(slurp(path).find("n 12 m_edges 32\n") != std::string::npos);
  CHECK(run({"solve", "--input", path, "--m", "4"}).code == 0);

  const Run warn = run({"gen", "--model", "circulant", "--n", "6", "--steps", "1,2"});
  CHECK(warn.code == 0);
  CHECK(warn.err.find("warning") != std::string::npos);

  CHECK(run({"gen", "--model", "circulant", "--n", "6", "--steps", "6"}).code == 64);
  CHECK(run({"gen", "--model", "blowup", "--n", "5", "--sizes", "1,1"}).code == 64);
  CHECK(run({"gen", "--model", "torus", "--n", "5"}).code == 64);
  CHECK(run({"gen", "--model", "er", "--p", "2/1"}).code == 64);
}

TEST_CASE("bench") {
  const Run b = run({"bench", "--n", "12", "--m", "4", "--seeds", "20"});
  REQUIRE(b.code == 0);
  std::istringstream lines(b.out);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("er ", 0) != 0) continue;
    ++rows;
    std::istringstream cols(line);
    std::string model, n, m, seed, gamma, fas, bound, exact, ratio, status;
    cols >> model >> n >> m >> seed >> gamma >> fas >> bound >> exact >> ratio >> status;
    CHECK(status == "ok");
    if (ratio != "-") {
      const auto slash = ratio.find('/');
      const long num = std::stol(ratio.substr(0, slash));
      const long den = slash == std::string::npos ? 1 : std::stol(ratio.substr(slash + 1));
      CHECK(num <= den);
    }
  }
  CHECK(rows == 20);
  CHECK(b.out.find("# instances 20 certificate_ok 20") != std::string::npos);

  const Run mixed = run({"bench", "--model", "cycle,circulant,blowup", "--n", "9", "--m", "5", "--seeds", "2"});
  CHECK(mixed.code == 0);
  CHECK(mixed.out.find("# instances 6 ") != std::string::npos);
}
