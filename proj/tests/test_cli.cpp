#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "matroidqq/enumeration.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(MATROID_QQ_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), got);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("matroid-qq-cli-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen writes the file format") {
  TempDir dir;
  const std::string u24 = dir / "u24.matroid";
  REQUIRE(run("gen --kind uniform --n 4 --r 2 -o " + u24).status == 0);
  CHECK(slurp(u24) == "matroid n=4 kind=uniform r=2\n");

  const Run bases = run("gen --kind basisFamily --n 4 --r 2 --from " + u24);
  CHECK(bases.status == 0);
  CHECK(bases.out == "matroid n=4 kind=basisFamily r=2\n111111\n");

  const std::string a1 = dir / "a1.matroid";
  REQUIRE(run("gen --kind deletedBasis1 --n 4 --r 2 --A 0,1 -o " + a1).status == 0);
  CHECK(run("gen --kind basisFamily --from " + a1).out == "matroid n=4 kind=basisFamily r=2\n011111\n");

  CHECK(run("gen --kind uniform --n 4 --r 5").status == 2);
  CHECK(run("gen --kind deletedBasis1 --n 4 --r 2").status == 2);
  CHECK(run("gen --kind bogus --n 4 --r 2").status == 2);
  CHECK(run("--nonsense").status == 2);
}

TEST_CASE("check reports and exit codes") {
  TempDir dir;
  const std::string u24 = dir / "u24.matroid";
  const std::string ma = dir / "ma.matroid";
  const std::string a1 = dir / "a1.matroid";
  REQUIRE(run("gen --kind uniform --n 4 --r 2 -o " + u24).status == 0);
  REQUIRE(run("gen --kind pavingCounter --n 5 --r 3 --A 0,1 -o " + ma).status == 0);
  REQUIRE(run("gen --kind deletedBasis1 --n 5 --r 2 --A 0,1 -o " + a1).status == 0);

  const Run uniform = run("check " + u24 + " uniform --mode quantum --seed 7");
  CHECK(uniform.status == 0);
  const auto j = json_of(uniform);
  CHECK(j["property"] == "uniform");
  CHECK(j["answer"] == 1);
  CHECK(j["witness"].is_null());
  CHECK(j["total"] == j["classical"].get<int>() + j["quantum"].get<int>());

  const Run paving = run("check " + ma + " paving --mode quantum");
  CHECK(paving.status == 1);
  CHECK(json_of(paving)["answer"] == 0);
  CHECK(json_of(paving)["witness"] == "0,1");

  const Run eulerian = run("check " + a1 + " eulerian --mode bruteforce");
  CHECK(eulerian.status == 0);
  CHECK(json_of(eulerian)["answer"] == 1);
  CHECK(json_of(eulerian)["quantum"] == 0);
  CHECK(run("check " + a1 + " eulerian").status == 0);
  CHECK(run("check " + a1 + " eulerian --mode quantum").status == 2);

  CHECK(run("check " + u24 + " axioms").status == 0);
  CHECK(run("check " + ma + " uniform --mode bruteforce").status == 1);
  CHECK(run("check " + u24 + " colorful").status == 2);
  CHECK(run("check " + (dir / "missing.matroid") + " uniform").status == 2);
}

TEST_CASE("girth and count") {
  TempDir dir;
  const std::string a1 = dir / "a1.matroid";
  const std::string u24 = dir / "u24.matroid";
  const std::string free = dir / "free.matroid";
  REQUIRE(run("gen --kind deletedBasis1 --n 5 --r 2 --A 0,1 -o " + a1).status == 0);
  REQUIRE(run("gen --kind uniform --n 4 --r 2 -o " + u24).status == 0);
  REQUIRE(run("gen --kind uniform --n 4 --r 4 -o " + free).status == 0);

  CHECK(json_of(run("girth " + a1 + " --mode quantum --seed 3"))["girth"] == 2);
  CHECK(json_of(run("girth " + a1 + " --mode bruteforce"))["girth"] == 2);
  const auto inf = json_of(run("girth " + free));
  CHECK(inf["girth"] == "inf");
  CHECK(inf["classical"] == 1);

  CHECK(json_of(run("count " + u24 + " bases"))["count"] == 6);
  CHECK(json_of(run("count " + u24 + " flats"))["count"] == 6);
  CHECK(json_of(run("count " + u24 + " circuits"))["count"] == 4);
  const auto h = json_of(run("count " + u24 + " hyperplanes"));
  CHECK(h["count"] == 4);
  CHECK(h["largestHyperplane"] == 1);
  CHECK(run("count " + u24 + " loops").status == 2);
}

TEST_CASE("exit codes follow ground truth on the fixture corpus") {
  TempDir dir;
  for (const auto& spec : {mqq::make_uniform(6, 3), mqq::make_uniform(5, 0), mqq::make_uniform(4, 4),
                           mqq::make_deleted_basis(6, 3, mqq::SubsetMask::of({0, 1, 2}), mqq::DeletedVariant::kOne),
                           mqq::make_deleted_basis(6, 3, mqq::SubsetMask::of({0, 2, 4}), mqq::DeletedVariant::kTwo),
                           mqq::make_paving_counterexample(6, 3, mqq::SubsetMask::of({2, 5})),
                           mqq::testing::two_block_sum()}) {
    const std::string path = dir / "m.matroid";
    {
      std::ofstream out(path);
      mqq::write_matroid(out, spec);
    }
    CAPTURE(mqq::to_text(spec));
    const auto o = mqq::oracle_of(spec);
    const auto expect = [](bool holds) { return holds ? 0 : 1; };
    for (const char* mode : {"quantum", "bruteforce"}) {
      const std::string tail = std::string(" --mode ") + mode + " --seed 1";
      CHECK(run("check " + path + " uniform" + tail).status == expect(!mqq::find_uniform_violation(o)));
      CHECK(run("check " + path + " paving" + tail).status == expect(!mqq::find_paving_violation(o)));
      CHECK(run("check " + path + " trivial" + tail).status == expect(!mqq::find_trivial_violation(o)));
      CHECK(run("check " + path + " loopless" + tail).status == expect(!mqq::find_loopless_violation(o)));
    }
    CHECK(run("check " + path + " eulerian").status == expect(mqq::is_eulerian_bruteforce(o)));
    CHECK(run("check " + path + " axioms").status == 0);
  }
}

TEST_CASE("round trip through gen") {
  TempDir dir;
  const std::string path = dir / "m.matroid";
  REQUIRE(run("gen --kind deletedBasis2 --n 6 --r 3 --A 0,2,4 -o " + path).status == 0);
  std::ifstream in(path);
  CHECK(mqq::read_matroid(in) == mqq::make_deleted_basis(6, 3, mqq::SubsetMask::of({0, 2, 4}),
                                                          mqq::DeletedVariant::kTwo));
}

TEST_CASE("bench output is replayable") {
  TempDir dir;
  const std::string a = dir / "a.csv";
  const std::string b = dir / "b.csv";
  REQUIRE(run("bench uniformDecision --n 6..8 --trials 5 --seed 42 --threads 1 -o " + a).status == 0);
  REQUIRE(run("bench uniformDecision --n 6..8 --trials 5 --seed 42 --threads 3 -o " + b).status == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("n,r,algorithm,", 0) == 0);

  const Run empty = run("bench trivial --n 4 --trials 0");
  CHECK(empty.status == 0);
  CHECK(empty.out ==
        "n,r,algorithm,trial,seed,classicalQueries,quantumQueries,answer,groundTruth,correct,wallTimeMicros\r\n");

  CHECK(run("bench girth --n 8..12 --max-n 10 --trials 1").status == 2);
  CHECK(run("bench girth --n 17 --trials 1").status == 2);
}

TEST_CASE("bound tables") {
  const Run uni = run("bound uniformVsDeleted1 --n 4");
  CHECK(uni.status == 0);
  CHECK(uni.out.find("sqrt(6)") != std::string::npos);
  CHECK(uni.out.find("true") != std::string::npos);

  const Run eul = run("bound eulerianEven --n 6");
  CHECK(eul.out.find("sqrt(10)") != std::string::npos);

  const Run pav = run("bound pavingVsCounter --n 5");
  CHECK(pav.out.find("sqrt(10/3)") != std::string::npos);
  CHECK(pav.out.find("1.825742") != std::string::npos);

  const Run wide = run("bound uniformVsDeleted1 --n 7..10");
  CHECK(wide.out.find("false") == std::string::npos);
  CHECK(run("bound bogus --n 4").status == 2);
}
