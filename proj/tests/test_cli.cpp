#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>

#include "hurwitz/io.hpp"

using namespace hurwitz;
using io::Json;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HURWITZ_CLI_PATH) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), got);
  const int raw = pclose(pipe.release());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_CASE("rational and cyclotomic serialization round trip") {
  const Rational x = ratio(-7, 12);
  const Json j = io::to_json(x);
  CHECK(j["num"] == "-7");
  CHECK(j["den"] == "12");
  CHECK(io::rational_from_json(j) == x);
  const CycloNumber c(3, {ratio(1, 2), Rational(-2)});
  CHECK(io::cyclo_from_json(io::to_json(c)) == c);
}

TEST_CASE("table serialization") {
  HurwitzTable t(2, Engine::CutJoin);
  t.set(Profile({1, 0}), ColoredPartition::parse("2|-"), ratio(1, 4));
  const Json j = io::to_json(t);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["colored_partition"] == "2|-");
  CHECK(j[0]["denominator"] == "4");
  CHECK(j[0]["engine"] == "cutjoin");
  CHECK(io::to_csv(t) == "profile,colored_partition,numerator,denominator,engine\n\"1,0\",2|-,1,4,cutjoin\n");
  CHECK(io::parse_int_list("3,2") == std::vector<int>{3, 2});
  CHECK_THROWS(io::parse_int_list("3,x"));
}

TEST_CASE("classes subcommand") {
  const Run r = run("classes --m 2 --n 2");
  CHECK(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["classes"].size() == 5);
  CHECK(j["group_order"] == "8");
  CHECK(Json::parse(run("classes --m 1 --n 3").out)["classes"].size() == 3);
  CHECK(Json::parse(run("classes --m 3 --n 1").out)["classes"].size() == 3);
}

TEST_CASE("hurwitz subcommand: engines agree and output is deterministic") {
  const Run a = run("hurwitz --m 2 --max-degree 2 --engines enumeration,cutjoin,schur,bruteforce");
  CHECK(a.status == 0);
  const Json j = Json::parse(a.out);
  CHECK(j["agree"] == true);
  CHECK(j["tables"].size() == 4);
  const Run b = run("hurwitz --m 2 --max-degree 2 --engines enumeration,cutjoin,schur,bruteforce");
  CHECK(a.out == b.out);
  // zero profile at the identity class: 1/(m^n n!)
  bool found = false;
  for (const auto& row : j["tables"]["enumeration"]) {
    if (row["profile"] == "0,0" && row["colored_partition"] == "1,1|-") {
      found = true;
      CHECK(row["numerator"] == "1");
      CHECK(row["denominator"] == "8");
    }
  }
  CHECK(found);
}

TEST_CASE("formats") {
  const Run csv = run("hurwitz --m 1 --n 2 --format csv --engines schur");
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("profile,colored_partition,numerator,denominator,engine\n", 0) == 0);
  const Run pretty = run("hurwitz --m 1 --n 2 --format pretty");
  CHECK(pretty.out.find("engines agree: yes") != std::string::npos);
  CHECK(run("cj-matrix --m 2 --n 2 --format pretty").status == 0);
  CHECK(run("genfun --m 2 --max-degree 2 --orders 1,1 --format csv").status == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("hurwitz --m 0").status == 2);
  CHECK(run("hurwitz --format yaml").status == 2);
  CHECK(run("hurwitz --engines abacus").status == 2);
  CHECK(run("bogus").status == 2);
  CHECK(run("hurwitz --m 3 --n 4 --orders 4,0,0 --engines bruteforce --budget 1000").status == 2);
  CHECK(run("kp-check --m 2 --max-degree 11 --orders 2").status == 0);
  CHECK(run("kp-check --m 2 --max-degree 11 --orders 2 --perturb").status == 1);
  CHECK(run("elsv-check --m 2 --format pretty").status == 0);
}

TEST_CASE("verify subcommand") {
  const Run ok = run("verify --m 1 --n 3 --format json");
  CHECK(ok.status == 0);
  CHECK(Json::parse(ok.out)["pass"] == true);
  CHECK(run("verify --m 2 --n 2 --perturb --format pretty").status == 1);
}

TEST_CASE("output file") {
  const std::string path = "cli_test_classes.json";
  CHECK(run("classes --m 2 --n 1 --out " + path).status == 0);
  std::FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f);
  std::fclose(f);
  std::remove(path.c_str());
}
