#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kuga/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = kuga::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"rt-scan", "--g", "2..3"}).code == 2);
  CHECK(run({"rt-scan", "--g", "3..2", "--n", "1"}).code == 2);
  CHECK(run({"rt-scan", "--g", "x", "--n", "1"}).code == 2);
  CHECK(run({"rt-check", "--rep", "V6+"}).code == 2);
  CHECK(run({"rt-check", "--rep", "V3"}).code == 2);
  CHECK(run({"rt-check", "--rep", "V6+V1^2", "--g", "3"}).code == 2);
  CHECK(run({"cone-check", "--form", "1,0"}).code == 2);
  CHECK(run({"cone-check", "--form", "0,0,0"}).code == 2);
  CHECK(run({"cone-check", "--form", "1,0,1", "--chi", "1"}).code == 2);
  CHECK(run({"tables", "--g", "1..6"}).code == 2);
  CHECK(run({"asymptotics", "--model", "spiral"}).code == 2);
  CHECK(run({"asymptotics", "--model", "flow", "--rank", "4", "--gprime", "3"}).code == 2);
  CHECK(run({"siegel-verify", "--tol", "0"}).code == 2);
  CHECK(run({"symplectic-verify", "--format", "csv"}).code == 2);
}

TEST_CASE("rt-scan over the small range") {
  const auto r = run({"rt-scan", "--g", "2..6", "--n", "1..4"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("exceptional_pairs") == json::parse("[[2,1],[2,2],[3,1]]"));
  CHECK(j.at("exceptions").size() == 3);
  for (const auto& c : j.at("exceptions")) CHECK(c.at("rep").get<std::string>().rfind("V6+V1^", 0) == 0);
  CHECK(j.at("quasi_reflections").empty());
  CHECK_FALSE(r.err.empty());

  const auto csv = run({"rt-scan", "--g", "2..3", "--n", "1", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out ==
        "g,n,rep,v_angles,rt,canonical,quasi_reflection\n"
        "2,1,V6+V1^2,0 1/6,2/3,false,false\n"
        "3,1,V6+V1^4,0 0 1/6,5/6,false,false\n");
}

TEST_CASE("rt-check") {
  auto r = run({"rt-check", "--rep", "V6+V1^2", "--g", "2", "--n", "2"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("min_rt") == "5/6");
  CHECK(j.at("canonical") == false);

  r = run({"rt-check", "--rep", "V6+V1^2", "--n", "3"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j.at("min_rt") == "1");
  CHECK(j.at("canonical") == true);
}

TEST_CASE("verification subcommands") {
  auto r = run({"symplectic-verify", "--seed", "3", "--trials", "50"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("passed") == true);

  r = run({"siegel-verify", "--g", "3", "--trials", "50", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("failures") == 0);

  r = run({"asymptotics", "--model", "flow", "--gprime", "3", "--rank", "2", "--seed", "4"});
  CHECK(r.code == 0);
  r = run({"asymptotics", "--model", "boundary", "--a", "3"});
  CHECK(r.code == 0);
  r = run({"asymptotics", "--model", "pole", "--nu", "3", "--m", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("eps,integral,class,fitted_exponent\n", 0) == 0);
  CHECK(r.out.find(",power,") != std::string::npos);
}

TEST_CASE("cone-check and tables") {
  auto r = run({"cone-check", "--form", "2,0,2"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("primitive") == false);
  CHECK(j.at("dual_character").is_null());

  r = run({"cone-check", "--form", "2,3,0", "--chi", "1,0,0"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j.at("primitive") == true);
  CHECK(j.at("dual_pairing") == "1");
  CHECK(j.at("region") == "outside");
  CHECK(j.at("extension") == "extends_vanishing");

  r = run({"tables"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j.at("rows").size() == 5);
  CHECK(j.at("consistent") == true);
}

TEST_CASE("identical config gives byte-identical reports") {
  const std::vector<std::vector<std::string>> configs{
      {"rt-scan", "--g", "2..4", "--n", "1..2", "--threads", "1"},
      {"symplectic-verify", "--seed", "9", "--trials", "20"},
      {"siegel-verify", "--trials", "30", "--seed", "9"},
      {"asymptotics", "--model", "flow", "--seed", "9"},
  };
  for (const auto& args : configs) CHECK(run(args).out == run(args).out);

  auto threaded = std::vector<std::string>{"rt-scan", "--g", "2..4", "--n", "1..2", "--threads", "4"};
  CHECK(run(threaded).out == run(configs[0]).out);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "kuga_sing_test_cli.json";
  const auto r = run({"tables", "--g", "2", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(json::parse(in).at("rows").size() == 1);
  std::filesystem::remove(path);
}
