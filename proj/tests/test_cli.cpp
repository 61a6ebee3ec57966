#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coinv/cli.hpp"
#include "support/golden.hpp"

using namespace coinv;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("basis listing") {
  const Run r = run({"basis", "--n", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "1\nx2\nth2\nxi2\n");
  const Run j = run({"basis", "--n", "3", "--variant", "b12", "--format", "json"});
  CHECK(j.code == kExitOk);
  CHECK(nlohmann::json::parse(j.out).size() == 384);
}

TEST_CASE("hilbert formats") {
  CHECK(run({"hilbert", "--n", "2"}).out == "q + u + v + 1\n");
  const auto j = nlohmann::json::parse(run({"hilbert", "--n", "3", "--format", "json"}).out);
  CHECK(coinv::QuvPolynomial::from_json(j) == coinv::testing::read_poly(
                                                    "(q^3 + 2q^2 + 2q + 1) + (q^2 + 3q + 2)u + (q^2 + 3q + 2)v + "
                                                    "u^2 + (q + 3)uv + v^2"));
  CHECK(run({"hilbert", "--n", "2", "--variant", "a11"}).out == "q + u + 1\n");
}

TEST_CASE("frobenius forms") {
  CHECK(run({"frobenius", "--n", "2"}).out == "(q + u + v)s_{1 1} + s_{2}\n");
  CHECK(run({"frobenius", "--n", "2", "--form", "qsym"}).out == "{}: 1\n{1}: q + u + v\n");
  const Run refined = run({"frobenius", "--n", "3", "--k", "1", "--l", "1"});
  CHECK(refined.code == kExitOk);
  CHECK(refined.out.find("s_{1 1 1}") != std::string::npos);
  CHECK(run({"frobenius", "--n", "4", "--jobs", "3"}).out == run({"frobenius", "--n", "4"}).out);
}

TEST_CASE("bijection tables match the golden files") {
  for (int n = 1; n <= 3; ++n) {
    const Run r = run({"bijection", "--n", std::to_string(n)});
    CHECK(r.code == kExitOk);
    CHECK(r.out == coinv::testing::read_file(coinv::testing::golden_path("bijection_n" + std::to_string(n) + ".csv")));
    CHECK(r.out == bijection_csv(n));
  }
  const auto j = nlohmann::json::parse(run({"bijection", "--n", "2", "--format", "json"}).out);
  CHECK(j.size() == 4);
}

TEST_CASE("hook and hmu") {
  const Run hook = run({"hook", "--n", "4", "--d", "1"});
  CHECK(hook.code == kExitOk);
  CHECK(hook.out.find("MISMATCH") == std::string::npos);
  CHECK(run({"hook", "--n", "3", "--d", "0", "--k", "1", "--l", "1"}).out ==
        "k=1 l=1 d=0: enumeration q + 1 | formula q + 1\n");
  CHECK(run({"hook", "--n", "3"}).code == kExitInvalidInput);
  CHECK(run({"hmu", "--n", "3", "--mu", "2,1", "--k", "1", "--l", "1"}).out == "k=1 l=1 mu=2,1: 1\n");
  CHECK(run({"hmu", "--n", "3", "--mu", "2,2"}).code == kExitInvalidInput);
  CHECK(run({"hmu", "--n", "3"}).code == kExitInvalidInput);
}

TEST_CASE("verify passes at small n") {
  const Run r = run({"verify", "--n", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("oracle subcommand") {
  const Run r = run({"oracle", "--n", "2", "--format", "json"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["matches_basis"] == true);
  CHECK(j["complete"] == true);
  CHECK(run({"oracle", "--n", "1", "--variant", "b12"}).code == kExitOk);
  CHECK(run({"oracle", "--n", "4"}).code == kExitInvalidInput);
  CHECK(run({"oracle", "--n", "3", "--variant", "b12"}).code == kExitInvalidInput);
  CHECK(run({"oracle", "--n", "2", "--variant", "a11"}).code == kExitInvalidInput);
  CHECK(run({"oracle", "--n", "3", "--max-x-degree", "1"}).code == kExitVerificationFailed);
}

TEST_CASE("bad input exits with status 2 and a message") {
  for (const auto& args : std::vector<std::vector<std::string>>{{},
                                                                 {"bogus"},
                                                                 {"hilbert"},
                                                                 {"hilbert", "--n", "0"},
                                                                 {"hilbert", "--n", "x"},
                                                                 {"hilbert", "--n", "2", "--variant", "c12"},
                                                                 {"basis", "--n", "2", "--format", "xml"},
                                                                 {"frobenius", "--n", "2", "--variant", "b12"}}) {
    const Run r = run(args);
    CHECK(r.code == kExitInvalidInput);
    CHECK_FALSE(r.err.empty());
  }
}
