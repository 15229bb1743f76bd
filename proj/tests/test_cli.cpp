#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "primroot/cli.hpp"
#include "test_support.hpp"

using namespace primroot;
using namespace primroot::testing;
using primroot::cli::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "primroot");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("primroot_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("zeta n = 6") {
    const Run r = invoke({"zeta", "--n", "6"});
    REQUIRE(r.code == cli::kExitOk);
    const Json j = r.json();
    CHECK(j["schema_version"] == "1");
    CHECK(j["n"] == 6);
    CHECK(j["precision"] == 128);
    CHECK(j["a"] == "0.5");
    CHECK(j["r"] == "1");
    CHECK(j["b"].get<std::string>().rfind("0.866025403784438646763723170752936183", 0) == 0);
  }

  TEST_CASE("zeta with certificate") {
    const Run r = invoke({"zeta", "--n", "8", "--certificate"});
    REQUIRE(r.code == cli::kExitOk);
    const Json c = r.json()["certificate"];
    CHECK(c["p"] == 4);
    CHECK(c["xs"].size() == 5);
    for (const auto& [name, ok] : c["checks"].items()) CHECK_MESSAGE(ok.get<bool>(), name);

    const Run bad = invoke({"zeta", "--n", "5", "--certificate"});
    CHECK(bad.code == cli::kExitDomain);
    CHECK(bad.json()["error"]["kind"] == "InvalidN");
  }

  TEST_CASE("decimal strings round-trip") {
    const Run r = invoke({"roots", "--n", "5", "--precision", "96"});
    REQUIRE(r.code == cli::kExitOk);
    const Json j = r.json();
    CHECK(j["roots"].size() == 5);
    CHECK_FALSE(j.contains("target"));
    const RootSet set = solve_unity(5, 96);
    for (std::size_t i = 0; i < 5; ++i) {
      const Complex z = cli::complex_from_json(j["roots"][i], 96);
      CHECK(z.identical(set.roots[i]));
    }
  }

  TEST_CASE("verify") {
    for (const char* n : {"1", "4", "7", "12"}) {
      const Run r = invoke({"verify", "--n", n});
      CHECK_MESSAGE(r.code == cli::kExitOk, r.out);
      CHECK(r.json()["passed"] == true);
    }
    const Json j = invoke({"verify", "--n", "12"}).json();
    CHECK(j["certificate"]["p"] == 6);
    CHECK(j["checks"]["order_equals_n"] == true);
    CHECK(j["checks"]["oracle_agreement"] == true);
  }

  TEST_CASE("order") {
    const Json j = invoke({"order", "--n", "6", "--m", "2"}).json();
    CHECK(j["order"] == 3);
    CHECK(j["is_primitive"] == false);
    CHECK(j["gcd"] == 2);
    CHECK(j["gcd_criterion"] == false);
    const Json k = invoke({"order", "--n", "10", "--m", "3"}).json();
    CHECK(k["order"] == 10);
    CHECK(k["is_primitive"] == true);

    const Run bad = invoke({"order", "--n", "4", "--m", "5"});
    CHECK(bad.code == cli::kExitDomain);
    CHECK(bad.json()["error"]["kind"] == "InvalidArgument");
  }

  TEST_CASE("roots-of") {
    const Run r = invoke({"roots-of", "--n", "3", "--c-re", "-8", "--c-im", "0"});
    REQUIRE(r.code == cli::kExitOk);
    const Json j = r.json();
    CHECK(j["roots"][1]["re"] == "-2");
    CHECK(j["roots"][1]["im"] == "0");
    const Run zero = invoke({"roots-of", "--n", "3", "--c-re", "0", "--c-im", "0"});
    CHECK(zero.code == cli::kExitDomain);
    CHECK(zero.json()["error"]["kind"] == "ZeroTarget");
    const Run junk = invoke({"roots-of", "--n", "3", "--c-re", "x", "--c-im", "0"});
    CHECK(junk.code == cli::kExitDomain);
    CHECK(junk.json()["error"]["kind"] == "ParseError");
  }

  TEST_CASE("dft round trip through files") {
    const auto in = temp_file("in.json");
    const auto mid = temp_file("mid.json");
    const auto back = temp_file("back.json");
    {
      std::ofstream f(in);
      f << R"({"n": 4, "values": [{"re": "1", "im": "0"}, {"re": "2", "im": "0"},
                                  {"re": "0", "im": "1"}, {"re": "-1", "im": "0.5"}]})";
    }
    REQUIRE(invoke({"dft", "--n", "4", "--input", in.string(), "--output", mid.string()}).code == 0);
    {
      std::ifstream f(mid);
      Json j = Json::parse(f);
      CHECK(j["direction"] == "forward");
      CHECK(j["transform"][0]["re"] == "2");
      CHECK(j["transform"][0]["im"] == "1.5");
      Json next{{"n", 4}, {"values", j["transform"]}};
      std::ofstream g(mid);
      g << next.dump();
    }
    REQUIRE(invoke({"dft", "--n", "4", "--inverse", "--input", mid.string(), "--output", back.string()}).code == 0);
    std::ifstream f(back);
    const Json j = Json::parse(f);
    const Real tol = two_pow(-100);
    CHECK(near(cli::complex_from_json(j["transform"][0], 128), C(1, 0), tol));
    CHECK(near(cli::complex_from_json(j["transform"][3], 128), C("-1", "0.5"), tol));
    std::filesystem::remove(in);
    std::filesystem::remove(mid);
    std::filesystem::remove(back);
  }

  TEST_CASE("dft input errors") {
    const auto in = temp_file("bad.json");
    {
      std::ofstream f(in);
      f << "{not json";
    }
    const Run r = invoke({"dft", "--n", "2", "--input", in.string()});
    CHECK(r.code == cli::kExitDomain);
    CHECK(r.json()["error"]["kind"] == "ParseError");
    {
      std::ofstream f(in);
      f << R"({"values": [{"re": 1, "im": 0}]})";
    }
    CHECK(invoke({"dft", "--n", "2", "--input", in.string()}).json()["error"]["kind"] == "InvalidN");
    std::filesystem::remove(in);
    CHECK(invoke({"dft", "--n", "2", "--input", in.string()}).code == cli::kExitDomain);
  }

  TEST_CASE("usage errors") {
    CHECK(invoke({}).code == cli::kExitUsage);
    CHECK(invoke({"zeta"}).code == cli::kExitUsage);
    CHECK(invoke({"zeta", "--n", "0"}).code == cli::kExitUsage);
    CHECK(invoke({"zeta", "--n", "6", "--precision", "8"}).code == cli::kExitUsage);
    CHECK(invoke({"frobnicate"}).code == cli::kExitUsage);
    const Run help = invoke({"--help"});
    CHECK(help.code == cli::kExitOk);
    CHECK(help.out.find("roots-of") != std::string::npos);
  }

  TEST_CASE("text format") {
    const Run r = invoke({"zeta", "--n", "6", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("a: 0.5\n") != std::string::npos);
  }

  TEST_CASE("exit code mapping") {
    CHECK(cli::exit_code_for(ErrorKind::NoConvergence) == cli::kExitNumerical);
    CHECK(cli::exit_code_for(ErrorKind::CertificateFailure) == cli::kExitNumerical);
    CHECK(cli::exit_code_for(ErrorKind::InvalidN) == cli::kExitDomain);
    CHECK(cli::exit_code_for(ErrorKind::ZeroTarget) == cli::kExitDomain);
  }
}
