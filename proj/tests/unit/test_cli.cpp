#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = biq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("cohomology") {
  const auto r = run({"cohomology", "--group", "sp", "--n", "2", "--torus", "s1"});
  REQUIRE(r.code == biq::cli::kPass);
  const auto j = json::parse(r.out);
  CHECK(j["variables"].size() == 2);
  CHECK(j["relations"].size() == 2);
  CHECK(j["m"] == 4);
}

TEST_CASE("SU tori by index or by --k") {
  const auto a = run({"cohomology", "--group", "su", "--n", "5", "--torus", "s22"});
  const auto b = run({"cohomology", "--group", "su", "--n", "5", "--torus", "s2", "--k", "2"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["torus"]["name"] == "s22");
}

TEST_CASE("documented examples") {
  const auto su3 = run({"cohomology", "--group", "su", "--n", "3", "--torus", "s12", "--k", "1"});
  REQUIRE(su3.code == 0);
  CHECK(json::parse(su3.out)["m"] == 3);
  CHECK(run({"hlp", "--group", "sp", "--n", "3", "--torus", "s1"}).code == biq::cli::kPass);
  const auto betti = run({"betti", "--group", "su", "--n", "3", "--torus", "s12", "--k", "1"});
  REQUIRE(betti.code == 0);
  CHECK(json::parse(betti.out)["total"] == 6);
}

TEST_CASE("hlp pass and fail") {
  const auto pass = run({"hlp", "--group", "su", "--n", "3", "--torus", "s12", "--no-timing"});
  CHECK(pass.code == biq::cli::kPass);
  const auto pj = json::parse(pass.out);
  CHECK(pj["passes"] == true);
  CHECK(pj["failing_k"].is_null());
  CHECK(pj["runtime_ms"] == 0);
  CHECK(pj["betti"] == json::array({1, 0, 2, 0, 2, 0, 1}));

  const auto fail = run({"hlp", "--group", "su", "--n", "3", "--torus", "s12", "--k", "1", "--omega", "0,0"});
  CHECK(fail.code == biq::cli::kHlpFail);
  const auto fj = json::parse(fail.out);
  CHECK(fj["passes"] == false);
  CHECK(fj["failing_k"] == 1);
  CHECK_FALSE(fj["witness"].empty());

  // m = 4 here, so k = 1 lands in the empty degree 5 and the first failure is k = 2.
  const auto sp = run({"hlp", "--group", "sp", "--n", "2", "--torus", "s1", "--omega", "0,0"});
  CHECK(sp.code == biq::cli::kHlpFail);
  CHECK(json::parse(sp.out)["failing_k"] == 2);
}

TEST_CASE("hlp flags leave the verdict unchanged") {
  const std::vector<std::string> base{"hlp", "--group", "spin-odd", "--n", "3", "--torus", "s2", "--no-timing"};
  const auto reference = run(base);
  REQUIRE(reference.code == 0);
  for (const auto& extra : {std::vector<std::string>{"--exact"}, {"--reduced-power"}, {"--order", "lex"},
                            {"--budget", "large"}}) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    const auto r = run(args);
    CAPTURE(extra.front());
    CHECK(r.code == 0);
    CHECK(r.out == reference.out);
  }
}

TEST_CASE("resource limits exit with code 3 and no verdict") {
  const auto r = run({"hlp", "--group", "sp", "--n", "4", "--torus", "s1", "--max-basis", "10"});
  CHECK(r.code == biq::cli::kResourceLimit);
  CHECK(r.out.empty());
  CHECK(r.err.find("resource limit") != std::string::npos);
}

TEST_CASE("budget from the environment") {
  ::setenv("BIQ_BUDGET", "bogus", 1);
  CHECK(run({"betti", "--group", "su", "--n", "3", "--torus", "s12"}).code == biq::cli::kInvalidInput);
  ::setenv("BIQ_BUDGET", "large", 1);
  CHECK(run({"betti", "--group", "su", "--n", "3", "--torus", "s12"}).code == biq::cli::kPass);
  CHECK(run({"betti", "--group", "su", "--n", "3", "--torus", "s12", "--budget", "bogus"}).code ==
        biq::cli::kInvalidInput);
  ::unsetenv("BIQ_BUDGET");
}

TEST_CASE("betti") {
  const auto r = run({"betti", "--group", "spin-even", "--n", "4", "--torus", "s1"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["total"] == 192);
  CHECK(j["euler"] == 192);
}

TEST_CASE("invalid input exits with code 2") {
  CHECK(run({"cohomology", "--group", "su", "--n", "3", "--torus", "s9"}).code == biq::cli::kInvalidInput);
  CHECK(run({"cohomology", "--group", "g2", "--n", "2", "--torus", "s1"}).code == biq::cli::kInvalidInput);
  CHECK(run({"cohomology", "--group", "su", "--n", "2", "--torus", "s11"}).code == biq::cli::kInvalidInput);
  CHECK(run({"cohomology", "--group", "su", "--n", "3"}).code == biq::cli::kInvalidInput);
  const auto bad = run({"hlp", "--group", "sp", "--n", "3", "--torus", "eschenburg"});
  CHECK(bad.code == biq::cli::kInvalidInput);
  CHECK(bad.out.empty());
  CHECK(run({"hlp", "--group", "su", "--n", "3", "--torus", "s12", "--omega", "1"}).code ==
        biq::cli::kInvalidInput);
  CHECK(run({"hlp", "--group", "su", "--n", "3", "--torus", "s12", "--omega", "1,x"}).code ==
        biq::cli::kInvalidInput);
  CHECK(run({"frobnicate"}).code == biq::cli::kInvalidInput);
  CHECK(run({}).code == biq::cli::kInvalidInput);
  CHECK(run({"moment", "--format", "png"}).code == biq::cli::kInvalidInput);
}

TEST_CASE("moment") {
  const auto j = run({"moment"});
  REQUIRE(j.code == 0);
  CHECK(json::parse(j.out)["points"]["p4"] == json::array({2, -3}));

  const auto bad = run({"moment", "--params", "100,1,1"});
  CHECK(bad.code == biq::cli::kInvalidInput);
  CHECK(bad.err.find("interiority violated: p2") != std::string::npos);
  CHECK(run({"moment", "--params", "1,1"}).code == biq::cli::kInvalidInput);

  const auto path = std::filesystem::temp_directory_path() / "biq_test_moment.svg";
  std::filesystem::remove(path);
  const auto svg = run({"moment", "--format", "svg", "-o", path.string()});
  CHECK(svg.code == 0);
  CHECK(svg.out.empty());
  const auto text = slurp(path);
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(text == run({"moment", "--format", "svg"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("hlp") != std::string::npos);
}

TEST_CASE("the installed executable runs") {
  const std::string cmd = std::string("\"") + BIQ_CLI_EXE + "\" cohomology --group sp --n 2 --torus s1 > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
}
