#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "wshift/cli.hpp"

using namespace wshift;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze exit codes follow the verdict") {
  const auto one = run({"analyze", "periodic:1"});
  CHECK(one.code == kExitSimilar);
  const auto j = nlohmann::json::parse(one.out);
  CHECK(j["similarity"]["verdict"] == "similar");
  CHECK(j["similarity"]["c"].get<double>() == doctest::Approx(1.0));
  CHECK(j["similarity"]["kappa"].get<double>() == doctest::Approx(1.0));
  CHECK(j["spectrum_radius"].get<double>() == doctest::Approx(1.0));
  CHECK(j["normal"] == true);

  const auto p12 = nlohmann::json::parse(run({"analyze", "periodic:1,2"}).out);
  CHECK(p12["similarity"]["c"].get<double>() == doctest::Approx(0.70710678118654752));
  CHECK(p12["similarity"]["kappa"].get<double>() == doctest::Approx(1.4142135623730951));
  CHECK(p12["spectrum_radius"].get<double>() == doctest::Approx(1.4142135623730951));
  CHECK(p12["normal"] == false);

  const auto split = run({"analyze", "split:1|2@0"});
  CHECK(split.code == kExitNotSimilar);
  const auto s = nlohmann::json::parse(split.out);
  CHECK(s["similarity"]["verdict"] == "not-similar");
  CHECK(s["similarity"]["witness"]["reason"] == "rate-mismatch");
  CHECK(s["spectrum_radius"].is_null());
}

TEST_CASE("sampled sequences are undecided") {
  const std::string path = "wshift_cli_sampled.csv";
  {
    std::ofstream f(path);
    f << "0,1,0\n1,2,0\n2,0.5,0\n";
  }
  const auto r = run({"analyze", "sampled:" + path, "--horizon", "30"});
  CHECK(r.code == kExitUndecided);
  CHECK(nlohmann::json::parse(r.out)["similarity"]["verdict"] == "undecided");
  CHECK(run({"norms", "sampled:" + path}).code == kExitUnsupported);
  std::remove(path.c_str());
}

TEST_CASE("usage and parse errors") {
  const auto bad = run({"analyze", "periodic:1,x"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("           ^") != std::string::npos);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"norms", "periodic:1", "--json", "--csv"}).code == kExitUsage);
}

TEST_CASE("norms table") {
  const auto r = run({"norms", "periodic:1", "--c", "2", "--n-max", "4", "--csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,forward_norm,backward_norm\n1,2,0.5\n2,4,0.25\n3,8,0.125\n4,16,0.0625\n");

  const auto p12 = run({"norms", "periodic:1,2", "--n-max", "3"});
  CHECK(p12.out == "n,forward_norm,backward_norm\n1,2,1\n2,2,0.5\n3,4,0.5\n");
}

TEST_CASE("spectrum CSV") {
  const auto r = run({"spectrum", "periodic:2", "--wrap", "6", "--csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "re,im,modulus");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    const double modulus = std::stod(line.substr(line.rfind(',') + 1));
    CHECK(modulus == doctest::Approx(2.0).epsilon(1e-15));
  }
  CHECK(rows == 6);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "modified:periodic:1,2;0=4"},
           {"norms", "split:1,4|2@0", "--json"},
           {"spectrum", "periodic:1+i,2,0.25"},
           {"oracle", "--seed", "42", "--count", "3"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  CHECK(run({"oracle", "--seed", "1"}).out != run({"oracle", "--seed", "2"}).out);
}

TEST_CASE("oracle report") {
  const auto r = run({"oracle", "--seed", "9", "--count", "4", "--horizon", "30"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["lemma1"]["all_hold"] == true);
  CHECK(j["lemma1"]["instances"].size() == 4);
  CHECK(j["sznagy"]["all_hold"] == true);
  CHECK(j["horizon"] == 30);
}

TEST_CASE("seeded matrices are reproducible") {
  SeededMatrices a(123);
  SeededMatrices b(123);
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform();
    CHECK(u == b.uniform());
    CHECK(u >= -1.0);
    CHECK(u < 1.0);
  }
}
