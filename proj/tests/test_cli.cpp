#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "ndfourier/errors.hpp"
#include "ndfourier/io.hpp"

using namespace ndf;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "ndfourier-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("map subcommand") {
  Run r = run({"map", "--bijection", "ternary-line:minus", "--inverse", "1/2"});
  CHECK(r.code == cli::kOk);
  CHECK(lines(r.out) == std::vector<std::string>{"input,result,decimal,status", "1/2,1/3,0.33333333333333333333,ok"});

  r = run({"map", "--bijection", "quaternary:plus", "--inverse", "1"});
  CHECK(lines(r.out).at(1) == "1,2,2,ok");
  r = run({"map", "--bijection", "identity", "--forward", "7"});
  CHECK(lines(r.out).at(1) == "7,7,7,ok");

  r = run({"map", "--bijection", "ternary-line:minus", "--forward", "1/3", "1/2"});
  CHECK(r.code == cli::kNotInCantorSet);
  CHECK(lines(r.out).at(1) == "1/3,1/2,0.5,ok");
  CHECK(lines(r.out).at(2) == "1/2,,,not-in-cantor-set");

  r = run({"map", "--bijection", "identity", "--format", "json", "--inverse", "-3/4"});
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["rows"][0]["result"] == "-3/4");
  CHECK(doc["direction"] == "inverse");
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({"map", "--bijection", "cantor", "1"}).code == cli::kUsageError);
  CHECK(run({"map", "--bijection", "identity", "0.5"}).code == cli::kUsageError);
  CHECK(run({"map", "--bijection", "identity", "--decimal-input", "0.5"}).code == cli::kOk);
  CHECK(run({"map", "--forward", "--inverse", "1"}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"figures", "--which", "fig9"}).code == cli::kUsageError);
  CHECK(run({"spectrum", "--bijection", "fechner:a=1,b=0"}).code == cli::kUsageError);
  Run help = run({"--help"});
  CHECK(help.code == cli::kOk);
  CHECK(help.out.find("Exit codes") != std::string::npos);
}

TEST_CASE("spectrum subcommand") {
  Run r = run({"spectrum", "--bijection", "quaternary:plus", "--terms", "5"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"n,n_prime,n_prime_decimal", "1,2,2", "2,8,8", "3,10,10", "4,32,32",
                                                 "5,34,34"});
}

TEST_CASE("analyze, reconstruct and figures agree") {
  fs::path coeffs = scratch("coeffs.json");
  Run a = run({"analyze", "--signal", "sawtooth", "--terms", "30", "--output", coeffs.string()});
  REQUIRE(a.code == 0);
  std::ifstream in(coeffs);
  FourierSeries s = fourier_series_from_json(nlohmann::json::parse(in));
  CHECK(s.n_max() == 30);
  CHECK(s.context->name() == "ternary-line:minus");

  Run rec = run({"reconstruct", "--coefficients", coeffs.string(), "--terms", "5", "--samples", "16"});
  REQUIRE(rec.code == 0);
  Run fig = run({"figures", "--which", "fig3-upper", "--coefficients", coeffs.string(), "--samples", "16"});
  REQUIRE(fig.code == 0);
  auto rl = lines(rec.out), fl = lines(fig.out);
  REQUIRE(rl.size() == 17);
  REQUIRE(fl.size() == 17);
  CHECK(rl[0] == "x_lower,y_lower,x_upper,y_upper,x_upper_decimal,y_upper_decimal");
  CHECK(fl[0] == "x,y,coordinate_system");
  for (std::size_t i = 1; i < rl.size(); ++i) {
    // x_upper,y_upper of reconstruct == x,y of the figure.
    std::vector<std::string> rc, fc;
    std::stringstream rs(rl[i]), fs_(fl[i]);
    for (std::string c; std::getline(rs, c, ',');) rc.push_back(c);
    for (std::string c; std::getline(fs_, c, ',');) fc.push_back(c);
    CHECK(rc[2] == fc[0]);
    CHECK(rc[3] == fc[1]);
    CHECK(fc[2] == "upper");
  }

  // Without a coefficient file fig3 runs its own analysis.
  Run fig_self = run({"figures", "--which", "fig3-upper", "--samples", "16"});
  CHECK(fig_self.out == fig.out);

  CHECK(run({"reconstruct", "--coefficients", coeffs.string(), "--terms", "31"}).code == cli::kUsageError);
  CHECK(run({"reconstruct", "--coefficients", scratch("missing.json").string()}).code == cli::kCoefficientFile);
  CHECK(run({"reconstruct"}).code == cli::kCoefficientFile);
  fs::path bad = scratch("bad.json");
  std::ofstream(bad) << "{\"schema_version\": 1, \"context\": \"identity\"";
  CHECK(run({"reconstruct", "--coefficients", bad.string()}).code == cli::kCoefficientFile);
}

TEST_CASE("quadrature failure exits with 4") {
  Run r = run({"analyze", "--terms", "2", "--nodes", "2", "--tol", "1e-30"});
  CHECK(r.code == cli::kQuadratureFailure);
}

TEST_CASE("figures are deterministic") {
  Run a = run({"figures", "--which", "fig2-lower", "--samples", "32", "--threads", "1"});
  Run b = run({"figures", "--which", "fig2-lower", "--samples", "32"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Run j = run({"figures", "--which", "fig1-lower", "--samples", "4", "--format", "json"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["context"] == "quaternary:plus");
  CHECK(doc["points"][3]["y"] == "2");
}

TEST_CASE("selftest exit status") {
  CHECK(run({"selftest", "--bijection", "fechner:a=1,b=0"}).code == cli::kOk);
  Run low = run({"selftest", "--precision-bits", "16"});
  CHECK(low.code == cli::kSelftestFailed);
  CHECK(low.out.find("trig-identity,fail") != std::string::npos);
}

TEST_CASE("coefficient JSON round trip") {
  auto ctx = make_context(ArithmeticContext::quaternary(Branch::Minus, 96));
  FourierSeries s{ctx, make_rational(3, 2), {}, {}};
  for (int n = 0; n <= 3; ++n) s.cos_coeffs.emplace_back(ctx, make_rational(n, 7));
  for (int n = 1; n <= 3; ++n) s.sin_coeffs.emplace_back(ctx, make_rational(-n, 5));
  FourierSeries back = fourier_series_from_json(nlohmann::json::parse(to_json(s).dump()));
  CHECK(*back.context == *ctx);
  CHECK(back.period_lower == s.period_lower);
  CHECK(back.cos_coeff(3) == NDNumber(back.context, make_rational(3, 7)));
  CHECK(back.sin_coeff(2) == NDNumber(back.context, make_rational(-2, 5)));
  nlohmann::json doc = to_json(s);
  doc["schema_version"] = 2;
  CHECK_THROWS_AS(fourier_series_from_json(doc), ParseError);
  doc = to_json(s);
  doc["sin"].erase(0);
  CHECK_THROWS_AS(fourier_series_from_json(doc), ParseError);
}
