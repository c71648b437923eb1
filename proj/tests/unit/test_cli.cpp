#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using gammatype::cli::run;

namespace {

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST(Cli, DescribePrintsParams) {
  const auto r = call({"describe", "exponential"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("gamma=1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("rho_minus=-1\n"), std::string::npos);
  EXPECT_NE(r.out.find("rho_plus=inf"), std::string::npos);
}

TEST(Cli, DescribeJson) {
  const auto r = call({"describe", "gamma", "--param", "3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.front(), '{');
  EXPECT_NE(r.out.find("\"rho_minus\""), std::string::npos);
}

TEST(Cli, DensityCsvRows) {
  const auto r = call({"density", "gamma", "--grid", "0.5:3:6", "--method", "mellin"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("x,f,regime\n", 0), 0u);
  EXPECT_EQ(lines(r.out), 7u);
}

TEST(Cli, SeriesCsvRows) {
  const auto r = call({"series", "hashing_M", "--grid", "0.2:2:10", "--side", "left"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out), 11u);
  EXPECT_NE(r.out.find("convergent"), std::string::npos);
}

TEST(Cli, MellinWithoutDecayIsUnsupported) {
  const auto r = call({"density", "uniform", "--grid", "0.1:0.9:3", "--method", "mellin"});
  EXPECT_EQ(r.code, gammatype::cli::kExitUsage);
  EXPECT_NE(r.err.find("unsupported-regime"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({"describe", "no_such_law"}).code, gammatype::cli::kExitUsage);
  EXPECT_EQ(call({"describe"}).code, gammatype::cli::kExitUsage);
  EXPECT_EQ(call({"frobnicate"}).code, gammatype::cli::kExitUsage);
  EXPECT_EQ(call({"density", "gamma", "--grid", "1:2"}).code, gammatype::cli::kExitUsage);
}

TEST(Cli, CatalogListAndShow) {
  const auto list = call({"catalog", "list"});
  ASSERT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("brownian_sup_area"), std::string::npos);
  EXPECT_GE(lines(list.out), 25u);
  const auto show = call({"catalog", "show", "beta"});
  ASSERT_EQ(show.code, 0) << show.err;
  EXPECT_NE(show.out.find("num"), std::string::npos);
}

TEST(Cli, RepFileMatchesCatalog) {
  const auto show = call({"catalog", "show", "chi2"});
  ASSERT_EQ(show.code, 0);
  const std::string path = ::testing::TempDir() + "chi2_rep.json";
  {
    std::ofstream(path) << nlohmann::json::parse(show.out)["rep"].dump();
  }
  const auto a = call({"describe", "chi2"});
  const auto b = call({"describe", "--rep", path});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(a.out.substr(a.out.find("gamma=")), b.out.substr(b.out.find("gamma=")));
}

TEST(Cli, SampleIsReproducible) {
  const auto a = call({"sample", "gamma", "--seed", "3", "--samples", "2000"});
  const auto b = call({"sample", "gamma", "--seed", "3", "--samples", "2000"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto d = call({"sample", "exponential", "--samples", "5", "--draws"});
  EXPECT_EQ(lines(d.out), 6u);  // header and five draws
}

TEST(Cli, VerifyPasses) {
  const auto r = call({"verify", "beta", "--samples", "20000"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, FormatDouble) {
  EXPECT_EQ(gammatype::cli::format_double(0.5), "0.5");
  EXPECT_EQ(gammatype::cli::format_double(0.1), "0.10000000000000001");
}
