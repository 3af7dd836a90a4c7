#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

using json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;

  json parsed() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = qclass::cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

// Lower and upper endpoints of an enclosure object.
std::pair<double, double> bounds(const json& e) {
  return {std::stod(e["enclosure"][0].get<std::string>()), std::stod(e["enclosure"][1].get<std::string>())};
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, qclass::cli::kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, qclass::cli::kExitUsage);
  EXPECT_EQ(run({"dims", "--family", "nope", "--N", "2", "--qq", "0.5"}).code, qclass::cli::kExitUsage);
  EXPECT_EQ(run({"dims", "--family", "su2-ladder", "--N", "2", "--qq", "x"}).code, qclass::cli::kExitUsage);
  EXPECT_EQ(run({"series", "--family", "su2-ladder", "--N", "2", "--qq", "2"}).code, qclass::cli::kExitDomain);
  EXPECT_EQ(run({"jacobi", "--M", "65"}).code, qclass::cli::kExitUsage);
  const Outcome help = run({"--help"});
  EXPECT_EQ(help.code, qclass::cli::kExitOk);
  EXPECT_NE(help.out.find("series"), std::string::npos);
}

TEST(Cli, ReportShape) {
  const Outcome r = run({"dims", "--family", "su2-ladder", "--N", "2", "--qq", "0.5", "--max", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.parsed();
  EXPECT_EQ(j["command"], "dims");
  EXPECT_EQ(j["inputs"]["bits"], 128);
  EXPECT_FALSE(j["provenance"].empty());
  const auto& table = j["results"]["table"];
  ASSERT_EQ(table.size(), 4u);
  EXPECT_EQ(table[3]["dim"], "4");
  // [4]_{1/2} = 85/8
  const auto [lo, hi] = bounds(table[3]["dim_q"]);
  EXPECT_LE(lo, 10.625);
  EXPECT_GE(hi, 10.625);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"series", "--family", "u-plus", "--N", "2", "--qq", "0.05"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, SeriesVerdicts) {
  const json small = run({"series", "--family", "u-plus", "--N", "2", "--qq", "0.05"}).parsed();
  EXPECT_EQ(small["results"]["verdict"], "Converges");
  const auto [lo, hi] = bounds(small["results"]["S"]["sum"]);
  EXPECT_LT(lo, 0.432045);
  EXPECT_GT(hi, 0.432044);
  const json large = run({"series", "--family", "u-plus", "--N", "2", "--qq", "0.22"}).parsed();
  EXPECT_EQ(large["results"]["verdict"], "Diverges");
  const json ladder = run({"series", "--family", "so3-ladder", "--N", "4", "--dimq", "10"}).parsed();
  EXPECT_EQ(ladder["results"]["verdict"], "Converges");
}

TEST(Cli, Threshold) {
  const Outcome r = run({"threshold", "--which", "dim2", "--tol", "1e-3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto [lo, hi] = bounds(r.parsed()["results"]["value"]);
  EXPECT_LE(lo, 0.0861);
  EXPECT_GE(hi, 0.0861);
  EXPECT_LE(hi - lo, 1e-3);
}

TEST(Cli, MomentsAndJacobiAndBicrossed) {
  const json m = run({"moments", "--family", "u-plus", "--N", "2", "--qq", "0.1", "--word", "ABAB"}).parsed();
  EXPECT_EQ(m["results"]["table"][0]["multiplicity"], 2);
  EXPECT_EQ(m["results"]["all_match"], true);

  const json jac = run({"jacobi", "--M", "8", "--q", "0.5"}).parsed();
  EXPECT_EQ(jac["results"]["krylov_rank"], 8);
  EXPECT_EQ(jac["results"]["commutant_dim"], 8);

  const json b = run({"bicrossed", "--q", "1/2", "--mode", "rational", "--ratio", "2/3", "--t", "3/2,0"}).parsed();
  EXPECT_EQ(b["results"]["center"]["generator"], "3/2");
  EXPECT_EQ(b["results"]["table"][0]["trivial"], true);
  EXPECT_EQ(b["results"]["factor_report"], qclass::kReportNonFactor);
}

TEST(Cli, Spectral) {
  const json s = run({"spectral", "--rho-ladder", "1", "--q", "1/2", "--b", "0"}).parsed();
  const auto [lo, hi] = bounds(s["results"]["modular_norm_sq"]);
  EXPECT_DOUBLE_EQ(lo, 1.0);
  EXPECT_DOUBLE_EQ(hi, 1.0);
}

TEST(Cli, CsvQuotesAndColumns) {
  EXPECT_EQ(qclass::cli::csv_quote("plain"), "plain");
  EXPECT_EQ(qclass::cli::csv_quote("a,b"), "\"a,b\"");
  EXPECT_EQ(qclass::cli::csv_quote("say \"hi\""), "\"say \"\"hi\"\"\"");
  const Outcome r = run({"--format", "csv", "dims", "--family", "u-plus", "--N", "2", "--qq", "0.1", "--word-len", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "label,dim,dim_q_lo,dim_q_hi,dim_q_mid,ratio_lo,ratio_hi,ratio_mid");
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 6u);
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const auto path = std::filesystem::temp_directory_path() / "qclass_cli_config.json";
  {
    std::ofstream f(path);
    f << R"({"family": "su2-ladder", "N": 2, "qq": "0.5", "max": 5})";
  }
  const json from_file = run({"dims", "--config", path.string()}).parsed();
  EXPECT_EQ(from_file["inputs"]["max"], 5);
  EXPECT_EQ(from_file["results"]["table"].size(), 6u);
  const json overridden = run({"dims", "--config", path.string(), "--max", "2"}).parsed();
  EXPECT_EQ(overridden["results"]["table"].size(), 3u);
  EXPECT_EQ(run({"dims", "--config", "/nonexistent/qclass.json"}).code, qclass::cli::kExitUsage);
  std::filesystem::remove(path);
}

TEST(Cli, BitsFromEnvironmentAndFlag) {
  ::setenv("QCLASS_BITS", "256", 1);
  EXPECT_EQ(run({"threshold", "--which", "ratio3"}).parsed()["inputs"]["bits"], 256);
  EXPECT_EQ(run({"--bits", "192", "threshold", "--which", "ratio3"}).parsed()["inputs"]["bits"], 192);
  ::unsetenv("QCLASS_BITS");
  EXPECT_EQ(run({"--bits", "16", "threshold", "--which", "ratio3"}).code, qclass::cli::kExitUsage);
}
