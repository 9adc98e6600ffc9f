#include "ldpsim/harness/report.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "ldpsim/core/errors.hpp"

namespace ldpsim {
namespace {

ExperimentConfig config() {
  ExperimentConfig c;
  c.branching = 3;
  c.num_layers = 3;
  c.group = 50;
  c.trials = 8;
  c.seed = 123;
  return c;
}

std::string csv_for(const ExperimentConfig& c) {
  std::ostringstream s;
  write_csv_header(s);
  write_csv_row(s, c, run_experiment(c));
  return s.str();
}

int count_fields(const std::string& line) {
  return 1 + static_cast<int>(std::count(line.begin(), line.end(), ','));
}

TEST(ReportTest, CsvIsReproducibleAndWellFormed) {
  const std::string a = csv_for(config());
  EXPECT_EQ(a, csv_for(config()));
  std::istringstream in(a);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  const auto cols = csv_columns();
  EXPECT_EQ(count_fields(header), static_cast<int>(cols.size()));
  EXPECT_EQ(count_fields(row), static_cast<int>(cols.size()));
  EXPECT_EQ(header.find("wall"), std::string::npos);
  EXPECT_EQ(csv_columns(true).size(), cols.size() + 1);
}

TEST(ReportTest, JsonCarriesConfigAndResult) {
  const ExperimentConfig c = config();
  const auto j = nlohmann::json::parse(result_json(c, run_experiment(c)));
  EXPECT_EQ(j.at("config").at("seed").get<std::uint64_t>(), 123u);
  EXPECT_EQ(j.at("config").at("group").get<int>(), 50);
  EXPECT_EQ(j.at("result").at("trials").get<int>(), 8);
  EXPECT_TRUE(j.at("result").contains("success_rate"));
  const auto s = nlohmann::json::parse(
      sweep_json(sweep(c, SweepAxis::kEpsilon, {0.5, 2.0}), SweepAxis::kEpsilon));
  EXPECT_TRUE(s.dump().find("0.5") != std::string::npos);
}

TEST(ReportTest, ConfigFromJson) {
  const ExperimentConfig c = config_from_json(
      R"({"problem":"pc","k":5,"l":8,"epsilon":2.5,"group":30,"trials":4,"seed":7})");
  EXPECT_EQ(c.problem, ProblemKind::kPointerChasing);
  EXPECT_EQ(c.k, 5u);
  EXPECT_EQ(c.l, 8u);
  EXPECT_EQ(c.epsilon, 2.5);
  EXPECT_EQ(c.group, 30u);
  EXPECT_EQ(c.seed, 7u);
  const ExperimentConfig kept = config_from_json("{}", config());
  EXPECT_EQ(kept.group, 50u);
  EXPECT_THROW(config_from_json("{bad"), FormatError);
  EXPECT_THROW(config_from_json(R"({"epsilon":"big"})"), FormatError);
}

}  // namespace
}  // namespace ldpsim
