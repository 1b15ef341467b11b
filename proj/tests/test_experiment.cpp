#include <doctest.h>

#include <sstream>

#include "bihole/error.hpp"
#include "bihole/experiment.hpp"

using namespace bihole;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("parse_n_range") {
  CHECK(parse_n_range("4:16") == std::pair<std::size_t, std::size_t>{4, 16});
  CHECK(parse_n_range("3-5") == std::pair<std::size_t, std::size_t>{3, 5});
  CHECK(parse_n_range("7") == std::pair<std::size_t, std::size_t>{7, 7});
  CHECK_THROWS_AS(parse_n_range("a:3"), Error);
  CHECK_THROWS_AS(parse_n_range("3:"), Error);
}

TEST_CASE("zero trials writes only the header") {
  ExperimentConfig config;
  config.trials = 0;
  std::ostringstream csv;
  const ExperimentSummary s = run_experiment(config, csv);
  CHECK(csv.str() == std::string(kExperimentHeader) + "\n");
  CHECK(s.rows == 0);
  CHECK(s.violations == 0);
}

TEST_CASE("rows follow model, n, p, d, trial order") {
  ExperimentConfig config;
  config.models = {Model::Gnp, Model::Crown};
  config.n_min = 3;
  config.n_max = 4;
  config.p_grid = {0.1, 0.9};
  config.d_set = {0, 2};
  config.trials = 2;
  config.seed = 5;
  std::ostringstream csv;
  const ExperimentSummary s = run_experiment(config, csv);
  const auto out = lines(csv.str());
  REQUIRE(out.size() == 1 + 2 * 2 * 2 * 2 * 2);
  CHECK(s.rows == 32);
  CHECK(s.violations == 0);
  CHECK(s.min_gap >= 0);
  CHECK(out[1].rfind("gnp,3,0.1,", 0) == 0);
  CHECK(out[3].rfind("gnp,3,0.1,", 0) == 0);
  CHECK(out[3].find(",2,") != std::string::npos);
  CHECK(out[5].rfind("gnp,3,0.9,", 0) == 0);
  CHECK(out[17].rfind("crown,3,0.1,", 0) == 0);
  for (std::size_t i = 1; i < out.size(); ++i) CHECK(out[i].ends_with(",true"));

  // Same graph for d = 0 and d = 2 within a cell: seeds match.
  CHECK(out[1].substr(0, out[1].find(",0,")) == out[3].substr(0, out[3].find(",2,")));

  std::ostringstream again;
  run_experiment(config, again);
  CHECK(again.str() == csv.str());
}

TEST_CASE("exact column respects limits") {
  ExperimentConfig config;
  config.oracle_max = 12;
  const ExperimentRow small = run_row(Model::Gnp, 8, 0.3, 1, 1, config);
  CHECK(small.exact.has_value());
  const ExperimentRow big_d = run_row(Model::Gnp, 9, 0.3, 1, 1, config);
  CHECK_FALSE(big_d.exact.has_value());
  const ExperimentRow big_0 = run_row(Model::Gnp, 12, 0.3, 1, 0, config);
  CHECK(big_0.exact.has_value());
  CHECK(big_0.verified);
  const ExperimentRow over = run_row(Model::Gnp, 13, 0.3, 1, 0, config);
  CHECK_FALSE(over.exact.has_value());
  CHECK(csv_line(over).find(",,true") != std::string::npos);
}

TEST_CASE("csv_line format") {
  ExperimentConfig config;
  const ExperimentRow row = run_row(Model::Cycle, 3, 0.5, 9, 0, config);
  // C6: floor 1, ceil(1/3) = 1, avg bound -1, extracted 1, exact 1.
  CHECK(csv_line(row) == "cycle,3,0.5,9,0,1,1,-1,1,1,true");
}

TEST_CASE("invalid grids") {
  ExperimentConfig config;
  std::ostringstream sink;
  config.n_min = 0;
  CHECK_THROWS_AS(run_experiment(config, sink), Error);
  config.n_min = 5;
  config.n_max = 4;
  CHECK_THROWS_AS(run_experiment(config, sink), Error);
  config.n_max = 5;
  config.d_set = {-1};
  CHECK_THROWS_AS(run_experiment(config, sink), Error);
}
