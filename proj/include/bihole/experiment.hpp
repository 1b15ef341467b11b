#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bihole/generate.hpp"
#include "bihole/oracle.hpp"
#include "bihole/rational.hpp"

namespace bihole {

inline constexpr const char* kExperimentHeader =
    "model,n,p,seed,d,floor_bound,ceil_strengthened,avg_deg_bound,extracted,exact,verified";

struct ExperimentConfig {
  std::vector<Model> models{Model::Gnp};
  std::size_t n_min = 4;
  std::size_t n_max = 12;
  std::vector<double> p_grid{0.3};
  std::vector<int> d_set{0};
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  // Exact optimum is computed only for n <= oracle_max (and within limits).
  std::size_t oracle_max = 12;
  OracleLimits limits;
};

struct ExperimentRow {
  Model model = Model::Gnp;
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  int d = 0;
  std::int64_t floor_bound = 0;
  std::int64_t ceil_strengthened = 0;
  Rational average_degree_bound;
  std::size_t extracted = 0;
  std::optional<std::size_t> exact;
  bool verified = false;
};

struct ExperimentSummary {
  std::size_t rows = 0;
  std::size_t violations = 0;
  std::int64_t min_gap = 0;  // extracted - floor_bound
  double mean_gap = 0.0;
};

// Seed of the graph for one (model, n, p, trial) cell, derived from the base
// seed with splitmix64 so that cells are independent of grid order and of d.
std::uint64_t cell_seed(std::uint64_t base, Model model, std::size_t n, std::size_t p_index,
                        std::size_t trial);

// Builds, extracts and verifies one row.
ExperimentRow run_row(Model model, std::size_t n, double p, std::uint64_t seed, int d,
                      const ExperimentConfig& config);

std::string csv_line(const ExperimentRow& row);

// Writes the header and one line per (model, n, p, d, trial) in that nesting
// order, flushing after each row.
ExperimentSummary run_experiment(const ExperimentConfig& config, std::ostream& csv);

std::string summary_line(const ExperimentSummary& s);

// "a:b", "a-b" or "a".
std::pair<std::size_t, std::size_t> parse_n_range(std::string_view text);

}  // namespace bihole
