#include "bihole/experiment.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>

#include "bihole/bounds.hpp"
#include "bihole/error.hpp"
#include "bihole/extract.hpp"

namespace bihole {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string shortest(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::size_t parse_size(std::string_view text) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidArgument, "not a size: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

std::uint64_t cell_seed(std::uint64_t base, Model model, std::size_t n, std::size_t p_index,
                        std::size_t trial) {
  std::uint64_t h = splitmix64(base);
  for (std::uint64_t part : {static_cast<std::uint64_t>(model), std::uint64_t{n},
                             std::uint64_t{p_index}, std::uint64_t{trial}}) {
    h = splitmix64(h ^ part);
  }
  return h;
}

ExperimentRow run_row(Model model, std::size_t n, double p, std::uint64_t seed, int d,
                      const ExperimentConfig& config) {
  const BipartiteGraph g = generate(model, n, p, seed);
  ExperimentRow row;
  row.model = model;
  row.n = n;
  row.p = p;
  row.seed = seed;
  row.d = d;
  const BoundReport report = bound_report(g, d);
  row.floor_bound = report.floor_bound;
  row.ceil_strengthened = report.ceil_strengthened();
  row.average_degree_bound = report.average_degree_bound;

  bool ok = true;
  try {
    if (d == 0) {
      const BiholeResult r = find_bihole(g);
      row.extracted = r.witness.size();
      ok = is_bihole(g, r.witness) && check_trace(g, r.trace, 0);
    } else {
      const DegenerateResult r = find_degenerate(g, d);
      row.extracted = r.witness.size();
      ok = verify_elimination_order(g, r.witness, d) && check_trace(g, r.trace, d);
    }
  } catch (const Error&) {
    ok = false;
  }
  ok = ok && row.floor_bound <= static_cast<std::int64_t>(row.extracted);

  const std::size_t limit = d == 0 ? config.limits.max_side_bihole
                                   : config.limits.max_side_degenerate;
  if (n <= config.oracle_max && n <= limit) {
    row.exact = d == 0 ? max_bihole_exact(g, config.limits)
                       : max_degenerate_exact(g, d, config.limits);
    ok = ok && row.extracted <= *row.exact;
  }
  row.verified = ok;
  return row;
}

std::string csv_line(const ExperimentRow& row) {
  std::string out;
  out += to_string(row.model);
  out += ',' + std::to_string(row.n);
  out += ',' + shortest(row.p);
  out += ',' + std::to_string(row.seed);
  out += ',' + std::to_string(row.d);
  out += ',' + std::to_string(row.floor_bound);
  out += ',' + std::to_string(row.ceil_strengthened);
  out += ',' + row.average_degree_bound.decimal(12);
  out += ',' + std::to_string(row.extracted);
  out += ',' + (row.exact ? std::to_string(*row.exact) : std::string());
  out += row.verified ? ",true" : ",false";
  return out;
}

ExperimentSummary run_experiment(const ExperimentConfig& config, std::ostream& csv) {
  if (config.n_min < 1 || config.n_min > config.n_max) {
    throw Error(ErrorKind::InvalidArgument, "empty or invalid n range");
  }
  for (int d : config.d_set)
    if (d < 0) throw Error(ErrorKind::NegativeD, "d = " + std::to_string(d));

  csv << kExperimentHeader << '\n' << std::flush;
  ExperimentSummary summary;
  double gap_total = 0.0;
  for (Model model : config.models) {
    for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
      for (std::size_t pi = 0; pi < config.p_grid.size(); ++pi) {
        for (int d : config.d_set) {
          for (std::size_t trial = 0; trial < config.trials; ++trial) {
            const std::uint64_t seed = cell_seed(config.seed, model, n, pi, trial);
            const ExperimentRow row = run_row(model, n, config.p_grid[pi], seed, d, config);
            csv << csv_line(row) << '\n' << std::flush;

            const auto gap = static_cast<std::int64_t>(row.extracted) - row.floor_bound;
            summary.min_gap = summary.rows == 0 ? gap : std::min(summary.min_gap, gap);
            gap_total += static_cast<double>(gap);
            ++summary.rows;
            if (!row.verified) ++summary.violations;
          }
        }
      }
    }
  }
  if (summary.rows > 0) summary.mean_gap = gap_total / static_cast<double>(summary.rows);
  return summary;
}

std::string summary_line(const ExperimentSummary& s) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "rows=%zu violations=%zu min_gap=%lld mean_gap=%.4f", s.rows,
                s.violations, static_cast<long long>(s.min_gap), s.mean_gap);
  return buf;
}

std::pair<std::size_t, std::size_t> parse_n_range(std::string_view text) {
  const auto sep = text.find_first_of(":-");
  if (sep == std::string_view::npos) {
    const std::size_t n = parse_size(text);
    return {n, n};
  }
  return {parse_size(text.substr(0, sep)), parse_size(text.substr(sep + 1))};
}

}  // namespace bihole
