// bihole: bounds, witness extraction and exact oracles for bipartite graphs.
//
// Exit codes: 0 ok, 2 parse/usage error, 3 unbalanced graph, 4 verification
// failure, 5 instance too large for the oracle, 1 anything else.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>

#include "bihole/bigraph.hpp"
#include "bihole/bounds.hpp"
#include "bihole/error.hpp"
#include "bihole/experiment.hpp"
#include "bihole/extract.hpp"
#include "bihole/generate.hpp"
#include "bihole/json_io.hpp"
#include "bihole/oracle.hpp"

namespace {

using namespace bihole;

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnbalanced = 3;
constexpr int kExitVerify = 4;
constexpr int kExitTooLarge = 5;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedHeader:
    case ErrorKind::MalformedEdgeLine:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidSize:
    case ErrorKind::InvalidProbability:
    case ErrorKind::NegativeD:
      return kExitParse;
    case ErrorKind::UnbalancedGraph: return kExitUnbalanced;
    case ErrorKind::TraceMismatch: return kExitVerify;
    case ErrorKind::InstanceTooLarge: return kExitTooLarge;
    default: return kExitOther;
  }
}

BipartiteGraph read_graph(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  BipartiteGraph g = parse_edge_list(text);
  if (!g.balanced()) {
    throw Error(ErrorKind::UnbalancedGraph, "graph is " + std::to_string(g.left_count()) + "x" +
                                                std::to_string(g.right_count()));
  }
  return g;
}

// BIHOLE_ORACLE_MAX is "N" (bihole limit) or "N,M" (bihole, degenerate).
OracleLimits limits_from_env() {
  OracleLimits limits;
  const char* env = std::getenv("BIHOLE_ORACLE_MAX");
  if (env == nullptr || *env == '\0') return limits;
  const std::string text(env);
  const auto comma = text.find(',');
  try {
    limits.max_side_bihole = std::stoul(text.substr(0, comma));
    if (comma != std::string::npos) limits.max_side_degenerate = std::stoul(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "bad BIHOLE_ORACLE_MAX '" + text + "'");
  }
  if (limits.max_side_bihole == 0 || limits.max_side_degenerate == 0) {
    throw Error(ErrorKind::InvalidArgument, "oracle limits must be positive");
  }
  return limits;
}

void print_report(const BoundReport& r) {
  std::cout << "n: " << r.n << '\n'
            << "d: " << r.d << '\n'
            << "caro_wei_sum: " << r.caro_wei_sum << '\n'
            << "floor_bound: " << r.floor_bound << '\n'
            << "strengthened: " << r.strengthened << '\n'
            << "ceil_strengthened: " << r.ceil_strengthened() << '\n'
            << "average_degree_bound: " << r.average_degree_bound << '\n';
  if (r.log_reference) {
    std::cout << "log_reference: " << r.log_reference->value.decimal(12)
              << " (eps " << r.log_reference->eps << ", n >= (1+eps)*avg: "
              << (r.log_reference->size_hypothesis ? "yes" : "no")
              << ", minimum average degree unspecified)\n";
  }
}

struct BoundArgs {
  std::string input = "-";
  int d = 0;
  bool json = false;
  std::string eps;
};

int cmd_bound(const BoundArgs& args) {
  const BipartiteGraph g = read_graph(args.input);
  std::optional<Rational> eps;
  if (!args.eps.empty()) eps = Rational::parse(args.eps);
  const BoundReport report = bound_report(g, args.d, eps);
  if (args.json) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    print_report(report);
  }
  return kExitOk;
}

struct ExtractArgs {
  std::string input = "-";
  int d = 0;
  bool trace = false;
  bool verify = false;
};

// Empty when the witness, its trace and the floor bound all check out.
template <typename Result>
std::string verification_failure(const BipartiteGraph& g, const Result& r, int d) {
  bool witness_ok = false;
  if constexpr (std::is_same_v<Result, BiholeResult>) {
    witness_ok = is_bihole(g, r.witness);
  } else {
    witness_ok = verify_elimination_order(g, r.witness, d);
  }
  if (!witness_ok) return "witness certificate is invalid";
  if (!check_trace(g, r.trace, d)) return "strengthened bound decreased along the trace";
  if (static_cast<std::int64_t>(r.witness.size()) < floor_bound(g, d)) {
    return "witness below floor bound";
  }
  return {};
}

template <typename Result>
int emit_extraction(const BipartiteGraph& g, const Result& r, const ExtractArgs& args) {
  nlohmann::json out = to_json(r.witness);
  if (args.trace) out["trace"] = to_json(r.trace);
  std::cout << out.dump(2) << '\n';
  if (args.verify) {
    const std::string failure = verification_failure(g, r, args.d);
    if (!failure.empty()) {
      std::cerr << "verification failed: " << failure << '\n';
      return kExitVerify;
    }
  }
  return kExitOk;
}

int cmd_extract(const ExtractArgs& args) {
  const BipartiteGraph g = read_graph(args.input);
  if (args.d == 0) return emit_extraction(g, find_bihole(g), args);
  return emit_extraction(g, find_degenerate(g, args.d), args);
}

struct OracleArgs {
  std::string input = "-";
  std::optional<int> d;
  std::optional<std::size_t> limit;
};

int cmd_oracle(const OracleArgs& args) {
  OracleLimits limits = limits_from_env();
  if (args.limit) {
    limits.max_side_bihole = *args.limit;
    limits.max_side_degenerate = *args.limit;
  }
  const BipartiteGraph g = read_graph(args.input);
  const std::size_t value = !args.d || *args.d == 0 ? max_bihole_exact(g, limits)
                                                    : max_degenerate_exact(g, *args.d, limits);
  std::cout << value << '\n';
  return kExitOk;
}

struct GenArgs {
  std::string model;
  std::size_t n = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string output = "-";
};

int cmd_gen(const GenArgs& args) {
  const BipartiteGraph g = generate(parse_model(args.model), args.n, args.p, args.seed);
  const std::string text = serialize(g);
  if (args.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + args.output + "'");
    out << text;
  }
  return kExitOk;
}

struct ExperimentArgs {
  std::vector<std::string> models{"gnp"};
  std::string n_range = "4:12";
  std::vector<double> p_grid{0.3};
  std::vector<int> d_set{0};
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::size_t oracle_max = 12;
  std::string output = "-";
};

int cmd_experiment(const ExperimentArgs& args) {
  ExperimentConfig config;
  config.models.clear();
  for (const auto& m : args.models) config.models.push_back(parse_model(m));
  std::tie(config.n_min, config.n_max) = parse_n_range(args.n_range);
  config.p_grid = args.p_grid;
  config.d_set = args.d_set;
  config.trials = args.trials;
  config.seed = args.seed;
  config.oracle_max = args.oracle_max;
  config.limits = limits_from_env();

  ExperimentSummary summary;
  if (args.output == "-") {
    summary = run_experiment(config, std::cout);
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + args.output + "'");
    summary = run_experiment(config, out);
  }
  std::cerr << summary_line(summary) << '\n';
  return summary.violations == 0 ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bihole and balanced d-degenerate subgraph bounds for bipartite graphs"};
  app.require_subcommand(1);

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Print all lower bounds for a graph");
  bound_cmd->add_option("input", bound.input, "Edge-list file, '-' for stdin");
  bound_cmd->add_option("-d,--degeneracy", bound.d, "Degeneracy parameter d >= 0");
  bound_cmd->add_flag("--json", bound.json, "Emit JSON");
  bound_cmd->add_option("--eps", bound.eps, "Also report the logarithmic reference value for eps in (0,1), e.g. 1/2");

  ExtractArgs extract;
  auto* extract_cmd = app.add_subcommand("extract", "Extract a witness meeting the bound");
  extract_cmd->add_option("input", extract.input, "Edge-list file, '-' for stdin");
  extract_cmd->add_option("-d,--degeneracy", extract.d, "Degeneracy parameter d >= 0");
  extract_cmd->add_flag("--trace", extract.trace, "Include the peel trace");
  extract_cmd->add_flag("--verify", extract.verify, "Check witness and trace (exit 4 on failure)");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by brute force");
  oracle_cmd->add_option("input", oracle.input, "Edge-list file, '-' for stdin");
  oracle_cmd->add_option("-d,--degeneracy", oracle.d, "Compute beta_d instead of beta");
  oracle_cmd->add_option("--limits", oracle.limit, "Largest side size to enumerate");
  oracle_cmd->footer("Default limits: n <= 22 for beta, n <= 8 for beta_d.\n"
                     "BIHOLE_ORACLE_MAX=N or N,M overrides them.");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph in edge-list format");
  gen_cmd->add_option("model", gen.model, "gnp|complete|edgeless|matching|cycle|crown")->required();
  gen_cmd->add_option("-n", gen.n, "Vertices per side")->required();
  gen_cmd->add_option("-p", gen.p, "Edge probability (gnp)");
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed (gnp)");
  gen_cmd->add_option("-o,--output", gen.output, "Output file, '-' for stdout");

  ExperimentArgs exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Batch bound/extract/oracle runs to CSV");
  exp_cmd->add_option("--models", exp.models, "Comma-separated models")->delimiter(',');
  exp_cmd->add_option("--n-range", exp.n_range, "n range, e.g. 4:16");
  exp_cmd->add_option("--p-grid", exp.p_grid, "Comma-separated probabilities")->delimiter(',');
  exp_cmd->add_option("--d-set", exp.d_set, "Comma-separated d values")->delimiter(',');
  exp_cmd->add_option("--trials", exp.trials, "Trials per grid cell");
  exp_cmd->add_option("--seed", exp.seed, "Base seed");
  exp_cmd->add_option("--oracle-max", exp.oracle_max, "Compute exact optimum for n up to this");
  exp_cmd->add_option("-o,--output", exp.output, "CSV file, '-' for stdout");
  exp_cmd->footer(
      "CSV columns:\n"
      "  model,n,p,seed      graph descriptor (seed is the per-graph gnp seed)\n"
      "  d                   degeneracy parameter\n"
      "  floor_bound         floor of half the weighted degree sum\n"
      "  ceil_strengthened   ceiling of the strengthened bound\n"
      "  avg_deg_bound       n/(avg degree + 1) - 2, 12 significant digits\n"
      "  extracted           witness size found by peeling\n"
      "  exact               brute-force optimum, empty when not computed\n"
      "  verified            witness, trace and inequalities all checked\n"
      "Summary goes to stderr; exit 4 if any row is unverified.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*bound_cmd) return cmd_bound(bound);
    if (*extract_cmd) return cmd_extract(extract);
    if (*oracle_cmd) return cmd_oracle(oracle);
    if (*gen_cmd) return cmd_gen(gen);
    if (*exp_cmd) return cmd_experiment(exp);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return kExitOther;
}
