// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   acceptance <path-to-bihole-cli> <scratch-dir>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bihole/bounds.hpp"
#include "bihole/error.hpp"
#include "bihole/experiment.hpp"
#include "bihole/extract.hpp"
#include "bihole/generate.hpp"
#include "bihole/oracle.hpp"
#include "graphs.hpp"

using namespace bihole;
namespace bt = bihole::testing;

namespace {

struct Outcome {
  std::size_t checked = 0;
  std::vector<std::string> violations;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && violations.size() < 20) violations.push_back(what);
    if (!ok && violations.size() == 20) violations.push_back("...");
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;  // 0 = none
  std::function<void(Outcome&)> body;
};

std::string describe(const BipartiteGraph& g) {
  std::string s = std::to_string(g.n()) + "x" + std::to_string(g.n()) + "{";
  for (const auto& [l, r] : g.edges()) s += std::to_string(l) + "-" + std::to_string(r) + " ";
  return s + "}";
}

// Suite 1: every balanced graph with n <= 3.
const std::vector<BipartiteGraph>& exhaustive_suite() {
  static const std::vector<BipartiteGraph> graphs = bt::all_small_graphs(3);
  return graphs;
}

struct RandomCase {
  std::size_t n;
  double p;
  std::uint64_t seed;
  BipartiteGraph g;
};

// Suite 3: 13 sizes x 5 densities x 16 seeds = 1040 Gnp graphs.
const std::vector<RandomCase>& random_suite() {
  static const std::vector<RandomCase> cases = [] {
    const std::vector<double> ps{0.1, 0.3, 0.5, 0.7, 0.9};
    std::vector<RandomCase> out;
    for (std::size_t n = 4; n <= 16; ++n)
      for (std::size_t pi = 0; pi < ps.size(); ++pi)
        for (std::size_t t = 0; t < 16; ++t) {
          const std::uint64_t seed = cell_seed(20240917, Model::Gnp, n, pi, t);
          out.push_back({n, ps[pi], seed, generate(Model::Gnp, n, ps[pi], seed)});
        }
    return out;
  }();
  return cases;
}

bool nondecreasing(const std::vector<Rational>& values) {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[i - 1]) return false;
  return true;
}

void check_bihole_extraction(Outcome& o, const BipartiteGraph& g, const std::string& tag) {
  const std::int64_t fb = floor_bound(g, 0);
  const BiholeResult r = find_bihole(g);
  const auto size = static_cast<std::int64_t>(r.witness.size());
  o.expect(is_bihole(g, r.witness), tag + " witness is not a bihole");
  o.expect(fb <= size, tag + " floor_bound " + std::to_string(fb) + " > extracted " +
                           std::to_string(size));
  o.expect(Rational(size) >= strengthened_bound(g, 0), tag + " extracted below strengthened");
  o.expect(nondecreasing(r.trace.values), tag + " trace values decrease");
  bool trace_ok = false;
  try {
    trace_ok = check_trace(g, r.trace, 0);
  } catch (const Error& e) {
    o.expect(false, tag + " " + e.what());
  }
  o.expect(trace_ok, tag + " check_trace failed");
}

void check_degenerate_extraction(Outcome& o, const BipartiteGraph& g, int d,
                                 const std::string& tag) {
  const std::int64_t fb = floor_bound(g, d);
  const DegenerateResult r = find_degenerate(g, d);
  const auto size = static_cast<std::int64_t>(r.witness.size());
  o.expect(verify_elimination_order(g, r.witness, d), tag + " certificate invalid");
  o.expect(fb <= size, tag + " floor_bound " + std::to_string(fb) + " > extracted " +
                           std::to_string(size));
  o.expect(nondecreasing(r.trace.values), tag + " trace values decrease");
  bool trace_ok = false;
  try {
    trace_ok = check_trace(g, r.trace, d);
  } catch (const Error& e) {
    o.expect(false, tag + " " + e.what());
  }
  o.expect(trace_ok, tag + " check_trace failed");
}

void ac1_exhaustive_bihole(Outcome& o) {
  for (const BipartiteGraph& g : exhaustive_suite()) {
    const std::string tag = describe(g);
    check_bihole_extraction(o, g, tag);
    const std::size_t size = find_bihole(g).witness.size();
    o.expect(size <= max_bihole_exact(g), tag + " extracted exceeds exact beta");
  }
}

void ac2_exhaustive_degenerate(Outcome& o) {
  for (const BipartiteGraph& g : exhaustive_suite()) {
    for (int d = 1; d <= 3; ++d) {
      const std::string tag = describe(g) + " d=" + std::to_string(d);
      check_degenerate_extraction(o, g, d, tag);
      const std::size_t size = find_degenerate(g, d).witness.size();
      o.expect(size <= max_degenerate_exact(g, d), tag + " extracted exceeds exact beta_d");
    }
  }
}

void ac3_random(Outcome& o) {
  o.expect(random_suite().size() >= 1000, "fewer than 1000 random graphs");
  for (const RandomCase& c : random_suite()) {
    const BipartiteGraph& g = c.g;
    const std::string base = "gnp(n=" + std::to_string(c.n) + ",p=" + std::to_string(c.p) +
                             ",seed=" + std::to_string(c.seed) + ")";
    o.expect(generate(Model::Gnp, c.n, c.p, c.seed) == g, base + " generator not deterministic");

    check_bihole_extraction(o, g, base);
    const BiholeResult first = find_bihole(g);
    const BiholeResult second = find_bihole(g);
    o.expect(first.witness == second.witness && first.trace == second.trace,
             base + " find_bihole not deterministic");
    if (c.n <= 12) {
      o.expect(first.witness.size() <= max_bihole_exact(g), base + " extracted exceeds beta");
    }

    for (int d = 1; d <= 3; ++d) {
      const std::string tag = base + " d=" + std::to_string(d);
      check_degenerate_extraction(o, g, d, tag);
      const DegenerateResult a = find_degenerate(g, d);
      const DegenerateResult b = find_degenerate(g, d);
      o.expect(a.witness == b.witness && a.trace == b.trace, tag + " not deterministic");
      if (c.n <= 8) {
        o.expect(a.witness.size() <= max_degenerate_exact(g, d), tag + " exceeds beta_d");
      }
    }
  }
}

void ac4_named(Outcome& o) {
  const BipartiteGraph c6 = bt::c6();
  o.expect(floor_bound(c6, 0) == 1, "C6 floor_bound != 1");
  o.expect(strengthened_bound(c6, 0) == Rational(1, 3), "C6 strengthened != 1/3");
  o.expect(find_bihole(c6).witness.size() >= 1, "C6 extracted < 1");
  o.expect(max_bihole_exact(c6) == 1, "C6 beta != 1");

  for (std::size_t n = 1; n <= 6; ++n) {
    const std::string tag = std::to_string(n);
    o.expect(floor_bound(bt::complete(n), 0) == 0, "K_{n,n} floor_bound != 0, n=" + tag);
    o.expect(max_bihole_exact(bt::complete(n)) == 0, "K_{n,n} beta != 0, n=" + tag);
  }
  for (std::size_t n = 1; n <= 12; ++n) {
    const std::string tag = std::to_string(n);
    const auto nn = static_cast<std::int64_t>(n);
    o.expect(floor_bound(bt::edgeless(n), 0) == nn, "edgeless floor_bound != n, n=" + tag);
    o.expect(find_bihole(bt::edgeless(n)).witness.size() == n, "edgeless extracted != n, n=" + tag);
  }
  const BipartiteGraph m10 = bt::matching(10);
  o.expect(floor_bound(m10, 0) == 5, "matching(10) floor_bound != 5");
  o.expect(max_bihole_exact(m10) == 5, "matching(10) beta != 5");

  o.expect(floor_bound(bt::complete(2), 1) == 1, "K_{2,2} d=1 floor_bound != 1");
  o.expect(max_degenerate_exact(bt::complete(2), 1) == 1, "K_{2,2} beta_1 != 1");
  o.expect(floor_bound(bt::complete(3), 2) == 2, "K_{3,3} d=2 floor_bound != 2");
  o.expect(max_degenerate_exact(bt::complete(3), 2) == 2, "K_{3,3} beta_2 != 2");
}

// Graphs of suites 1-3 (suite 2 shares suite 1's graphs).
void for_all_suite_graphs(const std::function<void(const BipartiteGraph&)>& fn) {
  for (const BipartiteGraph& g : exhaustive_suite()) fn(g);
  for (const RandomCase& c : random_suite()) fn(c.g);
}

void ac5_rounding(Outcome& o) {
  for_all_suite_graphs([&](const BipartiteGraph& g) {
    for (int d = 0; d <= 3; ++d) {
      o.expect(strengthened_bound(g, d).ceil() >= Rational(floor_bound(g, d)),
               describe(g) + " d=" + std::to_string(d) + " ceil(S) < floor_bound");
    }
  });
}

void ac6_jensen(Outcome& o) {
  for_all_suite_graphs([&](const BipartiteGraph& g) {
    const auto n = static_cast<std::int64_t>(g.n());
    const auto m = static_cast<std::int64_t>(g.edge_count());
    // n / (avg + 1) with avg = m / n.
    const Rational rhs = Rational(n) / (Rational(m, n) + Rational(1));
    o.expect(caro_wei_sum(g, 0) / Rational(2) >= rhs, describe(g) + " Jensen fails");
    o.expect(Rational(floor_bound(g, 0)) >= average_degree_bound(g),
             describe(g) + " floor_bound < average-degree bound");
  });
}

void ac7_beta0(Outcome& o) {
  auto same = [&](const BipartiteGraph& g) {
    const BiholeResult b = find_bihole(g);
    const DegenerateResult d = find_degenerate(g, 0);
    o.expect(b.witness.left == d.witness.left && b.witness.right == d.witness.right &&
                 b.trace == d.trace,
             describe(g) + " find_degenerate(.,0) differs from find_bihole");
    if (g.n() <= OracleLimits{}.max_side_degenerate) {
      o.expect(max_degenerate_exact(g, 0) == max_bihole_exact(g),
               describe(g) + " beta_0 != beta");
    }
  };
  for (const BipartiteGraph& g : exhaustive_suite()) same(g);
  for (const RandomCase& c : random_suite()) same(c.g);
}

void ac8_duality(Outcome& o) {
  for (std::size_t i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 12;
    const double p = 0.05 + 0.9 * static_cast<double>(i % 7) / 6.0;
    const BipartiteGraph g = generate(Model::Gnp, n, p, 1000 + i);
    o.expect(max_bihole_exact(g) == max_biclique_exact(bipartite_complement(g)),
             describe(g) + " duality fails");
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void ac9_reproducible(Outcome& o, const std::string& cli, const std::string& scratch) {
  const std::string args =
      " experiment --models gnp,crown,cycle --n-range 4:10 --p-grid 0.1,0.5,0.9"
      " --d-set 0,1,2 --trials 4 --seed 12345";
  const std::string a = scratch + "/ac9_a.csv";
  const std::string b = scratch + "/ac9_b.csv";
  const int code_a = std::system(("\"" + cli + "\"" + args + " -o \"" + a + "\" 2>/dev/null").c_str());
  const int code_b = std::system(("\"" + cli + "\"" + args + " -o \"" + b + "\" 2>/dev/null").c_str());
  o.expect(code_a == 0 && code_b == 0, "experiment runs did not exit 0");
  const std::string text_a = slurp(a);
  const std::string text_b = slurp(b);
  o.expect(!text_a.empty(), "experiment produced no CSV");
  o.expect(text_a == text_b, "CSV outputs differ");
  // 3 models x 7 sizes x 3 densities x 3 d x 4 trials rows plus the header.
  o.expect(std::count(text_a.begin(), text_a.end(), '\n') == 1 + 3 * 7 * 3 * 3 * 4,
           "unexpected row count");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <bihole-cli> <scratch-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string scratch = argv[2];

  const std::vector<Criterion> criteria = {
      {"AC1", "exhaustive n<=3, d=0: floor <= extracted <= beta, bihole, trace", 5.0,
       ac1_exhaustive_bihole},
      {"AC2", "exhaustive n<=3, d=1..3: floor <= extracted <= beta_d, certificate", 60.0,
       ac2_exhaustive_degenerate},
      {"AC3", "1040 Gnp graphs n=4..16: validity, bounds, traces, determinism, sandwich", 120.0,
       ac3_random},
      {"AC4", "named instances (exact)", 0.0, ac4_named},
      {"AC5", "ceil(strengthened) >= floor_bound on suites 1-3", 0.0, ac5_rounding},
      {"AC6", "Jensen: sum/2 >= n/(avg+1) on suites 1-3", 0.0, ac6_jensen},
      {"AC7", "find_degenerate(.,0) == find_bihole, beta_0 == beta", 0.0, ac7_beta0},
      {"AC8", "beta(G) == biclique(complement G) on 200 graphs", 0.0, ac8_duality},
      {"AC9", "experiment CSV byte-identical across runs", 0.0,
       [&](Outcome& o) { ac9_reproducible(o, cli, scratch); }},
  };

  // Build shared suites outside the timed sections.
  exhaustive_suite();
  random_suite();

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.violations.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit_s == 0.0 || secs < c.time_limit_s;
    const bool pass = o.violations.empty() && in_time;
    if (!pass) ++failed;

    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.title << "  (" << o.checked
              << " checks, " << o.violations.size() << " violations, " << timing;
    if (c.time_limit_s > 0) std::cout << " / limit " << c.time_limit_s << "s";
    std::cout << ")\n";
    for (const auto& v : o.violations) std::cout << "        " << v << '\n';
    if (!in_time) std::cout << "        over time limit\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
