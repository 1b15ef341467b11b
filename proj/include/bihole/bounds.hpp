#pragma once

#include <cstdint>
#include <optional>

#include "bihole/bigraph.hpp"
#include "bihole/rational.hpp"

namespace bihole {

/// Caro-Wei style vertex weight min(1, (d+1)/(x+1)) for a vertex of degree x.
/// With d = 0 this is 1/(x+1). Throws NegativeD for d < 0.
Rational potential(std::size_t x, int d);

/// Sum of potential(deg(v), d) over every vertex of both sides.
Rational caro_wei_sum(const BipartiteGraph& g, int d);

/// floor(caro_wei_sum(g, d) / 2): the guaranteed size of a balanced induced
/// d-degenerate subgraph (a bihole when d = 0). Requires a balanced graph.
std::int64_t floor_bound(const BipartiteGraph& g, int d);

/// S = (f(maxdeg_left) + f(maxdeg_right) + caro_wei_sum) / 2 - 1 with
/// f = potential(., d). This is the quantity the peeling extractors never
/// decrease; since the final edgeless graph has S equal to its side size,
/// the extracted witness has at least ceil(S) vertices per side.
/// The empty 0x0 graph yields 0 by convention.
Rational strengthened_bound(const BipartiteGraph& g, int d);

/// Average degree m/n as an exact rational (0 for the empty graph).
Rational average_degree(const BipartiteGraph& g);

/// n / (avg_degree + 1) - 2. Empty graph yields 0 by convention.
Rational average_degree_bound(const BipartiteGraph& g);

/// Report-only value of (eps/2) * n * ln(avg) / avg. The logarithm is taken
/// in long double (relative error around 1e-18, far below the reporting
/// precision); the result is the exact rational of that double. No guarantee
/// is attached: the threshold d_0 on the average degree is unknown, and
/// `size_hypothesis` records whether n >= (1 + eps) * avg holds.
struct LogReference {
  Rational eps;
  Rational value;
  bool size_hypothesis = false;
};

/// Throws DegreeTooSmall when the average degree is <= 1, InvalidArgument
/// unless 0 < eps < 1.
LogReference log_reference_bound(const BipartiteGraph& g, const Rational& eps);

/// The formula itself on plain numbers, for callers with a non-rational
/// average degree.
double log_reference_value(double n, double avg_degree, double eps);

struct BoundReport {
  std::size_t n = 0;
  int d = 0;
  Rational caro_wei_sum;
  std::int64_t floor_bound = 0;
  Rational strengthened;
  Rational average_degree_bound;
  std::optional<LogReference> log_reference;

  std::int64_t ceil_strengthened() const { return strengthened.ceil().to_int64(); }
};

/// All bounds for a balanced graph. `eps` requests the log reference value;
/// it is left empty when the average degree is too small for the formula.
BoundReport bound_report(const BipartiteGraph& g, int d,
                         const std::optional<Rational>& eps = std::nullopt);

}  // namespace bihole
