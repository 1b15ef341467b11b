#include "bihole/bounds.hpp"

#include <cmath>

#include "bihole/error.hpp"

namespace bihole {

namespace {

void require_balanced(const BipartiteGraph& g) {
  if (!g.balanced()) {
    throw Error(ErrorKind::UnbalancedGraph, std::to_string(g.left_count()) + "x" +
                                                std::to_string(g.right_count()));
  }
}

void require_d(int d) {
  if (d < 0) throw Error(ErrorKind::NegativeD, "d = " + std::to_string(d));
}

Rational count(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

}  // namespace

Rational potential(std::size_t x, int d) {
  require_d(d);
  if (x <= static_cast<std::size_t>(d)) return Rational(1);
  return Rational(d + 1, static_cast<std::int64_t>(x) + 1);
}

Rational caro_wei_sum(const BipartiteGraph& g, int d) {
  require_d(d);
  // Group by degree so each distinct weight is added once.
  std::vector<std::int64_t> histogram;
  for (Side side : {Side::Left, Side::Right}) {
    for (std::size_t i = 0; i < g.side_count(side); ++i) {
      const std::size_t deg = degree(g, {side, i});
      if (deg >= histogram.size()) histogram.resize(deg + 1, 0);
      ++histogram[deg];
    }
  }
  Rational sum;
  for (std::size_t deg = 0; deg < histogram.size(); ++deg) {
    if (histogram[deg] != 0) sum += Rational(histogram[deg]) * potential(deg, d);
  }
  return sum;
}

std::int64_t floor_bound(const BipartiteGraph& g, int d) {
  require_balanced(g);
  return (caro_wei_sum(g, d) / Rational(2)).floor().to_int64();
}

Rational strengthened_bound(const BipartiteGraph& g, int d) {
  require_balanced(g);
  require_d(d);
  if (g.n() == 0) return Rational(0);
  const Rational extremes =
      potential(max_degree(g, Side::Left), d) + potential(max_degree(g, Side::Right), d);
  return (extremes + caro_wei_sum(g, d)) / Rational(2) - Rational(1);
}

Rational average_degree(const BipartiteGraph& g) {
  require_balanced(g);
  if (g.n() == 0) return Rational(0);
  return Rational(static_cast<std::int64_t>(g.edge_count()), static_cast<std::int64_t>(g.n()));
}

Rational average_degree_bound(const BipartiteGraph& g) {
  require_balanced(g);
  if (g.n() == 0) return Rational(0);
  return count(g.n()) / (average_degree(g) + Rational(1)) - Rational(2);
}

double log_reference_value(double n, double avg_degree, double eps) {
  const long double avg = avg_degree;
  return static_cast<double>(static_cast<long double>(eps) / 2 * n * std::log(avg) / avg);
}

LogReference log_reference_bound(const BipartiteGraph& g, const Rational& eps) {
  require_balanced(g);
  if (eps <= Rational(0) || eps >= Rational(1)) {
    throw Error(ErrorKind::InvalidArgument, "eps must lie in (0, 1), got " + eps.str());
  }
  const Rational avg = average_degree(g);
  if (avg <= Rational(1)) {
    throw Error(ErrorKind::DegreeTooSmall, "average degree " + avg.str() + " <= 1");
  }
  LogReference out;
  out.eps = eps;
  out.value = Rational::from_double(
      log_reference_value(static_cast<double>(g.n()), avg.to_double(), eps.to_double()));
  out.size_hypothesis = count(g.n()) >= (Rational(1) + eps) * avg;
  return out;
}

BoundReport bound_report(const BipartiteGraph& g, int d, const std::optional<Rational>& eps) {
  require_balanced(g);
  require_d(d);
  BoundReport r;
  r.n = g.n();
  r.d = d;
  r.caro_wei_sum = caro_wei_sum(g, d);
  r.floor_bound = floor_bound(g, d);
  r.strengthened = strengthened_bound(g, d);
  r.average_degree_bound = average_degree_bound(g);
  if (eps && average_degree(g) > Rational(1)) r.log_reference = log_reference_bound(g, *eps);
  return r;
}

}  // namespace bihole
