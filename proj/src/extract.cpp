#include "bihole/extract.hpp"

#include <algorithm>
#include <string>

#include "bihole/error.hpp"

namespace bihole {

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::PairCase1: return "pair_case1";
    case StepKind::PairCase2: return "pair_case2";
    case StepKind::LowDegreeEdgeDeletion: return "low_degree_edge_deletion";
  }
  return "unknown";
}

namespace {

void require_balanced(const BipartiteGraph& g) {
  if (!g.balanced()) {
    throw Error(ErrorKind::UnbalancedGraph, std::to_string(g.left_count()) + "x" +
                                                std::to_string(g.right_count()));
  }
}

std::vector<std::size_t> max_degree_vertices(const BipartiteGraph& g, Side side) {
  const std::size_t best = max_degree(g, side);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.side_count(side); ++i)
    if (degree(g, {side, i}) == best) out.push_back(i);
  return out;
}

// The graph being peeled plus the input-graph label of every current vertex.
struct Working {
  BipartiteGraph graph;
  std::vector<std::size_t> left_label;
  std::vector<std::size_t> right_label;

  explicit Working(const BipartiteGraph& g)
      : graph(g), left_label(g.left_count()), right_label(g.right_count()) {
    for (std::size_t i = 0; i < left_label.size(); ++i) left_label[i] = i;
    for (std::size_t i = 0; i < right_label.size(); ++i) right_label[i] = i;
  }

  std::size_t label(VertexRef v) const {
    return v.side == Side::Left ? left_label[v.index] : right_label[v.index];
  }

  std::optional<std::size_t> current(Side side, std::size_t original) const {
    const auto& labels = side == Side::Left ? left_label : right_label;
    const auto it = std::find(labels.begin(), labels.end(), original);
    if (it == labels.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels.begin());
  }

  PeelStep remove_pair(const PairChoice& choice) {
    PeelStep step;
    step.kind = choice.case_number == 1 ? StepKind::PairCase1 : StepKind::PairCase2;
    step.a = left_label[choice.a];
    step.b = right_label[choice.b];
    step.max_degree_left = max_degree(graph, Side::Left);
    step.max_degree_right = max_degree(graph, Side::Right);
    step.degree_first = degree(graph, left(choice.a));
    step.degree_second = degree(graph, right(choice.b));

    left_label.erase(left_label.begin() + static_cast<std::ptrdiff_t>(choice.a));
    right_label.erase(right_label.begin() + static_cast<std::ptrdiff_t>(choice.b));
    graph = delete_pair(graph, choice.a, choice.b).graph;
    return step;
  }

  PeelStep isolate(VertexRef v) {
    PeelStep step;
    step.kind = StepKind::LowDegreeEdgeDeletion;
    step.v = {v.side, label(v)};
    step.max_degree_left = max_degree(graph, Side::Left);
    step.max_degree_right = max_degree(graph, Side::Right);
    step.degree_first = degree(graph, v);
    graph = delete_incident_edges(graph, v);
    return step;
  }
};

// Least-degree vertex with degree in [1, d]; Left before Right on ties, then
// lowest index.
std::optional<VertexRef> low_degree_vertex(const BipartiteGraph& g, int d) {
  std::optional<VertexRef> pick;
  std::size_t pick_degree = 0;
  for (Side side : {Side::Left, Side::Right}) {
    for (std::size_t i = 0; i < g.side_count(side); ++i) {
      const std::size_t deg = degree(g, {side, i});
      if (deg == 0 || deg > static_cast<std::size_t>(d)) continue;
      if (!pick || deg < pick_degree) {
        pick = VertexRef{side, i};
        pick_degree = deg;
      }
    }
  }
  return pick;
}

PeelTrace start_trace(const BipartiteGraph& g, int d) {
  PeelTrace trace;
  trace.d = d;
  trace.initial = bound_report(g, d);
  trace.values.push_back(trace.initial.strengthened);
  return trace;
}

[[noreturn]] void mismatch(std::size_t step_index, const std::string& why) {
  throw Error(ErrorKind::TraceMismatch, "step " + std::to_string(step_index) + ": " + why);
}

}  // namespace

PairChoice select_pair(const BipartiteGraph& g) {
  require_balanced(g);
  if (g.edge_count() == 0) throw Error(ErrorKind::NoEdges, "select_pair on an edgeless graph");
  const auto tops_left = max_degree_vertices(g, Side::Left);
  const auto tops_right = max_degree_vertices(g, Side::Right);
  for (std::size_t a : tops_left)
    for (std::size_t b : tops_right)
      if (!g.adjacent(a, b)) return {a, b, 1};
  return {tops_left.front(), tops_right.front(), 2};
}

BiholeResult find_bihole(const BipartiteGraph& g) {
  require_balanced(g);
  BiholeResult result;
  result.trace = start_trace(g, 0);
  Working w(g);
  while (w.graph.edge_count() > 0) {
    result.trace.steps.push_back(w.remove_pair(select_pair(w.graph)));
    result.trace.values.push_back(strengthened_bound(w.graph, 0));
  }
  result.witness.left = w.left_label;
  result.witness.right = w.right_label;
  return result;
}

DegenerateResult find_degenerate(const BipartiteGraph& g, int d) {
  require_balanced(g);
  if (d < 0) throw Error(ErrorKind::NegativeD, "d = " + std::to_string(d));
  DegenerateResult result;
  result.trace = start_trace(g, d);
  Working w(g);
  while (w.graph.edge_count() > 0) {
    // With d = 0 no vertex qualifies and this is the bihole loop.
    if (const auto v = low_degree_vertex(w.graph, d)) {
      result.trace.steps.push_back(w.isolate(*v));
    } else {
      result.trace.steps.push_back(w.remove_pair(select_pair(w.graph)));
    }
    result.trace.values.push_back(strengthened_bound(w.graph, d));
  }
  result.witness.left = w.left_label;
  result.witness.right = w.right_label;

  // Edges removed by isolation steps come back in the induced subgraph of g;
  // each one re-attaches a vertex with at most d of them, so the result is
  // still d-degenerate and the peeling below succeeds.
  const DegeneracyCertificate cert =
      degeneracy_certificate(g, result.witness.left, result.witness.right, d);
  if (!cert.degenerate) {
    throw Error(ErrorKind::TraceMismatch, "survivors are not " + std::to_string(d) + "-degenerate");
  }
  result.witness.elimination_order = cert.order;
  return result;
}

bool check_trace(const BipartiteGraph& g, const PeelTrace& trace, int d) {
  require_balanced(g);
  if (d < 0) throw Error(ErrorKind::NegativeD, "d = " + std::to_string(d));
  Working w(g);
  std::vector<Rational> replayed{strengthened_bound(g, d)};

  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const PeelStep& step = trace.steps[i];
    const BipartiteGraph& h = w.graph;
    if (h.edge_count() == 0) mismatch(i, "working graph is already edgeless");
    const std::size_t top_left = max_degree(h, Side::Left);
    const std::size_t top_right = max_degree(h, Side::Right);
    if (step.max_degree_left != top_left || step.max_degree_right != top_right) {
      mismatch(i, "recorded max degrees differ from replay");
    }

    if (step.kind == StepKind::LowDegreeEdgeDeletion) {
      const auto cur = w.current(step.v.side, step.v.index);
      if (!cur) mismatch(i, "vertex already removed");
      const std::size_t deg = degree(h, {step.v.side, *cur});
      if (deg != step.degree_first) mismatch(i, "recorded degree differs from replay");
      if (deg < 1 || deg > static_cast<std::size_t>(d)) {
        mismatch(i, "edge deletion on a vertex of degree " + std::to_string(deg));
      }
      w.isolate({step.v.side, *cur});
    } else {
      const auto a = w.current(Side::Left, step.a);
      const auto b = w.current(Side::Right, step.b);
      if (!a || !b) mismatch(i, "pair vertex already removed");
      const std::size_t deg_a = degree(h, left(*a));
      const std::size_t deg_b = degree(h, right(*b));
      if (deg_a != step.degree_first || step.degree_second != deg_b) {
        mismatch(i, "recorded pair degrees differ from replay");
      }
      if (deg_a != top_left || deg_b != top_right) mismatch(i, "pair is not of maximum degree");
      // The pair inequality needs every non-isolated vertex above d.
      if (low_degree_vertex(h, d)) mismatch(i, "pair step while a low-degree vertex exists");
      const bool joined = h.adjacent(*a, *b);
      if (step.kind == StepKind::PairCase1 && joined) mismatch(i, "Case 1 pair is adjacent");
      if (step.kind == StepKind::PairCase2) {
        if (!joined) mismatch(i, "Case 2 pair is not adjacent");
        if (select_pair(h).case_number == 1) {
          mismatch(i, "Case 2 taken although a nonadjacent max-degree pair exists");
        }
      }
      w.remove_pair({*a, *b, step.kind == StepKind::PairCase1 ? 1 : 2});
    }
    replayed.push_back(strengthened_bound(w.graph, d));
  }

  for (std::size_t i = 1; i < replayed.size(); ++i)
    if (replayed[i] < replayed[i - 1]) return false;
  return replayed == trace.values;
}

}  // namespace bihole
