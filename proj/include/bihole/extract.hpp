#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bihole/bigraph.hpp"
#include "bihole/bounds.hpp"
#include "bihole/oracle.hpp"

namespace bihole {

enum class StepKind { PairCase1, PairCase2, LowDegreeEdgeDeletion };

const char* to_string(StepKind kind);

// One move of the peeling. Vertex labels are those of the input graph.
//
//   PairCase1  a attains the left max degree, b the right one, a !~ b;
//              both are removed.
//   PairCase2  as above but a ~ b, and every max-degree pair was adjacent.
//   LowDegreeEdgeDeletion
//              vertex v had degree in [1, d]; its edges were removed and v
//              stays.
struct PeelStep {
  StepKind kind = StepKind::PairCase1;
  std::size_t a = 0;  // pair steps
  std::size_t b = 0;  // pair steps
  VertexRef v;        // edge-deletion steps
  std::size_t max_degree_left = 0;
  std::size_t max_degree_right = 0;
  std::size_t degree_first = 0;                // deg(a), or deg(v)
  std::optional<std::size_t> degree_second;    // deg(b); empty for edge deletion

  friend bool operator==(const PeelStep&, const PeelStep&) = default;
};

struct PeelTrace {
  int d = 0;
  BoundReport initial;
  std::vector<PeelStep> steps;
  // strengthened_bound of the working graph before the first step and after
  // each step; steps.size() + 1 entries. Never decreases.
  std::vector<Rational> values;

  friend bool operator==(const PeelTrace& x, const PeelTrace& y) {
    return x.d == y.d && x.steps == y.steps && x.values == y.values;
  }
};

struct PairChoice {
  std::size_t a = 0;
  std::size_t b = 0;
  int case_number = 1;

  friend bool operator==(const PairChoice&, const PairChoice&) = default;
};

// Picks a max-degree left vertex a and max-degree right vertex b. Scans
// max-degree left vertices ascending and, for each, max-degree right vertices
// ascending; the first nonadjacent pair is Case 1. When every such pair is
// adjacent, returns the smallest one as Case 2.
// Throws UnbalancedGraph, NoEdges.
PairChoice select_pair(const BipartiteGraph& g);

struct BiholeResult {
  BiholeWitness witness;
  PeelTrace trace;
};

struct DegenerateResult {
  DegenerateWitness witness;
  PeelTrace trace;
};

// Pair peeling until the working graph has no edges; the survivors form a
// bihole of size >= ceil(strengthened_bound(g, 0)) >= floor_bound(g, 0).
BiholeResult find_bihole(const BipartiteGraph& g);

// Generalisation to d-degenerate witnesses. While the working graph has
// edges: if some vertex has degree in [1, d], isolate the one of least
// degree (Left first, then lowest index); otherwise peel a pair as in
// find_bihole with potential min(1, (d+1)/(x+1)). The survivors' induced
// subgraph in g is d-degenerate; the elimination order is produced by
// degeneracy_certificate on it. With d = 0 this is exactly find_bihole.
// Throws UnbalancedGraph, NegativeD.
DegenerateResult find_degenerate(const BipartiteGraph& g, int d);

// Replays `trace` on g. Throws TraceMismatch if a step does not apply (a
// vertex is already gone, the recorded degrees differ, or its case condition
// fails). Returns false if the replayed strengthened bound ever decreases or
// disagrees with the recorded values.
bool check_trace(const BipartiteGraph& g, const PeelTrace& trace, int d);

}  // namespace bihole
