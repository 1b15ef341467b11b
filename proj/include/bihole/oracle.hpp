#pragma once

#include <cstddef>
#include <vector>

#include "bihole/bigraph.hpp"

namespace bihole {

// Brute-force ground truth. Nothing here is clever on purpose.

struct OracleLimits {
  std::size_t max_side_bihole = 22;
  std::size_t max_side_degenerate = 8;
};

struct BiholeWitness {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;

  std::size_t size() const { return left.size(); }
  friend bool operator==(const BiholeWitness&, const BiholeWitness&) = default;
};

struct DegenerateWitness {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  std::vector<VertexRef> elimination_order;

  std::size_t size() const { return left.size(); }
  friend bool operator==(const DegenerateWitness&, const DegenerateWitness&) = default;
};

// Balanced and no edge of g between the two sets. Throws IndexOutOfRange.
bool is_bihole(const BipartiteGraph& g, const BiholeWitness& w);

struct DegeneracyCertificate {
  bool degenerate = false;
  // Elimination order in g's labels; complete iff `degenerate`.
  std::vector<VertexRef> order;
  // When not degenerate: the vertices left over, each of degree > d inside
  // the leftover set.
  std::vector<VertexRef> core;
};

// Peels induced(g, s, t): repeatedly removes the first vertex (Left side
// first, then ascending index) whose current degree is <= d. The subgraph is
// d-degenerate iff everything gets removed.
DegeneracyCertificate degeneracy_certificate(const BipartiteGraph& g,
                                             const std::vector<std::size_t>& s,
                                             const std::vector<std::size_t>& t, int d);

// Checks that `order` lists exactly left x right (as VertexRefs) and that each
// vertex has at most d neighbours among the not-yet-removed witness vertices.
bool verify_elimination_order(const BipartiteGraph& g, const DegenerateWitness& w, int d);

// beta(G): enumerates every left subset S in ascending bitmask order and
// takes min(|S|, |common non-neighbourhood of S|).
std::size_t max_bihole_exact(const BipartiteGraph& g, const OracleLimits& limits = {});

// beta_d(G): tries sizes k = n, n-1, ... and returns the first k for which
// some k x k induced subgraph is d-degenerate.
std::size_t max_degenerate_exact(const BipartiteGraph& g, int d, const OracleLimits& limits = {});

// Largest balanced K_{t,t} subgraph; same enumeration with common
// neighbourhoods.
std::size_t max_biclique_exact(const BipartiteGraph& g, const OracleLimits& limits = {});

}  // namespace bihole
