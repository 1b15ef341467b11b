#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bihole {

enum class Side : std::uint8_t { Left, Right };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

struct VertexRef {
  Side side = Side::Left;
  std::size_t index = 0;

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
  // Left side orders before Right, then by index.
  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

inline VertexRef left(std::size_t i) { return {Side::Left, i}; }
inline VertexRef right(std::size_t i) { return {Side::Right, i}; }

using Edge = std::pair<std::size_t, std::size_t>;

// A two-sided graph with edges only between the sides. Adjacency is stored
// in both directions, each list sorted and duplicate-free, so adjacency
// tests are a binary search. Values are immutable after construction; the
// editing operations return new graphs.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  // Edges may repeat and come in any order; duplicates are collapsed.
  // Throws Error{IndexOutOfRange} naming the first offending pair.
  BipartiteGraph(std::size_t left_count, std::size_t right_count, const std::vector<Edge>& edges);

  std::size_t left_count() const { return left_adj_.size(); }
  std::size_t right_count() const { return right_adj_.size(); }
  std::size_t side_count(Side s) const { return s == Side::Left ? left_count() : right_count(); }
  std::size_t edge_count() const { return edge_count_; }
  bool balanced() const { return left_count() == right_count(); }
  // Number of vertices per side; only meaningful when balanced().
  std::size_t n() const { return left_count(); }

  const std::vector<std::size_t>& neighbors(VertexRef v) const;
  const std::vector<std::size_t>& left_neighbors(std::size_t l) const { return neighbors(left(l)); }
  const std::vector<std::size_t>& right_neighbors(std::size_t r) const { return neighbors(right(r)); }

  bool adjacent(std::size_t l, std::size_t r) const;
  bool contains(VertexRef v) const { return v.index < side_count(v.side); }

  // Sorted (l, r) pairs.
  std::vector<Edge> edges() const;

  // Full scan of the mirror/sortedness/count invariants.
  bool consistent() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::vector<std::vector<std::size_t>> left_adj_;
  std::vector<std::vector<std::size_t>> right_adj_;
  std::size_t edge_count_ = 0;
};

inline constexpr std::size_t kRemoved = std::numeric_limits<std::size_t>::max();

// Result of removing vertices: the new graph and, per side, old index -> new
// index (kRemoved for deleted vertices). Survivors keep their relative order,
// so indices above a removed vertex shift down by one.
struct Reindexed {
  BipartiteGraph graph;
  std::vector<std::size_t> left_map;
  std::vector<std::size_t> right_map;
};

BipartiteGraph build_graph(std::size_t left_count, std::size_t right_count,
                           const std::vector<Edge>& edges);

std::size_t degree(const BipartiteGraph& g, VertexRef v);

// Throws EmptySide when the side has no vertices.
std::size_t max_degree(const BipartiteGraph& g, Side side);

// Removes left vertex a and right vertex b from a balanced graph.
Reindexed delete_pair(const BipartiteGraph& g, std::size_t a, std::size_t b);

BipartiteGraph delete_incident_edges(const BipartiteGraph& g, VertexRef v);

BipartiteGraph bipartite_complement(const BipartiteGraph& g);

// Subgraph induced by left indices `s` and right indices `t`, re-indexed by
// ascending original index. Duplicates in s/t are ignored.
BipartiteGraph induced(const BipartiteGraph& g, const std::vector<std::size_t>& s,
                       const std::vector<std::size_t>& t);

// Edge-list text format:
//   # comment lines anywhere
//   nA nB
//   u v        (one edge per line, 0-based)
// LF or CRLF. Duplicate edges are collapsed.
BipartiteGraph parse_edge_list(std::string_view text);

// Canonical form: header, then edges sorted lexicographically, LF endings.
std::string serialize(const BipartiteGraph& g);

}  // namespace bihole
