#include "bihole/bigraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "bihole/error.hpp"

namespace bihole {

namespace {

std::string pair_text(std::size_t l, std::size_t r) {
  return "(" + std::to_string(l) + ", " + std::to_string(r) + ")";
}

std::string vertex_text(VertexRef v) {
  return std::string(v.side == Side::Left ? "L" : "R") + std::to_string(v.index);
}

void require_vertex(const BipartiteGraph& g, VertexRef v) {
  if (!g.contains(v)) {
    throw Error(ErrorKind::IndexOutOfRange, "vertex " + vertex_text(v) + " not in a " +
                                                std::to_string(g.left_count()) + "x" +
                                                std::to_string(g.right_count()) + " graph");
  }
}

}  // namespace

BipartiteGraph::BipartiteGraph(std::size_t left_count, std::size_t right_count,
                               const std::vector<Edge>& edges)
    : left_adj_(left_count), right_adj_(right_count) {
  for (const auto& [l, r] : edges) {
    if (l >= left_count || r >= right_count) {
      throw Error(ErrorKind::IndexOutOfRange, "edge " + pair_text(l, r) + " outside " +
                                                  std::to_string(left_count) + "x" +
                                                  std::to_string(right_count));
    }
    left_adj_[l].push_back(r);
    right_adj_[r].push_back(l);
  }
  auto normalize = [](std::vector<std::size_t>& adj) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  };
  for (auto& adj : left_adj_) {
    normalize(adj);
    edge_count_ += adj.size();
  }
  for (auto& adj : right_adj_) normalize(adj);
}

const std::vector<std::size_t>& BipartiteGraph::neighbors(VertexRef v) const {
  require_vertex(*this, v);
  return v.side == Side::Left ? left_adj_[v.index] : right_adj_[v.index];
}

bool BipartiteGraph::adjacent(std::size_t l, std::size_t r) const {
  if (l >= left_count() || r >= right_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "pair " + pair_text(l, r));
  }
  // Search the shorter list.
  if (left_adj_[l].size() <= right_adj_[r].size()) {
    return std::binary_search(left_adj_[l].begin(), left_adj_[l].end(), r);
  }
  return std::binary_search(right_adj_[r].begin(), right_adj_[r].end(), l);
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t l = 0; l < left_adj_.size(); ++l) {
    for (std::size_t r : left_adj_[l]) out.emplace_back(l, r);
  }
  return out;
}

bool BipartiteGraph::consistent() const {
  auto well_formed = [](const std::vector<std::vector<std::size_t>>& adj, std::size_t bound) {
    std::size_t total = 0;
    for (const auto& list : adj) {
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i] >= bound) return std::size_t{kRemoved};
        if (i > 0 && list[i - 1] >= list[i]) return std::size_t{kRemoved};
      }
      total += list.size();
    }
    return total;
  };
  const std::size_t left_total = well_formed(left_adj_, right_adj_.size());
  const std::size_t right_total = well_formed(right_adj_, left_adj_.size());
  if (left_total == kRemoved || right_total == kRemoved) return false;
  if (left_total != edge_count_ || right_total != edge_count_) return false;
  for (std::size_t l = 0; l < left_adj_.size(); ++l) {
    for (std::size_t r : left_adj_[l]) {
      if (!std::binary_search(right_adj_[r].begin(), right_adj_[r].end(), l)) return false;
    }
  }
  return true;
}

BipartiteGraph build_graph(std::size_t left_count, std::size_t right_count,
                           const std::vector<Edge>& edges) {
  return BipartiteGraph(left_count, right_count, edges);
}

std::size_t degree(const BipartiteGraph& g, VertexRef v) { return g.neighbors(v).size(); }

std::size_t max_degree(const BipartiteGraph& g, Side side) {
  const std::size_t count = g.side_count(side);
  if (count == 0) throw Error(ErrorKind::EmptySide, "max degree of an empty side");
  std::size_t best = 0;
  for (std::size_t i = 0; i < count; ++i) best = std::max(best, g.neighbors({side, i}).size());
  return best;
}

Reindexed delete_pair(const BipartiteGraph& g, std::size_t a, std::size_t b) {
  if (!g.balanced()) {
    throw Error(ErrorKind::UnbalancedGraph, std::to_string(g.left_count()) + "x" +
                                                std::to_string(g.right_count()));
  }
  if (a >= g.left_count() || b >= g.right_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "pair " + pair_text(a, b));
  }
  auto shift_map = [](std::size_t count, std::size_t removed) {
    std::vector<std::size_t> map(count);
    for (std::size_t i = 0; i < count; ++i) {
      map[i] = i < removed ? i : (i == removed ? kRemoved : i - 1);
    }
    return map;
  };
  Reindexed out;
  out.left_map = shift_map(g.left_count(), a);
  out.right_map = shift_map(g.right_count(), b);

  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  for (const auto& [l, r] : g.edges()) {
    if (l != a && r != b) kept.emplace_back(out.left_map[l], out.right_map[r]);
  }
  out.graph = BipartiteGraph(g.left_count() - 1, g.right_count() - 1, kept);
  return out;
}

BipartiteGraph delete_incident_edges(const BipartiteGraph& g, VertexRef v) {
  require_vertex(g, v);
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    const std::size_t endpoint = v.side == Side::Left ? e.first : e.second;
    if (endpoint != v.index) kept.push_back(e);
  }
  return BipartiteGraph(g.left_count(), g.right_count(), kept);
}

BipartiteGraph bipartite_complement(const BipartiteGraph& g) {
  std::vector<Edge> flipped;
  flipped.reserve(g.left_count() * g.right_count() - g.edge_count());
  for (std::size_t l = 0; l < g.left_count(); ++l) {
    const auto& adj = g.left_neighbors(l);
    auto it = adj.begin();
    for (std::size_t r = 0; r < g.right_count(); ++r) {
      if (it != adj.end() && *it == r) {
        ++it;
      } else {
        flipped.emplace_back(l, r);
      }
    }
  }
  return BipartiteGraph(g.left_count(), g.right_count(), flipped);
}

BipartiteGraph induced(const BipartiteGraph& g, const std::vector<std::size_t>& s,
                       const std::vector<std::size_t>& t) {
  auto index_map = [](std::vector<std::size_t> ids, std::size_t bound, Side side) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<std::size_t> map(bound, kRemoved);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] >= bound) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "induced on missing vertex " + vertex_text({side, ids[i]}));
      }
      map[ids[i]] = i;
    }
    return std::pair{map, ids.size()};
  };
  const auto [left_map, left_size] = index_map(s, g.left_count(), Side::Left);
  const auto [right_map, right_size] = index_map(t, g.right_count(), Side::Right);

  std::vector<Edge> kept;
  for (std::size_t l = 0; l < g.left_count(); ++l) {
    if (left_map[l] == kRemoved) continue;
    for (std::size_t r : g.left_neighbors(l)) {
      if (right_map[r] != kRemoved) kept.emplace_back(left_map[l], right_map[r]);
    }
  }
  return BipartiteGraph(left_size, right_size, kept);
}

namespace {

// Splits a line into whitespace-separated unsigned integers; false on any
// non-numeric token.
bool parse_numbers(std::string_view line, std::vector<std::size_t>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    std::size_t value = 0;
    const auto token = line.substr(i, j - i);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

}  // namespace

BipartiteGraph parse_edge_list(std::string_view text) {
  bool have_header = false;
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> numbers;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#') continue;

    const bool ok = parse_numbers(line, numbers) && numbers.size() == 2;
    if (!have_header) {
      if (!ok) {
        throw Error(ErrorKind::MalformedHeader,
                    "line " + std::to_string(line_no) + ": expected \"nA nB\"", line_no);
      }
      left_count = numbers[0];
      right_count = numbers[1];
      have_header = true;
      continue;
    }
    if (!ok) {
      throw Error(ErrorKind::MalformedEdgeLine,
                  "line " + std::to_string(line_no) + ": expected \"u v\"", line_no);
    }
    if (numbers[0] >= left_count || numbers[1] >= right_count) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "line " + std::to_string(line_no) + ": edge " +
                      pair_text(numbers[0], numbers[1]) + " outside " +
                      std::to_string(left_count) + "x" + std::to_string(right_count),
                  line_no);
    }
    edges.emplace_back(numbers[0], numbers[1]);
  }
  if (!have_header) throw Error(ErrorKind::MalformedHeader, "missing \"nA nB\" header", line_no);
  return BipartiteGraph(left_count, right_count, edges);
}

std::string serialize(const BipartiteGraph& g) {
  std::ostringstream out;
  out << g.left_count() << ' ' << g.right_count() << '\n';
  for (const auto& [l, r] : g.edges()) out << l << ' ' << r << '\n';
  return out.str();
}

}  // namespace bihole
