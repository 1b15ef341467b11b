#include "bihole/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>

#include "bihole/error.hpp"

namespace bihole {

namespace {

void require_balanced(const BipartiteGraph& g) {
  if (!g.balanced()) {
    throw Error(ErrorKind::UnbalancedGraph, std::to_string(g.left_count()) + "x" +
                                                std::to_string(g.right_count()));
  }
}

void require_within(const BipartiteGraph& g, std::size_t limit) {
  if (g.n() > limit) {
    throw Error(ErrorKind::InstanceTooLarge,
                "n = " + std::to_string(g.n()) + " exceeds oracle limit " + std::to_string(limit));
  }
}

void require_in_range(const BipartiteGraph& g, const std::vector<std::size_t>& ids, Side side) {
  for (std::size_t i : ids) {
    if (i >= g.side_count(side)) {
      throw Error(ErrorKind::IndexOutOfRange, std::string(side == Side::Left ? "L" : "R") +
                                                  std::to_string(i) + " not in graph");
    }
  }
}

using Mask = std::uint32_t;

// Bitmask of right neighbours per left vertex (n <= 32).
std::vector<Mask> left_masks(const BipartiteGraph& g) {
  std::vector<Mask> masks(g.left_count(), 0);
  for (std::size_t l = 0; l < g.left_count(); ++l)
    for (std::size_t r : g.left_neighbors(l)) masks[l] |= Mask{1} << r;
  return masks;
}

// Max over left subsets S of min(|S|, |common(S)|), where common(S) is the
// intersection of `rows[l]` over l in S (all right vertices for S empty).
std::size_t best_balanced(const std::vector<Mask>& rows, std::size_t n) {
  if (n == 0) return 0;
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::size_t best = 0;
  for (std::uint64_t s = 1; s < subsets; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    Mask common = all;
    for (std::uint64_t rest = s; rest != 0 && common != 0; rest &= rest - 1) {
      common &= rows[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    best = std::max(best, std::min(size, static_cast<std::size_t>(std::popcount(common))));
  }
  return best;
}

// Same peeling as degeneracy_certificate, on bitmasks of one candidate pair.
bool degenerate_masks(const std::vector<Mask>& left_adj, const std::vector<Mask>& right_adj,
                      Mask s, Mask t, int d) {
  const auto limit = static_cast<unsigned>(d);
  bool progress = true;
  while ((s | t) != 0 && progress) {
    progress = false;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      const int l = std::countr_zero(rest);
      if (static_cast<unsigned>(std::popcount(left_adj[l] & t)) <= limit) {
        s &= ~(Mask{1} << l);
        progress = true;
      }
    }
    for (Mask rest = t; rest != 0; rest &= rest - 1) {
      const int r = std::countr_zero(rest);
      if (static_cast<unsigned>(std::popcount(right_adj[r] & s)) <= limit) {
        t &= ~(Mask{1} << r);
        progress = true;
      }
    }
  }
  return (s | t) == 0;
}

std::vector<Mask> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < subsets; ++s)
    if (static_cast<std::size_t>(std::popcount(s)) == k) out.push_back(static_cast<Mask>(s));
  return out;
}

}  // namespace

bool is_bihole(const BipartiteGraph& g, const BiholeWitness& w) {
  require_in_range(g, w.left, Side::Left);
  require_in_range(g, w.right, Side::Right);
  const std::set<std::size_t> ls(w.left.begin(), w.left.end());
  const std::set<std::size_t> rs(w.right.begin(), w.right.end());
  if (ls.size() != w.left.size() || rs.size() != w.right.size()) return false;
  if (ls.size() != rs.size()) return false;
  for (std::size_t l : ls)
    for (std::size_t r : rs)
      if (g.adjacent(l, r)) return false;
  return true;
}

DegeneracyCertificate degeneracy_certificate(const BipartiteGraph& g,
                                             const std::vector<std::size_t>& s,
                                             const std::vector<std::size_t>& t, int d) {
  if (d < 0) throw Error(ErrorKind::NegativeD, "d = " + std::to_string(d));
  require_in_range(g, s, Side::Left);
  require_in_range(g, t, Side::Right);

  std::vector<std::size_t> ls(s), rs(t);
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  const BipartiteGraph h = induced(g, ls, rs);

  std::vector<std::size_t> left_deg(h.left_count()), right_deg(h.right_count());
  for (std::size_t i = 0; i < h.left_count(); ++i) left_deg[i] = h.left_neighbors(i).size();
  for (std::size_t i = 0; i < h.right_count(); ++i) right_deg[i] = h.right_neighbors(i).size();
  std::vector<bool> left_gone(h.left_count(), false), right_gone(h.right_count(), false);

  const auto limit = static_cast<std::size_t>(d);
  DegeneracyCertificate cert;
  const std::size_t total = h.left_count() + h.right_count();
  while (cert.order.size() < total) {
    std::optional<VertexRef> pick;
    for (std::size_t i = 0; i < h.left_count() && !pick; ++i)
      if (!left_gone[i] && left_deg[i] <= limit) pick = left(i);
    for (std::size_t i = 0; i < h.right_count() && !pick; ++i)
      if (!right_gone[i] && right_deg[i] <= limit) pick = right(i);
    if (!pick) break;

    if (pick->side == Side::Left) {
      left_gone[pick->index] = true;
      for (std::size_t r : h.left_neighbors(pick->index)) --right_deg[r];
      cert.order.push_back(left(ls[pick->index]));
    } else {
      right_gone[pick->index] = true;
      for (std::size_t l : h.right_neighbors(pick->index)) --left_deg[l];
      cert.order.push_back(right(rs[pick->index]));
    }
  }
  cert.degenerate = cert.order.size() == total;
  if (!cert.degenerate) {
    for (std::size_t i = 0; i < h.left_count(); ++i)
      if (!left_gone[i]) cert.core.push_back(left(ls[i]));
    for (std::size_t i = 0; i < h.right_count(); ++i)
      if (!right_gone[i]) cert.core.push_back(right(rs[i]));
  }
  return cert;
}

bool verify_elimination_order(const BipartiteGraph& g, const DegenerateWitness& w, int d) {
  if (d < 0) throw Error(ErrorKind::NegativeD, "d = " + std::to_string(d));
  require_in_range(g, w.left, Side::Left);
  require_in_range(g, w.right, Side::Right);
  std::set<std::size_t> ls(w.left.begin(), w.left.end());
  std::set<std::size_t> rs(w.right.begin(), w.right.end());
  if (ls.size() != w.left.size() || rs.size() != w.right.size() || ls.size() != rs.size()) {
    return false;
  }
  if (w.elimination_order.size() != ls.size() + rs.size()) return false;

  for (const VertexRef v : w.elimination_order) {
    auto& own = v.side == Side::Left ? ls : rs;
    const auto& other = v.side == Side::Left ? rs : ls;
    if (own.erase(v.index) != 1) return false;  // not in witness, or listed twice
    std::size_t live = 0;
    for (std::size_t u : g.neighbors(v)) live += other.count(u);
    if (live > static_cast<std::size_t>(d)) return false;
  }
  return true;
}

std::size_t max_bihole_exact(const BipartiteGraph& g, const OracleLimits& limits) {
  require_balanced(g);
  require_within(g, std::min<std::size_t>(limits.max_side_bihole, 32));
  const std::size_t n = g.n();
  std::vector<Mask> non_adj = left_masks(g);
  const Mask all = n == 0 ? 0 : (n == 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  for (Mask& m : non_adj) m = ~m & all;
  return best_balanced(non_adj, n);
}

std::size_t max_biclique_exact(const BipartiteGraph& g, const OracleLimits& limits) {
  require_balanced(g);
  require_within(g, std::min<std::size_t>(limits.max_side_bihole, 32));
  return best_balanced(left_masks(g), g.n());
}

std::size_t max_degenerate_exact(const BipartiteGraph& g, int d, const OracleLimits& limits) {
  require_balanced(g);
  if (d < 0) throw Error(ErrorKind::NegativeD, "d = " + std::to_string(d));
  require_within(g, std::min<std::size_t>(limits.max_side_degenerate, 16));
  const std::size_t n = g.n();
  const std::vector<Mask> left_adj = left_masks(g);
  std::vector<Mask> right_adj(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t l : g.right_neighbors(r)) right_adj[r] |= Mask{1} << l;

  for (std::size_t k = n; k > 0; --k) {
    const std::vector<Mask> candidates = subsets_of_size(n, k);
    for (Mask s : candidates)
      for (Mask t : candidates)
        if (degenerate_masks(left_adj, right_adj, s, t, d)) return k;
  }
  return 0;
}

}  // namespace bihole
