#pragma once

#include <optional>
#include <span>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

/// Partition of `s` into maximal connected subsets of g|s, ordered by
/// smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet s);
/// components(complement(g), s) without materialising the complement.
std::vector<VertexSet> anticomponents(const Graph& g, VertexSet s);

/// The empty set counts as connected and anticonnected.
bool is_connected(const Graph& g, VertexSet s);
bool is_anticonnected(const Graph& g, VertexSet s);

enum class Parity { Any, Odd, Even };

inline bool parity_matches(Parity p, int length) {
  return p == Parity::Any || (p == Parity::Odd) == (length % 2 == 1);
}

enum class Visit { Descend, Prune, Stop };

/// Depth-first walk over every induced path that starts at `start` and whose
/// other vertices lie in `through`. `visit` sees each path (starting with the
/// single vertex) and decides whether to extend it. Extensions are tried in
/// ascending vertex order. Returns false if the visitor stopped the walk.
template <typename Visitor>
bool for_each_induced_path(const Graph& g, int start, VertexSet through, Visitor&& visit);

/// Visits every hole of g|allowed of length >= min_len whose length matches
/// `parity`, once each in canonical form, in lexicographic order of the
/// canonical sequence. The visitor returns false to stop.
template <typename Visitor>
bool for_each_hole(const Graph& g, VertexSet allowed, int min_len, Parity parity, Visitor&& visit);

std::vector<Hole> enumerate_holes(const Graph& g, int min_len = 4, Parity parity = Parity::Any);
/// Holes of the complement, i.e. antiholes of g.
std::vector<Hole> enumerate_antiholes(const Graph& g, int min_len = 4, Parity parity = Parity::Any);

/// Lexicographically first odd hole (length >= 5), if any.
std::optional<Hole> find_odd_hole(const Graph& g);

/// Visits every nonempty subset of `allowed` that is connected in g, each
/// once. The visitor returns false to stop.
template <typename Visitor>
bool for_each_connected_subset(const Graph& g, VertexSet allowed, Visitor&& visit);

// ---------------------------------------------------------------------------

namespace detail {

template <typename Visitor>
bool induced_path_step(const Graph& g, VertexSet through, std::vector<int>& path, Mask blocked,
                       Visitor& visit) {
  const Visit v = visit(std::span<const int>(path));
  if (v == Visit::Stop) return false;
  if (v == Visit::Prune) return true;
  const int last = path.back();
  const Mask cand = g.row(last) & through.bits() & ~blocked;
  const Mask next_blocked = blocked | g.row(last) | VertexSet::bit(last);
  for (int y : VertexSet(cand)) {
    path.push_back(y);
    const bool go = induced_path_step(g, through, path, next_blocked | VertexSet::bit(y), visit);
    path.pop_back();
    if (!go) return false;
  }
  return true;
}

template <typename Visitor>
bool hole_step(const Graph& g, Mask allowed, int start, std::vector<int>& path, Mask blocked,
               int min_len, Parity parity, Visitor& visit) {
  const int last = path.back();
  const Mask start_nbrs = g.row(start);
  for (int y : VertexSet(g.row(last) & allowed & ~blocked)) {
    if ((start_nbrs >> y) & 1U) {
      // closes a cycle start..last,y; needs >= 4 vertices and the reflection check
      const int len = static_cast<int>(path.size()) + 1;
      if (len >= 4 && path[1] < y && len >= min_len && parity_matches(parity, len)) {
        path.push_back(y);
        const bool go = visit(Hole{path});
        path.pop_back();
        if (!go) return false;
      }
      continue;
    }
    path.push_back(y);
    const Mask interior_nbrs = path.size() > 2 ? g.row(last) : Mask{0};
    const bool go = hole_step(g, allowed, start, path,
                              blocked | interior_nbrs | VertexSet::bit(last) | VertexSet::bit(y), min_len,
                              parity, visit);
    path.pop_back();
    if (!go) return false;
  }
  return true;
}

template <typename Visitor>
bool connected_step(const Graph& g, Mask allowed, Mask set, Mask cand, Mask forbidden, Visitor& visit) {
  if (!visit(VertexSet(set))) return false;
  while (cand != 0) {
    const int w = std::countr_zero(cand);
    cand &= cand - 1;
    const Mask wb = VertexSet::bit(w);
    const Mask grow = g.row(w) & allowed & ~set & ~forbidden & ~wb;
    if (!connected_step(g, allowed, set | wb, cand | grow, forbidden, visit)) return false;
    forbidden |= wb;
  }
  return true;
}

}  // namespace detail

template <typename Visitor>
bool for_each_induced_path(const Graph& g, int start, VertexSet through, Visitor&& visit) {
  std::vector<int> path{start};
  return detail::induced_path_step(g, through - VertexSet{start}, path, VertexSet::bit(start), visit);
}

template <typename Visitor>
bool for_each_hole(const Graph& g, VertexSet allowed, int min_len, Parity parity, Visitor&& visit) {
  std::vector<int> path;
  for (int s : allowed) {
    // only vertices above s may appear, so s is the canonical start
    const Mask above = allowed.bits() & ~((Mask{2} << s) - 1);
    path.assign({s});
    for (int v1 : VertexSet(g.row(s) & above)) {
      path.push_back(v1);
      const bool go = detail::hole_step(g, above, s, path, VertexSet::bit(s) | VertexSet::bit(v1), min_len,
                                        parity, visit);
      path.pop_back();
      if (!go) return false;
    }
  }
  return true;
}

template <typename Visitor>
bool for_each_connected_subset(const Graph& g, VertexSet allowed, Visitor&& visit) {
  for (int v : allowed) {
    const Mask below = (Mask{2} << v) - 1;
    const Mask vb = VertexSet::bit(v);
    if (!detail::connected_step(g, allowed.bits(), vb, g.row(v) & allowed.bits() & ~below, below, visit))
      return false;
  }
  return true;
}

}  // namespace berge
