#include "berge/structure.hpp"

namespace berge {

namespace {

// Closure of `seed` inside `s` under the (possibly complemented) adjacency.
template <bool Anti>
Mask reach(const Graph& g, Mask seed, Mask s) {
  Mask seen = seed;
  Mask frontier = seed;
  while (frontier != 0) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    Mask nbrs = Anti ? (~g.row(v) & ~VertexSet::bit(v)) : g.row(v);
    nbrs &= s & ~seen;
    seen |= nbrs;
    frontier |= nbrs;
  }
  return seen;
}

template <bool Anti>
std::vector<VertexSet> split(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  Mask rest = s.bits();
  while (rest != 0) {
    const Mask comp = reach<Anti>(g, rest & -rest, s.bits());
    out.emplace_back(comp);
    rest &= ~comp;
  }
  return out;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g, VertexSet s) { return split<false>(g, s); }

std::vector<VertexSet> anticomponents(const Graph& g, VertexSet s) { return split<true>(g, s); }

bool is_connected(const Graph& g, VertexSet s) {
  if (s.empty()) return true;
  return reach<false>(g, s.bits() & -s.bits(), s.bits()) == s.bits();
}

bool is_anticonnected(const Graph& g, VertexSet s) {
  if (s.empty()) return true;
  return reach<true>(g, s.bits() & -s.bits(), s.bits()) == s.bits();
}

std::vector<Hole> enumerate_holes(const Graph& g, int min_len, Parity parity) {
  std::vector<Hole> out;
  for_each_hole(g, g.vertices(), min_len, parity, [&](Hole h) {
    out.push_back(std::move(h));
    return true;
  });
  return out;
}

std::vector<Hole> enumerate_antiholes(const Graph& g, int min_len, Parity parity) {
  return enumerate_holes(complement(g), min_len, parity);
}

std::optional<Hole> find_odd_hole(const Graph& g) {
  std::optional<Hole> found;
  for_each_hole(g, g.vertices(), 5, Parity::Odd, [&](Hole h) {
    found = std::move(h);
    return false;
  });
  return found;
}

}  // namespace berge
