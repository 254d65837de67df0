#include <algorithm>
#include <stdexcept>

#include "berge/graph6.hpp"
#include "berge/isomorphism.hpp"
#include "berge/structure.hpp"
#include "berge/structures.hpp"

namespace berge {

std::string_view to_string(PrismParity p) {
  switch (p) {
    case PrismParity::Even:
      return "even";
    case PrismParity::Odd:
      return "odd";
    case PrismParity::Mixed:
      return "mixed";
  }
  return "?";
}

VertexSet Prism::vertex_set() const {
  VertexSet s;
  for (const auto& p : paths) s = s | p.vertex_set();
  return s;
}

namespace {

std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < g.n(); ++i)
    for (int j : VertexSet(g.row(i) & ~((Mask{2} << i) - 1)))
      for (int k : VertexSet(g.row(i) & g.row(j) & ~((Mask{2} << j) - 1))) out.push_back({i, j, k});
  return out;
}

struct PrismSearch {
  const Graph& g;
  const std::function<bool(const Prism&)>& visit;
  Prism current;
  std::array<Mask, 3> allowed{};

  // Returns false when the visitor asked to stop.
  bool paths_from(int i, Mask blocked) {
    if (i == 3) {
      bool all_even = true;
      bool all_odd = true;
      current.is_long = false;
      for (const auto& p : current.paths) {
        (p.length() % 2 == 0 ? all_odd : all_even) = false;
        current.is_long = current.is_long || p.length() > 1;
      }
      current.parity = all_even ? PrismParity::Even : all_odd ? PrismParity::Odd : PrismParity::Mixed;
      return visit(current);
    }
    const int target = current.b[static_cast<std::size_t>(i)];
    const VertexSet through((allowed[static_cast<std::size_t>(i)] & ~blocked) | VertexSet::bit(target));
    bool go = true;
    for_each_induced_path(g, current.a[static_cast<std::size_t>(i)], through, [&](std::span<const int> path) {
      if (path.back() != target) return Visit::Descend;
      current.paths[static_cast<std::size_t>(i)].verts.assign(path.begin(), path.end());
      Mask used = 0;
      for (std::size_t k = 1; k + 1 < path.size(); ++k) used |= VertexSet::bit(path[k]) | g.row(path[k]);
      go = paths_from(i + 1, blocked | used);
      return go ? Visit::Prune : Visit::Stop;
    });
    return go;
  }
};

}  // namespace

bool for_each_prism(const Graph& g, const std::function<bool(const Prism&)>& visit) {
  const auto tris = triangles(g);
  PrismSearch s{g, visit, {}, {}};
  for (const auto& t1 : tris)
    for (const auto& t2 : tris) {
      if (t2[0] <= t1[0]) continue;
      const Mask m1 = VertexSet::bit(t1[0]) | VertexSet::bit(t1[1]) | VertexSet::bit(t1[2]);
      const Mask m2 = VertexSet::bit(t2[0]) | VertexSet::bit(t2[1]) | VertexSet::bit(t2[2]);
      if ((m1 & m2) != 0) continue;
      auto b = t2;
      do {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
          for (int j = 0; j < 3 && ok; ++j)
            if (i != j && g.adjacent(t1[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)])) ok = false;
        if (!ok) continue;
        const Mask rest = g.vertices().bits() & ~m1 & ~m2;
        for (std::size_t i = 0; i < 3; ++i) {
          Mask forbid = 0;
          for (std::size_t j = 0; j < 3; ++j)
            if (j != i) forbid |= g.row(t1[j]) | g.row(b[j]);
          s.allowed[i] = rest & ~forbid;
        }
        s.current.a = t1;
        s.current.b = b;
        if (!s.paths_from(0, 0)) return false;
      } while (std::next_permutation(b.begin(), b.end()));
    }
  return true;
}

std::vector<Prism> find_prisms(const Graph& g) {
  std::vector<Prism> out;
  for_each_prism(g, [&](const Prism& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

bool check_prism(const Graph& g, const Prism& p) {
  std::vector<int> all;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& v = p.paths[i].verts;
    if (v.size() < 2 || v.front() != p.a[i] || v.back() != p.b[i] || !is_induced_path(g, v)) return false;
    all.insert(all.end(), v.begin(), v.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      for (int u : p.paths[i].verts)
        for (int v : p.paths[j].verts) {
          const bool expected = (u == p.a[i] && v == p.a[j]) || (u == p.b[i] && v == p.b[j]);
          if (g.adjacent(u, v) != expected) return false;
        }
  int even = 0;
  bool is_long = false;
  for (const auto& path : p.paths) {
    even += path.length() % 2 == 0;
    is_long = is_long || path.length() > 1;
  }
  const PrismParity parity = even == 3 ? PrismParity::Even : even == 0 ? PrismParity::Odd : PrismParity::Mixed;
  return parity == p.parity && is_long == p.is_long;
}

// --- fixed graphs -----------------------------------------------------------

std::string_view to_string(FixedGraph f) {
  switch (f) {
    case FixedGraph::DoubleDiamond:
      return "double_diamond";
    case FixedGraph::LK33:
      return "L_K33";
    case FixedGraph::LK33MinusEdge:
      return "L_K33_minus_e";
  }
  return "?";
}

std::optional<FixedGraph> fixed_graph_from_name(std::string_view name) {
  for (auto f : {FixedGraph::DoubleDiamond, FixedGraph::LK33, FixedGraph::LK33MinusEdge})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

Graph fixed_graph(FixedGraph f) {
  switch (f) {
    case FixedGraph::DoubleDiamond:
      return parse_graph6("G}`HWw");
    case FixedGraph::LK33:
      return parse_graph6("HhsZLaF");
    case FixedGraph::LK33MinusEdge:
      return parse_graph6("Gjf?|O");
  }
  throw std::invalid_argument("unknown fixed graph");
}

std::optional<VertexSet> contains_fixed(const Graph& g, FixedGraph f) {
  const Graph pattern = fixed_graph(f);
  if (pattern.n() > g.n()) return std::nullopt;
  auto map = find_induced_copy(g, pattern);
  if (!map) return std::nullopt;
  return VertexSet::of(*map);
}

std::optional<VertexSet> contains_fixed(const Graph& g, std::string_view name) {
  auto f = fixed_graph_from_name(name);
  if (!f) throw std::invalid_argument("unknown fixed graph name: " + std::string(name));
  return contains_fixed(g, *f);
}

}  // namespace berge
