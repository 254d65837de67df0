#include <map>

#include "berge/structure.hpp"
#include "berge/structures.hpp"

namespace berge {

std::optional<Wheel> make_wheel(const Graph& g, const Hole& rim, VertexSet hub) {
  const int k = rim.length();
  if (k < 6 || hub.empty() || hub.intersects(rim.vertex_set())) return std::nullopt;
  if (!is_hole(g, rim.verts) || !is_anticonnected(g, hub)) return std::nullopt;
  const VertexSet full = g.complete_to(hub, rim.vertex_set());
  auto at = [&](int i) { return rim.verts[static_cast<std::size_t>(((i % k) + k) % k)]; };
  auto complete_edge = [&](int i) { return full.contains(at(i)) && full.contains(at(i + 1)); };

  bool two_disjoint = false;
  for (int i = 0; i < k && !two_disjoint; ++i)
    for (int j = i + 2; j < k && !two_disjoint; ++j)
      if ((j + 1) % k != i && complete_edge(i) && complete_edge(j)) two_disjoint = true;
  if (!two_disjoint) return std::nullopt;

  Wheel w{rim, hub, {}, false};
  if (full.size() == k) {
    w.segments.push_back(rim.verts);
    w.odd = (k - 1) % 2 == 1;
    return w;
  }
  int start = 0;
  while (full.contains(at(start))) ++start;
  std::vector<int> run;
  for (int step = 1; step <= k; ++step) {
    const int v = at(start + step);
    if (full.contains(v)) {
      run.push_back(v);
      continue;
    }
    if (!run.empty()) {
      w.odd = w.odd || (run.size() - 1) % 2 == 1;
      w.segments.push_back(std::move(run));
      run.clear();
    }
  }
  return w;
}

bool for_each_wheel(const Graph& g, const std::function<bool(const Wheel&)>& visit) {
  const Graph co = complement(g);
  return for_each_hole(g, g.vertices(), 6, Parity::Any, [&](const Hole& rim) {
    const int k = rim.length();
    const VertexSet outside = g.vertices() - rim.vertex_set();
    std::map<Mask, Wheel> found;
    auto ends = [&](int i) {
      return g.row(rim.verts[static_cast<std::size_t>(i)]) & g.row(rim.verts[static_cast<std::size_t>((i + 1) % k)]);
    };
    for (int i = 0; i < k; ++i)
      for (int j = i + 2; j < k; ++j) {
        if ((j + 1) % k == i) continue;
        const VertexSet common = VertexSet(ends(i) & ends(j)) & outside;
        if (common.empty()) continue;
        for_each_connected_subset(co, common, [&](VertexSet hub) {
          if (!found.contains(hub.bits()))
            if (auto w = make_wheel(g, rim, hub)) found.emplace(hub.bits(), std::move(*w));
          return true;
        });
      }
    for (const auto& [mask, w] : found)
      if (!visit(w)) return false;
    return true;
  });
}

std::vector<Wheel> find_wheels(const Graph& g) {
  std::vector<Wheel> out;
  for_each_wheel(g, [&](const Wheel& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

bool has_wheel(const Graph& g) {
  return !for_each_wheel(g, [](const Wheel&) { return false; });
}

bool has_odd_wheel(const Graph& g) {
  return !for_each_wheel(g, [](const Wheel& w) { return !w.odd; });
}

bool has_three_consecutive_neighbours(const Graph& g) {
  return !for_each_hole(g, g.vertices(), 6, Parity::Any, [&](const Hole& rim) {
    const int k = rim.length();
    Mask outside = g.vertices().bits() & ~rim.vertex_set().bits();
    for (int i = 0; i < k; ++i) {
      Mask three = outside;
      for (int d = 0; d < 3; ++d) three &= g.row(rim.verts[static_cast<std::size_t>((i + d) % k)]);
      if (three != 0) return false;
    }
    return true;
  });
}

}  // namespace berge
