#include "berge/errors.hpp"
#include "berge/structure.hpp"
#include "berge/structures.hpp"

namespace berge {

std::optional<Pseudowheel> find_pseudowheel(const Graph& g, std::size_t budget) {
  const Graph co = complement(g);
  std::size_t spent = 0;
  auto tick = [&] {
    if (++spent > budget) throw BudgetExceeded("pseudowheel search exceeded its step budget");
  };
  std::optional<Pseudowheel> found;
  for (int p1 : g.vertices()) {
    for_each_induced_path(g, p1, g.vertices(), [&](std::span<const int> path) {
      tick();
      const std::size_t n = path.size();
      if (n < 5) return Visit::Descend;
      const int pn = path.back();
      const VertexSet on_path = VertexSet::of(path);
      const VertexSet x_pool = VertexSet(g.row(p1) & g.row(pn)) - on_path;
      for_each_connected_subset(co, x_pool, [&](VertexSet x) {
        tick();
        for (std::size_t i = 1; i + 1 < n; ++i)
          if (g.complete_to(x, VertexSet{path[i]}).size() == 1) return true;
        const VertexSet y_pool = g.complete_to(x, VertexSet(g.row(p1))) - on_path;
        for_each_connected_subset(co, y_pool, [&](VertexSet y) {
          tick();
          auto y_complete = [&](std::size_t i) { return g.complete_to(y, VertexSet{path[i]}).size() == 1; };
          if (y_complete(1) || y_complete(n - 1)) return true;
          for (std::size_t i = 2; i + 1 < n; ++i)
            if (y_complete(i)) {
              found = Pseudowheel{x, y, InducedPath{{path.begin(), path.end()}}};
              return false;
            }
          return true;
        });
        return !found;
      });
      return found ? Visit::Stop : Visit::Descend;
    });
    if (found) return found;
  }
  return std::nullopt;
}

bool check_pseudowheel(const Graph& g, const Pseudowheel& w) {
  const auto& p = w.path.verts;
  const std::size_t n = p.size();
  if (w.x.empty() || w.y.empty() || w.x.intersects(w.y) || n < 5) return false;
  if (!is_anticonnected(g, w.x) || !is_anticonnected(g, w.y)) return false;
  for (int u : w.x)
    for (int v : w.y)
      if (!g.adjacent(u, v)) return false;
  if (w.path.vertex_set().intersects(w.x | w.y) || !is_induced_path(g, p)) return false;
  auto complete = [&](VertexSet s, int v) {
    for (int u : s)
      if (!g.adjacent(u, v)) return false;
    return true;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (complete(w.x, p[i]) != (i == 0 || i == n - 1)) return false;
  if (!complete(w.y, p[0]) || complete(w.y, p[1]) || complete(w.y, p[n - 1])) return false;
  for (std::size_t i = 2; i + 1 < n; ++i)
    if (complete(w.y, p[i])) return true;
  return false;
}

namespace {

// Three-valued conjunction: false dominates, unknown otherwise spreads.
std::optional<bool> both(std::optional<bool> a, std::optional<bool> b) {
  if (a == false || b == false) return false;
  if (a && b) return true;
  return std::nullopt;
}

}  // namespace

FLadderReport f_ladder(const Graph& g, const FLadderOptions& options) {
  if (auto b = is_berge(g); !b.berge)
    throw NotBerge("class ladder needs a Berge graph", b.witness->hole.verts, b.witness->side == Side::Complement);
  const Graph co = complement(g);
  FLadderReport r;
  auto& m = r.member;

  auto nondegenerate = [&](const Graph& h) {
    return !for_each_appearance_k4(h, [](const AppearanceK4& a) { return a.degenerate; }, options.appearance_budget);
  };
  auto any_appearance = [&](const Graph& h) {
    return !for_each_appearance_k4(h, [](const AppearanceK4&) { return false; }, options.appearance_budget);
  };
  auto prism_where = [](const Graph& h, bool (*pred)(const Prism&)) {
    return !for_each_prism(h, [&](const Prism& p) { return !pred(p); });
  };
  int level = 0;
  auto lazily = [&](std::optional<bool> prev, auto&& cond) -> std::optional<bool> {
    if (++level > options.stop_after) return std::nullopt;
    if (prev == false) return false;
    return both(prev, cond());
  };

  m[0] = lazily(true, [&] { return !nondegenerate(g); });
  m[1] = lazily(m[0], [&] { return !nondegenerate(co) && !contains_fixed(g, FixedGraph::LK33); });
  m[2] = lazily(m[1], [&] { return !any_appearance(g) && !any_appearance(co); });
  m[3] = lazily(m[2], [&] { return !prism_where(g, [](const Prism& p) { return p.parity == PrismParity::Even; }); });
  m[4] = lazily(m[3], [&] {
    auto is_long = [](const Prism& p) { return p.is_long; };
    return !prism_where(g, is_long) && !prism_where(co, is_long);
  });
  m[5] = lazily(m[4], [&] { return !contains_fixed(g, FixedGraph::DoubleDiamond); });
  m[6] = lazily(m[5], [&] { return !has_odd_wheel(g) && !has_odd_wheel(co); });

  const bool run_f8 = options.check_f8.value_or(g.n() <= 10);
  m[7] = lazily(m[6], [&]() -> std::optional<bool> {
    if (!run_f8) {
      r.f8_skipped = true;
      r.f8_reason = "disabled";
      return std::nullopt;
    }
    try {
      return !find_pseudowheel(g, options.f8_budget) && !find_pseudowheel(co, options.f8_budget);
    } catch (const BudgetExceeded&) {
      r.f8_skipped = true;
      r.f8_reason = "budget";
      return std::nullopt;
    }
  });
  m[8] = lazily(m[7], [&] { return !has_wheel(g) && !has_wheel(co); });
  m[9] = lazily(m[8], [&] { return !has_three_consecutive_neighbours(g) && !has_three_consecutive_neighbours(co); });
  m[10] = lazily(m[9], [&] { return enumerate_holes(co, 5).empty(); });
  return r;
}

}  // namespace berge
