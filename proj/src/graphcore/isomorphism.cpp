#include "berge/isomorphism.hpp"

#include <algorithm>
#include <functional>

namespace berge {

Graph CanonicalForm::to_graph() const {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v : VertexSet(rows[u]))
      if (u < v) g.add_edge(u, v);
  return g;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::size_t h = static_cast<std::size_t>(f.n) * 0x9e3779b97f4a7c15ULL;
  for (Mask r : f.rows) h = (h ^ r) * 0x100000001b3ULL + (h >> 29);
  return h;
}

namespace {

using Cells = std::vector<std::vector<int>>;

// Splits cells by neighbour counts into splitter cells until equitable.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
      Mask splitter = 0;
      for (int v : cells[si]) splitter |= VertexSet::bit(v);
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        auto& cell = cells[ci];
        if (cell.size() < 2) continue;
        auto count = [&](int v) { return std::popcount(g.row(v) & splitter); };
        const int first = count(cell.front());
        if (std::all_of(cell.begin(), cell.end(), [&](int v) { return count(v) == first; })) continue;
        std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) { return count(a) < count(b); });
        Cells pieces;
        for (int v : cell) {
          if (pieces.empty() || count(pieces.back().front()) != count(v)) pieces.emplace_back();
          pieces.back().push_back(v);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

bool twins(const Graph& g, int u, int v) {
  return (g.row(u) & ~VertexSet::bit(v)) == (g.row(v) & ~VertexSet::bit(u));
}

struct Search {
  const Graph& g;
  bool have_best = false;
  CanonicalLabeling best;

  void leaf(const Cells& cells) {
    std::vector<int> order;
    std::vector<int> position(static_cast<std::size_t>(g.n()));
    for (const auto& c : cells) {
      position[static_cast<std::size_t>(c.front())] = static_cast<int>(order.size());
      order.push_back(c.front());
    }
    CanonicalForm form{g.n(), std::vector<Mask>(static_cast<std::size_t>(g.n()), 0)};
    for (int i = 0; i < g.n(); ++i)
      for (int w : g.neighbours(order[static_cast<std::size_t>(i)]))
        form.rows[static_cast<std::size_t>(i)] |= VertexSet::bit(position[static_cast<std::size_t>(w)]);
    if (!have_best || form < best.form) {
      best.form = std::move(form);
      best.order = std::move(order);
      have_best = true;
    }
  }

  void run(Cells cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto at = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> members = cells[at];
    std::sort(members.begin(), members.end());
    std::vector<int> tried;
    for (int v : members) {
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g, u, v); })) continue;
      tried.push_back(v);
      Cells next = cells;
      std::vector<int> rest;
      for (int w : members)
        if (w != v) rest.push_back(w);
      next[at] = {v};
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(at) + 1, rest);
      run(std::move(next));
    }
  }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  Search s{g, false, {}};
  if (g.n() == 0) return {};
  Cells start(1);
  for (int v = 0; v < g.n(); ++v) start[0].push_back(v);
  s.run(std::move(start));
  return std::move(s.best);
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.n() != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
  const auto lg = canonical_labeling(g);
  const auto lh = canonical_labeling(h);
  if (lg.form != lh.form) return std::nullopt;
  std::vector<int> map(static_cast<std::size_t>(g.n()));
  for (std::size_t i = 0; i < lg.order.size(); ++i)
    map[static_cast<std::size_t>(lg.order[i])] = lh.order[i];
  return map;
}

std::optional<std::vector<int>> find_induced_copy(const Graph& host, const Graph& pattern, VertexSet allowed) {
  const int k = pattern.n();
  if (k > allowed.size()) return std::nullopt;
  if (k == 0) return std::vector<int>{};

  // Pattern order: each next vertex maximises links to the already placed ones.
  std::vector<int> order;
  VertexSet placed;
  while (static_cast<int>(order.size()) < k) {
    int pick = -1;
    int best_links = -1;
    int best_deg = -1;
    for (int v = 0; v < k; ++v) {
      if (placed.contains(v)) continue;
      const int links = (pattern.neighbours(v) & placed).size();
      if (links > best_links || (links == best_links && pattern.degree(v) > best_deg)) {
        pick = v;
        best_links = links;
        best_deg = pattern.degree(v);
      }
    }
    order.push_back(pick);
    placed.insert(pick);
  }

  std::vector<int> map(static_cast<std::size_t>(k), -1);
  std::function<bool(std::size_t, Mask)> place = [&](std::size_t i, Mask used) -> bool {
    if (i == order.size()) return true;
    const int p = order[i];
    Mask cand = allowed.bits() & ~used;
    for (std::size_t j = 0; j < i; ++j) {
      const int q = order[j];
      const int hq = map[static_cast<std::size_t>(q)];
      cand &= pattern.adjacent(p, q) ? host.row(hq) : ~host.row(hq);
    }
    for (int h : VertexSet(cand)) {
      if (host.degree(h) < pattern.degree(p)) continue;
      map[static_cast<std::size_t>(p)] = h;
      if (place(i + 1, used | VertexSet::bit(h))) return true;
    }
    map[static_cast<std::size_t>(p)] = -1;
    return false;
  };
  if (!place(0, 0)) return std::nullopt;
  return map;
}

}  // namespace berge
