#include <algorithm>
#include <array>
#include <vector>

#include "berge/errors.hpp"
#include "berge/recognizers.hpp"

namespace berge {

namespace {

// Branch and bound over candidate sets; greedy colour classes bound the
// remaining clique size.
struct CliqueSearch {
  const Graph& g;
  int best = 0;

  int colour_bound(Mask cand) const {
    int colours = 0;
    while (cand != 0) {
      ++colours;
      Mask avail = cand;
      while (avail != 0) {
        const int v = std::countr_zero(avail);
        avail &= ~g.row(v) & ~VertexSet::bit(v);
        cand &= ~VertexSet::bit(v);
      }
    }
    return colours;
  }

  void expand(int size, Mask cand) {
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + colour_bound(cand) <= best) return;
    while (cand != 0) {
      if (size + std::popcount(cand) <= best) return;
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      expand(size + 1, cand & g.row(v));
    }
  }
};

struct ColouringSearch {
  const Graph& g;
  Mask within;
  int lower;
  int best;
  std::array<int, kMaxVertices> colour{};

  // Highest saturation, then most uncoloured neighbours, then lowest vertex.
  int pick(Mask uncoloured, const std::array<Mask, kMaxVertices>& sat) const {
    int best_v = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v : VertexSet(uncoloured)) {
      const int s = std::popcount(sat[static_cast<std::size_t>(v)]);
      const int d = std::popcount(g.row(v) & uncoloured);
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        best_v = v;
        best_sat = s;
        best_deg = d;
      }
    }
    return best_v;
  }

  int greedy() {
    std::array<Mask, kMaxVertices> sat{};
    Mask uncoloured = within;
    int used = 0;
    while (uncoloured != 0) {
      const int v = pick(uncoloured, sat);
      const int c = std::countr_zero(~sat[static_cast<std::size_t>(v)]);
      used = std::max(used, c + 1);
      uncoloured &= ~VertexSet::bit(v);
      for (int w : VertexSet(g.row(v) & uncoloured)) sat[static_cast<std::size_t>(w)] |= Mask{1} << c;
    }
    return used;
  }

  // Returns true once an optimal colouring meeting the lower bound is found.
  bool search(Mask uncoloured, int used, const std::array<Mask, kMaxVertices>& sat) {
    if (used >= best) return false;
    if (uncoloured == 0) {
      best = used;
      return best == lower;
    }
    const int v = pick(uncoloured, sat);
    const Mask forbidden = sat[static_cast<std::size_t>(v)];
    const int limit = std::min(used + 1, best - 1);
    for (int c = 0; c < limit; ++c) {
      if ((forbidden >> c) & 1U) continue;
      auto next = sat;
      for (int w : VertexSet(g.row(v) & uncoloured)) next[static_cast<std::size_t>(w)] |= Mask{1} << c;
      if (search(uncoloured & ~VertexSet::bit(v), std::max(used, c + 1), next)) return true;
    }
    return false;
  }
};

}  // namespace

int clique_number(const Graph& g, VertexSet within) {
  CliqueSearch s{g};
  s.expand(0, within.bits());
  return s.best;
}

int chromatic_number(const Graph& g, VertexSet within) {
  if (within.empty()) return 0;
  ColouringSearch s{g, within.bits(), clique_number(g, within), 0, {}};
  s.best = s.greedy();
  if (s.best == s.lower) return s.best;
  std::array<Mask, kMaxVertices> sat{};
  s.search(within.bits(), 0, sat);
  return s.best;
}

PerfectionReport is_perfect(const Graph& g, int max_n) {
  if (g.n() > max_n)
    throw BudgetExceeded("perfection check refused: " + std::to_string(g.n()) + " vertices exceeds limit " +
                         std::to_string(max_n));
  const int n = g.n();
  std::vector<int> pick;
  // size-k subsets in lexicographic order of their sorted member lists
  for (int k = 1; k <= n; ++k) {
    pick.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      VertexSet s = VertexSet::of(pick);
      const int omega = clique_number(g, s);
      const int chi = chromatic_number(g, s);
      if (omega != chi) return {false, PerfectionWitness{s, omega, chi}};
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return {true, std::nullopt};
}

}  // namespace berge
