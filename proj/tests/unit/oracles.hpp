#pragma once

// Brute-force reference implementations used only by tests. Each one takes
// a different route from the library code it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "berge/graph.hpp"

namespace oracle {

using berge::Graph;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::vector<std::vector<bool>> m(g.n(), std::vector<bool>(g.n(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

// Connectivity by repeated edge relaxation on an adjacency matrix.
inline bool connected(const std::vector<std::vector<bool>>& m, const std::vector<int>& s) {
  if (s.empty()) return true;
  std::vector<bool> in(s.size(), false);
  in[0] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j)
        if (in[i] && !in[j] && m[s[i]][s[j]]) in[j] = grew = true;
  }
  return std::all_of(in.begin(), in.end(), [](bool b) { return b; });
}

inline std::vector<int> members(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 0; v < 32; ++v)
    if ((mask >> v) & 1U) out.push_back(v);
  return out;
}

// Holes = vertex subsets of size >= 4 inducing a connected 2-regular graph.
inline std::vector<std::vector<int>> hole_vertex_sets(const Graph& g, int min_len) {
  const auto m = matrix(g);
  std::vector<std::vector<int>> out;
  for (std::uint32_t s = 0; s < (1U << g.n()); ++s) {
    auto vs = members(s);
    if (static_cast<int>(vs.size()) < std::max(4, min_len)) continue;
    bool two_regular = true;
    for (int v : vs) {
      int d = 0;
      for (int w : vs) d += m[v][w];
      if (d != 2) two_regular = false;
    }
    if (two_regular && connected(m, vs)) out.push_back(vs);
  }
  return out;
}

// Isomorphism by trying every permutation.
inline std::optional<std::vector<int>> brute_isomorphism(const Graph& g, const Graph& h) {
  if (g.n() != h.n()) return std::nullopt;
  std::vector<int> p(g.n());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < g.n() && ok; ++u)
      for (int v = u + 1; v < g.n() && ok; ++v)
        if (g.adjacent(u, v) != h.adjacent(p[u], p[v])) ok = false;
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

// Number of unlabelled graphs on n vertices by Burnside's lemma.
inline std::uint64_t burnside_graph_count(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t total = 0;
  std::uint64_t perms = 0;
  do {
    // cycles of p acting on unordered pairs
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    int cycles = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (seen[a][b]) continue;
        ++cycles;
        int x = a, y = b;
        while (!seen[std::min(x, y)][std::max(x, y)]) {
          seen[std::min(x, y)][std::max(x, y)] = true;
          x = p[x];
          y = p[y];
        }
      }
    total += std::uint64_t{1} << cycles;
    ++perms;
  } while (std::next_permutation(p.begin(), p.end()));
  return total / perms;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
