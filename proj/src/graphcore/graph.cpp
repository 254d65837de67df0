#include "berge/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace berge {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : VertexSet(rows_[u] & ~((Mask{2} << u) - 1))) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("bad edge endpoints");
  rows_[u] |= VertexSet::bit(v);
  rows_[v] |= VertexSet::bit(u);
}

void Graph::remove_edge(int u, int v) {
  rows_[u] &= ~VertexSet::bit(v);
  rows_[v] &= ~VertexSet::bit(u);
}

VertexSet Graph::complete_to(VertexSet x, VertexSet s) const {
  Mask out = (s - x).bits();
  for (int v : x) out &= rows_[v];
  return VertexSet(out);
}

VertexSet Graph::anticomplete_to(VertexSet x, VertexSet s) const {
  Mask touched = 0;
  for (int v : x) touched |= rows_[v];
  return VertexSet((s - x).bits() & ~touched);
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s)
    if (((s.bits() & ~rows_[v]) & ~VertexSet::bit(v)) != 0) return false;
  return true;
}

bool Graph::is_stable(VertexSet s) const {
  for (int v : s)
    if ((s.bits() & rows_[v]) != 0) return false;
  return true;
}

bool Graph::operator==(const Graph& o) const {
  return n_ == o.n_ && std::equal(rows_.begin(), rows_.begin() + n_, o.rows_.begin());
}

Graph complement(const Graph& g) {
  Graph h(g.n());
  const Mask all = g.vertices().bits();
  for (int u = 0; u < g.n(); ++u)
    for (int v : VertexSet(all & ~g.row(u) & ~((Mask{2} << u) - 1))) h.add_edge(u, v);
  return h;
}

Graph induced(const Graph& g, VertexSet s) {
  std::array<int, kMaxVertices> index{};
  int k = 0;
  for (int v : s) index[v] = k++;
  Graph h(k);
  for (int u : s)
    for (int v : g.neighbours(u) & s)
      if (u < v) h.add_edge(index[u], index[v]);
  return h;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  Graph h(g.n());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

VertexSet InducedPath::interior() const {
  VertexSet s;
  for (std::size_t i = 1; i + 1 < verts.size(); ++i) s.insert(verts[i]);
  return s;
}

namespace {

bool distinct_in_range(const Graph& g, std::span<const int> verts) {
  VertexSet seen;
  for (int v : verts) {
    if (v < 0 || v >= g.n() || seen.contains(v)) return false;
    seen.insert(v);
  }
  return true;
}

}  // namespace

bool is_induced_path(const Graph& g, std::span<const int> verts) {
  if (verts.empty() || !distinct_in_range(g, verts)) return false;
  const auto k = verts.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (g.adjacent(verts[i], verts[j]) != (j == i + 1)) return false;
  return true;
}

bool is_hole(const Graph& g, std::span<const int> verts) {
  const auto k = verts.size();
  if (k < 4 || !distinct_in_range(g, verts)) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(verts[i], verts[j]) != consecutive) return false;
    }
  return true;
}

bool is_antipath(const Graph& g, std::span<const int> verts) {
  return is_induced_path(complement(g), verts);
}

bool is_antihole(const Graph& g, std::span<const int> verts) {
  return is_hole(complement(g), verts);
}

Hole canonical_hole(std::vector<int> verts) {
  if (verts.empty()) return {};
  auto it = std::min_element(verts.begin(), verts.end());
  std::rotate(verts.begin(), it, verts.end());
  if (verts.size() > 2 && verts.back() < verts[1]) std::reverse(verts.begin() + 1, verts.end());
  return Hole{std::move(verts)};
}

}  // namespace berge
