#include "berge/families.hpp"

#include <stdexcept>

namespace berge::families {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph edgeless(int n) { return Graph(n); }

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
  return g;
}

LineGraph line_graph(const Graph& root) {
  LineGraph out;
  out.edge_of = root.edges();
  const int m = static_cast<int>(out.edge_of.size());
  out.graph = Graph(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = out.edge_of[static_cast<std::size_t>(i)];
      auto [c, d] = out.edge_of[static_cast<std::size_t>(j)];
      if (a == c || a == d || b == c || b == d) out.graph.add_edge(i, j);
    }
  return out;
}

Graph prism(int len1, int len2, int len3) {
  const int lens[3] = {len1, len2, len3};
  for (int l : lens)
    if (l < 1) throw std::invalid_argument("prism path lengths must be >= 1");
  Graph g(len1 + len2 + len3 + 3);
  int a[3];
  int b[3];
  int next = 0;
  for (int i = 0; i < 3; ++i) {
    a[i] = next;
    for (int k = 0; k < lens[i]; ++k) g.add_edge(next + k, next + k + 1);
    b[i] = next + lens[i];
    next += lens[i] + 1;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      g.add_edge(a[i], a[j]);
      g.add_edge(b[i], b[j]);
    }
  return g;
}

Graph k4_subdivision(const std::array<int, 6>& subdivisions) {
  static constexpr std::pair<int, int> kEdges[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  int total = 4;
  for (int s : subdivisions) total += s;
  Graph g(total);
  int next = 4;
  for (int e = 0; e < 6; ++e) {
    int prev = kEdges[e].first;
    for (int k = 0; k < subdivisions[static_cast<std::size_t>(e)]; ++k) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, kEdges[e].second);
  }
  return g;
}

Graph double_diamond() {
  Graph g(8);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(i == 2 && j == 3)) {
        g.add_edge(i, j);
        g.add_edge(4 + i, 4 + j);
      }
  for (int i = 0; i < 4; ++i) g.add_edge(i, 4 + i);
  return g;
}

Graph line_k33() { return line_graph(complete_bipartite(3, 3)).graph; }

Graph line_k33_minus_edge() {
  Graph h = complete_bipartite(3, 3);
  h.remove_edge(0, 3);
  return line_graph(h).graph;
}

}  // namespace berge::families
