#pragma once

#include <array>
#include <utility>
#include <vector>

#include "berge/graph.hpp"

// Named constructions shared by the detectors, generators and tests.
namespace berge::families {

Graph cycle(int n);
Graph path(int n);  // n vertices
Graph complete(int n);
Graph edgeless(int n);
Graph complete_bipartite(int a, int b);
Graph petersen();
Graph disjoint_union(const Graph& a, const Graph& b);

struct LineGraph {
  Graph graph;
  /// edge_of[v] is the root edge that vertex v of the line graph stands for.
  std::vector<std::pair<int, int>> edge_of;
};
LineGraph line_graph(const Graph& root);

/// Prism with triangle-to-triangle paths of the given lengths (each >= 1).
/// Vertices 0,1,2 form the first triangle; path i runs a_i ... b_i.
Graph prism(int len1, int len2, int len3);

/// K4 with edge (0,1),(0,2),(0,3),(1,2),(1,3),(2,3) subdivided
/// subdivisions[e] times.
Graph k4_subdivision(const std::array<int, 6>& subdivisions);

/// a1..a4 = 0..3, b1..b4 = 4..7.
Graph double_diamond();
Graph line_k33();
Graph line_k33_minus_edge();

}  // namespace berge::families
