#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

/// Which graph a witness lives in: g itself or its complement.
enum class Side { Graph, Complement };

std::string_view to_string(Side side);

struct OddHoleWitness {
  Side side = Side::Graph;
  Hole hole;  // a hole of g, or of complement(g) (an antihole of g)
};

struct BergeResult {
  bool berge = true;
  std::optional<OddHoleWitness> witness;
};

/// Berge iff neither g nor its complement has an odd hole of length >= 5.
BergeResult is_berge(const Graph& g);

/// Exact clique number of g|within.
int clique_number(const Graph& g, VertexSet within);
inline int clique_number(const Graph& g) { return clique_number(g, g.vertices()); }

/// Exact chromatic number of g|within by DSATUR branch and bound seeded with
/// the clique lower bound.
int chromatic_number(const Graph& g, VertexSet within);
inline int chromatic_number(const Graph& g) { return chromatic_number(g, g.vertices()); }

struct PerfectionWitness {
  VertexSet subset;
  int omega = 0;
  int chi = 0;
};

struct PerfectionReport {
  bool perfect = true;
  /// Smallest violating induced subgraph (by size, then lexicographic).
  std::optional<PerfectionWitness> witness;
};

inline constexpr int kDefaultPerfectionLimit = 14;

/// Checks omega == chi on all 2^n induced subgraphs. Throws BudgetExceeded
/// when n exceeds `max_n`.
PerfectionReport is_perfect(const Graph& g, int max_n = kDefaultPerfectionLimit);

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

/// 2-colouring by BFS, lowest vertex of each component on the left.
std::optional<Bipartition> recognize_bipartite(const Graph& g);

/// A graph H with L(H) equal to the input: vertex v of the input is the
/// root edge edge_of[v].
struct LineRoot {
  Graph root;
  std::vector<std::pair<int, int>> edge_of;
};

/// Every root obtainable from a Krausz partition of the edges into cliques
/// (each vertex in at most two cliques), in search order. `limit` caps the
/// number returned.
std::vector<LineRoot> line_graph_roots(const Graph& g, std::size_t limit = 4096);

/// Bipartite root if one exists; among several, fewest root vertices and
/// then the lexicographically least edge map.
std::optional<LineRoot> recognize_line_of_bipartite(const Graph& g);

/// Adjacent pairs (a_i, b_i) and nonadjacent pairs (c_j, d_j).
struct BicographCert {
  std::vector<std::pair<int, int>> ab;
  std::vector<std::pair<int, int>> cd;
};

std::optional<BicographCert> recognize_bicograph(const Graph& g);

enum class BasicClass { Bipartite, ComplementBipartite, LineOfBipartite, ComplementLineOfBipartite, Bicograph };

std::string_view to_string(BasicClass c);

/// For the Complement* classes the payload describes complement(g).
struct BasicCert {
  BasicClass kind = BasicClass::Bipartite;
  std::variant<Bipartition, LineRoot, BicographCert> detail;
};

/// First match in the order Bipartite, ComplementBipartite, LineOfBipartite,
/// ComplementLineOfBipartite, Bicograph.
std::optional<BasicCert> classify_basic(const Graph& g);

// Certificate checkers. They re-derive everything from the graph and share
// no code with the recognisers above.
bool check_bipartition(const Graph& g, const Bipartition& b);
bool check_line_root(const Graph& g, const LineRoot& r, bool require_bipartite);
bool check_bicograph(const Graph& g, const BicographCert& c);
bool check_basic(const Graph& g, const BasicCert& c);
bool check_odd_hole_witness(const Graph& g, const OddHoleWitness& w);

}  // namespace berge
