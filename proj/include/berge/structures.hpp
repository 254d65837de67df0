#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "berge/graph.hpp"
#include "berge/recognizers.hpp"

namespace berge {

// --- prisms -----------------------------------------------------------------

enum class PrismParity { Even, Odd, Mixed };
std::string_view to_string(PrismParity p);

/// Triangles {a1,a2,a3} and {b1,b2,b3} joined by induced paths P_i from a_i
/// to b_i. Canonical form: a sorted, the a-triangle holds the smaller of the
/// two minima, paths[i] starts at a[i].
struct Prism {
  std::array<int, 3> a{};
  std::array<int, 3> b{};
  std::array<InducedPath, 3> paths;
  PrismParity parity = PrismParity::Odd;
  bool is_long = false;

  VertexSet vertex_set() const;
};

/// Every induced prism of g exactly once, ordered by (a-triangle,
/// b-triangle, matching, paths). The visitor returns false to stop.
bool for_each_prism(const Graph& g, const std::function<bool(const Prism&)>& visit);
std::vector<Prism> find_prisms(const Graph& g);

bool check_prism(const Graph& g, const Prism& p);

// --- fixed small graphs -----------------------------------------------------

enum class FixedGraph { DoubleDiamond, LK33, LK33MinusEdge };

std::string_view to_string(FixedGraph f);
/// Accepts "double_diamond", "L_K33", "L_K33_minus_e".
std::optional<FixedGraph> fixed_graph_from_name(std::string_view name);
Graph fixed_graph(FixedGraph f);

/// Vertex set of some induced copy of the named graph.
std::optional<VertexSet> contains_fixed(const Graph& g, FixedGraph f);
/// Throws std::invalid_argument for an unknown name.
std::optional<VertexSet> contains_fixed(const Graph& g, std::string_view name);

// --- wheels -----------------------------------------------------------------

/// Rim of length >= 6 with an anticonnected hub that is complete to two
/// disjoint rim edges. Segments are the maximal runs of hub-complete rim
/// vertices, each listed along the rim. When the whole rim is hub-complete
/// the single segment is the rim read from rim[0], of length |rim| - 1.
struct Wheel {
  Hole rim;
  VertexSet hub;
  std::vector<std::vector<int>> segments;
  bool odd = false;
};

/// Ordered by rim, then by hub bitmask. The visitor returns false to stop.
bool for_each_wheel(const Graph& g, const std::function<bool(const Wheel&)>& visit);
std::vector<Wheel> find_wheels(const Graph& g);
bool has_wheel(const Graph& g);
bool has_odd_wheel(const Graph& g);

/// Builds the wheel record for (rim, hub) if it is one.
std::optional<Wheel> make_wheel(const Graph& g, const Hole& rim, VertexSet hub);

// --- appearances of K4 ------------------------------------------------------

/// Branch lengths of a subdivision of K4 in the edge order
/// (0,1),(0,2),(0,3),(1,2),(1,3),(2,3) of its branch vertices sorted
/// ascending; empty if `h` is not a subdivision of K4.
std::optional<std::array<int, 6>> k4_branch_lengths(const Graph& h);

/// True iff some 4-cycle of K4 has all four branches of length 1.
bool degenerate_branches(const std::array<int, 6>& lengths);

struct AppearanceK4 {
  VertexSet vertices;
  /// Root H with vertex i of g|vertices (ascending relabelling) equal to edge_of[i].
  LineRoot root;
  std::array<int, 6> branch_lengths{};
  bool degenerate = false;
};

inline constexpr std::size_t kDefaultAppearanceBudget = std::size_t{1} << 22;

/// Connected vertex sets S with g|S = L(H) for a bipartite subdivision H of
/// K4, in connected-subset enumeration order. Throws BudgetExceeded after
/// `budget` candidate subsets.
bool for_each_appearance_k4(const Graph& g, const std::function<bool(const AppearanceK4&)>& visit,
                            std::size_t budget = kDefaultAppearanceBudget);
std::vector<AppearanceK4> find_appearances_k4(const Graph& g, std::size_t budget = kDefaultAppearanceBudget);

bool check_appearance_k4(const Graph& g, const AppearanceK4& a);

// --- pseudowheels -----------------------------------------------------------

/// X, Y disjoint, nonempty, anticonnected, complete to each other; P an
/// induced path of g minus X and Y on >= 5 vertices whose only X-complete
/// vertices are its ends; p1 and some other vertex are Y-complete, p2 and
/// pn are not.
struct Pseudowheel {
  VertexSet x;
  VertexSet y;
  InducedPath path;
};

inline constexpr std::size_t kDefaultPseudowheelBudget = std::size_t{1} << 24;

/// First pseudowheel found, if any. Throws BudgetExceeded once `budget`
/// search steps are spent.
std::optional<Pseudowheel> find_pseudowheel(const Graph& g, std::size_t budget = kDefaultPseudowheelBudget);
bool check_pseudowheel(const Graph& g, const Pseudowheel& w);

// --- the class ladder -------------------------------------------------------

/// Some vertex outside a hole of length >= 6 sees three consecutive rim vertices.
bool has_three_consecutive_neighbours(const Graph& g);

struct FLadderOptions {
  /// Unset: run the pseudowheel search only for n <= 10.
  std::optional<bool> check_f8;
  std::size_t f8_budget = kDefaultPseudowheelBudget;
  std::size_t appearance_budget = kDefaultAppearanceBudget;
  /// Classes F_k with k > stop_after are left unset.
  int stop_after = 11;
};

struct FLadderReport {
  /// member[k-1] is membership in F_k; unset where it depends on an
  /// unchecked pseudowheel condition.
  std::array<std::optional<bool>, 11> member;
  bool f8_skipped = false;
  std::string f8_reason;  // "disabled" or "budget" when skipped
};

/// Throws NotBerge for non-Berge input.
FLadderReport f_ladder(const Graph& g, const FLadderOptions& options = {});

}  // namespace berge
