#include <bit>

#include "berge/errors.hpp"
#include "berge/structure.hpp"
#include "berge/structures.hpp"

namespace berge {

std::optional<std::array<int, 6>> k4_branch_lengths(const Graph& h) {
  std::vector<int> branch;
  for (int v = 0; v < h.n(); ++v) {
    const int d = h.degree(v);
    if (d == 3)
      branch.push_back(v);
    else if (d != 2)
      return std::nullopt;
  }
  if (branch.size() != 4) return std::nullopt;
  auto index_of = [&](int v) {
    for (std::size_t i = 0; i < 4; ++i)
      if (branch[i] == v) return static_cast<int>(i);
    return -1;
  };
  // pair (i,j), i<j, to position in the fixed K4 edge order
  constexpr int kSlot[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  std::array<int, 6> lengths{};
  int interior = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (int first : h.neighbours(branch[i])) {
      int prev = branch[i];
      int cur = first;
      int len = 1;
      while (index_of(cur) < 0) {
        const VertexSet next = h.neighbours(cur) - VertexSet{prev};
        prev = cur;
        cur = next.min();
        ++len;
      }
      const int j = index_of(cur);
      if (j == static_cast<int>(i)) return std::nullopt;
      if (j < static_cast<int>(i)) continue;
      auto& slot = lengths[static_cast<std::size_t>(kSlot[i][static_cast<std::size_t>(j)])];
      if (slot != 0) return std::nullopt;  // parallel branches
      slot = len;
      interior += len - 1;
    }
  for (int len : lengths)
    if (len == 0) return std::nullopt;
  // a stray cycle of degree-2 vertices would leave vertices unaccounted for
  if (interior + 4 != h.n()) return std::nullopt;
  return lengths;
}

bool degenerate_branches(const std::array<int, 6>& l) {
  // the three 4-cycles of K4, each missing one perfect matching
  constexpr std::array<std::array<int, 4>, 3> kCycles{{{1, 2, 3, 4}, {0, 2, 3, 5}, {0, 1, 4, 5}}};
  for (const auto& c : kCycles) {
    bool all_short = true;
    for (int e : c) all_short = all_short && l[static_cast<std::size_t>(e)] == 1;
    if (all_short) return true;
  }
  return false;
}

bool for_each_appearance_k4(const Graph& g, const std::function<bool(const AppearanceK4&)>& visit,
                            std::size_t budget) {
  std::size_t spent = 0;
  return for_each_connected_subset(g, g.vertices(), [&](VertexSet s) {
    if (++spent > budget) throw BudgetExceeded("appearance search exceeded its subset budget");
    const int size = s.size();
    if (size < 8) return true;
    int twice_edges = 0;
    for (int v : s) {
      const int d = std::popcount(g.row(v) & s.bits());
      if (d > 4) return true;
      twice_edges += d;
    }
    if (twice_edges != 2 * (size + 6)) return true;
    const Graph h = induced(g, s);
    auto root = recognize_line_of_bipartite(h);
    if (!root) return true;
    auto lengths = k4_branch_lengths(root->root);
    if (!lengths) return true;
    AppearanceK4 a{s, std::move(*root), *lengths, degenerate_branches(*lengths)};
    return visit(a);
  });
}

std::vector<AppearanceK4> find_appearances_k4(const Graph& g, std::size_t budget) {
  std::vector<AppearanceK4> out;
  for_each_appearance_k4(
      g,
      [&](const AppearanceK4& a) {
        out.push_back(a);
        return true;
      },
      budget);
  return out;
}

bool check_appearance_k4(const Graph& g, const AppearanceK4& a) {
  if (!a.vertices.subset_of(g.vertices())) return false;
  if (!check_line_root(induced(g, a.vertices), a.root, true)) return false;
  auto lengths = k4_branch_lengths(a.root.root);
  return lengths && *lengths == a.branch_lengths && degenerate_branches(*lengths) == a.degenerate;
}

}  // namespace berge
