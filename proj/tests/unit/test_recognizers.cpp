#include <gtest/gtest.h>

#include <fstream>

#include "berge/errors.hpp"
#include "berge/families.hpp"
#include "berge/graph6.hpp"
#include "berge/isomorphism.hpp"
#include "berge/recognizers.hpp"
#include "oracles.hpp"

using namespace berge;
namespace fam = berge::families;

namespace {

int brute_clique(const Graph& g) {
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << g.n()); ++s)
    if (g.is_clique(VertexSet(s))) best = std::max(best, std::popcount(s));
  return best;
}

// chi by dynamic programming over subsets: peel off one stable set at a time.
int dp_chromatic(const Graph& g) {
  const Mask full = g.vertices().bits();
  std::vector<int> chi(std::size_t{1} << g.n(), 1000);
  chi[0] = 0;
  for (Mask s = 1; s <= full; ++s) {
    const Mask low = s & -s;
    const Mask rest = s & ~low;
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask part = sub | low;
      if (g.is_stable(VertexSet(part))) chi[s] = std::min(chi[s], chi[s & ~part] + 1);
      if (sub == 0) break;
    }
  }
  return chi[full];
}

std::vector<Graph> atlas_of_size(int n) {
  std::ifstream in(BERGE_TEST_DATA "/atlas_upto7.g6");
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    Graph g = parse_graph6(line);
    if (g.n() == n) out.push_back(g);
  }
  return out;
}

// Bicograph with m = n = 2 and cross edges a_i c_j, b_i d_j.
Graph small_bicograph() {
  // a1 b1 a2 b2 c1 d1 c2 d2
  Graph g(8);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  for (int c : {4, 5})
    for (int d : {6, 7}) g.add_edge(c, d);
  for (int a : {0, 2}) {
    g.add_edge(a, 4);
    g.add_edge(a, 6);
    g.add_edge(a + 1, 5);
    g.add_edge(a + 1, 7);
  }
  return g;
}

}  // namespace

TEST(Berge, Examples) {
  auto c5 = is_berge(fam::cycle(5));
  EXPECT_FALSE(c5.berge);
  ASSERT_TRUE(c5.witness);
  EXPECT_EQ(c5.witness->side, Side::Graph);
  EXPECT_EQ(c5.witness->hole.verts, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(is_berge(fam::cycle(6)).berge);
  auto anti = is_berge(complement(fam::cycle(7)));
  EXPECT_FALSE(anti.berge);
  ASSERT_TRUE(anti.witness);
  EXPECT_EQ(anti.witness->side, Side::Complement);
  EXPECT_TRUE(check_odd_hole_witness(complement(fam::cycle(7)), *anti.witness));
  EXPECT_TRUE(is_berge(Graph(0)).berge);
}

TEST(Berge, SelfComplementaryDefinition) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Graph g = oracle::random_graph(8, 0.5, rng);
    auto r = is_berge(g);
    EXPECT_EQ(r.berge, is_berge(complement(g)).berge);
    if (!r.berge) EXPECT_TRUE(check_odd_hole_witness(g, *r.witness));
  }
}

TEST(Colouring, Examples) {
  EXPECT_EQ(clique_number(fam::cycle(5)), 2);
  EXPECT_EQ(chromatic_number(fam::cycle(5)), 3);
  EXPECT_EQ(clique_number(fam::complete(6)), 6);
  EXPECT_EQ(chromatic_number(fam::complete(6)), 6);
  EXPECT_EQ(clique_number(fam::petersen()), 2);
  EXPECT_EQ(chromatic_number(fam::petersen()), 3);
  EXPECT_EQ(dp_chromatic(fam::petersen()), 3);
  EXPECT_EQ(chromatic_number(Graph(0)), 0);
  EXPECT_EQ(clique_number(Graph(3)), 1);
}

TEST(Colouring, MatchesOraclesAndDuality) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    Graph g = oracle::random_graph(4 + i % 8, 0.2 + 0.1 * (i % 7), rng);
    const int omega = clique_number(g);
    const int chi = chromatic_number(g);
    EXPECT_EQ(omega, brute_clique(g));
    EXPECT_EQ(chi, dp_chromatic(g));
    EXPECT_GE(chi, omega);
    // omega(g) = alpha(complement g)
    int alpha = 0;
    const Graph co = complement(g);
    for (Mask s = 0; s < (Mask{1} << co.n()); ++s)
      if (co.is_stable(VertexSet(s))) alpha = std::max(alpha, std::popcount(s));
    EXPECT_EQ(omega, alpha);
  }
}

TEST(Perfection, Examples) {
  auto c5 = is_perfect(fam::cycle(5));
  EXPECT_FALSE(c5.perfect);
  ASSERT_TRUE(c5.witness);
  EXPECT_EQ(c5.witness->subset, VertexSet::range(5));
  EXPECT_EQ(c5.witness->omega, 2);
  EXPECT_EQ(c5.witness->chi, 3);
  EXPECT_THROW(is_perfect(Graph(20)), BudgetExceeded);
}

TEST(Perfection, BipartiteGraphsArePerfect) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    Graph g(9);
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < 4; ++u)
      for (int v = 4; v < 9; ++v)
        if (coin(rng)) g.add_edge(u, v);
    EXPECT_TRUE(is_perfect(g).perfect);
  }
}

TEST(Perfection, FiveVertexCensus) {
  // 34 classes on five vertices; only C5 is imperfect
  auto graphs = atlas_of_size(5);
  ASSERT_EQ(graphs.size(), 34U);
  int perfect = 0;
  for (const auto& g : graphs) {
    auto r = is_perfect(g);
    perfect += r.perfect;
    if (!r.perfect) EXPECT_TRUE(is_isomorphic(g, fam::cycle(5)).has_value());
  }
  EXPECT_EQ(perfect, 33);
}

TEST(Perfection, WitnessIsMinimalAndRecomputable) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 60; ++i) {
    Graph g = oracle::random_graph(8, 0.5, rng);
    auto r = is_perfect(g);
    if (r.perfect) continue;
    const Graph h = induced(g, r.witness->subset);
    EXPECT_EQ(brute_clique(h), r.witness->omega);
    EXPECT_EQ(dp_chromatic(h), r.witness->chi);
    EXPECT_NE(r.witness->omega, r.witness->chi);
    // every proper induced subgraph of a minimal witness is fine
    for (int v : r.witness->subset) {
      const Graph smaller = induced(g, r.witness->subset - VertexSet{v});
      EXPECT_EQ(brute_clique(smaller), dp_chromatic(smaller));
    }
  }
}

TEST(Bipartite, Examples) {
  auto c6 = recognize_bipartite(fam::cycle(6));
  ASSERT_TRUE(c6);
  EXPECT_TRUE(check_bipartition(fam::cycle(6), *c6));
  EXPECT_FALSE(recognize_bipartite(fam::cycle(5)));
  auto empty = recognize_bipartite(Graph(4));
  ASSERT_TRUE(empty);
  EXPECT_TRUE(empty->right.empty());
}

TEST(LineGraph, Examples) {
  auto k3 = recognize_line_of_bipartite(fam::complete(3));
  ASSERT_TRUE(k3);
  EXPECT_TRUE(is_isomorphic(k3->root, fam::complete_bipartite(1, 3)).has_value());
  EXPECT_TRUE(check_line_root(fam::complete(3), *k3, true));
  // both roots of the triangle are found by the Krausz search
  EXPECT_EQ(line_graph_roots(fam::complete(3)).size(), 2U);

  auto c6 = recognize_line_of_bipartite(fam::cycle(6));
  ASSERT_TRUE(c6);
  EXPECT_TRUE(is_isomorphic(c6->root, fam::cycle(6)).has_value());
  EXPECT_FALSE(recognize_line_of_bipartite(fam::cycle(5)));
  EXPECT_FALSE(line_graph_roots(fam::cycle(5)).empty());
  // the claw is not a line graph at all
  EXPECT_TRUE(line_graph_roots(fam::complete_bipartite(1, 3)).empty());
}

TEST(LineGraph, RoundTripOnRandomBipartiteRoots) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 200; ++i) {
    Graph h(7);
    std::bernoulli_distribution coin(0.45);
    int edges = 0;
    for (int u = 0; u < 3; ++u)
      for (int v = 3; v < 7 && edges < 8; ++v)
        if (coin(rng)) {
          h.add_edge(u, v);
          ++edges;
        }
    auto line = fam::line_graph(h);
    auto root = recognize_line_of_bipartite(line.graph);
    ASSERT_TRUE(root) << "edges " << edges;
    EXPECT_TRUE(check_line_root(line.graph, *root, true));
    EXPECT_TRUE(is_isomorphic(fam::line_graph(root->root).graph, line.graph).has_value());
  }
}

TEST(Bicograph, Examples) {
  const Graph g = small_bicograph();
  auto cert = recognize_bicograph(g);
  ASSERT_TRUE(cert);
  EXPECT_TRUE(check_bicograph(g, *cert));
  auto co = recognize_bicograph(complement(g));
  ASSERT_TRUE(co);
  EXPECT_TRUE(check_bicograph(complement(g), *co));
  EXPECT_FALSE(recognize_bicograph(fam::cycle(4)));
  EXPECT_FALSE(recognize_bicograph(fam::cycle(8)));
  // relabelling does not matter
  std::mt19937_64 rng(16);
  for (int i = 0; i < 20; ++i) {
    auto p = oracle::random_permutation(8, rng);
    EXPECT_TRUE(recognize_bicograph(relabel(g, p)));
  }
}

TEST(ClassifyBasic, Examples) {
  auto c6 = classify_basic(fam::cycle(6));
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->kind, BasicClass::Bipartite);

  const Graph lk33 = fam::line_k33();
  auto l = classify_basic(lk33);
  ASSERT_TRUE(l);
  EXPECT_EQ(l->kind, BasicClass::LineOfBipartite);
  EXPECT_TRUE(is_isomorphic(std::get<LineRoot>(l->detail).root, fam::complete_bipartite(3, 3)).has_value());
  EXPECT_TRUE(check_basic(lk33, *l));

  // C5 fails all five recognisers individually
  const Graph c5 = fam::cycle(5);
  EXPECT_FALSE(recognize_bipartite(c5));
  EXPECT_FALSE(recognize_bipartite(complement(c5)));
  EXPECT_FALSE(recognize_line_of_bipartite(c5));
  EXPECT_FALSE(recognize_line_of_bipartite(complement(c5)));
  EXPECT_FALSE(recognize_bicograph(c5));
  EXPECT_FALSE(classify_basic(c5));

  auto bico = classify_basic(small_bicograph());
  ASSERT_TRUE(bico);
  EXPECT_TRUE(check_basic(small_bicograph(), *bico));
}

TEST(ClassifyBasic, BasicGraphsArePerfectOnSevenVertexCensus) {
  int basic = 0;
  for (const auto& g : atlas_of_size(7)) {
    auto c = classify_basic(g);
    if (!c) continue;
    ++basic;
    EXPECT_TRUE(check_basic(g, *c));
    EXPECT_TRUE(is_perfect(g).perfect);
  }
  EXPECT_GT(basic, 100);
}
