#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "berge/errors.hpp"
#include "berge/families.hpp"
#include "berge/graph6.hpp"
#include "berge/isomorphism.hpp"
#include "berge/structure.hpp"
#include "oracles.hpp"

using namespace berge;
namespace fam = berge::families;

namespace {

std::vector<Graph> atlas() {
  std::ifstream in(BERGE_TEST_DATA "/atlas_upto7.g6");
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) out.push_back(parse_graph6(line));
  return out;
}

}  // namespace

TEST(Graph, EdgesStaySymmetricAndIrreflexive) {
  Graph g(4);
  g.add_edge(0, 3);
  EXPECT_TRUE(g.adjacent(3, 0));
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  g.remove_edge(3, 0);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(Graph6, TwoVerticesOneEdge) {
  // n=2 -> 'A'; the single bit x(0,1)=1 padded to 100000b = 32 -> '_'
  Graph g = parse_graph6("A_");
  EXPECT_EQ(g.n(), 2);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_EQ(emit_graph6(g), "A_");
}

TEST(Graph6, ReferenceEncodings) {
  // frozen from an independent encoder
  EXPECT_EQ(emit_graph6(Graph(1)), "@");
  EXPECT_EQ(emit_graph6(Graph(0)), "?");
  EXPECT_EQ(emit_graph6(fam::cycle(5)), "Dhc");
  EXPECT_EQ(emit_graph6(fam::petersen()), "IheA@GUAo");
  EXPECT_EQ(parse_graph6(">>graph6<<Dhc\n"), fam::cycle(5));
}

TEST(Graph6, EmptyOneVertexGraph) {
  Graph g = parse_graph6("@");
  EXPECT_EQ(g.n(), 1);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(Graph6, ErrorsNameTheOffset) {
  auto kind_of = [](const char* s, int max_n = kMaxVertices) {
    try {
      parse_graph6(s, max_n);
    } catch (const ParseError& e) {
      return std::make_pair(e.kind(), e.offset());
    }
    return std::make_pair(ParseError::Kind::BadLine, std::size_t{999});
  };
  EXPECT_EQ(kind_of(" "), std::make_pair(ParseError::Kind::BadHeader, std::size_t{0}));
  EXPECT_EQ(kind_of("A`"), std::make_pair(ParseError::Kind::TrailingBits, std::size_t{1}));
  EXPECT_EQ(kind_of("Dh"), std::make_pair(ParseError::Kind::Truncated, std::size_t{2}));
  EXPECT_EQ(kind_of("Dhc?"), std::make_pair(ParseError::Kind::BadByte, std::size_t{3}));
  EXPECT_EQ(kind_of("Dh!"), std::make_pair(ParseError::Kind::BadByte, std::size_t{2}));
  EXPECT_EQ(kind_of("Dhc", 4).first, ParseError::Kind::TooManyVertices);
  // a well-formed 63-vertex graph is refused; a truncated one is malformed
  EXPECT_EQ(kind_of(("~??~" + std::string(326, '?')).c_str()).first, ParseError::Kind::TooManyVertices);
  EXPECT_EQ(kind_of("~??~").first, ParseError::Kind::Truncated);
}

TEST(Graph6, RoundTripOnAtlas) {
  std::ifstream in(BERGE_TEST_DATA "/atlas_upto7.g6");
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(emit_graph6(parse_graph6(line)), line);
    ++count;
  }
  EXPECT_EQ(count, 1252);
}

TEST(Dimacs, ReadsOneBasedEdgeList) {
  std::istringstream in("c five cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  EXPECT_EQ(parse_dimacs(in), fam::cycle(5));
  std::istringstream bad("p edge 3 1\ne 1 4\n");
  EXPECT_THROW(parse_dimacs(bad), ParseError);
  std::istringstream missing("e 1 2\n");
  EXPECT_THROW(parse_dimacs(missing), ParseError);
}

TEST(Complement, Examples) {
  EXPECT_TRUE(is_isomorphic(complement(fam::cycle(5)), fam::cycle(5)).has_value());
  EXPECT_EQ(complement(fam::complete(4)), Graph(4));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    Graph g = oracle::random_graph(9, 0.4, rng);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(Induced, Examples) {
  EXPECT_EQ(induced(fam::cycle(6), VertexSet{2, 3, 4}), fam::path(3));
  EXPECT_EQ(induced(fam::cycle(6), VertexSet{0, 1, 5}), Graph::from_edges(3, {{0, 1}, {0, 2}}));
  const Graph pet = fam::petersen();
  EXPECT_EQ(induced(pet, pet.vertices()), pet);
  EXPECT_EQ(induced(fam::complete(5), VertexSet{0, 2, 4}), fam::complete(3));
}

TEST(Components, Examples) {
  const Graph c4 = fam::cycle(4);
  EXPECT_EQ(components(c4, VertexSet{0, 2}), (std::vector<VertexSet>{VertexSet{0}, VertexSet{2}}));
  EXPECT_EQ(components(fam::petersen(), VertexSet::range(10)).size(), 1U);
  const Graph p4 = fam::path(4);
  EXPECT_EQ(components(p4, VertexSet{0, 1, 3}), (std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{3}}));
  EXPECT_TRUE(components(p4, VertexSet{}).empty());
}

TEST(Anticomponents, Examples) {
  EXPECT_EQ(anticomponents(fam::complete(4), VertexSet::range(4)).size(), 4U);
  EXPECT_EQ(anticomponents(Graph(5), VertexSet::range(5)), (std::vector<VertexSet>{VertexSet::range(5)}));
  EXPECT_EQ(anticomponents(fam::path(4), VertexSet{1, 2}),
            (std::vector<VertexSet>{VertexSet{1}, VertexSet{2}}));
}

TEST(Components, PartitionProperty) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(10, 0.25, rng);
    VertexSet s(static_cast<Mask>(rng()) & g.vertices().bits());
    auto comps = components(g, s);
    VertexSet seen;
    const auto m = oracle::matrix(g);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      EXPECT_FALSE(comps[i].intersects(seen));
      seen |= comps[i];
      EXPECT_TRUE(oracle::connected(m, comps[i].to_vector()));
      if (i > 0) EXPECT_LT(comps[i - 1].min(), comps[i].min());
      for (std::size_t j = i + 1; j < comps.size(); ++j)
        EXPECT_FALSE(oracle::connected(m, (comps[i] | comps[j]).to_vector()));
    }
    EXPECT_EQ(seen, s);
    EXPECT_EQ(anticomponents(g, s), components(complement(g), s));
  }
}

TEST(Holes, Examples) {
  auto c5 = enumerate_holes(fam::cycle(5), 4, Parity::Odd);
  ASSERT_EQ(c5.size(), 1U);
  EXPECT_EQ(c5[0].verts, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(enumerate_holes(fam::complete(4)).empty());
  // brute-force subset oracle gives 12 five-holes and no other odd holes
  EXPECT_EQ(oracle::hole_vertex_sets(fam::petersen(), 5).size() -
                oracle::hole_vertex_sets(fam::petersen(), 6).size(),
            12U);
  auto odd = enumerate_holes(fam::petersen(), 4, Parity::Odd);
  EXPECT_EQ(odd.size(), 12U);
  for (const auto& h : odd) EXPECT_EQ(h.length(), 5);
}

TEST(Holes, MatchSubsetOracleAndAreCanonicalAndSorted) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_graph(9, trial % 2 ? 0.3 : 0.5, rng);
    auto holes = enumerate_holes(g);
    auto sets = oracle::hole_vertex_sets(g, 4);
    ASSERT_EQ(holes.size(), sets.size());
    std::set<std::vector<int>> expect(sets.begin(), sets.end());
    for (std::size_t i = 0; i < holes.size(); ++i) {
      EXPECT_TRUE(is_hole(g, holes[i].verts));
      EXPECT_EQ(canonical_hole(holes[i].verts), holes[i]);
      EXPECT_TRUE(expect.count(holes[i].vertex_set().to_vector()));
      if (i > 0) EXPECT_LT(holes[i - 1], holes[i]);
    }
    // hole/antihole duality
    auto anti = enumerate_antiholes(g);
    for (const auto& h : anti) EXPECT_TRUE(is_antihole(g, h.verts));
    EXPECT_EQ(anti, enumerate_holes(complement(g)));
  }
}

TEST(OddHole, Examples) {
  EXPECT_TRUE(find_odd_hole(fam::cycle(5)).has_value());
  EXPECT_FALSE(find_odd_hole(fam::cycle(6)).has_value());
  EXPECT_TRUE(find_odd_hole(fam::cycle(7)).has_value());
  EXPECT_FALSE(find_odd_hole(Graph(0)).has_value());
  auto h = find_odd_hole(fam::petersen());
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->verts, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(InducedPaths, AcceptedPathsHaveLengthManyEdges) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_graph(9, 0.35, rng);
    int seen = 0;
    for (int s = 0; s < g.n(); ++s)
      for_each_induced_path(g, s, g.vertices(), [&](std::span<const int> p) {
        EXPECT_TRUE(is_induced_path(g, p));
        EXPECT_EQ(induced(g, VertexSet::of(p)).edge_count(), static_cast<int>(p.size()) - 1);
        ++seen;
        return Visit::Descend;
      });
    EXPECT_GE(seen, g.n());
  }
}

TEST(ConnectedSubsets, MatchBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(9, 0.3, rng);
    VertexSet allowed(static_cast<Mask>(rng()) & g.vertices().bits());
    std::set<Mask> got;
    for_each_connected_subset(g, allowed, [&](VertexSet s) {
      EXPECT_TRUE(got.insert(s.bits()).second) << "duplicate";
      return true;
    });
    const auto m = oracle::matrix(g);
    std::set<Mask> expect;
    for (Mask s = 1; s < (Mask{1} << g.n()); ++s)
      if ((s & ~allowed.bits()) == 0 && oracle::connected(m, oracle::members(s))) expect.insert(s);
    EXPECT_EQ(got, expect);
  }
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(is_isomorphic(fam::cycle(5), complement(fam::cycle(5))).has_value());
  const Graph two_triangles = fam::disjoint_union(fam::complete(3), fam::complete(3));
  EXPECT_FALSE(oracle::brute_isomorphism(fam::cycle(6), two_triangles).has_value());
  EXPECT_FALSE(is_isomorphic(fam::cycle(6), two_triangles).has_value());
  EXPECT_FALSE(is_isomorphic(fam::cycle(5), fam::cycle(6)).has_value());
}

TEST(Isomorphism, RandomRelabellingWitnessesAreBijections) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    Graph g = oracle::random_graph(n, 0.45, rng);
    auto perm = oracle::random_permutation(n, rng);
    Graph h = relabel(g, perm);
    auto map = is_isomorphic(g, h);
    ASSERT_TRUE(map.has_value());
    EXPECT_EQ(relabel(g, *map), h);
    EXPECT_EQ(canonical_form(g), canonical_form(h));
  }
}

TEST(Isomorphism, CanonicalFormsSeparateAtlasClasses) {
  auto graphs = atlas();
  std::set<CanonicalForm> forms;
  for (const auto& g : graphs) {
    EXPECT_EQ(canonical_form(g).to_graph().edge_count(), g.edge_count());
    forms.insert(canonical_form(g));
  }
  EXPECT_EQ(forms.size(), graphs.size());
}

TEST(Isomorphism, AgreesWithPermutationOracleOnSmallPairs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(6, 0.5, rng);
    Graph h = oracle::random_graph(6, 0.5, rng);
    EXPECT_EQ(is_isomorphic(g, h).has_value(), oracle::brute_isomorphism(g, h).has_value());
  }
}

TEST(InducedCopy, FindsEmbeddings) {
  auto map = find_induced_copy(fam::petersen(), fam::cycle(5));
  ASSERT_TRUE(map.has_value());
  std::vector<int> hosts = *map;
  for (int i = 0; i < 5; ++i) EXPECT_TRUE(fam::petersen().adjacent(hosts[i], hosts[(i + 1) % 5]));
  EXPECT_FALSE(find_induced_copy(fam::petersen(), fam::cycle(4)).has_value());
  EXPECT_FALSE(find_induced_copy(fam::petersen(), fam::complete(3)).has_value());
  EXPECT_TRUE(find_induced_copy(fam::cycle(7), fam::path(6)).has_value());
  EXPECT_FALSE(find_induced_copy(fam::cycle(7), fam::path(7)).has_value());
}
