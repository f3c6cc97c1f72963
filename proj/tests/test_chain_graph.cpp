#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "l21/chain_graph.hpp"
#include "l21/corpus.hpp"

using namespace l21;

TEST(Decompose, TwoHandles) {
  ChainGraph g = decompose(fixtures::two_handles());
  EXPECT_EQ(g.open_count(), 4u);
  EXPECT_EQ(g.closed_count(), 1u);
  EXPECT_EQ(g.arcs().size(), 6u);
  for (const auto& c : g.chains()) {
    if (c.kind == ChainKind::closed) EXPECT_EQ(c.length(), 2);
    if (c.kind == ChainKind::open) EXPECT_EQ(c.length(), 0);
  }
}

TEST(Decompose, Star) {
  ChainGraph g = decompose(fixtures::star3());
  EXPECT_EQ(g.open_count(), 3u);
  EXPECT_EQ(g.arcs().size(), 3u);
}

TEST(Decompose, PathIsOneDegenerateChain) {
  ChainGraph g = decompose(fixtures::path(5));
  ASSERT_EQ(g.chains().size(), 1u);
  EXPECT_EQ(g.chains()[0].kind, ChainKind::degenerate);
  EXPECT_EQ(g.chains()[0].length(), 3);
  EXPECT_TRUE(g.arcs().empty());
}

TEST(Decompose, RejectsDegreeFour) {
  Tree t(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_THROW(decompose(t), DegreeError);
}

TEST(Decompose, OpenChainsStartAtTheLeaf) {
  Tree t(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
  ChainGraph g = decompose(t);
  for (const auto& c : g.chains()) {
    ASSERT_EQ(c.kind, ChainKind::open);
    EXPECT_TRUE(t.is_leaf(c.u));
    EXPECT_EQ(c.v, 0);
  }
}

// Expanding every chain back into edges gives the input edge set; every edge
// is covered once; majors receive 3 arcs and leaves none.
TEST(DecomposeProperties, RandomTrees) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Tree t = random_tree(1 + static_cast<int>(seed % 30), 3, seed);
    ChainGraph g = decompose(t);
    std::multiset<Edge> edges;
    std::size_t open = 0, closed = 0;
    for (const auto& c : g.chains()) {
      std::vector<Vertex> walk{c.u};
      walk.insert(walk.end(), c.internal.begin(), c.internal.end());
      walk.push_back(c.v);
      for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        edges.insert({std::min(walk[i], walk[i + 1]), std::max(walk[i], walk[i + 1])});
      EXPECT_NE(t.degree(c.u), 2);
      EXPECT_NE(t.degree(c.v), 2);
      for (Vertex x : c.internal) EXPECT_EQ(t.degree(x), 2);
      EXPECT_EQ(c.length() == 0, t.has_edge(c.u, c.v));
      open += c.kind == ChainKind::open;
      closed += c.kind == ChainKind::closed;
      if (c.kind == ChainKind::closed) {
        EXPECT_EQ(t.degree(c.u), 3);
        EXPECT_EQ(t.degree(c.v), 3);
      }
    }
    if (t.size() > 1) {
      auto want = t.edges();
      EXPECT_EQ(edges, std::multiset<Edge>(want.begin(), want.end()));
    }
    EXPECT_EQ(g.arcs().size(), open + 2 * closed);
    std::vector<int> in(t.size(), 0);
    for (const auto& a : g.arcs()) ++in[a.head];
    for (Vertex v = 0; v < t.size(); ++v) {
      if (t.degree(v) == 3) {
        EXPECT_EQ(in[v], 3);
        EXPECT_EQ(g.ends(v).size(), 3u);
      }
      if (t.degree(v) == 1) EXPECT_EQ(in[v], 0);
    }
    for (const auto& c : g.chains())
      if (c.kind == ChainKind::closed) {
        int ci = static_cast<int>(&c - g.chains().data());
        int a = g.arc_between(ci, c.u), b = g.arc_between(ci, c.v);
        ASSERT_GE(a, 0);
        ASSERT_GE(b, 0);
        EXPECT_EQ(g.arcs()[a].head, g.arcs()[b].tail);
        EXPECT_EQ(g.arcs()[b].head, g.arcs()[a].tail);
      }
  }
}

TEST(StrongSubtree, StarCentrePlusTwoLeavesRejected) {
  auto r = extract_strong_subtree(fixtures::star3(), {0, 1, 2});
  ASSERT_TRUE(std::holds_alternative<StrongRejection>(r));
  EXPECT_EQ(std::get<StrongRejection>(r).vertex, 0);
}

TEST(StrongSubtree, SubpathsOfP5Accepted) {
  Tree p = fixtures::path(5);
  for (int a = 0; a < 5; ++a)
    for (int b = a; b < 5; ++b) {
      std::vector<Vertex> keep;
      for (int i = a; i <= b; ++i) keep.push_back(i);
      EXPECT_TRUE(std::holds_alternative<Subtree>(extract_strong_subtree(p, keep)));
    }
}

TEST(StrongSubtree, G3MinusHandleLeafRejected) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < 9; ++v)
    if (v != 3) keep.push_back(v);
  auto r = extract_strong_subtree(fixtures::g3(), keep);
  ASSERT_TRUE(std::holds_alternative<StrongRejection>(r));
  EXPECT_EQ(std::get<StrongRejection>(r).vertex, 2);
}

TEST(StrongSubtree, DisconnectedThrows) {
  EXPECT_THROW(extract_strong_subtree(fixtures::path(5), {0, 2}), TreeError);
}

TEST(RandomStrongSubtree, Deterministic) {
  Tree t = random_tree(25, 3, 3);
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto a = random_strong_subtree(t, s), b = random_strong_subtree(t, s);
    EXPECT_EQ(a.tree, b.tree);
    EXPECT_EQ(a.origin, b.origin);
  }
}

TEST(RandomStrongSubtree, OutputIsStrong) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    Tree t = random_tree(5 + static_cast<int>(s % 25), 3, s);
    Subtree sub = random_strong_subtree(t, s * 31 + 1);
    EXPECT_TRUE(std::holds_alternative<Subtree>(extract_strong_subtree(t, sub.origin)));
  }
}

// Strong subtrees of K_{1,3} found by brute force over all vertex subsets.
TEST(RandomStrongSubtree, StarOutputsAreExactlyTheStrongSubtrees) {
  Tree star = fixtures::star3();
  std::set<std::string> strong;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < 4; ++v)
      if (mask >> v & 1u) keep.push_back(v);
    if (!is_connected_set(star, keep)) continue;
    auto r = extract_strong_subtree(star, keep);
    if (auto* s = std::get_if<Subtree>(&r)) strong.insert(canonical_code(s->tree));
  }
  EXPECT_EQ(strong, (std::set<std::string>{canonical_code(star), canonical_code(Tree()),
                                           canonical_code(Tree(2, {{0, 1}}))}));
  std::set<std::string> seen;
  for (std::uint64_t s = 0; s < 400; ++s)
    seen.insert(canonical_code(random_strong_subtree(star, s).tree));
  EXPECT_EQ(seen, strong);
}
