#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "l21/badness.hpp"
#include "l21/corpus.hpp"

using namespace l21;

namespace {

// A single major vertex fed the given weights, for checking the conditions
// in isolation: build the assignment by hand on a K_{1,3}.
std::vector<BadnessCertificate> certify(std::vector<int> ws) {
  ChainGraph g = decompose(fixtures::star3());
  WeightAssignment wa = assign_weights(g);
  for (std::size_t i = 0; i < 3; ++i) wa.received[0][i].weight = Weight(ws[i]);
  return find_bad_vertices(g, wa);
}

}  // namespace

TEST(FindBadVertices, CommonDivisor) {
  auto c = certify({6, 10, 2});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].condition, BadCondition::common_divisor);
  EXPECT_EQ(c[0].gcd, 2);
}

TEST(FindBadVertices, DuplicateHeavy) {
  auto c = certify({1, 15, 15});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].condition, BadCondition::duplicate_heavy_weight);
  EXPECT_EQ(c[0].repeated, Weight(15));
}

TEST(FindBadVertices, CoprimeIsClean) { EXPECT_TRUE(certify({1, 2, 3}).empty()); }

TEST(FindBadVertices, ZeroWeightSkipsCommonDivisor) { EXPECT_TRUE(certify({0, 2, 2}).empty()); }

// Vertex 0 receives {2,6,2}; both of its 3-chains leave it with type (2,3).
TEST(FindBadVertices, Type23Chain) {
  // u=0; 0-1-2-3-4 closed 3-chain to handle 4 (leaves 5,6): gives 2 to 0.
  // 0-7 with 7 a 3-handle (leaves 8,9): gives 6 to 0.
  // 0-10-11-12-13 with 13 a 3-handle (leaves 14,15).
  Tree t(16, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {0, 7}, {7, 8}, {7, 9},
              {0, 10}, {10, 11}, {11, 12}, {12, 13}, {13, 14}, {13, 15}});
  ChainGraph g = decompose(t);
  auto wa = assign_weights(g);
  auto certs = find_bad_vertices(g, wa);
  bool found = false;
  for (const auto& c : certs)
    if (c.vertex == 0 && c.condition == BadCondition::type_2_3_chain) {
      found = true;
      const Chain& ch = g.chains()[*c.chain];
      EXPECT_EQ(ch.length(), 3);
      EXPECT_TRUE(ch.u == 13 || ch.v == 13 || ch.u == 4 || ch.v == 4);
    }
  EXPECT_TRUE(found);
  EXPECT_TRUE(std::is_sorted(certs.begin(), certs.end(),
                             [](auto& a, auto& b) { return a.vertex < b.vertex; }));
}

TEST(ForbiddenConfigs, Pattern333) {
  auto f = detect_forbidden_configs(fixtures::t333());
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].tag, "<333>");
  EXPECT_EQ(f[0].center, 0);
}

TEST(ForbiddenConfigs, Pattern32323) {
  auto f = detect_forbidden_configs(fixtures::t32323());
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].tag, "<32323>");
  EXPECT_EQ(f[0].center, 0);
}

TEST(ForbiddenConfigs, PathHasNone) {
  EXPECT_TRUE(detect_forbidden_configs(fixtures::path(9)).empty());
}

TEST(DecideLambda, StarShortcut) {
  Verdict v = decide_lambda(fixtures::star3());
  EXPECT_EQ(v.lambda, 4);
  EXPECT_TRUE(v.few_majors);
}

TEST(DecideLambda, Tree333) {
  Verdict v = decide_lambda(fixtures::t333());
  EXPECT_EQ(v.lambda, 5);
  ASSERT_FALSE(v.certificates.empty());
  bool dup6 = false;
  for (auto& c : v.certificates)
    dup6 |= c.condition == BadCondition::duplicate_heavy_weight && c.repeated == Weight(6);
  EXPECT_TRUE(dup6);
}

TEST(DecideLambda, Tree32323) {
  Verdict v = decide_lambda(fixtures::t32323());
  EXPECT_EQ(v.lambda, 5);
  ASSERT_FALSE(v.certificates.empty());
  EXPECT_EQ(v.certificates[0].vertex, 0);
  EXPECT_EQ(v.certificates[0].repeated, Weight(15));
}

TEST(DecideLambda, G3IsGood) {
  Verdict v = decide_lambda(fixtures::g3());
  EXPECT_EQ(v.lambda, 4);
  EXPECT_FALSE(v.few_majors);
  EXPECT_TRUE(v.certificates.empty());
}

TEST(DecideLambda, NeedsDegreeThree) {
  EXPECT_THROW(decide_lambda(fixtures::path(4)), DegreeError);
}

// Every forbidden pattern yields a certificate; no certificate names a vertex
// with two open chains; certificates are consistent with the weights; all-positive
// bad vertices show one of the known weight shapes.
TEST(BadnessProperties, Corpus) {
  for (int n = 4; n <= 13; ++n)
    for (const Tree& t : enumerate_trees(n, 3)) {
      if (t.max_degree() != 3 || t.vertices_of_degree(3).size() < 3) continue;
      ChainGraph g = decompose(t);
      auto wa = assign_weights(g);
      auto certs = find_bad_vertices(g, wa);
      if (!detect_forbidden_configs(t).empty()) EXPECT_FALSE(certs.empty());
      for (const auto& c : certs) {
        int open = 0;
        for (const auto& e : g.ends(c.vertex)) open += e.is_open();
        EXPECT_LE(open, 1);
        EXPECT_EQ(c.weights, wa.weights_at(c.vertex));
        if (c.condition == BadCondition::common_divisor) {
          int d = std::gcd(std::gcd(c.weights[0].value(), c.weights[1].value()),
                           c.weights[2].value());
          EXPECT_EQ(d, c.gcd);
        }
      }
      for (Vertex u : g.majors()) {
        bool bad = std::any_of(certs.begin(), certs.end(), [&](auto& c) { return c.vertex == u; });
        auto ws = wa.weights_at(u);
        if (!bad || !std::all_of(ws.begin(), ws.end(), [](Weight w) { return w.positive(); }))
          continue;
        // For each closed chain [uv] at u with a = weight along it, b, c the others.
        const auto& ends = g.ends(u);
        for (std::size_t i = 0; i < 3; ++i) {
          if (!ends[i].is_closed()) continue;
          int a = ws[i].value(), b = ws[(i + 1) % 3].value(), cc = ws[(i + 2) % 3].value();
          auto heavy = [](int x) { return x == 6 || x == 10 || x == 15; };
          auto prime = [](int x) { return x == 2 || x == 3 || x == 5; };
          int g3 = std::gcd(std::gcd(a, b), cc);
          bool s1 = b == cc && heavy(b);
          bool s2 = heavy(a) && (((a == b || a == cc) && std::gcd(b, cc) == 1) || prime(g3));
          bool s3 = prime(a) && std::gcd(b, cc) % a == 0;
          EXPECT_TRUE(s1 || s2 || s3) << serialize_tree(t) << " at " << u;
        }
      }
    }
}
