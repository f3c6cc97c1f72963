#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "l21/corpus.hpp"
#include "l21/labeling.hpp"
#include "l21/oracle.hpp"

using namespace l21;

TEST(Verify, P3) {
  Tree p = fixtures::path(3);
  EXPECT_TRUE(verify_labeling(p, {4, {0, 2, 4}}).ok());
  auto bad = verify_labeling(p, {4, {0, 2, 2}});
  ASSERT_FALSE(bad.ok());
  EXPECT_EQ(bad.violation->kind, ViolationKind::adjacent);
  auto d2 = verify_labeling(p, {4, {0, 3, 0}});
  ASSERT_FALSE(d2.ok());
  EXPECT_EQ(d2.violation->kind, ViolationKind::distance_two);
  EXPECT_EQ(d2.violation->a, 0);
  EXPECT_EQ(d2.violation->b, 2);
}

TEST(Verify, Star) {
  Tree s = fixtures::star3();
  EXPECT_TRUE(verify_labeling(s, {4, {0, 2, 3, 4}}).ok());
  auto bad = verify_labeling(s, {4, {0, 2, 3, 3}});
  ASSERT_FALSE(bad.ok());
  EXPECT_EQ(bad.violation->kind, ViolationKind::distance_two);
}

TEST(Verify, RangeAndUnlabelled) {
  Tree p = fixtures::path(2);
  EXPECT_EQ(verify_labeling(p, {2, {0, 3}}).violation->kind, ViolationKind::out_of_range);
  EXPECT_THROW(verify_labeling(p, {2, {0, -1}}), LabelingError);
  EXPECT_THROW(verify_labeling(p, {2, {0}}), LabelingError);
}

TEST(Symmetric, MirrorsAndInvolutes) {
  Labeling f{4, {0, 2, 4}};
  EXPECT_EQ(symmetric_labeling(f).labels, (std::vector<int>{4, 2, 0}));
  EXPECT_EQ(symmetric_labeling(symmetric_labeling(f)), f);
  EXPECT_THROW(symmetric_labeling(Labeling{5, {0}}), LabelingError);
}

TEST(Symmetric, PreservesValidity) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Tree t = random_tree(3 + static_cast<int>(seed % 20), 3, seed);
    auto f = label_with_span(t, 4);
    if (!f) continue;
    EXPECT_TRUE(verify_labeling(t, symmetric_labeling(*f)).ok());
  }
}

TEST(LabelWithSpan, P2) {
  auto f = label_with_span(fixtures::path(2), 2);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->labels, (std::vector<int>{0, 2}));
}

TEST(LabelWithSpan, Tree333) {
  EXPECT_FALSE(label_with_span(fixtures::t333(), 4));
  auto f = label_with_span(fixtures::t333(), 5);
  ASSERT_TRUE(f);
  EXPECT_TRUE(verify_labeling(fixtures::t333(), *f).ok());
}

TEST(LabelWithSpan, Deterministic) {
  Tree t = random_tree(40, 3, 11);
  EXPECT_EQ(label_with_span(t, 5), label_with_span(t, 5));
}

TEST(LabelWithSpan, RespectsMasks) {
  Tree s = fixtures::star3();
  LabelMasks m(4, 0);
  m[0] = 1u << 4;
  auto f = label_with_span(s, 4, m);
  ASSERT_TRUE(f);
  EXPECT_EQ((*f)[0], 4);
  m[0] = 1u << 2;
  EXPECT_FALSE(label_with_span(s, 4, m));
}

// The DP agrees with plain backtracking on feasibility for every small tree
// and span, including general degree caps.
TEST(LabelWithSpan, AgreesWithEnumeration) {
  for (int n = 1; n <= 9; ++n)
    for (const Tree& t : enumerate_trees(n, 5))
      for (int span = 0; span <= 6; ++span) {
        bool any = false;
        enumerate_labelings(t, span, [&](const Labeling&) {
          any = true;
          return false;
        });
        auto f = label_with_span(t, span);
        EXPECT_EQ(any, f.has_value()) << serialize_tree(t) << " span " << span;
        if (f) EXPECT_TRUE(verify_labeling(t, *f).ok());
      }
}

TEST(LabelingText, RoundTrip) {
  Labeling f{4, {0, 2, 4}};
  std::istringstream in(format_labeling(f));
  EXPECT_EQ(parse_labeling(in, 3), f);
}

TEST(LabelingText, Errors) {
  auto parse = [](const std::string& s, int n) {
    std::istringstream in(s);
    return parse_labeling(in, n);
  };
  EXPECT_THROW(parse("0 1\n", 1), ParseError);
  EXPECT_THROW(parse("span 4\n0 1\n0 2\n", 1), ParseError);
  EXPECT_THROW(parse("span 4\n5 1\n", 1), ParseError);
  EXPECT_THROW(parse("span 4\nx 1\n", 1), ParseError);
}
