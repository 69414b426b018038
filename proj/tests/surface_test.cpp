#include "arctube/surface.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace {

using namespace arctube;

TEST(ClockwiseNext, StepsAndWraparound) {
  EXPECT_EQ(clockwise_next(3, 5), 2);
  EXPECT_EQ(clockwise_next(1, 5), 5);
  // moving both endpoints of the arc 2->5 clockwise twice in total
  EXPECT_EQ(clockwise_next(2, 5), 1);
  EXPECT_EQ(clockwise_next(5, 5), 4);
}

TEST(ClockwiseNext, RejectsBadInput) {
  EXPECT_THROW(clockwise_next(0, 5), std::out_of_range);
  EXPECT_THROW(clockwise_next(6, 5), std::out_of_range);
  EXPECT_THROW(clockwise_next(1, 1), std::invalid_argument);
}

TEST(ClockwiseNext, BijectionOfOrderM) {
  for (int m = 2; m <= 12; ++m) {
    std::set<int> image;
    for (int i = 1; i <= m; ++i) image.insert(clockwise_next(i, m));
    EXPECT_EQ(image.size(), static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
      int cur = i;
      for (int step = 1; step < m; ++step) {
        cur = clockwise_next(cur, m);
        EXPECT_NE(cur, i);
      }
      EXPECT_EQ(clockwise_next(cur, m), i);
    }
  }
}

TEST(Surface, RequiresTwoBoundaryPoints) {
  EXPECT_NO_THROW(Surface{2});
  EXPECT_THROW(Surface{1}, std::invalid_argument);
}

TEST(TauPeripheral, MovesTheStartClockwise) {
  EXPECT_EQ(tau_peripheral({2, 3}, 5), (PeripheralArc{1, 3}));
  EXPECT_EQ(tau_peripheral({1, 5}, 5), (PeripheralArc{5, 5}));
}

TEST(TauPeripheral, PeriodIsExactlyM) {
  for (int m = 2; m <= 12; ++m)
    for (int s = 1; s <= m; ++s)
      for (int k : {2, 3, m, m + 1, 2 * m + 3}) {
        const PeripheralArc start{s, k};
        PeripheralArc cur = start;
        for (int step = 1; step < m; ++step) {
          cur = tau_peripheral(cur, m);
          EXPECT_NE(cur, start);
        }
        EXPECT_EQ(tau_peripheral(cur, m), start);
      }
}

TEST(GammaNotation, MatchesTheFigureLabels) {
  EXPECT_EQ(to_gamma_notation({1, 3}, 5), (GammaNotation{1, 0, 4}));
  EXPECT_EQ(to_gamma_notation({5, 5}, 5), (GammaNotation{5, 1, 5}));
  EXPECT_EQ(to_gamma_notation({2, 7}, 5), (GammaNotation{2, 1, 4}));
}

TEST(GammaNotation, FromGamma) {
  EXPECT_EQ(from_gamma_notation({1, 0, 3}, 5), (PeripheralArc{1, 2}));
  EXPECT_THROW(from_gamma_notation({1, 0, 2}, 5), std::invalid_argument);
  EXPECT_THROW(from_gamma_notation({1, 0, 1}, 5), std::invalid_argument);
  EXPECT_EQ(from_gamma_notation({3, 1, 3}, 5), (PeripheralArc{3, 5}));
}

TEST(GammaNotation, RoundTrip) {
  for (int m = 2; m <= 12; ++m)
    for (int s = 1; s <= m; ++s)
      for (int k = 2; k <= 40; ++k) {
        const PeripheralArc a{s, k};
        EXPECT_EQ(from_gamma_notation(to_gamma_notation(a, m), m), a);
      }
}

TEST(ClassifyArc, FourTypes) {
  EXPECT_EQ(classify_arc(PeripheralArc{1, 2}), ArcType::Peripheral);
  const ClassicalTaggedArc boundary_to_p{Boundary{2}, Puncture::P};
  EXPECT_EQ(classify_arc(boundary_to_p), ArcType::BoundaryToPuncture);
  const ClassicalTaggedArc boundary_pair{Boundary{1}, Boundary{3}};
  EXPECT_EQ(classify_arc(boundary_pair), ArcType::BoundaryNonPeripheral);
  const ClassicalTaggedArc between{Puncture::P, Puncture::Q};
  EXPECT_EQ(classify_arc(between), ArcType::PunctureToPuncture);
}

TEST(ClassifyArc, StableUnderTau) {
  PeripheralArc a{4, 7};
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(classify_arc(a), ArcType::Peripheral);
    a = tau_peripheral(a, 5);
  }
}

TEST(ValidateTaggedArc, LoopTagsMustAgree) {
  const ClassicalTaggedArc loop{Puncture::P, Puncture::P, Tag::Plain, Tag::Notched};
  const auto violations = validate_tagged_arc(loop);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].rule, TagRule::LoopTagsEqual);
}

TEST(ValidateTaggedArc, BoundaryEndsArePlain) {
  const ClassicalTaggedArc arc{Boundary{1}, Puncture::Q, Tag::Notched, Tag::Plain};
  const auto violations = validate_tagged_arc(arc);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].rule, TagRule::BoundaryEndPlain);
}

TEST(ValidateTaggedArc, AcceptsNotchedPunctureEnd) {
  const ClassicalTaggedArc arc{Boundary{1}, Puncture::Q, Tag::Plain, Tag::Notched};
  EXPECT_TRUE(validate_tagged_arc(arc).empty());
}

TEST(ValidateTaggedArc, FlagsBoundaryLoop) {
  const ClassicalTaggedArc loop{Boundary{2}, Boundary{2}, Tag::Plain, Tag::Plain};
  const auto violations = validate_tagged_arc(loop);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].rule, TagRule::SelfFoldedLoop);
}

TEST(ValidateTaggedArc, LoopAtPunctureIsFine) {
  const ClassicalTaggedArc loop{Puncture::P, Puncture::P, Tag::Notched, Tag::Notched};
  EXPECT_TRUE(validate_tagged_arc(loop).empty());
}

TEST(TaggedCompatible, IdenticalUntaggedVersions) {
  const ClassicalTaggedArc plain{Puncture::P, Puncture::Q, Tag::Plain, Tag::Plain};
  const ClassicalTaggedArc notched{Puncture::P, Puncture::Q, Tag::Notched, Tag::Notched};
  const ClassicalTaggedArc mixed{Puncture::P, Puncture::Q, Tag::Plain, Tag::Notched};
  EXPECT_FALSE(tagged_compatible(plain, notched, true));
  EXPECT_TRUE(tagged_compatible(plain, mixed, true));
}

TEST(TaggedCompatible, RequiresUntaggedCompatibility) {
  const ClassicalTaggedArc a{Puncture::P, Puncture::Q};
  const ClassicalTaggedArc b{Puncture::P, Puncture::Q};
  EXPECT_FALSE(tagged_compatible(a, b, false));
}

TEST(TaggedCompatible, SharedEndpointNeedsEqualTag) {
  const ClassicalTaggedArc a{Boundary{1}, Puncture::P, Tag::Plain, Tag::Notched};
  const ClassicalTaggedArc b{Boundary{2}, Puncture::P, Tag::Plain, Tag::Plain};
  EXPECT_FALSE(tagged_compatible(a, b, true));
  const ClassicalTaggedArc c{Boundary{2}, Puncture::P, Tag::Plain, Tag::Notched};
  EXPECT_TRUE(tagged_compatible(a, c, true));
}

TEST(TaggedCompatible, Symmetric) {
  std::mt19937 rng(7301);
  std::uniform_int_distribution<int> endpoint_kind(0, 3);
  std::uniform_int_distribution<int> tag_bit(0, 1);
  auto random_endpoint = [&]() -> Endpoint {
    switch (endpoint_kind(rng)) {
      case 0: return Boundary{1};
      case 1: return Boundary{2};
      case 2: return Puncture::P;
      default: return Puncture::Q;
    }
  };
  auto random_tag = [&] { return tag_bit(rng) ? Tag::Notched : Tag::Plain; };
  for (int i = 0; i < 2000; ++i) {
    const ClassicalTaggedArc a{random_endpoint(), random_endpoint(), random_tag(), random_tag()};
    const ClassicalTaggedArc b{random_endpoint(), random_endpoint(), random_tag(), random_tag()};
    const bool untagged = tag_bit(rng) != 0;
    EXPECT_EQ(tagged_compatible(a, b, untagged), tagged_compatible(b, a, untagged));
  }
}

TEST(CrossingSimplePeripheral, Interleaving) {
  EXPECT_TRUE(untagged_crossing_simple_peripheral({1, 2}, {2, 2}, 7));
  EXPECT_FALSE(untagged_crossing_simple_peripheral({1, 2}, {4, 2}, 7));
  EXPECT_FALSE(untagged_crossing_simple_peripheral({1, 2}, {3, 2}, 7));
}

TEST(CrossingSimplePeripheral, SymmetricAndRejectsWrapped) {
  for (int sa = 1; sa <= 7; ++sa)
    for (int ka = 2; ka <= 6; ++ka)
      for (int sb = 1; sb <= 7; ++sb)
        for (int kb = 2; kb <= 6; ++kb)
          EXPECT_EQ(untagged_crossing_simple_peripheral({sa, ka}, {sb, kb}, 7),
                    untagged_crossing_simple_peripheral({sb, kb}, {sa, ka}, 7));
  EXPECT_THROW(untagged_crossing_simple_peripheral({1, 7}, {2, 2}, 7), std::invalid_argument);
}

}  // namespace
