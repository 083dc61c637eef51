#include <gtest/gtest.h>

#include "syzflip/corpus.hpp"
#include "syzflip/error.hpp"
#include "syzflip/hilbert.hpp"
#include "syzflip/parse.hpp"

namespace syzflip {
namespace {

TEST(Corpus, TwistedCubicIsHankelMinors) {
  auto e = rational_normal_curve(3);
  const auto& ring = e.ideal.ring();
  Ideal expected(ring, {parse_polynomial("x0*x2 - x1^2", ring), parse_polynomial("x1*x3 - x2^2", ring),
                        parse_polynomial("x0*x3 - x1*x2", ring)});
  EXPECT_TRUE(equal(e.ideal, expected));
  EXPECT_EQ(e.conics, Certificate::Absent);
}

TEST(Corpus, QuadraticVeroneseSurface) {
  auto e = veronese(2, 2);
  EXPECT_EQ(e.ideal.nvars(), 6U);
  EXPECT_EQ(e.ideal.generators().size(), 6U);
  auto h = hilbert_data(e.ideal);
  EXPECT_EQ(h.dimension, 2);
  EXPECT_EQ(h.degree, 4);
  // Sampled points satisfy every generator.
  SeededRng rng(5);
  for (int k = 0; k < 20; ++k) {
    auto p = e.parametrization->sample(rng);
    for (const auto& g : e.ideal.generators()) EXPECT_TRUE(g.evaluate(p).is_zero());
  }
  EXPECT_EQ(e.conics, Certificate::Present);
}

TEST(Corpus, SegreThreefold) {
  auto e = segre(1, 2);
  EXPECT_EQ(e.ideal.generators().size(), 3U);
  auto h = hilbert_data(e.ideal);
  EXPECT_EQ(h.dimension, 3);
  EXPECT_EQ(h.degree, 3);
}

TEST(Corpus, VeroneseDimensionsAndDegrees) {
  for (auto [n, d] : {std::pair{1, 4}, std::pair{2, 3}, std::pair{3, 2}}) {
    auto e = veronese(n, d);
    auto h = hilbert_data(e.ideal);
    EXPECT_EQ(h.dimension, n);
    long deg = 1;
    for (int i = 0; i < n; ++i) deg *= d;
    EXPECT_EQ(h.degree, deg) << n << " " << d;
  }
}

TEST(Corpus, CompleteIntersectionIsSeededAndSmooth) {
  auto a = complete_intersection({2, 2}, 0);
  auto b = complete_intersection({2, 2}, 0);
  auto c = complete_intersection({2, 2}, 1);
  EXPECT_EQ(a.ideal.to_string(), b.ideal.to_string());
  EXPECT_NE(a.ideal.to_string(), c.ideal.to_string());
  ASSERT_TRUE(a.smooth.has_value());
  EXPECT_TRUE(*a.smooth);
  auto h = hilbert_data(a.ideal);
  EXPECT_EQ(h.dimension, 1);
  EXPECT_EQ(h.degree, 4);
  EXPECT_FALSE(a.parametrization.has_value());
}

TEST(Corpus, SingularIntersectionDetected) {
  auto ring = Ring::make_indexed("x", 4);
  // Two quadric cones sharing the vertex (0:0:0:1).
  Ideal cones(ring, {parse_polynomial("x0*x1 - x2^2", ring), parse_polynomial("x0^2 - x1*x2", ring)});
  EXPECT_FALSE(is_smooth_complete_intersection(cones));
}

TEST(Corpus, CapsAndBadParameters) {
  EXPECT_THROW(rational_normal_curve(12), InvalidArgument);
  EXPECT_THROW(veronese(3, 3), InvalidArgument);
  EXPECT_THROW(segre(0, 2), InvalidArgument);
  EXPECT_THROW(complete_intersection({2, 2, 2, 2}, 0, 3), InvalidArgument);
  try {
    veronese(4, 2);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_EQ(e.code(), "resource_cap");
  }
}

}  // namespace
}  // namespace syzflip
