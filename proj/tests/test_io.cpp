#include "mrect/io.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mrect/complexes.hpp"
#include "mrect/errors.hpp"

using namespace mrect;

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(format_rational(Rational(4)), "4/1");
  EXPECT_EQ(format_rational(Rational(-3, 2)), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("a/2"), InputError);
  EXPECT_THROW(parse_rational("1/-2"), InputError);
}

TEST(Json, LinearRoundTrip) {
  for (const auto& a : enumerate_linear(6)) EXPECT_EQ(io::linear_from_json(io::to_json(a)), a);
}

TEST(Json, RectRoundTrip) {
  for (const auto& a : face_poset_rect(2).elements) {
    EXPECT_EQ(io::rect_from_json(io::parse(io::dump(io::to_json(a)))), a);
  }
}

TEST(Json, RandomMultisetRoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<WeightedPoint2D> pts;
    const int k = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) {
      pts.push_back({Rational(static_cast<long long>(rng() % 9), 8), Rational(static_cast<long long>(rng() % 5), 4),
                     1 + static_cast<int>(rng() % 3)});
    }
    const auto z = Multiset2D::make(0, 1, 0, 1, pts);
    const auto back = io::multiset_from_json(io::parse(io::dump(io::to_json(z))));
    ASSERT_TRUE(std::holds_alternative<Multiset2D>(back));
    EXPECT_EQ(comp2d(std::get<Multiset2D>(back)), comp2d(z));
    EXPECT_EQ(io::dump(io::to_json(std::get<Multiset2D>(back))), io::dump(io::to_json(z)));
  }
}

TEST(Json, GraphRoundTrip) {
  for (const auto& g : {dual_graph(3), overlay_lr(3), tetra_graph(2).graph}) {
    EXPECT_EQ(io::graph_from_json(io::parse(io::dump(io::to_json(g)))), g);
  }
}

TEST(Json, RejectsMalformed) {
  EXPECT_THROW(io::parse("{"), InputError);
  EXPECT_THROW(io::composition_from_json(io::parse(R"({"kind":"nope"})")), InputError);
  EXPECT_THROW(io::rect_from_json(io::parse(R"({"kind":"rectangular","matrix":[[1,0],[0]]})")), CompositionError);
}

TEST(Dot, MixedEdgesAreDashed) {
  const auto a = RectComposition::validate({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  const auto dot = io::to_dot(spine_rect(a));
  EXPECT_NE(dot.find("graph \"spine\" {"), std::string::npos);
  EXPECT_NE(dot.find("style=dashed"), std::string::npos);
  const auto g = io::to_dot(overlay_lr(3), "lr");
  EXPECT_NE(g.find("graph \"lr\" {"), std::string::npos);
  EXPECT_NE(g.find("label=\"L1\""), std::string::npos);
}
