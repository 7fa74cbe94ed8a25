#include "mrect/symmetry.hpp"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "mrect/errors.hpp"
#include "oracles.hpp"

using namespace mrect;

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({1, 1, 2}), InputError);
  EXPECT_THROW(Permutation({0, 1}), InputError);
  EXPECT_THROW(Permutation({1, 4, 2}), InputError);
}

TEST(Permutation, CycleActsOnBothSides) {
  const auto p = Permutation::from_cycles(3, "(1 2 3)");
  EXPECT_EQ(act_right(2, p), 3);
  EXPECT_EQ(act_left(p, 2), 1);
  EXPECT_EQ(p.key(), "2 3 1");
}

TEST(Permutation, ComposeIsRightAction) {
  for (const auto& p : Permutation::all(4)) {
    for (const auto& q : Permutation::all(4)) {
      const auto pq = compose(p, q);
      for (int i = 1; i <= 4; ++i) EXPECT_EQ(act_right(i, pq), act_right(act_right(i, p), q));
    }
  }
}

TEST(Permutation, InverseAndIdentity) {
  for (const auto& p : Permutation::all(4)) {
    EXPECT_EQ(compose(p, p.inverse()), Permutation::identity(4));
    EXPECT_EQ(compose(p.inverse(), p), Permutation::identity(4));
  }
}

TEST(Permutation, AllHasFactorialSize) {
  for (int n = 1; n <= 6; ++n) {
    const auto all = Permutation::all(n);
    EXPECT_EQ(static_cast<long long>(all.size()), oracle::factorial(n));
    std::set<std::string> keys;
    for (const auto& p : all) keys.insert(p.key());
    EXPECT_EQ(keys.size(), all.size());
  }
}

TEST(PermutationMatrix, MatrixOfProductIsProduct) {
  for (const auto& p : Permutation::all(3)) {
    for (const auto& q : Permutation::all(3)) {
      EXPECT_EQ(compose(p, q).matrix(), p.matrix() * q.matrix());
    }
  }
}

TEST(PermutationMatrix, TranspositionsSwapRowsAndColumns) {
  // One-line [4 1 5 2 3].
  const Permutation pi({4, 1, 5, 2, 3});
  const auto s2 = Permutation::transposition(5, 2);
  EXPECT_EQ(compose(s2, pi).key(), "4 5 1 2 3");
  EXPECT_EQ(compose(pi, s2).key(), "4 1 5 3 2");
  EXPECT_EQ(swap_rows(pi.matrix(), 2), compose(s2, pi).matrix());
  EXPECT_EQ(swap_cols(pi.matrix(), 2), compose(pi, s2).matrix());
}

TEST(PermutationMatrix, RejectsNonPermutationMatrix) {
  EXPECT_THROW(PermutationMatrix(2, {1, 1, 0, 0}), InputError);
  EXPECT_THROW(PermutationMatrix(2, {1, 0, 0}), InputError);
}

TEST(CayleyGraph, SizesAndRegularity) {
  for (int n = 1; n <= 5; ++n) {
    for (Side side : {Side::left, Side::right}) {
      const auto g = cayley_graph(n, side);
      EXPECT_EQ(static_cast<long long>(g.vertex_count()), oracle::factorial(n));
      EXPECT_EQ(static_cast<long long>(g.edge_count()), oracle::factorial(n) * (n - 1) / 2);
      for (const auto& v : g.vertices()) EXPECT_EQ(g.degree(v), static_cast<std::size_t>(n - 1));
    }
    const auto lr = overlay_lr(n);
    EXPECT_EQ(static_cast<long long>(lr.edge_count()), oracle::factorial(n) * (n - 1));
  }
}

TEST(CayleyGraph, RightEdgesDifferByOneAdjacentSwapOfPositions) {
  const auto g = cayley_graph(4, Side::right);
  for (const auto& e : g.edges()) {
    const Permutation p = [&] {
      std::vector<int> img;
      for (char c : e.u) if (c != ' ') img.push_back(c - '0');
      return Permutation(img);
    }();
    const auto q = compose(p, Permutation::transposition(4, e.label.index));
    EXPECT_EQ(q.key(), e.v) << e.label.index;
  }
}
