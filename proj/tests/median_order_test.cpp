#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "snc/errors.hpp"
#include "snc/median_order.hpp"
#include "snc/neighborhood.hpp"

namespace snc {
namespace {

using testing::c3;
using testing::c3_weighted;
using testing::tt3;

using Order = std::vector<Vertex>;

TEST(MedianOrderTest, AcyclicGivesTopologicalOrder) {
  auto result = median_order(tt3(), OrderMode::count);
  EXPECT_EQ(result.order, (Order{0, 1, 2}));
  EXPECT_EQ(result.backward, 0);
}

TEST(MedianOrderTest, ThreeCycleTieBreaksLexicographically) {
  auto result = median_order(c3(), OrderMode::count);
  EXPECT_EQ(result.order, (Order{0, 1, 2}));
  EXPECT_EQ(result.backward, 1);
}

TEST(MedianOrderTest, WeightedCyclePutsTheLightArcBackward) {
  auto result = median_order(c3_weighted(), OrderMode::weight);
  EXPECT_EQ(result.order, (Order{1, 2, 0}));
  EXPECT_EQ(result.backward, 1);
}

TEST(MedianOrderTest, ZeroArcsCountOnlyInCountMode) {
  Digraph d(2);
  d.add_arc(1, 0, 0);
  EXPECT_EQ(median_order(d, OrderMode::weight).order, (Order{0, 1}));
  EXPECT_EQ(median_order(d, OrderMode::weight).backward, 0);
  EXPECT_EQ(median_order(d, OrderMode::count).order, (Order{1, 0}));
}

TEST(MedianOrderTest, CapIsEnforced) {
  EXPECT_THROW(median_order(Digraph(21), OrderMode::count), PreconditionError);
  EXPECT_THROW(median_order(Digraph(6), OrderMode::count, 5), PreconditionError);
  EXPECT_NO_THROW(median_order(Digraph(6), OrderMode::count, 6));
  EXPECT_EQ(median_order(Digraph(1), OrderMode::weight).order, (Order{0}));
}

TEST(BackwardWeightTest, Examples) {
  EXPECT_EQ(backward_weight(tt3(), Order{0, 1, 2}, OrderMode::count), 0);
  EXPECT_EQ(backward_weight(tt3(), Order{2, 1, 0}, OrderMode::count), 3);
  EXPECT_EQ(backward_weight(c3_weighted(), Order{0, 1, 2}, OrderMode::weight), 4);
  EXPECT_THROW(backward_weight(tt3(), Order{0, 0, 1}, OrderMode::count), PreconditionError);
  EXPECT_THROW(backward_weight(tt3(), Order{0, 1}, OrderMode::count), PreconditionError);
  EXPECT_THROW(backward_weight(tt3(), Order{0, 1, 3}, OrderMode::count), PreconditionError);
}

// Lexicographically smallest optimal permutation by enumeration.
Order brute_force_order(const Digraph& d, OrderMode mode) {
  Order perm(d.size());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  Order best;
  std::optional<Rational> best_cost;
  do {
    Rational cost = backward_weight(d, perm, mode);
    if (!best_cost || cost < *best_cost) {
      best_cost = cost;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

TEST(MedianOrderTest, MatchesExhaustiveSearch) {
  Rng rng(401);
  for (int trial = 0; trial < 300; ++trial) {
    const char* schemes[] = {"unit", "int:5", "zint:3", "rat:4"};
    const std::size_t n = 1 + rng.below(trial < 250 ? 7 : 8);
    auto d = trial % 2 ? generate_tournament(n, parse_weight_scheme(schemes[trial % 4]), rng)
                       : generate_digraph(n, rng.unit(), parse_weight_scheme(schemes[trial % 4]), rng);
    for (auto mode : {OrderMode::count, OrderMode::weight}) {
      auto result = median_order(d, mode);
      EXPECT_EQ(result.backward, testing::brute_force_backward(d, mode == OrderMode::count));
      EXPECT_EQ(result.backward, backward_weight(d, result.order, mode));
      if (n <= 7) {
        EXPECT_EQ(result.order, brute_force_order(d, mode));
      }
    }
  }
}

TEST(MedianOrderTest, LargeWeightsFallBackToExactArithmetic) {
  Digraph d(3);
  d.add_arc(0, 1, Rational(Integer("100000000000000000000000"), Integer(7)));
  d.add_arc(1, 2, Rational(1, 3));
  d.add_arc(2, 0, Rational(Integer("100000000000000000000001"), Integer(7)));
  auto result = median_order(d, OrderMode::weight);
  EXPECT_EQ(result.order, (Order{2, 0, 1}));
  EXPECT_EQ(result.backward, Rational(1, 3));
}

TEST(BackwardWeightTest, ReversalDuality) {
  Rng rng(409);
  for (int trial = 0; trial < 200; ++trial) {
    auto d = generate_digraph(1 + rng.below(8), rng.unit(), parse_weight_scheme("zint:4"), rng);
    Order order(d.size());
    std::iota(order.begin(), order.end(), Vertex{0});
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    Order reversed(order.rbegin(), order.rend());
    for (auto mode : {OrderMode::count, OrderMode::weight}) {
      EXPECT_EQ(backward_weight(d, order, mode), backward_weight(reverse(d), reversed, mode));
    }
  }
}

TEST(LastVertexTest, TransitiveTriangleEndsOnTheSink) {
  auto check = last_vertex_seymour(tt3(), OrderMode::count);
  EXPECT_TRUE(check.seymour);
  EXPECT_EQ(check.order.order.back(), 2u);
  EXPECT_EQ(check.report.vertex, 2u);
  EXPECT_EQ(check.first_out, 0u);
}

TEST(LastVertexTest, CountModeOnTournamentsIsAlwaysSeymour) {
  Rng rng(419);
  for (int trial = 0; trial < 300; ++trial) {
    auto t = generate_tournament(1 + rng.below(10), WeightScheme{}, rng);
    auto check = last_vertex_seymour(t, OrderMode::count);
    EXPECT_TRUE(check.seymour);
    auto sets = neighborhoods(t, check.order.order.back());
    EXPECT_EQ(check.first_out, sets.first_out.size());
    EXPECT_EQ(check.second_out, sets.second_out.size());
  }
}

TEST(MedianOrderIoTest, Serialize) {
  EXPECT_EQ(serialize(median_order(c3_weighted(), OrderMode::weight)), "1 2 0\nbackward 1\n");
}

}  // namespace
}  // namespace snc
