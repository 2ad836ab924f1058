#include <gtest/gtest.h>

#include "hcluster/errors.hpp"
#include "hcluster/exchange.hpp"
#include "support.hpp"

using namespace hcluster;
using testing_support::obj;

namespace {

TEST(Exchange, PentagonPair) {
  const ModelParams p(2, 1);
  const ClusterTilting t = validate_tilting({obj("1,3", p), obj("1,4", p)}, p);
  const ExchangeReport r = exchange_report(t, obj("1,3", p));
  EXPECT_TRUE(r.is_mutable);
  EXPECT_TRUE(r.is_exchange_pair);
  ASSERT_TRUE(r.u_star.has_value());
  EXPECT_EQ(*r.u_star, obj("2,4", p));
  EXPECT_TRUE(r.ext_forward_one);
  EXPECT_TRUE(r.ext_backward_one);
  EXPECT_TRUE(r.forward_shape_ok);
  EXPECT_TRUE(r.backward_shape_ok);
  ASSERT_TRUE(r.angle_forward.has_value());
  for (const auto& middle : r.angle_forward->middle)
    for (const auto& x : middle) EXPECT_TRUE(t.contains(x) && x != obj("1,3", p));
}

TEST(Exchange, CounterexampleNotMutable) {
  const ModelParams p(3, 3);
  const ExchangeReport r = exchange_report(star_tilting(3, p), obj("3,5,8,10", p));
  EXPECT_FALSE(r.is_mutable);
  EXPECT_FALSE(r.is_exchange_pair);
  EXPECT_FALSE(r.u_star.has_value());
  EXPECT_FALSE(r.angle_forward.has_value());
  EXPECT_FALSE(r.angle_backward.has_value());
  EXPECT_TRUE(r.mutations.empty());
}

TEST(Exchange, EveryMutationIsAnExchangePairAtDOne) {
  for (int n = 1; n <= 4; ++n) {
    const ModelParams p(n, 1);
    for (const auto& t : enumerate_tiltings(p))
      for (const auto& u : t.summands()) {
        const ExchangeReport r = exchange_report(t, u);
        EXPECT_TRUE(r.is_exchange_pair) << u.to_string();
      }
  }
}

TEST(Exchange, ExchangePairConditions) {
  for (const auto& p : {ModelParams(2, 2), ModelParams(3, 2), ModelParams(2, 3)}) {
    for (const auto& t : enumerate_tiltings(p))
      for (const auto& u : t.summands()) {
        const ExchangeReport r = exchange_report(t, u);
        EXPECT_EQ(r.is_mutable, !r.mutations.empty());
        if (!r.is_exchange_pair) continue;
        const Indec& v = *r.u_star;
        EXPECT_EQ(hom_dim(u, shift(v, p, 1), p), HomDim::one);
        EXPECT_EQ(hom_dim(v, shift(u, p, 1), p), HomDim::one);
        EXPECT_TRUE(r.forward_shape_ok && r.backward_shape_ok);
      }
  }
}

TEST(Exchange, NotASummand) {
  const ModelParams p(2, 1);
  const ClusterTilting t = validate_tilting({obj("1,3", p), obj("1,4", p)}, p);
  EXPECT_THROW(exchange_report(t, obj("2,5", p)), NotASummand);
}

}  // namespace
