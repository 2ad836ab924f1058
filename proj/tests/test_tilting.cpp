#include <gtest/gtest.h>

#include "hcluster/errors.hpp"
#include "hcluster/tilting.hpp"
#include "support.hpp"

using namespace hcluster;
using testing_support::as_set;
using testing_support::as_sets;
using testing_support::obj;

namespace {

std::vector<std::vector<oracle::Set>> library_families(const ModelParams& p) {
  std::vector<std::vector<oracle::Set>> out;
  for (const auto& t : enumerate_tiltings(p)) out.push_back(as_sets(t));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(ValidateTilting, StarTiltingsOfCounterexample) {
  const ModelParams p(3, 3);
  for (int v : {1, 3}) {
    const ClusterTilting t = star_tilting(v, p);
    EXPECT_EQ(t.size(), 10u);
    for (const auto& x : t.summands()) EXPECT_TRUE(x.contains(v));
  }
}

TEST(ValidateTilting, Rejections) {
  const ModelParams q(1, 1);
  EXPECT_THROW(validate_tilting({obj("1,3", q), obj("2,4", q)}, q), NotATilting);
  EXPECT_THROW(validate_tilting({obj("1,3", q), obj("2,4", q)}, q), IntertwiningPair);
  EXPECT_THROW(validate_tilting({}, q), WrongCount);
  const ModelParams p(2, 1);
  EXPECT_THROW(validate_tilting({obj("1,3", p)}, p), WrongCount);
  // A member valid at a different m is revalidated.
  EXPECT_THROW(validate_tilting({obj("1,3", q)}, ModelParams(1, 2)), InvalidObject);
}

TEST(ValidateTilting, DuplicatesCollapseAndOrderIsCanonical) {
  const ModelParams p(2, 1);
  const ClusterTilting t = validate_tilting({obj("1,4", p), obj("1,3", p), obj("1,4", p)}, p);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.summands()[0], obj("1,3", p));
  EXPECT_EQ(t.position(obj("1,4", p)), 1u);
  EXPECT_FALSE(t.position(obj("2,4", p)).has_value());
}

TEST(EnumerateTiltings, Counts) {
  EXPECT_EQ(enumerate_tiltings(ModelParams(1, 1)).size(), 2u);
  EXPECT_EQ(enumerate_tiltings(ModelParams(2, 1)).size(), 5u);
  EXPECT_EQ(enumerate_tiltings(ModelParams(3, 1)).size(), 14u);
  EXPECT_EQ(enumerate_tiltings(ModelParams(4, 1)).size(), 42u);
  EXPECT_EQ(enumerate_tiltings(ModelParams(2, 1), 1).size(), 1u);
  EXPECT_EQ(enumerate_tiltings(ModelParams(2, 1), 0).size(), 0u);
}

TEST(EnumerateTiltings, ContainsStarTiltings) {
  const ModelParams p(3, 3);
  const auto all = enumerate_tiltings(p);
  for (int v : {1, 3}) EXPECT_NE(std::find(all.begin(), all.end(), star_tilting(v, p)), all.end());
}

TEST(EnumerateTiltings, MatchesFullSizeMaximalFamilyOracle) {
  for (const auto& p : {ModelParams(1, 1), ModelParams(2, 1), ModelParams(3, 1), ModelParams(4, 1),
                        ModelParams(2, 2), ModelParams(3, 2), ModelParams(2, 3)}) {
    auto expected = oracle::maximal_families(p.n(), p.d());
    std::erase_if(expected, [&](const auto& f) { return f.size() != p.tilting_size(); });
    EXPECT_EQ(library_families(p), expected) << to_string(p);
  }
}

// Every maximal family is a triangulation when d = 1; for larger d some
// maximal families are too small to be cluster tilting.
TEST(EnumerateTiltings, MaximalFamiliesAtDOneHaveFullSize) {
  for (int n = 1; n <= 4; ++n) {
    const ModelParams p(n, 1);
    EXPECT_EQ(library_families(p), oracle::maximal_families(n, 1));
  }
  const auto families = oracle::maximal_families(2, 3);
  const auto small = std::count_if(families.begin(), families.end(), [](const auto& f) { return f.size() < 4; });
  EXPECT_GT(small, 0);
}

TEST(EnumerateTiltings, MatchesSizedFamilyOracle) {
  for (const auto& p : {ModelParams(1, 1), ModelParams(2, 1), ModelParams(2, 2), ModelParams(3, 1)}) {
    EXPECT_EQ(library_families(p), oracle::sized_families(p.n(), p.d())) << to_string(p);
  }
}

TEST(EnumerateTiltings, EveryResultIsMaximal) {
  const ModelParams p(3, 3);
  const auto xs = enumerate_indecs(p);
  for (const auto& t : enumerate_tiltings(p)) {
    EXPECT_EQ(t.size(), 10u);
    for (const auto& x : xs) {
      if (t.contains(x)) continue;
      bool clashes = false;
      for (const auto& s : t.summands()) clashes |= intertwines(x, s);
      EXPECT_TRUE(clashes);
    }
  }
}

TEST(Mutations, Examples) {
  const ModelParams p(2, 1);
  const ClusterTilting t = validate_tilting({obj("1,3", p), obj("1,4", p)}, p);
  const auto ms = find_mutations(t, obj("1,3", p));
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0], obj("2,4", p));
  EXPECT_EQ(mutate(t, obj("1,3", p), ms[0]), validate_tilting({obj("2,4", p), obj("1,4", p)}, p));
  EXPECT_THROW(find_mutations(t, obj("2,4", p)), NotASummand);

  const ModelParams q(3, 3);
  EXPECT_TRUE(find_mutations(star_tilting(3, q), obj("3,5,8,10", q)).empty());
}

TEST(Mutations, MatchOracleAndAreSymmetric) {
  for (const auto& p : {ModelParams(2, 1), ModelParams(3, 1), ModelParams(2, 2), ModelParams(3, 2), ModelParams(2, 3)}) {
    const auto xs = enumerate_indecs(p);
    for (const auto& t : enumerate_tiltings(p)) {
      for (const auto& u : t.summands()) {
        std::vector<Indec> expected;
        for (const auto& v : xs) {
          if (t.contains(v)) continue;
          std::vector<oracle::Set> family;
          for (const auto& s : t.summands())
            if (s != u) family.push_back(as_set(s));
          family.push_back(as_set(v));
          if (oracle::compatible_family(family)) expected.push_back(v);
        }
        const auto got = find_mutations(t, u);
        EXPECT_EQ(got, expected);
        for (const auto& v : got) {
          const ClusterTilting back = mutate(t, u, v);
          const auto again = find_mutations(back, v);
          EXPECT_NE(std::find(again.begin(), again.end(), u), again.end());
        }
      }
    }
  }
}

TEST(Mutations, UniqueAtDOne) {
  for (int n = 1; n <= 4; ++n) {
    const ModelParams p(n, 1);
    for (const auto& t : enumerate_tiltings(p))
      for (const auto& u : t.summands()) EXPECT_EQ(find_mutations(t, u).size(), 1u);
  }
}

}  // namespace
