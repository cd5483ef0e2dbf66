// Copyright 2026 The schurkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "schur/constructions.hpp"
#include "schur/schur.hpp"

using namespace schur;

namespace {

const GroupDescriptor G = z_times_z3();

RingElement<> R(const char* text) { return parse_ring_element(text, G); }

SchurPresentation psi_ring(std::int64_t N = 12) { return orbit_ring(G, std::vector<std::string>{"psi"}, N); }

BasicSet coset(std::int64_t m) { return {{m, 0}, {m, 1}, {m, 2}}; }

}  // namespace

TEST(LevelSetsTest, SplitsByCoefficient) {
  const auto P = psi_ring();
  const auto alpha = convolve(G, R("z + z*a"), R("1 + a + a^2")) - R("z*a^2");
  EXPECT_EQ(alpha, R("2*z + 2*z*a + z*a^2"));
  const auto levels = level_sets(alpha, P);
  ASSERT_EQ(levels.size(), 2u);
  EXPECT_EQ(levels[0].first, Rational(1));
  EXPECT_EQ(levels[0].second, (BasicSet{{1, 2}}));
  EXPECT_EQ(levels[1].first, Rational(2));
  EXPECT_EQ(levels[1].second, (BasicSet{{1, 0}, {1, 1}}));
}

TEST(LevelSetsTest, TorsionAndZero) {
  const auto P = psi_ring();
  const auto levels = level_sets(R("1 + a + a^2"), P);
  ASSERT_EQ(levels.size(), 1u);
  EXPECT_EQ(levels[0].second, coset(0));
  EXPECT_TRUE(level_sets(RingElement<>(), P).empty());
  EXPECT_THROW(level_sets(R("z"), P), Error);
}

TEST(LevelSetsTest, RandomSpanElementsHaveClassUnionLevels) {
  std::mt19937 rng(7);
  const auto P = orbit_ring(G, std::vector<std::string>{"delta", "xi"}, 6);
  for (int trial = 0; trial < 50; ++trial) {
    RingElement<> x;
    for (const auto& c : P.classes) {
      const int v = static_cast<int>(rng() % 4);
      if (v) x += scalar_mul(Rational(v), RingElement<>::simple_quantity(c));
    }
    EXPECT_NO_THROW(level_sets(x, P));
  }
}

TEST(GeneratedSubgroupTest, Examples) {
  const auto P = orbit_ring(G, std::vector<std::string>{"xi"}, 12);
  EXPECT_EQ(generated_subgroup(R("z^3 + z^-3"), P), power_subgroup(G, 3, false));
  EXPECT_EQ(generated_subgroup(R("a + a^2"), psi_ring()), torsion_subgroup(G));
  EXPECT_EQ(generated_subgroup(R("z + z*a"), psi_ring()), whole_group(G));
  EXPECT_THROW(generated_subgroup(R("z"), psi_ring()), Error);
}

TEST(RestrictTest, Examples) {
  const auto P = psi_ring();
  const auto T = restrict(P, torsion_subgroup(G));
  EXPECT_EQ(T.group, GroupDescriptor::cyclic(3));
  EXPECT_EQ(T.classes, (std::vector<BasicSet>{{{0, 0}}, {{0, 1}, {0, 2}}}));
  const auto D = restrict(discrete(G, 12), power_subgroup(G, 2, true));
  EXPECT_EQ(D, discrete(G, 6));
  EXPECT_EQ(restrict(P, whole_group(G)), P);
  // <z> is not an S-subgroup of the psi ring.
  try {
    restrict(P, power_subgroup(G, 1, false));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSSubgroup);
  }
}

TEST(QuotientTest, Examples) {
  const auto T = torsion_subgroup(G);
  const auto Zd = quotient(psi_ring(), T);
  const auto Z = GroupDescriptor::infinite(1);
  EXPECT_EQ(Zd.group, Z);
  EXPECT_EQ(Zd, discrete(Z, 12));
  const auto Zs = quotient(orbit_ring(G, std::vector<std::string>{"xi"}, 12), T);
  EXPECT_EQ(Zs, orbit_ring(Z, std::vector<std::string>{"inversion"}, 12));
  const auto P = psi_ring();
  EXPECT_EQ(quotient(P, trivial_subgroup(G)), P);
  const auto Z2 = quotient(discrete(G, 4), power_subgroup(G, 2, true));
  EXPECT_EQ(Z2, discrete(GroupDescriptor::finite(2, 1)));
}

TEST(TorsionTest, Examples) {
  EXPECT_TRUE(torsion_is_ssubgroup(psi_ring()));
  EXPECT_TRUE(torsion_is_ssubgroup(discrete(G, 3)));
  SchurPresentation broken = discrete(G, 3);
  broken.classes.erase(std::find(broken.classes.begin(), broken.classes.end(), BasicSet{{0, 2}}));
  EXPECT_THROW(torsion_is_ssubgroup(broken), Error);
}

TEST(MultiplierSetTest, Examples) {
  const auto P = psi_ring();
  EXPECT_EQ(multiplier_set({{1, 0}, {1, 1}}, 3, P), (BasicSet{{3, 0}}));
  const auto W = wedge(G, {torsion_subgroup(G), torsion_subgroup(G), discrete(GroupDescriptor::cyclic(3)),
                           discrete(GroupDescriptor::infinite(1), 12)},
                       12);
  EXPECT_TRUE(multiplier_set(coset(1), 3, W).empty());
  EXPECT_EQ(multiplier_set({{0, 1}}, 3, discrete(G, 12)), (BasicSet{{0, 0}}));
  EXPECT_THROW(multiplier_set({{1, 0}}, 2, discrete(G, 12)), Error);
  EXPECT_THROW(multiplier_set({{1, 0}}, 3, P), Error);
}

TEST(MultiplierSetTest, BothRoutesAgree) {
  // The coset count against the p-fold power read mod p, on every subset of
  // two levels of Z x Z_3.
  std::vector<GroupElement> pool;
  for (std::int64_t z : {-1, 2})
    for (std::int64_t a = 0; a < 3; ++a) pool.push_back({z, a});
  for (unsigned mask = 1; mask < (1u << pool.size()); ++mask) {
    BasicSet X;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1) X.push_back(pool[i]);
    EXPECT_EQ(multiplier_set_raw(G, X, 3), multiplier_set_congruence(G, X, 3)) << format_set(X);
  }
  const auto Z12 = GroupDescriptor::cyclic(12);
  for (unsigned mask = 1; mask < (1u << 12); mask += 37) {
    BasicSet X;
    for (std::int64_t i = 0; i < 12; ++i)
      if (mask >> i & 1) X.push_back({0, i});
    for (std::int64_t p : {2, 3}) EXPECT_EQ(multiplier_set_raw(Z12, X, p), multiplier_set_congruence(Z12, X, p));
  }
}

TEST(PTorsionTest, Examples) {
  EXPECT_EQ(p_torsion(G, 3), coset(0));
  EXPECT_EQ(p_torsion(GroupDescriptor::cyclic(12), 2), (BasicSet{{0, 0}, {0, 6}}));
}
