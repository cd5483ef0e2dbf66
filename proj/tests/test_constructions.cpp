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

#include "schur/constructions.hpp"
#include "schur/schur.hpp"
#include "schur/verify.hpp"

using namespace schur;

namespace {

const GroupDescriptor G = z_times_z3();
const GroupDescriptor Z = GroupDescriptor::infinite(1);
const GroupDescriptor Z3 = GroupDescriptor::cyclic(3);

bool has_class(const SchurPresentation& P, BasicSet c) {
  sort_unique(c);
  return std::find(P.classes.begin(), P.classes.end(), c) != P.classes.end();
}

SchurPresentation named_orbit(std::vector<std::string> names, std::int64_t N = 12) { return orbit_ring(G, names, N); }

}  // namespace

TEST(DiscreteTest, Examples) {
  EXPECT_EQ(discrete(Z3).classes, (std::vector<BasicSet>{{{0, 0}}, {{0, 1}}, {{0, 2}}}));
  const auto P = discrete(G, 3);
  EXPECT_EQ(P.classes.size(), 21u);
  EXPECT_EQ(verify_axioms(P).verdict, Verdict::ValidUpToWindow);
  EXPECT_THROW(discrete(G, 2), Error);
  EXPECT_EQ(discrete(G, 2, ConstructOptions{1}).classes.size(), 15u);
}

TEST(TrivialTest, Examples) {
  EXPECT_EQ(trivial(Z3).classes, (std::vector<BasicSet>{{{0, 0}}, {{0, 1}, {0, 2}}}));
  EXPECT_EQ(trivial(GroupDescriptor::finite(2, 3)).classes.size(), 2u);
  try {
    trivial(G);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfiniteGroup);
  }
}

TEST(OrbitRingTest, PsiClasses) {
  const auto P = named_orbit({"psi"});
  for (std::int64_t k = -12; k <= 12; ++k) {
    if (k == 0) continue;
    if (k % 3 != 0) {
      EXPECT_TRUE(has_class(P, {{k, 0}, G.normalize({k, k})})) << k;
      EXPECT_TRUE(has_class(P, {G.normalize({k, 2 * k})})) << k;
    } else {
      EXPECT_TRUE(has_class(P, {{k, 1}, {k, 2}})) << k;
      EXPECT_TRUE(has_class(P, {{k, 0}})) << k;
    }
  }
  EXPECT_TRUE(has_class(P, {{0, 0}}));
  EXPECT_TRUE(has_class(P, {{0, 1}, {0, 2}}));
}

TEST(OrbitRingTest, XiAndEmpty) {
  const auto P = named_orbit({"xi"});
  for (std::int64_t k = -12; k <= 12; ++k) EXPECT_TRUE(has_class(P, {{k, 1}, {-k, 2}})) << k;
  EXPECT_EQ(orbit_ring(G, std::vector<Automorphism>{}, 12), discrete(G, 12));
  EXPECT_THROW(named_orbit({"nope"}), Error);
}

TEST(OrbitRingTest, PartitionIsStarClosed) {
  for (const auto& n : named_automorphism_list()) {
    const auto P = named_orbit({n});
    const PartitionIndex idx(P);
    for (const auto& c : P.classes) {
      const auto s = star_set(G, c);
      EXPECT_EQ(P.classes[*idx.class_of(s.front())], s) << n;
    }
  }
}

TEST(OrbitRingTest, BoundIsEnforced) {
  ConstructOptions tight;
  tight.orbit_bound = 1;
  EXPECT_THROW(orbit_ring(G, std::vector<std::string>{"psi"}, 12, tight), Error);
}

TEST(TensorTest, SymmetricTimesDiscrete) {
  const auto P = tensor(orbit_ring(Z, std::vector<std::string>{"inversion"}, 12), discrete(Z3));
  EXPECT_EQ(P.group, G);
  for (std::int64_t m = 1; m <= 12; ++m)
    for (std::int64_t a = 0; a < 3; ++a) EXPECT_TRUE(has_class(P, {{m, a}, {-m, a}}));
  EXPECT_EQ(verify_axioms(P).verdict, Verdict::ValidUpToWindow);
}

TEST(TensorTest, SymmetricTimesTrivial) {
  const auto P = tensor(orbit_ring(Z, std::vector<std::string>{"inversion"}, 12), trivial(Z3));
  for (std::int64_t m = 1; m <= 12; ++m) {
    EXPECT_TRUE(has_class(P, {{m, 0}, {-m, 0}}));
    EXPECT_TRUE(has_class(P, {{m, 1}, {-m, 1}, {m, 2}, {-m, 2}}));
  }
  EXPECT_EQ(verify_axioms(P).verdict, Verdict::ValidUpToWindow);
}

TEST(TensorTest, DiscreteTimesDiscreteAndCounts) {
  EXPECT_EQ(tensor(discrete(Z, 12), discrete(Z3)), discrete(G, 12));
  const auto A = orbit_ring(Z, std::vector<std::string>{"inversion"}, 6);
  const auto P = tensor(A, trivial(Z3));
  EXPECT_EQ(P.classes.size(), A.classes.size() * 2);
  EXPECT_THROW(tensor(discrete(Z3), discrete(Z, 4)), Error);
}

TEST(WedgeTest, TorsionOverDiscrete) {
  const auto T = torsion_subgroup(G);
  const auto P = wedge(G, {T, T, discrete(Z3), discrete(Z, 12)}, 12);
  EXPECT_TRUE(has_class(P, {{0, 0}}));
  EXPECT_TRUE(has_class(P, {{0, 1}}));
  EXPECT_TRUE(has_class(P, {{0, 2}}));
  for (std::int64_t m = -12; m <= 12; ++m)
    if (m) {
      EXPECT_TRUE(has_class(P, {{m, 0}, {m, 1}, {m, 2}}));
    }
  EXPECT_EQ(P.classes.size(), 27u);
  EXPECT_EQ(verify_axioms(P).verdict, Verdict::ValidUpToWindow);
}

TEST(WedgeTest, IndexTwoTowerRestrictsAndProjects) {
  const auto H = power_subgroup(G, 2, true);
  const auto T = torsion_subgroup(G);
  const auto inner = discrete(local_group(G, H), 6, ConstructOptions{0});
  const auto outer = discrete(Z, 12);
  const auto P = wedge(G, {H, T, inner, outer}, 12);
  EXPECT_EQ(verify_axioms(P).verdict, Verdict::ValidUpToWindow);
  EXPECT_EQ(restrict(P, H), inner);
  EXPECT_EQ(quotient(P, T), outer);
  for (std::int64_t m = -11; m <= 11; m += 2) EXPECT_TRUE(has_class(P, {{m, 0}, {m, 1}, {m, 2}}));
  EXPECT_TRUE(has_class(P, {{4, 1}}));
}

TEST(WedgeTest, FiniteTower) {
  const auto Z4 = GroupDescriptor::cyclic(4);
  const auto K = subgroup_from_generators(Z4, {GroupElement{0, 2}});
  const auto P = wedge(Z4, {K, K, discrete(GroupDescriptor::cyclic(2)), discrete(GroupDescriptor::cyclic(2))});
  EXPECT_EQ(P.classes, (std::vector<BasicSet>{{{0, 0}}, {{0, 1}, {0, 3}}, {{0, 2}}}));
  EXPECT_EQ(verify_axioms(P).verdict, Verdict::Valid);
}

TEST(WedgeTest, BadTowers) {
  const auto T = torsion_subgroup(G);
  const auto H2 = power_subgroup(G, 2, true);
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  // K not inside H.
  EXPECT_EQ(code([&] {
              wedge(G, {T, H2, discrete(Z3), discrete(GroupDescriptor::cyclic(2))}, 12);
            }),
            ErrorCode::BadTower);
  // Trivial K.
  EXPECT_EQ(code([&] {
              wedge(G, {T, trivial_subgroup(G), discrete(Z3), discrete(G, 12)}, 12);
            }),
            ErrorCode::BadTower);
  // H = G.
  EXPECT_EQ(code([&] {
              wedge(G, {whole_group(G), T, discrete(G, 12), discrete(Z, 12)}, 12);
            }),
            ErrorCode::BadTower);
  // Inner image disagrees with the outer ring on H/K.
  EXPECT_EQ(code([&] {
              wedge(G, {H2, T, discrete(G, 6, ConstructOptions{0}), orbit_ring(Z, std::vector<std::string>{"inversion"}, 12)},
                    12);
            }),
            ErrorCode::IncompatibleWedge);
}

TEST(WedgeTest, TrivialInnerRing) {
  const auto T = torsion_subgroup(G);
  const auto P = wedge(G, {T, T, trivial(Z3), discrete(Z, 12)}, 12);
  EXPECT_TRUE(has_class(P, {{0, 1}, {0, 2}}));
  EXPECT_EQ(P.classes.size(), 26u);
  EXPECT_EQ(verify_axioms(P).verdict, Verdict::ValidUpToWindow);
}
