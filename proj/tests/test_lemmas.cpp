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

#include "schur/enumerate.hpp"
#include "schur/lemmas.hpp"

using namespace schur;

namespace {

const GroupDescriptor G = z_times_z3();

std::vector<SchurPresentation> corpus() {
  std::vector<SchurPresentation> out{discrete(G, 12)};
  for (const auto& n : named_automorphism_list()) out.push_back(orbit_ring(G, std::vector<std::string>{n}, 12));
  out.push_back(orbit_ring(G, std::vector<std::string>{"psi", "xi"}, 12));
  out.push_back(orbit_ring(G, std::vector<std::string>{"inversion"}, 12));
  const auto T = torsion_subgroup(G);
  out.push_back(wedge(G, {T, T, discrete(GroupDescriptor::cyclic(3)), discrete(GroupDescriptor::infinite(1), 12)}, 12));
  for (const auto& P : enumerate_finite(GroupDescriptor::cyclic(12))) out.push_back(P);
  return out;
}

}  // namespace

TEST(LemmaTest, CorpusPassesEveryCheck) {
  for (const auto& P : corpus()) {
    for (const auto& r : check_lemmas(P)) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail << " on " << format_presentation(P);
  }
}

TEST(LemmaTest, FrobeniusNeedsCoprimeK) {
  const auto r = check_frobenius_closure(discrete(G, 12), 3);
  EXPECT_FALSE(r.applicable);
  EXPECT_TRUE(check_frobenius_closure(orbit_ring(G, std::vector<std::string>{"psi"}, 12), 2).checks > 0);
}

TEST(LemmaTest, FrobeniusDetectsANonRing) {
  // Star-closed partition of Z_5 that is not closed under squaring.
  SchurPresentation P;
  P.group = GroupDescriptor::cyclic(5);
  P.classes = {{{0, 0}}, {{0, 1}, {0, 4}}, {{0, 2}}, {{0, 3}}};
  EXPECT_FALSE(check_frobenius_closure(P, 2).passed);
}

TEST(LemmaTest, CosetDichotomyAndCubeRuleCatchBrokenShapes) {
  SchurPresentation P = discrete(G, 12);
  std::erase_if(P.classes, [](const BasicSet& c) { return std::abs(c[0].z) == 1; });
  P.classes.push_back({{1, 0}, {1, 1}, {-1, 0}});
  P.classes.push_back({{1, 2}, {-1, 1}, {-1, 2}});
  P.canonicalize();
  EXPECT_FALSE(check_coset_dichotomy(P).passed);
  EXPECT_FALSE(check_cube_rule(P).passed);
}

TEST(LemmaTest, NonApplicableChecksAreReported) {
  const auto Z5 = discrete(GroupDescriptor::cyclic(5));
  EXPECT_FALSE(check_coset_dichotomy(Z5).applicable);
  EXPECT_FALSE(check_cube_rule(Z5).applicable);
  const auto Z = discrete(GroupDescriptor::infinite(1), 5);
  EXPECT_FALSE(check_multiplier_sets(Z).applicable);
}
