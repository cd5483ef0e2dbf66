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

#include "schur/classify.hpp"

using namespace schur;

namespace {

const GroupDescriptor G = z_times_z3();
const GroupDescriptor Z = GroupDescriptor::infinite(1);

Automorphism named(const char* n) { return *named_automorphism(n, G); }

SchurPresentation named_orbit(std::vector<std::string> names, std::int64_t N = 12) { return orbit_ring(G, names, N); }

SchurPresentation torsion_wedge(std::int64_t h, std::vector<Automorphism> inner_gens, bool symmetric_outer,
                                std::int64_t N = 12) {
  WedgeSpec w;
  w.K = torsion_subgroup(G);
  w.H = h == 0 ? w.K : power_subgroup(G, h, true);
  const auto L = local_group(G, w.H);
  for (auto& phi : inner_gens) phi = normalize(L, phi);
  w.inner = orbit_ring(L, std::span<const Automorphism>(inner_gens), h == 0 ? 0 : N / h, ConstructOptions{0});
  w.outer = symmetric_outer ? orbit_ring(Z, std::vector<std::string>{"inversion"}, N) : discrete(Z, N);
  return wedge(G, w, N);
}

FamilyDescriptor orbit_family(std::vector<Automorphism> gens, bool symmetric) {
  FamilyDescriptor d;
  d.variant = Variant::Orbit;
  d.generators = std::move(gens);
  d.symmetric = symmetric;
  d.window = 12;
  return d;
}

}  // namespace

TEST(FindHTest, PsiRingHasIndexThree) {
  // Oracle: the least h with the psi-orbit of every z^(kh), kh <= 12, inside <z>.
  const std::vector<Automorphism> psi{named("psi")};
  std::int64_t expect = 0;
  for (std::int64_t h = 1; h <= 12 && !expect; ++h) {
    bool ok = true;
    for (std::int64_t k = h; k <= 12; k += h)
      for (const auto& g : orbit(G, psi, {k, 0})) ok = ok && g.a == 0;
    if (ok) expect = h;
  }
  EXPECT_EQ(expect, 3);
  EXPECT_EQ(find_h_index(named_orbit({"psi"})), expect);
  EXPECT_EQ(find_H(named_orbit({"psi"})), power_subgroup(G, 3, false));
}

TEST(FindHTest, DiscreteAndCosetWedge) {
  EXPECT_EQ(find_h_index(discrete(G, 12)), 1);
  EXPECT_EQ(find_H(torsion_wedge(0, {}, false)), trivial_subgroup(G));
  EXPECT_EQ(find_h_index(torsion_wedge(4, {}, false)), 4);
}

TEST(ProjectionTest, Examples) {
  EXPECT_EQ(projection_type(named_orbit({"psi"})), Projection::Discrete);
  EXPECT_EQ(projection_type(named_orbit({"xi"})), Projection::Symmetric);
  EXPECT_EQ(projection_type(named_orbit({"rho"})), Projection::Symmetric);
  EXPECT_EQ(projection_type(torsion_wedge(2, {make_automorphism(0, -1, 1)}, true)), Projection::Symmetric);
  EXPECT_EQ(projection_type(torsion_wedge(2, {}, false)), Projection::Discrete);
}

TEST(ClassifyTest, NamedOrbitRings) {
  for (const char* n : {"psi", "delta", "rho", "sigma"}) {
    const auto d = classify(named_orbit({n}));
    EXPECT_EQ(d.variant, Variant::Orbit) << n;
    EXPECT_EQ(d.generators, std::vector<Automorphism>{named(n)}) << n;
    EXPECT_FALSE(d.tower) << n;
    EXPECT_EQ(d.window, 12);
  }
  EXPECT_EQ(classify(named_orbit({"psi", "xi"})), orbit_family({named("psi"), named("xi")}, true));
  EXPECT_EQ(classify(named_orbit({"delta", "xi"})), orbit_family({named("delta"), named("xi")}, true));
}

TEST(ClassifyTest, FullGroupRings) {
  const auto d = classify(discrete(G, 12));
  EXPECT_EQ(d.variant, Variant::Full);
  EXPECT_FALSE(d.symmetric);
  EXPECT_TRUE(d.generators.empty());
  for (const char* n : {"xi", "inversion"}) {
    const auto s = classify(named_orbit({n}));
    EXPECT_EQ(s.variant, Variant::Full) << n;
    EXPECT_TRUE(s.symmetric) << n;
    EXPECT_EQ(s.generators, std::vector<Automorphism>{named("inversion")});
  }
}

TEST(ClassifyTest, WedgeOverIndexTwo) {
  const auto d = classify(torsion_wedge(2, {}, false));
  EXPECT_EQ(d.variant, Variant::Wedge);
  ASSERT_TRUE(d.tower);
  EXPECT_EQ(*d.tower, (Tower{0, 2}));
  EXPECT_TRUE(d.generators.empty());
  EXPECT_FALSE(d.symmetric);
}

TEST(ClassifyTest, CosetWedgeRoundTrips) {
  const auto P = torsion_wedge(0, {}, false);
  const auto d = classify(P);
  EXPECT_EQ(d.variant, Variant::Wedge);
  EXPECT_EQ(*d.tower, (Tower{0, 0}));
  EXPECT_EQ(resynthesize(d), P);
}

TEST(ClassifyTest, SplitLevelsGiveWedgesOfOrbitRings) {
  // psi acting on <z^2> x Z_3, everything else full cosets.
  const auto P = torsion_wedge(2, {named("psi")}, false);
  const auto d = classify(P);
  EXPECT_EQ(d.variant, Variant::Wedge);
  EXPECT_EQ(*d.tower, (Tower{0, 2}));
  EXPECT_EQ(d.generators, std::vector<Automorphism>{named("psi")});
  EXPECT_EQ(resynthesize(d), P);
}

TEST(ClassifyTest, EveryTorsionWedgeRoundTrips) {
  const std::vector<std::vector<Automorphism>> discrete_inner{{}, {make_automorphism(0, 1, 2)}};
  const std::vector<std::vector<Automorphism>> symmetric_inner{
      {make_automorphism(0, -1, 1)}, {named("xi"), make_automorphism(0, -1, 1)}, {named("xi")}};
  for (std::int64_t h : {0, 2, 3, 4}) {
    for (bool sym : {false, true}) {
      for (const auto& gens : sym ? symmetric_inner : discrete_inner) {
        const auto P = torsion_wedge(h, gens, sym);
        const auto d = classify(P);
        EXPECT_EQ(resynthesize(d), P) << "h=" << h << " sym=" << sym;
      }
    }
  }
}

TEST(ClassifyTest, ResynthesizeDispatch) {
  EXPECT_EQ(resynthesize(orbit_family({named("psi")}, false)), named_orbit({"psi"}));
  FamilyDescriptor sym;
  sym.variant = Variant::Full;
  sym.symmetric = true;
  sym.window = 12;
  EXPECT_EQ(resynthesize(sym), named_orbit({"inversion"}));
  EXPECT_EQ(resynthesize(sym, 6), named_orbit({"inversion"}, 6));
}

TEST(ClassifyTest, Errors) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code([] { classify(discrete(G, 6)); }), ErrorCode::WindowTooSmall);
  EXPECT_EQ(code([] { classify(discrete(GroupDescriptor::cyclic(6))); }), ErrorCode::InvalidGroup);
  ClassifyOptions small;
  small.min_window = 6;
  EXPECT_EQ(classify(discrete(G, 6), small).variant, Variant::Full);
  // A verified-looking but broken partition: {z, az} with discrete torsion.
  SchurPresentation bad = discrete(G, 12);
  std::erase_if(bad.classes, [](const BasicSet& c) {
    return c[0] == GroupElement{1, 0} || c[0] == GroupElement{1, 1} || c[0] == GroupElement{-1, 0} ||
           c[0] == GroupElement{-1, 2};
  });
  bad.classes.push_back({{1, 0}, {1, 1}});
  bad.classes.push_back({{-1, 0}, {-1, 2}});
  bad.canonicalize();
  EXPECT_EQ(code([&] { classify(bad); }), ErrorCode::Unclassifiable);
}

TEST(CanonicalGeneratorsTest, PrefersNamedAndSmallest) {
  const auto Q = detail::closure(G, {named("psi"), named("xi")});
  EXPECT_EQ(Q.size(), 4u);
  EXPECT_EQ(canonical_generators(G, Q), (std::vector<Automorphism>{named("psi"), named("xi")}));
  EXPECT_TRUE(canonical_generators(G, detail::closure(G, {})).empty());
  const auto list = parametric_automorphisms(G);
  const std::set<Automorphism> all(list.begin(), list.end());
  EXPECT_EQ(all.size(), 12u);
  EXPECT_EQ(canonical_generators(G, all).size(), 2u);
}

TEST(DescribeTest, ReadableNames) {
  EXPECT_EQ(describe_family(classify(named_orbit({"psi"}))), "orbit <psi>");
  EXPECT_EQ(describe_family(classify(discrete(G, 12))), "full F[G]");
}
