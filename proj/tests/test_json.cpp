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

#include "schur/json.hpp"

using namespace schur;

namespace {

const GroupDescriptor G = z_times_z3();

}  // namespace

TEST(JsonTest, PresentationSchema) {
  const auto P = discrete(GroupDescriptor::cyclic(3));
  EXPECT_EQ(presentation_to_json(P).dump(),
            R"({"group":{"free":1,"torsion":3},"window":0,"classes":[[[0,0]],[[0,1]],[[0,2]]]})");
  const auto Q = orbit_ring(G, std::vector<std::string>{"psi"}, 3);
  const auto j = presentation_to_json(Q);
  EXPECT_EQ(j["group"]["free"], "Z");
  EXPECT_EQ(j["window"], 3);
  EXPECT_EQ(presentation_from_json(j), Q);
  EXPECT_EQ(presentation_to_json(presentation_from_json(j)).dump(), j.dump());
}

TEST(JsonTest, ClassesAreSortedByLeastElement) {
  const auto j = Json::parse(R"({"group":"Z4","classes":[[[0,3],[0,1]],[[0,2]],[[0,0]]]})");
  const auto P = presentation_from_json(j);
  EXPECT_EQ(presentation_to_json(P)["classes"].dump(), "[[[0,0]],[[0,1],[0,3]],[[0,2]]]");
}

TEST(JsonTest, MalformedInputIsRejected) {
  EXPECT_THROW(presentation_from_json(Json::parse(R"({"classes":[]})")), Error);
  EXPECT_THROW(presentation_from_json(Json::parse(R"({"group":{"free":"Q","torsion":3},"classes":[]})")), Error);
  EXPECT_THROW(presentation_from_json(Json::parse(R"({"group":"Z3","classes":[[[0]]]})")), Error);
  EXPECT_THROW(presentation_from_json(Json::parse(R"({"group":"Z3","classes":[[[0,"x"]]]})")), Error);
  // Unreduced elements survive parsing and fail the partition check.
  const auto P = presentation_from_json(Json::parse(R"({"group":"Z3","classes":[[[0,0]],[[0,1],[0,5]]]})"));
  EXPECT_THROW(check_well_formed(P), Error);
}

TEST(JsonTest, Automorphisms) {
  EXPECT_EQ(automorphism_to_json(G, *named_automorphism("psi", G)), "psi");
  const auto tau = make_automorphism(0, -1, 1);
  EXPECT_EQ(automorphism_to_json(G, tau).dump(), R"({"z":[0,-1],"a":1})");
  EXPECT_EQ(automorphism_from_json(automorphism_to_json(G, tau), G), normalize(G, tau));
  EXPECT_EQ(automorphism_from_json("inversion", G), *named_automorphism("inversion", G));
  EXPECT_THROW(automorphism_from_json("omega", G), Error);
  EXPECT_THROW(automorphism_from_json(Json::parse(R"({"z":[0,2],"a":1})"), G), Error);
}

TEST(JsonTest, DescriptorRoundTrip) {
  for (const auto& P : {orbit_ring(G, std::vector<std::string>{"psi", "xi"}, 12), discrete(G, 12),
                        orbit_ring(G, std::vector<std::string>{"xi"}, 12),
                        construct_from_json(Json::parse(R"({"kind":"wedge","H":3})"), 12)}) {
    const auto d = classify(P);
    const auto j = descriptor_to_json(d);
    EXPECT_EQ(descriptor_from_json(j), d) << j.dump();
    EXPECT_EQ(resynthesize(descriptor_from_json(j)), P);
  }
  const auto full = descriptor_to_json(classify(orbit_ring(G, std::vector<std::string>{"xi"}, 12)));
  EXPECT_EQ(full.dump(), R"({"variant":"full","generators":["inversion"],"tower":null,"symmetric":true,"window":12})");
  const auto w = descriptor_to_json(classify(construct_from_json(Json::parse(R"({"kind":"wedge","H":3})"), 12)));
  EXPECT_EQ(w["tower"].dump(), R"({"K":0,"H":3})");
  EXPECT_THROW(descriptor_from_json(Json::parse(R"({"variant":"wedge"})")), Error);
}

TEST(JsonTest, ReportSchema) {
  SchurPresentation P;
  P.group = GroupDescriptor::cyclic(4);
  P.classes = {{{0, 0}}, {{0, 1}, {0, 2}}, {{0, 3}}};
  const auto j = report_to_json(verify_axioms(P));
  EXPECT_EQ(j["verdict"], "invalid");
  EXPECT_EQ(j["witness"]["kind"], "star");
  EXPECT_EQ(j["witness"]["C"].dump(), "[[0,1],[0,2]]");
  const auto ok = report_to_json(verify_axioms(discrete(G, 3)));
  EXPECT_EQ(ok["verdict"], "valid_up_to_window");
  EXPECT_TRUE(ok["witness"].is_null());
}

TEST(JsonTest, ConstructionSpecs) {
  EXPECT_EQ(construct_from_json(Json::parse(R"({"kind":"discrete"})"), 12), discrete(G, 12));
  EXPECT_EQ(construct_from_json(Json::parse(R"({"kind":"trivial","group":"Z6"})"), 12),
            trivial(GroupDescriptor::cyclic(6)));
  EXPECT_EQ(construct_from_json(Json::parse(R"({"kind":"orbit","gens":["psi"]})"), 12),
            orbit_ring(G, std::vector<std::string>{"psi"}, 12));
  const auto tensor_spec = Json::parse(
      R"({"kind":"tensor","left":{"kind":"orbit","gens":["inversion"]},"right":{"kind":"trivial"}})");
  EXPECT_EQ(construct_from_json(tensor_spec, 12),
            tensor(orbit_ring(GroupDescriptor::infinite(1), std::vector<std::string>{"inversion"}, 12),
                   trivial(GroupDescriptor::cyclic(3))));
  const auto T = torsion_subgroup(G);
  EXPECT_EQ(construct_from_json(Json::parse(R"({"kind":"wedge"})"), 12),
            wedge(G, {T, T, discrete(GroupDescriptor::cyclic(3)), discrete(GroupDescriptor::infinite(1), 12)}, 12));
  const auto explicit_wedge = Json::parse(
      R"({"kind":"wedge","H":[[2,0],[0,1]],"K":[[0,1]],"inner":{"kind":"discrete"},"outer":{"kind":"discrete"}})");
  EXPECT_EQ(construct_from_json(explicit_wedge, 12), construct_from_json(Json::parse(R"({"kind":"wedge","H":2})"), 12));
  EXPECT_THROW(construct_from_json(Json::parse(R"({"kind":"blend"})"), 12), Error);
  EXPECT_THROW(construct_from_json(Json::parse(R"({"gens":[]})"), 12), Error);
}

TEST(JsonTest, PipelineIsByteIdentical) {
  for (const char* spec : {R"({"kind":"orbit","gens":["sigma"]})", R"({"kind":"orbit","gens":["delta","xi"]})",
                           R"({"kind":"wedge","H":2,"inner":{"kind":"orbit","gens":["psi"]}})",
                           R"({"kind":"discrete"})"}) {
    const auto built = presentation_to_json(construct_from_json(Json::parse(spec), 12)).dump();
    const auto P = presentation_from_json(Json::parse(built));
    const auto d = descriptor_from_json(Json::parse(descriptor_to_json(classify(P)).dump()));
    EXPECT_EQ(presentation_to_json(resynthesize(d)).dump(), built) << spec;
  }
}
