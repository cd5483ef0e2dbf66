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

// Classify a few presentations and rebuild them from their descriptors.

#include <iostream>

#include "schur/all.hpp"

int main() {
  using namespace schur;
  const GroupDescriptor G = z_times_z3();
  const std::int64_t N = 12;

  std::vector<std::pair<std::string, SchurPresentation>> cases;
  cases.emplace_back("orbit of delta", orbit_ring(G, std::vector<std::string>{"delta"}, N));
  cases.emplace_back("orbit of inversion", orbit_ring(G, std::vector<std::string>{"inversion"}, N));

  WedgeSpec w;
  w.K = torsion_subgroup(G);
  w.H = power_subgroup(G, 3, true);
  w.inner = discrete(local_group(G, w.H), N / 3, ConstructOptions{0});
  w.outer = discrete(GroupDescriptor::infinite(1), N, ConstructOptions{0});
  cases.emplace_back("wedge over <z^3> x Z_3", wedge(G, w, N));

  int bad = 0;
  for (const auto& [label, P] : cases) {
    const auto d = classify(P);
    const bool same = resynthesize(d, N) == P;
    std::cout << label << ": " << describe_family(d) << "\n  " << descriptor_to_json(d).dump() << "\n  rebuilt "
              << (same ? "identically" : "DIFFERENTLY") << "\n";
    bad += !same;
  }
  return bad;
}
