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

// Build the psi orbit ring over Z x Z_3, verify it and do some arithmetic
// with its class sums.

#include <iostream>

#include "schur/all.hpp"

int main() {
  using namespace schur;
  const GroupDescriptor G = z_times_z3();
  const auto P = orbit_ring(G, std::vector<std::string>{"psi"}, 12);
  std::cout << "classes in the window: " << P.classes.size() << "\n";

  const auto report = verify_axioms(P);
  std::cout << "verdict: " << to_string(report.verdict) << " after " << report.checked_pairs << " pairs\n";

  const PartitionIndex idx(P);
  const auto& C = P.classes[*idx.class_of(GroupElement{1, 0})];
  const auto x = RingElement<>::simple_quantity(C);
  std::cout << "C      = " << format_set(C) << "\n";
  std::cout << "C*     = " << format_ring_element(star(G, x)) << "\n";
  std::cout << "C^2    = " << format_ring_element(convolve(G, x, x)) << "\n";
  std::cout << "C^(2)  = " << format_ring_element(frobenius(G, x, 2)) << "\n";
  return report.ok() ? 0 : 1;
}
