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

// Count the Schur rings over small finite groups and sort them by how they
// arise from smaller rings.

#include <iostream>
#include <map>

#include "schur/all.hpp"

int main(int argc, char** argv) {
  using namespace schur;
  std::vector<std::string> groups{"Z2", "Z3", "Z4", "Z6", "Z8", "Z2xZ2", "Z2xZ3", "Z3xZ3"};
  if (argc > 1) groups.assign(argv + 1, argv + argc);
  for (const auto& name : groups) {
    const auto G = parse_group(name);
    const auto rings = enumerate_finite(G);
    std::map<std::string, int> kinds;
    for (const auto& P : rings) ++kinds[std::string(to_string(is_traditional(P).kind))];
    std::cout << name << ": " << rings.size() << " rings";
    for (const auto& [k, v] : kinds) std::cout << "  " << k << "=" << v;
    std::cout << "\n";
  }
  return 0;
}
