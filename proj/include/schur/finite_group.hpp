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

// Small finite abelian groups given by a Cayley table, with subgroups,
// quotients and a brute-force automorphism group. Elements are 0..n-1,
// identity 0. Used by the enumerator and the traditionality test, which
// recurse into subgroups and quotients that need not be cyclic-by-cyclic.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "schur/group.hpp"

namespace schur {

using ElementSet = std::vector<int>;  // sorted element indices

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  /// From a full multiplication table with identity 0.
  explicit FiniteAbelianGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
    const int n = order();
    inv_.assign(n, -1);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (table_[x][y] == 0) inv_[x] = y;
  }

  static FiniteAbelianGroup from_descriptor(const GroupDescriptor& G) {
    FiniteAbelianGroup out;
    out.labels_ = G.elements();
    std::map<GroupElement, int> index;
    for (int i = 0; i < static_cast<int>(out.labels_.size()); ++i) index[out.labels_[i]] = i;
    const int n = static_cast<int>(out.labels_.size());
    out.table_.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) out.table_[x][y] = index.at(G.mul(out.labels_[x], out.labels_[y]));
    out.inv_.assign(n, 0);
    for (int x = 0; x < n; ++x) out.inv_[x] = index.at(G.inverse(out.labels_[x]));
    return out;
  }

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int x, int y) const { return table_[x][y]; }
  int inv(int x) const { return inv_[x]; }

  /// Original labels when built from a descriptor.
  const std::vector<GroupElement>& labels() const { return labels_; }

  ElementSet closure(const ElementSet& gens) const {
    std::vector<char> in(order(), 0);
    ElementSet out{0};
    in[0] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (int g : gens) {
        const int y = mul(out[i], g);
        if (!in[y]) {
          in[y] = 1;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Every subgroup. Groups here have rank at most 2, but closures of every
  /// pair of elements are taken so any small abelian group works as long as
  /// it is 2-generated.
  std::vector<ElementSet> subgroups() const {
    std::set<ElementSet> found;
    for (int x = 0; x < order(); ++x)
      for (int y = x; y < order(); ++y) found.insert(closure({x, y}));
    return {found.begin(), found.end()};
  }

  /// A generating set of minimum size.
  ElementSet generators() const {
    if (order() == 1) return {};
    for (int x = 0; x < order(); ++x)
      if (static_cast<int>(closure({x}).size()) == order()) return {x};
    for (int x = 0; x < order(); ++x)
      for (int y = x + 1; y < order(); ++y)
        if (static_cast<int>(closure({x, y}).size()) == order()) return {x, y};
    ElementSet all;
    for (int x = 1; x < order(); ++x) all.push_back(x);
    return all;
  }

  /// The subgroup S as a group of its own; `embed` maps local to global.
  FiniteAbelianGroup subgroup(const ElementSet& S, std::vector<int>* embed) const {
    std::map<int, int> local;
    for (int i = 0; i < static_cast<int>(S.size()); ++i) local[S[i]] = i;
    std::vector<std::vector<int>> t(S.size(), std::vector<int>(S.size()));
    for (std::size_t i = 0; i < S.size(); ++i)
      for (std::size_t j = 0; j < S.size(); ++j) t[i][j] = local.at(mul(S[i], S[j]));
    if (embed) *embed = S;
    return FiniteAbelianGroup(std::move(t));
  }

  /// G/K; `project` maps each element to its coset index (K itself is 0).
  FiniteAbelianGroup quotient(const ElementSet& K, std::vector<int>* project) const {
    std::vector<int> coset(order(), -1);
    std::vector<int> reps;
    for (int x = 0; x < order(); ++x) {
      if (coset[x] != -1) continue;
      const int id = static_cast<int>(reps.size());
      reps.push_back(x);
      for (int k : K) coset[mul(x, k)] = id;
    }
    std::vector<std::vector<int>> t(reps.size(), std::vector<int>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j) t[i][j] = coset[mul(reps[i], reps[j])];
    if (project) *project = coset;
    return FiniteAbelianGroup(std::move(t));
  }

  using Map = std::vector<int>;  // phi[x]

  /// All automorphisms, by trying every image of a minimum generating set.
  std::vector<Map> automorphisms() const {
    const ElementSet gens = generators();
    const int n = order();
    // Express each element as a word: parent element and generator used.
    std::vector<int> parent(n, -1), via(n, -1);
    std::vector<int> queue{0};
    parent[0] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const int y = mul(queue[i], gens[g]);
        if (parent[y] == -1) {
          parent[y] = queue[i];
          via[y] = static_cast<int>(g);
          queue.push_back(y);
        }
      }
    }
    std::vector<Map> out;
    std::vector<int> images(gens.size(), 0);
    while (true) {
      Map phi(n, -1);
      phi[0] = 0;
      for (std::size_t i = 1; i < queue.size(); ++i) {
        const int x = queue[i];
        phi[x] = mul(phi[parent[x]], images[via[x]]);
      }
      if (is_automorphism(phi)) out.push_back(phi);
      std::size_t pos = 0;
      while (pos < images.size() && ++images[pos] == n) images[pos++] = 0;
      if (pos == images.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_automorphism(const Map& phi) const {
    std::vector<char> hit(order(), 0);
    for (int x = 0; x < order(); ++x) {
      if (hit[phi[x]]) return false;
      hit[phi[x]] = 1;
    }
    for (int x = 0; x < order(); ++x)
      for (int y = 0; y < order(); ++y)
        if (phi[mul(x, y)] != mul(phi[x], phi[y])) return false;
    return true;
  }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<GroupElement> labels_;
};

}  // namespace schur
