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

#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "schur/group.hpp"
#include "schur/group_ring.hpp"

namespace schur {

/// A partition claiming to be the set of basic sets of a Schur ring.
///
/// For a finite group `classes` is a complete partition of G. For the
/// infinite group it holds every class that meets the window |z| <= window;
/// those classes are given completely.
struct SchurPresentation {
  GroupDescriptor group;
  std::vector<BasicSet> classes;
  std::int64_t window = 0;
  std::string oracle_tag;

  void canonicalize() {
    for (auto& c : classes) sort_unique(c);
    std::sort(classes.begin(), classes.end());
    if (group.is_finite()) window = 0;
  }

  /// Equality of the partitions; the tag is provenance only.
  friend bool operator==(const SchurPresentation& x, const SchurPresentation& y) {
    return x.group == y.group && x.window == y.window && x.classes == y.classes;
  }
};

inline std::int64_t max_radius(const GroupDescriptor& G, const BasicSet& c) {
  std::int64_t r = 0;
  for (const auto& g : c) r = std::max(r, G.radius(g));
  return r;
}

/// Radius up to which a presentation is known: its window, or unbounded for
/// a finite group.
inline std::int64_t reach(const SchurPresentation& P) {
  return P.group.is_finite() ? std::numeric_limits<std::int64_t>::max() / 4 : P.window;
}

/// Element -> class lookup. Construction checks that the presentation is a
/// partition of the window; anything else is MalformedPartition.
class PartitionIndex {
 public:
  explicit PartitionIndex(const SchurPresentation& P) : group_(P.group) {
    const auto& G = P.group;
    G.validate();
    if (!G.is_finite() && P.window < 1) throw Error(ErrorCode::MalformedPartition, "window must be >= 1");
    for (std::size_t i = 0; i < P.classes.size(); ++i) {
      const auto& c = P.classes[i];
      if (c.empty()) throw Error(ErrorCode::MalformedPartition, "empty class");
      bool meets = false;
      for (const auto& g : c) {
        if (!G.is_normalized(g)) {
          throw Error(ErrorCode::MalformedPartition, "element " + format_element(g) + " is not reduced");
        }
        if (!map_.emplace(g, i).second) {
          throw Error(ErrorCode::MalformedPartition, "element " + format_element(g) + " lies in two classes");
        }
        meets = meets || G.in_window(g, P.window);
      }
      if (!meets) throw Error(ErrorCode::MalformedPartition, "class " + format_set(c) + " misses the window");
    }
    for (const auto& g : G.window_elements(P.window)) {
      if (!map_.count(g)) throw Error(ErrorCode::MalformedPartition, "element " + format_element(g) + " is in no class");
    }
  }

  std::optional<std::size_t> class_of(const GroupElement& g) const {
    auto it = map_.find(group_.normalize(g));
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

 private:
  GroupDescriptor group_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> map_;
};

inline void check_well_formed(const SchurPresentation& P) { PartitionIndex idx(P); }

inline std::optional<std::size_t> identity_class(const SchurPresentation& P, const PartitionIndex& idx) {
  return idx.class_of(P.group.identity());
}

/// True when `set` is a union of classes. Elements outside every known
/// class make the answer false.
inline bool is_union_of_classes(const SchurPresentation& P, const PartitionIndex& idx, const BasicSet& set) {
  std::vector<GroupElement> sorted(set.begin(), set.end());
  sort_unique(sorted);
  for (const auto& g : sorted) {
    auto ci = idx.class_of(g);
    if (!ci) return false;
    for (const auto& h : P.classes[*ci])
      if (!std::binary_search(sorted.begin(), sorted.end(), h)) return false;
  }
  return true;
}

/// Coefficient-constancy membership test for the span of the class sums.
/// Returns a description of the first violation, or nothing.
template <class Coeff>
std::optional<std::string> span_violation(const SchurPresentation& P, const PartitionIndex& idx,
                                          const RingElement<Coeff>& x) {
  for (const auto& [g, c] : x.terms()) {
    auto ci = idx.class_of(g);
    if (!ci) return "element " + format_element(g) + " lies outside the known classes";
    for (const auto& h : P.classes[*ci]) {
      if (x.coeff(h) != c) {
        return "coefficient differs on class " + format_set(P.classes[*ci]) + ": " + format_element(g) + " has " +
               coeff_to_string(c) + ", " + format_element(h) + " has " + coeff_to_string(x.coeff(h));
      }
    }
  }
  return std::nullopt;
}

template <class Coeff>
bool in_span(const SchurPresentation& P, const PartitionIndex& idx, const RingElement<Coeff>& x) {
  return !span_violation(P, idx, x).has_value();
}

inline BasicSet star_set(const GroupDescriptor& G, const BasicSet& c) {
  BasicSet out;
  out.reserve(c.size());
  for (const auto& g : c) out.push_back(G.inverse(g));
  sort_unique(out);
  return out;
}

inline BasicSet product_set(const GroupDescriptor& G, const BasicSet& c, const BasicSet& d) {
  BasicSet out;
  for (const auto& g : c)
    for (const auto& h : d) out.push_back(G.mul(g, h));
  sort_unique(out);
  return out;
}

inline std::string format_presentation(const SchurPresentation& P) {
  std::string out = to_string(P.group);
  if (!P.group.is_finite()) out += " (window " + std::to_string(P.window) + ")";
  out += ": ";
  for (std::size_t i = 0; i < P.classes.size(); ++i) out += (i ? " " : "") + format_set(P.classes[i]);
  return out;
}

}  // namespace schur
