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

// Discrete, trivial, orbit, tensor and wedge Schur rings.
//
// Over the infinite group every constructor emits all classes meeting the
// window |z| <= N, each class in full.

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "schur/presentation.hpp"
#include "schur/schur.hpp"

namespace schur {

struct ConstructOptions {
  // Windows below this are refused for infinite groups.
  std::int64_t min_window = 3;
  std::size_t orbit_bound = kDefaultOrbitBound;
};

namespace detail {

inline std::int64_t checked_window(const GroupDescriptor& G, std::int64_t N, const ConstructOptions& opts) {
  if (G.is_finite()) return 0;
  if (N < 1 || N < opts.min_window) {
    throw Error(ErrorCode::WindowTooSmall,
                "window " + std::to_string(N) + " is below the minimum " + std::to_string(opts.min_window));
  }
  return N;
}

}  // namespace detail

inline SchurPresentation discrete(const GroupDescriptor& G, std::int64_t N = 0, const ConstructOptions& opts = {}) {
  SchurPresentation P;
  P.group = G;
  P.window = detail::checked_window(G, N, opts);
  for (const auto& g : G.window_elements(P.window)) P.classes.push_back({g});
  P.oracle_tag = "discrete";
  P.canonicalize();
  return P;
}

inline SchurPresentation trivial(const GroupDescriptor& G) {
  if (!G.is_finite()) throw Error(ErrorCode::InfiniteGroup, "an infinite group has no trivial Schur ring");
  SchurPresentation P;
  P.group = G;
  P.classes.push_back({G.identity()});
  BasicSet rest;
  for (const auto& g : G.elements())
    if (g != G.identity()) rest.push_back(g);
  if (!rest.empty()) P.classes.push_back(rest);
  P.oracle_tag = "trivial";
  P.canonicalize();
  return P;
}

inline SchurPresentation orbit_ring(const GroupDescriptor& G, std::span<const Automorphism> gens, std::int64_t N = 0,
                                    const ConstructOptions& opts = {}) {
  SchurPresentation P;
  P.group = G;
  P.window = detail::checked_window(G, N, opts);
  // Closing the group first detects an unbounded generating set once.
  generated_group(G, gens, opts.orbit_bound);
  std::set<GroupElement> seen;
  for (const auto& g : G.window_elements(P.window)) {
    if (seen.count(g)) continue;
    BasicSet c = orbit(G, gens, g, opts.orbit_bound);
    seen.insert(c.begin(), c.end());
    P.classes.push_back(std::move(c));
  }
  std::string tag = "orbit";
  for (const auto& phi : gens) tag += ":" + automorphism_name(G, phi).value_or("?");
  P.oracle_tag = tag;
  P.canonicalize();
  return P;
}

inline SchurPresentation orbit_ring(const GroupDescriptor& G, std::initializer_list<Automorphism> gens,
                                    std::int64_t N = 0, const ConstructOptions& opts = {}) {
  std::vector<Automorphism> v(gens);
  return orbit_ring(G, std::span<const Automorphism>(v), N, opts);
}

/// The orbit ring of the named automorphisms.
inline SchurPresentation orbit_ring(const GroupDescriptor& G, const std::vector<std::string>& names,
                                    std::int64_t N = 0, const ConstructOptions& opts = {}) {
  std::vector<Automorphism> v;
  for (const auto& n : names) {
    auto phi = named_automorphism(n, G);
    if (!phi) throw Error(ErrorCode::InvalidAutomorphism, "unknown automorphism '" + n + "'");
    v.push_back(*phi);
  }
  return orbit_ring(G, std::span<const Automorphism>(v), N, opts);
}

// ---------------------------------------------------------------------------

namespace detail {

/// Reads a group with a single cyclic factor as (order, uses_z); order 0 is Z.
inline std::optional<std::pair<std::int64_t, bool>> single_factor(const GroupDescriptor& G) {
  if (!G.is_finite()) {
    if (G.m() == 1) return std::make_pair(std::int64_t{0}, true);
    return std::nullopt;
  }
  if (*G.free_order == 1) return std::make_pair(G.m(), false);
  if (G.m() == 1) return std::make_pair(*G.free_order, true);
  return std::nullopt;
}

}  // namespace detail

/// A (x) B over H x K, where H becomes the z-factor and K the a-factor of the
/// product. Each factor must be cyclic and K must be finite.
inline SchurPresentation tensor(const SchurPresentation& A, const SchurPresentation& B) {
  const auto fa = detail::single_factor(A.group);
  const auto fb = detail::single_factor(B.group);
  if (!fa || !fb || fb->first == 0) {
    throw Error(ErrorCode::UnsupportedProduct,
                "cannot realize " + to_string(A.group) + " x " + to_string(B.group) + " as free x torsion");
  }
  check_well_formed(A);
  check_well_formed(B);
  SchurPresentation P;
  P.group = fa->first == 0 ? GroupDescriptor::infinite(fb->first) : GroupDescriptor::finite(fa->first, fb->first);
  P.window = A.window;
  auto z_of = [&](const GroupElement& g) { return fa->second ? g.z : g.a; };
  auto a_of = [&](const GroupElement& g) { return fb->second ? g.z : g.a; };
  for (const auto& c : A.classes) {
    for (const auto& d : B.classes) {
      BasicSet cd;
      for (const auto& g : c)
        for (const auto& h : d) cd.push_back(P.group.normalize({z_of(g), a_of(h)}));
      P.classes.push_back(std::move(cd));
    }
  }
  P.oracle_tag = "tensor";
  P.canonicalize();
  return P;
}

// ---------------------------------------------------------------------------

/// A wedge tower 1 < K <= H < G with an S-ring over H (in the coordinates of
/// H) and one over G/K.
struct WedgeSpec {
  Subgroup H;
  Subgroup K;
  SchurPresentation inner;
  SchurPresentation outer;
};

inline SchurPresentation wedge(const GroupDescriptor& G, const WedgeSpec& spec, std::int64_t N = 0,
                               const ConstructOptions& opts = {}) {
  const std::int64_t window = detail::checked_window(G, N, opts);
  const auto& [H, K, inner, outer] = spec;
  if (is_trivial(G, K) || !is_subgroup_of(G, K, H) || is_whole(G, H)) {
    throw Error(ErrorCode::BadTower, "need 1 < K <= H < G, got K = " + to_string(G, K) + ", H = " + to_string(G, H));
  }
  if (!subgroup_order(G, K)) throw Error(ErrorCode::BadTower, "K-cosets must be finite");
  if (!(inner.group == local_group(G, H))) {
    throw Error(ErrorCode::IncompatibleWedge, "inner ring is over " + to_string(inner.group));
  }
  const GroupDescriptor Q = quotient_group(G, K);
  if (!(outer.group == Q)) throw Error(ErrorCode::IncompatibleWedge, "outer ring is over " + to_string(outer.group));
  check_well_formed(inner);
  check_well_formed(outer);
  if (!inner.group.is_finite() && inner.window < window / H.z_index) {
    throw Error(ErrorCode::IncompatibleWedge, "inner window does not cover H inside the window");
  }
  if (!Q.is_finite() && outer.window < window) {
    throw Error(ErrorCode::IncompatibleWedge, "outer window does not cover the window");
  }

  // K must be an S-subgroup of the inner ring.
  std::vector<GroupElement> k_local;
  for (const auto& g : subgroup_generators(G, K)) k_local.push_back(to_local(G, H, g));
  const Subgroup K_inner = subgroup_from_generators(inner.group, std::span<const GroupElement>(k_local));
  if (!is_ssubgroup(inner, K_inner)) throw Error(ErrorCode::IncompatibleWedge, "K is not an S-subgroup of the inner ring");

  // Images of inner classes must be outer classes; outer classes must not
  // straddle H/K.
  const PartitionIndex outer_idx(outer);
  SchurPresentation P;
  P.group = G;
  P.window = window;
  for (const auto& c_local : inner.classes) {
    BasicSet c;
    for (const auto& g : c_local) c.push_back(from_local(G, H, g));
    sort_unique(c);
    BasicSet img;
    for (const auto& g : c) img.push_back(Q.normalize(g));
    sort_unique(img);
    auto oi = outer_idx.class_of(img.front());
    if (!oi || outer.classes[*oi] != img) {
      throw Error(ErrorCode::IncompatibleWedge,
                  "inner class " + format_set(c) + " projects to " + format_set(img) + ", which is not an outer class");
    }
    if (std::any_of(c.begin(), c.end(), [&](auto& g) { return G.in_window(g, window); })) P.classes.push_back(std::move(c));
  }
  const auto k_elems = subgroup_elements(G, K, 0);
  for (const auto& d : outer.classes) {
    const bool inside = [&] {
      std::size_t hits = 0;
      for (const auto& x : d) hits += contains(G, H, G.normalize(x)) ? 1 : 0;
      if (hits != 0 && hits != d.size()) {
        throw Error(ErrorCode::IncompatibleWedge, "outer class " + format_set(d) + " straddles H/K");
      }
      return hits != 0;
    }();
    if (inside) continue;
    BasicSet c;
    for (const auto& x : d)
      for (const auto& k : k_elems) c.push_back(G.mul(G.normalize(x), k));
    sort_unique(c);
    if (std::any_of(c.begin(), c.end(), [&](auto& g) { return G.in_window(g, window); })) P.classes.push_back(std::move(c));
  }
  P.oracle_tag = "wedge";
  P.canonicalize();
  return P;
}

}  // namespace schur
