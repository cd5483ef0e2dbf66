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

// S-sets, S-subgroups, restriction, quotients and multiplier sets.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "schur/presentation.hpp"
#include "schur/verify.hpp"

namespace schur {

/// Splits supp(x) by coefficient value, ascending. Every part is a union of
/// classes of P.
template <class Coeff>
std::vector<std::pair<Coeff, BasicSet>> level_sets(const RingElement<Coeff>& x, const SchurPresentation& P) {
  const PartitionIndex idx(P);
  if (auto why = span_violation(P, idx, x)) throw Error(ErrorCode::NotInSpan, *why);
  std::map<Coeff, BasicSet> parts;
  for (const auto& [g, c] : x.terms()) parts[c].push_back(g);
  std::vector<std::pair<Coeff, BasicSet>> out;
  for (auto& [c, s] : parts) {
    sort_unique(s);
    if (!is_union_of_classes(P, idx, s)) throw Error(ErrorCode::NotSSet, "level set " + format_set(s));
    out.emplace_back(c, std::move(s));
  }
  return out;
}

/// True when every element of S inside the window lies in a class contained
/// in S. Exact for finite groups.
inline bool is_ssubgroup(const SchurPresentation& P, const PartitionIndex& idx, const Subgroup& S) {
  const auto& G = P.group;
  for (const auto& g : subgroup_elements(G, S, P.window)) {
    auto ci = idx.class_of(g);
    if (!ci) return false;
    for (const auto& h : P.classes[*ci])
      if (!contains(G, S, h)) return false;
  }
  return true;
}

inline bool is_ssubgroup(const SchurPresentation& P, const Subgroup& S) { return is_ssubgroup(P, PartitionIndex(P), S); }

inline bool torsion_is_ssubgroup(const SchurPresentation& P) { return is_ssubgroup(P, torsion_subgroup(P.group)); }

/// <supp x>, checked to be an S-subgroup.
template <class Coeff>
Subgroup generated_subgroup(const RingElement<Coeff>& x, const SchurPresentation& P) {
  const PartitionIndex idx(P);
  if (auto why = span_violation(P, idx, x)) throw Error(ErrorCode::NotInSpan, *why);
  const BasicSet supp = x.support();
  const Subgroup S = subgroup_from_generators(P.group, std::span<const GroupElement>(supp));
  if (!is_ssubgroup(P, idx, S)) {
    throw Error(ErrorCode::NotSSubgroup, to_string(P.group, S) + " is not a union of classes");
  }
  return S;
}

/// The classes of P inside H, written in the coordinates of H.
inline SchurPresentation restrict(const SchurPresentation& P, const Subgroup& H) {
  const auto& G = P.group;
  const PartitionIndex idx(P);
  if (!is_ssubgroup(P, idx, H)) throw Error(ErrorCode::NotSSubgroup, to_string(G, H) + " is not an S-subgroup");
  SchurPresentation out;
  out.group = local_group(G, H);
  const bool free_local = !out.group.is_finite();
  out.window = free_local ? P.window / (G.is_finite() ? 1 : H.z_index) : 0;
  if (free_local && out.window < 1) throw Error(ErrorCode::WindowTooSmall, "window does not reach the subgroup");
  for (const auto& c : P.classes) {
    if (!contains(G, H, c.front())) continue;
    BasicSet local;
    for (const auto& g : c) local.push_back(to_local(G, H, g));
    sort_unique(local);
    if (free_local && max_radius(out.group, local) > out.window && std::none_of(local.begin(), local.end(), [&](auto& g) {
          return out.group.in_window(g, out.window);
        }))
      continue;
    out.classes.push_back(std::move(local));
  }
  out.oracle_tag = P.oracle_tag.empty() ? "" : P.oracle_tag + "|restrict";
  out.canonicalize();
  return out;
}

/// The image of P in G/K; K must be an S-subgroup with no diagonal part.
inline SchurPresentation quotient(const SchurPresentation& P, const Subgroup& K) {
  const auto& G = P.group;
  const PartitionIndex idx(P);
  if (!is_ssubgroup(P, idx, K)) throw Error(ErrorCode::NotSSubgroup, to_string(G, K) + " is not an S-subgroup");
  SchurPresentation out;
  out.group = quotient_group(G, K);
  out.window = out.group.is_finite() ? 0 : P.window;
  if (out.group.is_finite() && !G.is_finite() && P.window < K.z_index) {
    throw Error(ErrorCode::WindowTooSmall, "window does not cover the finite quotient");
  }
  std::map<GroupElement, std::size_t> owner;
  for (const auto& c : P.classes) {
    BasicSet img;
    for (const auto& g : c) img.push_back(out.group.normalize(g));
    sort_unique(img);
    auto it = owner.find(img.front());
    if (it != owner.end()) {
      if (out.classes[it->second] != img) {
        throw Error(ErrorCode::MalformedPartition,
                    "images " + format_set(img) + " and " + format_set(out.classes[it->second]) + " overlap");
      }
      continue;
    }
    for (const auto& g : img) {
      if (owner.count(g)) {
        throw Error(ErrorCode::MalformedPartition, "image " + format_set(img) + " overlaps another image");
      }
      owner[g] = out.classes.size();
    }
    out.classes.push_back(std::move(img));
  }
  out.oracle_tag = P.oracle_tag.empty() ? "" : P.oracle_tag + "|quotient";
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// Multiplier sets X^[p] = {x^p : |X n xE| != 0 mod p}, E the p-torsion.

namespace detail {

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::int64_t torsion_size(const GroupDescriptor& G) { return G.is_finite() ? G.order() : G.m(); }

inline void check_multiplier_args(const SchurPresentation& P, const PartitionIndex& idx, const BasicSet& X,
                                  std::int64_t p) {
  if (!is_prime(p) || torsion_size(P.group) % p != 0) {
    throw Error(ErrorCode::BadPrime, std::to_string(p) + " is not a prime divisor of |T(G)|");
  }
  if (X.empty() || !is_union_of_classes(P, idx, X)) throw Error(ErrorCode::NotSSet, format_set(X) + " is not an S-set");
}

/// Checks that every known class meeting Y lies inside Y. Elements of Y
/// beyond the window are not decidable and are skipped.
inline void assert_sset(const SchurPresentation& P, const PartitionIndex& idx, const BasicSet& Y) {
  for (const auto& y : Y) {
    auto ci = idx.class_of(y);
    if (!ci) continue;
    for (const auto& h : P.classes[*ci]) {
      if (!std::binary_search(Y.begin(), Y.end(), h)) {
        throw Error(ErrorCode::NotSSet, "multiplier set " + format_set(Y) + " splits class " + format_set(P.classes[*ci]));
      }
    }
  }
}

}  // namespace detail

/// p-torsion elements of G (for G = Z x Z_m simply the p-torsion of Z_m).
inline BasicSet p_torsion(const GroupDescriptor& G, std::int64_t p) {
  BasicSet out;
  const auto candidates = G.is_finite() ? G.elements() : G.window_elements(0);
  for (const auto& g : candidates)
    if (G.pow(g, p) == G.identity()) out.push_back(g);
  return out;
}

/// X^[p] straight from the coset-count definition.
inline BasicSet multiplier_set_raw(const GroupDescriptor& G, const BasicSet& X, std::int64_t p) {
  const BasicSet E = p_torsion(G, p);
  std::vector<GroupElement> sorted(X);
  sort_unique(sorted);
  BasicSet out;
  for (const auto& x : sorted) {
    std::int64_t count = 0;
    for (const auto& e : E) count += std::binary_search(sorted.begin(), sorted.end(), G.mul(x, e)) ? 1 : 0;
    if (count % p != 0) out.push_back(G.pow(x, p));
  }
  sort_unique(out);
  return out;
}

/// X^[p] by reducing the p-th power of X-bar mod p and selecting the levels
/// not divisible by p: X-bar^p == sum x^p (mod p).
inline BasicSet multiplier_set_congruence(const GroupDescriptor& G, const BasicSet& X, std::int64_t p) {
  using IntElem = RingElement<std::int64_t>;
  const IntElem xp = power(G, IntElem::simple_quantity(X), p);
  std::vector<std::pair<std::int64_t, std::int64_t>> table;
  for (const auto& [g, c] : xp.terms()) table.emplace_back(c, floor_mod(c, p) != 0 ? 1 : 0);
  const CoeffFn<std::int64_t> f(table, 0);
  return apply_coeff_fn(xp, f).support();
}

inline BasicSet multiplier_set(const BasicSet& X, std::int64_t p, const SchurPresentation& P) {
  const PartitionIndex idx(P);
  BasicSet sorted(X);
  sort_unique(sorted);
  detail::check_multiplier_args(P, idx, sorted, p);
  BasicSet Y = multiplier_set_raw(P.group, sorted, p);
  detail::assert_sset(P, idx, Y);
  return Y;
}

}  // namespace schur
