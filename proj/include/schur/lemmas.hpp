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

// Structural facts every Schur ring over these groups satisfies, checked on
// a concrete presentation. Each check only inspects what the window decides.

#pragma once

#include <string>
#include <vector>

#include "schur/classify.hpp"
#include "schur/schur.hpp"

namespace schur {

struct LemmaResult {
  std::string name;
  bool passed = true;
  bool applicable = true;
  std::size_t checks = 0;
  std::string detail;
};

/// frob(C, k) is a sum of class sums for every class C with |k| radius(C)
/// inside the window. Requires gcd(k, |T(G)|) = 1.
inline LemmaResult check_frobenius_closure(const SchurPresentation& P, std::int64_t k) {
  LemmaResult r;
  r.name = "frobenius-closure k=" + std::to_string(k);
  const auto& G = P.group;
  const std::int64_t t = G.is_finite() ? G.order() : G.m();
  if (std::gcd(k, t) != 1) {
    r.applicable = false;
    r.detail = "k shares a factor with the torsion order";
    return r;
  }
  const PartitionIndex idx(P);
  for (const auto& c : P.classes) {
    if (!G.is_finite() && std::abs(k) * max_radius(G, c) > P.window) continue;
    ++r.checks;
    const auto img = frobenius(G, RingElement<std::int64_t>::simple_quantity(c), k);
    if (auto why = span_violation(P, idx, img)) {
      r.passed = false;
      r.detail = format_set(c) + "^(" + std::to_string(k) + "): " + *why;
      return r;
    }
  }
  return r;
}

inline LemmaResult check_torsion_subgroup(const SchurPresentation& P) {
  LemmaResult r;
  r.name = "torsion-subgroup";
  r.checks = 1;
  r.passed = torsion_is_ssubgroup(P);
  if (!r.passed) r.detail = "T(G) is not a union of classes";
  return r;
}

/// X^[p] is an S-set for every class X and every prime p dividing |T(G)|,
/// and the mod-p power route gives the same set as the coset count.
inline LemmaResult check_multiplier_sets(const SchurPresentation& P) {
  LemmaResult r;
  r.name = "multiplier-sets";
  const auto& G = P.group;
  const std::int64_t t = G.is_finite() ? G.order() : G.m();
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= t; ++p)
    if (t % p == 0 && detail::is_prime(p)) primes.push_back(p);
  if (primes.empty()) {
    r.applicable = false;
    r.detail = "no torsion";
    return r;
  }
  for (const auto p : primes) {
    for (const auto& c : P.classes) {
      ++r.checks;
      const BasicSet direct = multiplier_set_raw(G, c, p);
      const BasicSet modp = multiplier_set_congruence(G, c, p);
      if (direct != modp) {
        r.passed = false;
        r.detail = format_set(c) + "^[" + std::to_string(p) + "]: coset count gives " + format_set(direct) +
                   ", mod-p power gives " + format_set(modp);
        return r;
      }
      try {
        multiplier_set(c, p, P);
      } catch (const Error& e) {
        r.passed = false;
        r.detail = e.what();
        return r;
      }
    }
  }
  return r;
}

namespace detail {

inline bool infinite_prime_torsion(const GroupDescriptor& G) { return !G.is_finite() && is_prime(G.m()); }

}  // namespace detail

/// Over Z x Z_p, p an odd prime: each class is a coset z^m Z_p or has size != p.
inline LemmaResult check_coset_dichotomy(const SchurPresentation& P) {
  LemmaResult r;
  r.name = "coset-size-dichotomy";
  const auto& G = P.group;
  if (!detail::infinite_prime_torsion(G) || G.m() == 2) {
    r.applicable = false;
    r.detail = "needs Z x Z_p with p an odd prime";
    return r;
  }
  const auto p = static_cast<std::size_t>(G.m());
  for (const auto& c : P.classes) {
    ++r.checks;
    if (c.size() != p) continue;
    const bool coset = std::all_of(c.begin(), c.end(), [&](auto& g) { return g.z == c.front().z; });
    if (!coset) {
      r.passed = false;
      r.detail = format_set(c) + " has " + std::to_string(p) + " elements but is not a coset";
      return r;
    }
  }
  return r;
}

/// Over Z x Z_p: a class X meeting z^m Z_p with |X| < p puts z^(pm) in the
/// largest S-subgroup H of <z>.
inline LemmaResult check_cube_rule(const SchurPresentation& P) {
  LemmaResult r;
  r.name = "power-in-H";
  const auto& G = P.group;
  if (!detail::infinite_prime_torsion(G)) {
    r.applicable = false;
    r.detail = "needs Z x Z_p with p prime";
    return r;
  }
  const std::int64_t p = G.m();
  const std::int64_t h = find_h_index(P);
  for (const auto& c : P.classes) {
    if (static_cast<std::int64_t>(c.size()) >= p) continue;
    for (const auto& g : c) {
      const std::int64_t e = p * std::abs(g.z);
      if (e == 0) continue;
      ++r.checks;
      const bool decided = h != 0 || e <= P.window;
      if (decided && (h == 0 || e % h != 0)) {
        r.passed = false;
        r.detail = "class " + format_set(c) + " but z^" + std::to_string(e) + " is not in H";
        return r;
      }
    }
  }
  return r;
}

inline std::vector<LemmaResult> check_lemmas(const SchurPresentation& P) {
  std::vector<LemmaResult> out;
  for (std::int64_t k : {2, 4, 5, 7}) out.push_back(check_frobenius_closure(P, k));
  out.push_back(check_torsion_subgroup(P));
  out.push_back(check_multiplier_sets(P));
  out.push_back(check_coset_dichotomy(P));
  out.push_back(check_cube_rule(P));
  return out;
}

}  // namespace schur
