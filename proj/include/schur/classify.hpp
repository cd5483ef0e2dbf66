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

// Classification of windowed Schur rings over Z x Z_3.
//
// Every such ring is one of
//   * the orbit ring of a group Q of automorphisms z -> a^j z^(+-1), a -> a^u,
//   * a wedge over the tower Z_3 <= <z^h> x Z_3, whose outer part is F[Z] or
//     its symmetric ring and whose inner part is again an orbit ring, read in
//     the coordinates of <z^h> x Z_3 (or of Z_3 when h = 0).
// The classifier reads off the tower and Q from a handful of classes and then
// rebuilds the ring to confirm the answer class for class.

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "schur/constructions.hpp"
#include "schur/schur.hpp"
#include "schur/verify.hpp"

namespace schur {

enum class Projection { Discrete, Symmetric };

inline std::string_view to_string(Projection p) { return p == Projection::Discrete ? "discrete" : "symmetric"; }

enum class Variant { Orbit, Wedge, Full };

inline std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Orbit: return "orbit";
    case Variant::Wedge: return "wedge";
    case Variant::Full: return "full";
  }
  return "?";
}

/// Tower Z_3 <= <z^h> x Z_3 of a wedge; k = 0 records K = Z_3, and h = 0
/// means H = Z_3.
struct Tower {
  std::int64_t k = 0;
  std::int64_t h = 0;
  friend bool operator==(const Tower&, const Tower&) = default;
};

/// Which family a ring belongs to, with enough data to rebuild it.
///
/// Generators are written in Z x Z_3 coordinates. For a wedge they act on
/// the inner group through the identification z^h -> z; an empty list
/// means the discrete inner ring. `symmetric` is the projection type: for a
/// wedge it selects the outer ring, for Full it selects F[G] versus the
/// inversion-orbit ring.
struct FamilyDescriptor {
  Variant variant = Variant::Full;
  std::vector<Automorphism> generators;
  std::optional<Tower> tower;
  bool symmetric = false;
  std::int64_t window = 0;

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

struct ClassifyOptions {
  std::int64_t min_window = 12;
  unsigned threads = 1;
};

// ---------------------------------------------------------------------------
// Parametric automorphisms and canonical generating sets.

/// All automorphisms z -> a^j z^e, a -> a^u of Z x Z_m.
inline std::vector<Automorphism> parametric_automorphisms(const GroupDescriptor& G) {
  std::vector<Automorphism> out;
  for (std::int64_t j = 0; j < G.m(); ++j)
    for (std::int64_t e : {1, -1})
      for (std::int64_t u = 1; u <= G.m(); ++u)
        if (std::gcd(u % G.m(), G.m()) == 1) out.push_back(normalize(G, make_automorphism(j, e, u % G.m())));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

/// Sort key: the named automorphisms in their listed order, then the rest by
/// (j, e, u) with e = -1 first.
inline std::tuple<int, std::int64_t, std::int64_t, std::int64_t> generator_rank(const GroupDescriptor& G,
                                                                                const Automorphism& phi) {
  const auto& names = named_automorphism_list();
  if (auto name = automorphism_name(G, phi)) {
    const auto pos = std::find(names.begin(), names.end(), *name) - names.begin();
    return {0, pos, 0, 0};
  }
  return {1, phi.z_image.a, phi.z_image.z, phi.a_image.a};
}

inline std::set<Automorphism> closure(const GroupDescriptor& G, const std::vector<Automorphism>& gens) {
  const auto all = generated_group(G, std::span<const Automorphism>(gens));
  return {all.begin(), all.end()};
}

}  // namespace detail

/// The smallest generating set of Q, least by rank among those of that size.
inline std::vector<Automorphism> canonical_generators(const GroupDescriptor& G, const std::set<Automorphism>& Q) {
  std::vector<Automorphism> pool;
  for (const auto& phi : Q)
    if (phi != identity_automorphism(G)) pool.push_back(phi);
  std::sort(pool.begin(), pool.end(), [&](const Automorphism& x, const Automorphism& y) {
    return detail::generator_rank(G, x) < detail::generator_rank(G, y);
  });
  if (pool.empty()) return {};
  for (std::size_t size = 1; size <= pool.size(); ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<Automorphism> gens;
      for (auto i : pick) gens.push_back(pool[i]);
      if (detail::closure(G, gens) == Q) return gens;
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == pool.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t t = i; t < size; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return pool;
}

// ---------------------------------------------------------------------------

/// Largest S-subgroup <z^h> inside <z> visible in the window, as h (0 when
/// none is visible). Every multiple of h in the window is checked.
inline std::int64_t find_h_index(const SchurPresentation& P) {
  const auto& G = P.group;
  if (G.is_finite()) throw Error(ErrorCode::InvalidGroup, "find_H needs the infinite group");
  if (P.window < 1) throw Error(ErrorCode::WindowTooSmall, "no z-level is visible");
  const PartitionIndex idx(P);
  for (std::int64_t h = 1; h <= P.window; ++h) {
    bool ok = true;
    for (std::int64_t k = h; k <= P.window && ok; k += h) {
      for (const auto& g : P.classes[*idx.class_of({k, 0})])
        if (g.a != 0 || g.z % h != 0) ok = false;
    }
    if (ok) return h;
  }
  return 0;
}

inline Subgroup find_H(const SchurPresentation& P) {
  const std::int64_t h = find_h_index(P);
  return h == 0 ? trivial_subgroup(P.group) : power_subgroup(P.group, h, false);
}

inline Projection projection_type(const SchurPresentation& P) {
  const auto& G = P.group;
  if (G.is_finite()) throw Error(ErrorCode::InvalidGroup, "projection_type needs the infinite group");
  const SchurPresentation Q = quotient(P, torsion_subgroup(G));
  bool discrete = true, symmetric = true;
  for (const auto& c : Q.classes) {
    const std::int64_t z = c.front().z;
    discrete = discrete && c.size() == 1;
    const BasicSet pair = z == 0 ? BasicSet{{0, 0}} : BasicSet{{-std::abs(z), 0}, {std::abs(z), 0}};
    symmetric = symmetric && c == pair;
  }
  if (discrete) return Projection::Discrete;
  if (symmetric) return Projection::Symmetric;
  throw Error(ErrorCode::UnrecognizedQuotient, "image over Z is neither discrete nor symmetric");
}

// ---------------------------------------------------------------------------

inline SchurPresentation resynthesize(const FamilyDescriptor& d, std::int64_t N = -1) {
  const GroupDescriptor G = z_times_z3();
  if (N < 0) N = d.window;
  ConstructOptions loose;
  loose.min_window = 0;
  switch (d.variant) {
    case Variant::Full:
      if (d.symmetric) return orbit_ring(G, {*named_automorphism("inversion", G)}, N, loose);
      return discrete(G, N, loose);
    case Variant::Orbit:
      return orbit_ring(G, std::span<const Automorphism>(d.generators), N, loose);
    case Variant::Wedge: {
      if (!d.tower) throw Error(ErrorCode::BadTower, "wedge descriptor without a tower");
      const std::int64_t h = d.tower->h;
      WedgeSpec spec;
      spec.K = torsion_subgroup(G);
      spec.H = h == 0 ? spec.K : power_subgroup(G, h, true);
      const GroupDescriptor L = local_group(G, spec.H);
      std::vector<Automorphism> local_gens;
      for (const auto& phi : d.generators) local_gens.push_back(normalize(L, phi));
      spec.inner = orbit_ring(L, std::span<const Automorphism>(local_gens), h == 0 ? 0 : std::max<std::int64_t>(N / h, 1),
                              loose);
      const GroupDescriptor Z = quotient_group(G, spec.K);
      spec.outer = d.symmetric ? orbit_ring(Z, {*named_automorphism("inversion", Z)}, N, loose) : discrete(Z, N, loose);
      return wedge(G, spec, N, loose);
    }
  }
  throw Error(ErrorCode::Unclassifiable, "unknown variant");
}

namespace detail {

inline const BasicSet& class_at(const SchurPresentation& P, const PartitionIndex& idx, GroupElement g) {
  return P.classes[*idx.class_of(g)];
}

inline BasicSet set_of(std::initializer_list<GroupElement> xs) {
  BasicSet s(xs);
  sort_unique(s);
  return s;
}

[[noreturn]] inline void unclassifiable(const std::string& why) { throw Error(ErrorCode::Unclassifiable, why); }

/// Automorphism group of a local ring in which <z> is an S-subgroup.
inline std::set<Automorphism> type_with_central_z(const SchurPresentation& L, Projection proj) {
  const GroupDescriptor G = z_times_z3();
  const PartitionIndex idx(L);
  const bool torsion_discrete = class_at(L, idx, {0, 1}).size() == 1;
  std::vector<Automorphism> gens;
  if (proj == Projection::Discrete) {
    if (!torsion_discrete) gens.push_back(make_automorphism(0, 1, 2));
  } else if (torsion_discrete) {
    gens.push_back(make_automorphism(0, -1, 1));
  } else {
    const BasicSet& x = class_at(L, idx, {1, 1});
    if (x.size() == 4) {
      gens = {make_automorphism(0, -1, 2), make_automorphism(0, -1, 1)};
    } else if (x == set_of({{-1, 2}, {1, 1}})) {
      gens.push_back(make_automorphism(0, -1, 2));
    } else {
      unclassifiable("class " + format_set(x) + " fits no symmetric ring with split torsion");
    }
  }
  return closure(G, gens);
}

/// Automorphism group of a local ring in which z^3 but not z is central.
inline std::set<Automorphism> type_with_split_z(const SchurPresentation& L, Projection proj) {
  const GroupDescriptor G = z_times_z3();
  const PartitionIndex idx(L);
  const BasicSet& x = class_at(L, idx, {1, 0});
  std::vector<std::string> names;
  if (proj == Projection::Discrete) {
    if (x == set_of({{1, 0}, {1, 1}})) names = {"psi"};
    else if (x == set_of({{1, 0}, {1, 2}})) names = {"delta"};
  } else {
    if (x == set_of({{1, 0}, {-1, 0}, {1, 1}, {-1, 2}})) names = {"psi", "xi"};
    else if (x == set_of({{1, 0}, {-1, 0}, {-1, 1}, {1, 2}})) names = {"delta", "xi"};
    else if (x == set_of({{1, 0}, {-1, 1}})) names = {"rho"};
    else if (x == set_of({{1, 0}, {-1, 2}})) names = {"sigma"};
  }
  if (names.empty()) unclassifiable("class of z is " + format_set(x) + ", which matches no orbit pattern");
  std::vector<Automorphism> gens;
  for (const auto& n : names) gens.push_back(*named_automorphism(n, G));
  return closure(G, gens);
}

inline bool level_is_full(const SchurPresentation& P, const PartitionIndex& idx, std::int64_t m, Projection proj) {
  const BasicSet full = proj == Projection::Discrete
                            ? set_of({{m, 0}, {m, 1}, {m, 2}})
                            : set_of({{m, 0}, {m, 1}, {m, 2}, {-m, 0}, {-m, 1}, {-m, 2}});
  return class_at(P, idx, {m, 0}) == full;
}

inline FamilyDescriptor describe(std::int64_t tower_h, const std::set<Automorphism>& Q, Projection proj,
                                 std::int64_t window) {
  const GroupDescriptor G = z_times_z3();
  FamilyDescriptor d;
  d.window = window;
  d.symmetric = proj == Projection::Symmetric;
  if (tower_h == 1) {
    const auto xi = closure(G, {*named_automorphism("xi", G)});
    if (Q.size() == 1) {
      d.variant = Variant::Full;
    } else if (Q == xi) {
      d.variant = Variant::Full;
    } else {
      d.variant = Variant::Orbit;
      d.generators = canonical_generators(G, Q);
    }
    if (d.variant == Variant::Full && d.symmetric) d.generators = {*named_automorphism("inversion", G)};
    return d;
  }
  d.variant = Variant::Wedge;
  d.tower = Tower{0, tower_h};
  d.generators = canonical_generators(G, Q);
  return d;
}

}  // namespace detail

/// The family of P, confirmed by rebuilding it on the window.
inline FamilyDescriptor classify(const SchurPresentation& P, const ClassifyOptions& opts = {}) {
  using detail::level_is_full;
  using detail::unclassifiable;
  const GroupDescriptor G = z_times_z3();
  if (!(P.group == G)) throw Error(ErrorCode::InvalidGroup, "classify needs Z x Z_3, got " + to_string(P.group));
  if (P.window < opts.min_window || P.window < 1) {
    throw Error(ErrorCode::WindowTooSmall,
                "window " + std::to_string(P.window) + " is below the minimum " + std::to_string(opts.min_window));
  }
  const auto report = verify_axioms(P, {opts.threads});
  if (!report.ok()) unclassifiable("presentation is not a Schur ring: " + report.witness->detail);
  if (!torsion_is_ssubgroup(P)) unclassifiable("torsion subgroup is not an S-subgroup");

  const PartitionIndex idx(P);
  const std::int64_t N = P.window;
  const Projection proj = projection_type(P);
  const std::int64_t h = find_h_index(P);

  // Coset-size dichotomy and the cube rule, re-asserted as guards.
  for (const auto& c : P.classes) {
    const bool coset = c.size() == 3 && c[0].z == c[1].z && c[1].z == c[2].z;
    if (c.size() == 3 && !coset) unclassifiable("class " + format_set(c) + " has 3 elements but is not a coset");
    if (c.size() < 3) {
      for (const auto& g : c) {
        const std::int64_t cube = 3 * std::abs(g.z);
        const bool in_h = cube == 0 || (h != 0 ? cube % h == 0 : cube > N);
        if (!in_h) unclassifiable("class " + format_set(c) + " forces z^" + std::to_string(cube) + " into H");
      }
    }
  }

  FamilyDescriptor d;
  if (h == 1) {
    d = detail::describe(1, detail::type_with_central_z(P, proj), proj, N);
  } else {
    std::optional<std::int64_t> m;
    for (std::int64_t k = 1; k <= N && !m; ++k)
      if ((h == 0 || k % h != 0) && !level_is_full(P, idx, k, proj)) m = k;
    if (!m) {
      // Everything outside H is a union of torsion cosets.
      std::set<Automorphism> Q;
      if (h == 0) {
        const bool torsion_discrete = detail::class_at(P, idx, {0, 1}).size() == 1;
        Q = detail::closure(G, torsion_discrete ? std::vector<Automorphism>{} : std::vector{make_automorphism(0, 1, 2)});
      } else {
        Q = detail::type_with_central_z(restrict(P, power_subgroup(G, h, true)), proj);
      }
      d = detail::describe(h == 0 ? 0 : h, Q, proj, N);
    } else {
      const std::int64_t g = h == 0 ? *m : std::gcd(*m, h);
      const std::int64_t expected_h = 3 * g <= N ? 3 * g : 0;
      if (h != expected_h) {
        unclassifiable("level " + std::to_string(*m) + " splits but H has index " + std::to_string(h));
      }
      for (std::int64_t k = 1; k <= N; ++k)
        if (k % g != 0 && !level_is_full(P, idx, k, proj)) {
          unclassifiable("level " + std::to_string(k) + " lies outside the S-subgroup yet is not a full coset class");
        }
      const auto Q = detail::type_with_split_z(g == 1 ? P : restrict(P, power_subgroup(G, g, true)), proj);
      d = detail::describe(g, Q, proj, N);
    }
  }

  SchurPresentation rebuilt = resynthesize(d, N);
  SchurPresentation input = P;
  input.canonicalize();
  if (!(rebuilt == input)) unclassifiable("rebuilt ring differs from the input on the window");
  return d;
}

/// Human-readable summary, e.g. "wedge H=<z^2>xZ_3 K=Z_3 inner <psi> outer F[Z]".
inline std::string describe_family(const FamilyDescriptor& d) {
  const GroupDescriptor G = z_times_z3();
  std::string gens;
  for (const auto& phi : d.generators) {
    if (!gens.empty()) gens += ",";
    gens += automorphism_name(G, phi).value_or(format_element(phi.z_image) + "|" + format_element(phi.a_image));
  }
  switch (d.variant) {
    case Variant::Full: return d.symmetric ? "full symmetric F[G]^+-" : "full F[G]";
    case Variant::Orbit: return "orbit <" + gens + ">";
    case Variant::Wedge: {
      const std::string H = d.tower->h == 0 ? "Z_3" : "<z^" + std::to_string(d.tower->h) + ">xZ_3";
      return "wedge H=" + H + " K=Z_3 inner " + (gens.empty() ? "discrete" : "<" + gens + ">") + " outer " +
             (d.symmetric ? "F[Z]^+-" : "F[Z]");
    }
  }
  return "?";
}

}  // namespace schur
