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

// Elements, subgroups and automorphisms of G = Z x Z_m and G = Z_n x Z_m.
//
// G is written multiplicatively with free generator z and torsion generator
// a, so an element is z^x a^y. Everything here is a small value type; the
// group descriptor is passed explicitly wherever reduction is needed.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "schur/error.hpp"

namespace schur {

inline std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

/// The element z^z a^a, as its exponent pair.
struct GroupElement {
  std::int64_t z = 0;
  std::int64_t a = 0;

  friend constexpr auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept {
    return std::hash<std::int64_t>{}(g.z * 1000003 + g.a);
  }
};

/// A finite set of group elements, kept sorted and duplicate-free.
using BasicSet = std::vector<GroupElement>;

inline void sort_unique(BasicSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

/// Z x Z_m (free_order empty) or Z_n x Z_m.
struct GroupDescriptor {
  std::optional<std::int64_t> free_order;
  std::int64_t torsion_order = 1;

  static GroupDescriptor infinite(std::int64_t m) {
    GroupDescriptor g{std::nullopt, m};
    g.validate();
    return g;
  }
  static GroupDescriptor finite(std::int64_t n, std::int64_t m) {
    GroupDescriptor g{n, m};
    g.validate();
    return g;
  }
  /// Z_n, presented with torsion generator a of order n.
  static GroupDescriptor cyclic(std::int64_t n) { return finite(1, n); }

  void validate() const {
    if (torsion_order < 1) throw Error(ErrorCode::InvalidGroup, "torsion order must be >= 1");
    if (free_order && *free_order < 1) throw Error(ErrorCode::InvalidGroup, "free order must be >= 1");
  }

  bool is_finite() const { return free_order.has_value(); }
  std::int64_t m() const { return torsion_order; }

  std::int64_t order() const {
    if (!free_order) throw Error(ErrorCode::InfiniteGroup, "group is infinite");
    return *free_order * torsion_order;
  }

  GroupElement identity() const { return {}; }

  GroupElement normalize(GroupElement g) const {
    if (free_order) g.z = floor_mod(g.z, *free_order);
    g.a = floor_mod(g.a, torsion_order);
    return g;
  }
  bool is_normalized(const GroupElement& g) const { return normalize(g) == g; }

  GroupElement mul(const GroupElement& g, const GroupElement& h) const {
    return normalize({g.z + h.z, g.a + h.a});
  }
  GroupElement inverse(const GroupElement& g) const { return normalize({-g.z, -g.a}); }
  GroupElement pow(const GroupElement& g, std::int64_t k) const {
    std::int64_t z = g.z * k;
    if (free_order) z = floor_mod(floor_mod(g.z, *free_order) * floor_mod(k, *free_order), *free_order);
    const std::int64_t a =
        floor_mod(floor_mod(g.a, torsion_order) * floor_mod(k, torsion_order), torsion_order);
    return normalize({z, a});
  }

  GroupElement z_gen() const { return normalize({1, 0}); }
  GroupElement a_gen() const { return normalize({0, 1}); }

  /// |z-exponent| for the infinite group; 0 for finite groups (no window).
  std::int64_t radius(const GroupElement& g) const { return free_order ? 0 : std::abs(g.z); }
  bool in_window(const GroupElement& g, std::int64_t window) const {
    return radius(g) <= window;
  }

  /// All elements (finite group) or all elements with |z| <= window.
  std::vector<GroupElement> window_elements(std::int64_t window) const {
    std::vector<GroupElement> out;
    const std::int64_t lo = free_order ? 0 : -window;
    const std::int64_t hi = free_order ? *free_order - 1 : window;
    for (std::int64_t z = lo; z <= hi; ++z)
      for (std::int64_t a = 0; a < torsion_order; ++a) out.push_back({z, a});
    return out;
  }
  std::vector<GroupElement> elements() const {
    if (!free_order) throw Error(ErrorCode::InfiniteGroup, "cannot list an infinite group");
    return window_elements(0);
  }

  /// Smallest k > 0 with g^k = 1, or 0 when g has infinite order.
  std::int64_t element_order(const GroupElement& g) const {
    const std::int64_t ta = torsion_order / std::gcd(torsion_order, floor_mod(g.a, torsion_order));
    if (!free_order) return g.z == 0 ? ta : 0;
    const std::int64_t n = *free_order;
    const std::int64_t tz = n / std::gcd(n, floor_mod(g.z, n));
    return std::lcm(tz, ta);
  }

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// The group G = Z x Z_3 the classifier is built for.
inline GroupDescriptor z_times_z3() { return GroupDescriptor::infinite(3); }

inline std::string to_string(const GroupDescriptor& g) {
  std::string free = g.free_order ? (*g.free_order == 1 ? "" : "Z_" + std::to_string(*g.free_order)) : "Z";
  if (g.torsion_order == 1) return free.empty() ? "Z_1" : free;
  const std::string tors = "Z_" + std::to_string(g.torsion_order);
  return free.empty() ? tors : free + "x" + tors;
}

/// Accepts "Z3", "Z_4", "Z2xZ3", "ZxZ3", "Z_4xZ_3", "Z".
inline GroupDescriptor parse_group(std::string_view text) {
  auto fail = [&] { return Error(ErrorCode::ParseError, "bad group '" + std::string(text) + "'"); };
  auto parse_factor = [&](std::string_view f) -> std::optional<std::int64_t> {
    if (f.empty() || f[0] != 'Z') throw fail();
    f.remove_prefix(1);
    if (!f.empty() && f[0] == '_') f.remove_prefix(1);
    if (f.empty()) return std::nullopt;
    std::int64_t v = 0;
    for (char c : f) {
      if (c < '0' || c > '9') throw fail();
      v = v * 10 + (c - '0');
    }
    if (v < 1) throw fail();
    return v;
  };
  const auto x = text.find_first_of("xX");
  if (x == std::string_view::npos) {
    auto n = parse_factor(text);
    return n ? GroupDescriptor::cyclic(*n) : GroupDescriptor::infinite(1);
  }
  auto left = parse_factor(text.substr(0, x));
  auto right = parse_factor(text.substr(x + 1));
  if (!right) throw fail();
  return left ? GroupDescriptor::finite(*left, *right) : GroupDescriptor::infinite(*right);
}

// ---------------------------------------------------------------------------
// Text form "z^{n}a^{i}": unit exponents omitted, identity printed as "1".

inline std::string format_element(const GroupElement& g, std::string_view sep = "") {
  if (g.z == 0 && g.a == 0) return "1";
  std::string out;
  if (g.z != 0) out += g.z == 1 ? "z" : "z^" + std::to_string(g.z);
  if (g.a != 0) {
    if (!out.empty()) out += sep;
    out += g.a == 1 ? "a" : "a^" + std::to_string(g.a);
  }
  return out;
}

inline std::string format_set(const BasicSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += format_element(s[i]);
  }
  return out + "}";
}

/// Parses a product of z/a powers, optionally separated by '*', e.g. "z^-2a",
/// "a^2*z^3", "1". The result is normalized in `G`.
inline GroupElement parse_element(std::string_view text, const GroupDescriptor& G) {
  auto fail = [&] { return Error(ErrorCode::ParseError, "bad element '" + std::string(text) + "'"); };
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s == "1") return G.identity();
  if (s.empty()) throw fail();
  GroupElement g;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '*') {
      ++i;
      continue;
    }
    const char var = s[i++];
    if (var != 'z' && var != 'a') throw fail();
    std::int64_t e = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      bool neg = false;
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
      if (i >= s.size() || s[i] < '0' || s[i] > '9') throw fail();
      e = 0;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') e = e * 10 + (s[i++] - '0');
      if (neg) e = -e;
    }
    (var == 'z' ? g.z : g.a) += e;
  }
  return G.normalize(g);
}

// ---------------------------------------------------------------------------
// Subgroups.
//
// Every subgroup of Z x Z_m (and of Z_n x Z_m) is generated by one element
// z^h a^c and the torsion piece <a^d> with d | m. This Hermite normal form is
// unique once c is reduced mod d, so field-wise equality is subgroup equality.
// h = 0 means no free part (infinite G); for finite G, h divides n and h = n
// means no free part.

struct Subgroup {
  std::int64_t z_index = 0;
  std::int64_t a_shift = 0;
  std::int64_t torsion_step = 1;

  friend constexpr auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

namespace detail {

struct ExtGcd {
  std::int64_t g, s, t;
};

inline ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace detail

inline Subgroup subgroup_from_generators(const GroupDescriptor& G, std::span<const GroupElement> gens) {
  const std::int64_t m = G.m();
  std::vector<GroupElement> vecs(gens.begin(), gens.end());
  if (G.free_order) vecs.push_back({*G.free_order, 0});
  // Running free generator (h, c) and the gcd d of the pure-torsion part.
  std::int64_t h = 0, c = 0, d = m;
  for (GroupElement v : vecs) {
    v.a = floor_mod(v.a, m);
    if (v.z == 0) {
      d = std::gcd(d, v.a);
      continue;
    }
    if (h == 0) {
      h = v.z;
      c = v.a;
      if (h < 0) {
        h = -h;
        c = floor_mod(-c, m);
      }
      continue;
    }
    const auto [g, s, t] = detail::ext_gcd(h, v.z);
    // (x/g)(h,c) - (h/g)(x,y) has zero free part.
    const std::int64_t residue = floor_mod((v.z / g) * c - (h / g) * v.a, m);
    d = std::gcd(d, residue);
    c = floor_mod(s * c + t * v.a, m);
    h = g;
  }
  if (d == 0) d = m;
  Subgroup out;
  out.z_index = h;
  out.torsion_step = d;
  out.a_shift = h == 0 ? 0 : floor_mod(c, d);
  if (G.free_order && h == 0) out.z_index = *G.free_order;
  return out;
}

inline Subgroup subgroup_from_generators(const GroupDescriptor& G, std::initializer_list<GroupElement> gens) {
  std::vector<GroupElement> v(gens);
  return subgroup_from_generators(G, std::span<const GroupElement>(v));
}

inline Subgroup trivial_subgroup(const GroupDescriptor& G) {
  return subgroup_from_generators(G, std::span<const GroupElement>{});
}
inline Subgroup whole_group(const GroupDescriptor& G) {
  return subgroup_from_generators(G, {G.z_gen(), G.a_gen()});
}
/// T(G): the torsion subgroup (all of G when G is finite).
inline Subgroup torsion_subgroup(const GroupDescriptor& G) {
  if (G.is_finite()) return whole_group(G);
  return subgroup_from_generators(G, {G.a_gen()});
}
/// <z^h>, optionally times the full torsion part.
inline Subgroup power_subgroup(const GroupDescriptor& G, std::int64_t h, bool with_torsion) {
  std::vector<GroupElement> gens{G.normalize({h, 0})};
  if (with_torsion) gens.push_back(G.a_gen());
  return subgroup_from_generators(G, std::span<const GroupElement>(gens));
}

inline bool has_free_part(const GroupDescriptor& G, const Subgroup& S) {
  return G.free_order ? S.z_index != *G.free_order : S.z_index != 0;
}

inline bool contains(const GroupDescriptor& G, const Subgroup& S, const GroupElement& g) {
  const GroupElement x = G.normalize(g);
  if (!has_free_part(G, S)) {
    if (x.z != 0) return false;
    return floor_mod(x.a, S.torsion_step) == 0;
  }
  if (x.z % S.z_index != 0) return false;
  const std::int64_t q = x.z / S.z_index;
  return floor_mod(x.a - q * S.a_shift, S.torsion_step) == 0;
}

inline std::vector<GroupElement> subgroup_generators(const GroupDescriptor& G, const Subgroup& S) {
  std::vector<GroupElement> gens;
  if (has_free_part(G, S)) gens.push_back(G.normalize({S.z_index, S.a_shift}));
  if (S.torsion_step != G.m()) gens.push_back(G.normalize({0, S.torsion_step}));
  return gens;
}

inline bool is_subgroup_of(const GroupDescriptor& G, const Subgroup& S, const Subgroup& T) {
  for (const auto& g : subgroup_generators(G, S))
    if (!contains(G, T, g)) return false;
  return true;
}

inline bool is_trivial(const GroupDescriptor& G, const Subgroup& S) { return S == trivial_subgroup(G); }
inline bool is_whole(const GroupDescriptor& G, const Subgroup& S) { return S == whole_group(G); }

/// Order of S, or empty when S is infinite.
inline std::optional<std::int64_t> subgroup_order(const GroupDescriptor& G, const Subgroup& S) {
  if (!G.free_order && S.z_index != 0) return std::nullopt;
  if (!G.free_order) return G.m() / S.torsion_step;
  std::int64_t count = 0;
  for (const auto& g : G.elements()) count += contains(G, S, g) ? 1 : 0;
  return count;
}

inline std::vector<GroupElement> subgroup_elements(const GroupDescriptor& G, const Subgroup& S,
                                                   std::int64_t window) {
  std::vector<GroupElement> out;
  for (const auto& g : G.window_elements(window))
    if (contains(G, S, g)) out.push_back(g);
  return out;
}

inline std::string to_string(const GroupDescriptor& G, const Subgroup& S) {
  if (is_trivial(G, S)) return "1";
  std::vector<std::string> parts;
  for (const auto& g : subgroup_generators(G, S)) parts.push_back(format_element(g));
  std::string out = "<";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out + ">";
}

/// G/K for K = <z^h> x <a^d>; the quotient is again cyclic-by-cyclic.
inline GroupDescriptor quotient_group(const GroupDescriptor& G, const Subgroup& K) {
  if (K.a_shift != 0) {
    throw Error(ErrorCode::UnsupportedSubgroup, "quotient by a diagonal subgroup " + to_string(G, K));
  }
  if (!G.free_order) {
    return K.z_index == 0 ? GroupDescriptor::infinite(K.torsion_step)
                          : GroupDescriptor::finite(K.z_index, K.torsion_step);
  }
  return GroupDescriptor::finite(K.z_index, K.torsion_step);
}

inline GroupElement project(const GroupDescriptor& G, const Subgroup& K, const GroupElement& g) {
  const GroupDescriptor Q = quotient_group(G, K);
  return Q.normalize(g);
}

/// Descriptor of S itself, in coordinates where the generator z^h a^c of S
/// becomes z and a^d becomes a.
inline GroupDescriptor local_group(const GroupDescriptor& G, const Subgroup& S) {
  const std::int64_t mt = G.m() / S.torsion_step;
  if (!G.free_order) {
    return S.z_index == 0 ? GroupDescriptor::finite(1, mt) : GroupDescriptor::infinite(mt);
  }
  if (S.a_shift != 0) {
    throw Error(ErrorCode::UnsupportedSubgroup, "local coordinates for a diagonal subgroup of a finite group");
  }
  return GroupDescriptor::finite(*G.free_order / S.z_index, mt);
}

inline GroupElement to_local(const GroupDescriptor& G, const Subgroup& S, const GroupElement& g) {
  const GroupDescriptor L = local_group(G, S);
  const GroupElement x = G.normalize(g);
  if (!has_free_part(G, S)) return L.normalize({0, x.a / S.torsion_step});
  const std::int64_t q = x.z / S.z_index;
  const std::int64_t r = floor_mod(x.a - q * S.a_shift, G.m()) / S.torsion_step;
  return L.normalize({q, r});
}

inline GroupElement from_local(const GroupDescriptor& G, const Subgroup& S, const GroupElement& local) {
  if (!has_free_part(G, S)) return G.normalize({0, local.a * S.torsion_step});
  return G.normalize({local.z * S.z_index, local.z * S.a_shift + local.a * S.torsion_step});
}

// ---------------------------------------------------------------------------
// Automorphisms, given by the images of z and a.
//
// For the infinite group only the parametric family z -> a^j z^e (e = +-1),
// a -> a^u (gcd(u, m) = 1) is accepted. For finite groups any pair of images
// that extends to a bijective homomorphism is accepted.

struct Automorphism {
  GroupElement z_image;
  GroupElement a_image;

  friend constexpr auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

inline Automorphism make_automorphism(std::int64_t j, std::int64_t eps, std::int64_t u) {
  return {{eps, j}, {0, u}};
}

inline Automorphism normalize(const GroupDescriptor& G, Automorphism phi) {
  phi.z_image = G.normalize(phi.z_image);
  phi.a_image = G.normalize(phi.a_image);
  if (G.free_order && *G.free_order == 1) phi.z_image = G.identity();
  if (G.m() == 1) phi.a_image = G.identity();
  return phi;
}

inline Automorphism identity_automorphism(const GroupDescriptor& G) {
  return normalize(G, {G.z_gen(), G.a_gen()});
}

inline GroupElement apply(const GroupDescriptor& G, const Automorphism& phi, const GroupElement& g) {
  return G.mul(G.pow(phi.z_image, g.z), G.pow(phi.a_image, g.a));
}

inline std::optional<std::string> automorphism_problem(const GroupDescriptor& G, const Automorphism& raw) {
  const Automorphism phi = normalize(G, raw);
  const std::int64_t m = G.m();
  if (!G.free_order) {
    if (std::abs(phi.z_image.z) != 1) return "z must map to a^j z^(+-1)";
    if (phi.a_image.z != 0) return "a must map into the torsion subgroup";
    if (std::gcd(phi.a_image.a, m) != 1) return "a must map to a generator a^u of Z_m";
    return std::nullopt;
  }
  const std::int64_t n = *G.free_order;
  if (G.pow(phi.z_image, n) != G.identity()) return "image of z has order not dividing n";
  if (G.pow(phi.a_image, m) != G.identity()) return "image of a has order not dividing m";
  std::set<GroupElement> image;
  for (const auto& g : G.elements()) image.insert(apply(G, phi, g));
  if (static_cast<std::int64_t>(image.size()) != G.order()) return "map is not injective";
  return std::nullopt;
}

inline void validate(const GroupDescriptor& G, const Automorphism& phi) {
  if (auto problem = automorphism_problem(G, phi)) throw Error(ErrorCode::InvalidAutomorphism, *problem);
}

inline bool is_valid(const GroupDescriptor& G, const Automorphism& phi) {
  return !automorphism_problem(G, phi).has_value();
}

/// phi o chi
inline Automorphism compose(const GroupDescriptor& G, const Automorphism& phi, const Automorphism& chi) {
  return normalize(G, {apply(G, phi, chi.z_image), apply(G, phi, chi.a_image)});
}

inline Automorphism inverse(const GroupDescriptor& G, const Automorphism& phi) {
  validate(G, phi);
  // Preimages: of z among z^(+-1) a^t (or all of G), of a among the torsion.
  std::vector<GroupElement> z_candidates, a_candidates;
  if (G.free_order) {
    z_candidates = a_candidates = G.elements();
  } else {
    for (std::int64_t t = 0; t < G.m(); ++t) {
      z_candidates.push_back({1, t});
      z_candidates.push_back({-1, t});
      a_candidates.push_back({0, t});
    }
  }
  std::optional<GroupElement> zi, ai;
  for (const auto& x : z_candidates)
    if (apply(G, phi, x) == G.z_gen()) zi = x;
  for (const auto& x : a_candidates)
    if (apply(G, phi, x) == G.a_gen()) ai = x;
  if (!zi || !ai) throw Error(ErrorCode::InvalidAutomorphism, "no inverse found");
  return normalize(G, {*zi, *ai});
}

/// The automorphisms named in the classification: psi, delta, xi, rho, sigma
/// (all defined for Z x Z_3), plus "inversion" (g -> g^-1) and "id".
inline const std::vector<std::string>& named_automorphism_list() {
  static const std::vector<std::string> names{"psi", "delta", "xi", "rho", "sigma"};
  return names;
}

inline std::optional<Automorphism> named_automorphism(std::string_view name, const GroupDescriptor& G) {
  std::optional<Automorphism> phi;
  if (name == "psi") phi = make_automorphism(1, 1, 2);          // z -> az,      a -> a^2
  else if (name == "delta") phi = make_automorphism(2, 1, 2);   // z -> a^2 z,   a -> a^2
  else if (name == "xi") phi = make_automorphism(0, -1, 2);     // z -> z^-1,    a -> a^2
  else if (name == "rho") phi = make_automorphism(1, -1, 1);    // z -> a z^-1,  a -> a
  else if (name == "sigma") phi = make_automorphism(2, -1, 1);  // z -> a^2 z^-1, a -> a
  else if (name == "inversion") phi = Automorphism{{-1, 0}, {0, -1}};
  else if (name == "id") phi = Automorphism{{1, 0}, {0, 1}};
  if (!phi) return std::nullopt;
  return normalize(G, *phi);
}

/// Name of phi among the five named automorphisms, if it is one of them.
inline std::optional<std::string> automorphism_name(const GroupDescriptor& G, const Automorphism& phi) {
  const Automorphism x = normalize(G, phi);
  for (const auto& name : named_automorphism_list()) {
    auto named = named_automorphism(name, G);
    if (named && is_valid(G, *named) && *named == x) return name;
  }
  return std::nullopt;
}

inline constexpr std::size_t kDefaultOrbitBound = 64;

/// The (finite) group generated by `gens`, identity first.
inline std::vector<Automorphism> generated_group(const GroupDescriptor& G, std::span<const Automorphism> gens,
                                                 std::size_t bound = kDefaultOrbitBound) {
  for (const auto& g : gens) validate(G, g);
  std::vector<Automorphism> elems{identity_automorphism(G)};
  std::set<Automorphism> seen(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      const Automorphism next = compose(G, g, elems[i]);
      if (seen.insert(next).second) {
        elems.push_back(next);
        if (elems.size() > bound) throw Error(ErrorCode::OrbitUnbounded, "automorphism group exceeds bound");
      }
    }
  }
  return elems;
}

/// The <gens>-orbit of g, sorted.
inline BasicSet orbit(const GroupDescriptor& G, std::span<const Automorphism> gens, const GroupElement& g,
                      std::size_t bound = kDefaultOrbitBound) {
  for (const auto& phi : gens) validate(G, phi);
  BasicSet out{G.normalize(g)};
  std::set<GroupElement> seen(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& phi : gens) {
      const GroupElement next = apply(G, phi, out[i]);
      if (seen.insert(next).second) {
        out.push_back(next);
        if (out.size() > bound) throw Error(ErrorCode::OrbitUnbounded, "orbit exceeds bound");
      }
    }
  }
  sort_unique(out);
  return out;
}

}  // namespace schur
