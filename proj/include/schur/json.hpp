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

// JSON forms of groups, presentations, reports, descriptors and
// construction specs.
//
//   group          {"free": "Z" | n, "torsion": m}
//   presentation   {"group": ..., "window": N, "classes": [[[z, a], ...], ...]}
//   automorphism   "psi" | "delta" | "xi" | "rho" | "sigma" | "inversion"
//                  | {"z": [j, e], "a": u}     (z -> a^j z^e, a -> a^u)
//   descriptor     {"variant": "orbit" | "wedge" | "full", "generators": [...],
//                   "tower": {"K": k, "H": h} | null, "symmetric": b, "window": N}

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "schur/classify.hpp"
#include "schur/constructions.hpp"
#include "schur/lemmas.hpp"
#include "schur/verify.hpp"

namespace schur {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void bad_json(const std::string& what) { throw Error(ErrorCode::InvalidPresentation, what); }

inline std::int64_t get_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) bad_json(what + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace detail

inline Json group_to_json(const GroupDescriptor& G) {
  Json j;
  if (G.free_order) j["free"] = *G.free_order;
  else j["free"] = "Z";
  j["torsion"] = G.torsion_order;
  return j;
}

inline GroupDescriptor group_from_json(const Json& j) {
  if (j.is_string()) return parse_group(j.get<std::string>());
  if (!j.is_object() || !j.contains("free") || !j.contains("torsion")) detail::bad_json("group needs free and torsion");
  const std::int64_t m = detail::get_int(j["torsion"], "torsion");
  if (m < 1) detail::bad_json("torsion must be >= 1");
  if (j["free"].is_string()) {
    if (j["free"] != "Z") detail::bad_json("free must be \"Z\" or an integer");
    return GroupDescriptor::infinite(m);
  }
  const std::int64_t n = detail::get_int(j["free"], "free");
  if (n < 1) detail::bad_json("free order must be >= 1");
  return GroupDescriptor::finite(n, m);
}

inline Json element_to_json(const GroupElement& g) { return Json::array({g.z, g.a}); }

inline GroupElement element_from_json(const Json& j, const GroupDescriptor& G) {
  if (j.is_string()) return parse_element(j.get<std::string>(), G);
  if (!j.is_array() || j.size() != 2) detail::bad_json("element must be [z, a]");
  return {detail::get_int(j[0], "z exponent"), detail::get_int(j[1], "a exponent")};
}

inline Json presentation_to_json(const SchurPresentation& raw) {
  SchurPresentation P = raw;
  P.canonicalize();
  Json j;
  j["group"] = group_to_json(P.group);
  j["window"] = P.window;
  Json classes = Json::array();
  for (const auto& c : P.classes) {
    Json cj = Json::array();
    for (const auto& g : c) cj.push_back(element_to_json(g));
    classes.push_back(cj);
  }
  j["classes"] = classes;
  return j;
}

/// Reads a presentation. Elements are kept as given, so unreduced input is
/// reported by the well-formedness check rather than silently fixed.
inline SchurPresentation presentation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("classes")) {
    detail::bad_json("presentation needs group and classes");
  }
  SchurPresentation P;
  P.group = group_from_json(j["group"]);
  P.window = j.contains("window") ? detail::get_int(j["window"], "window") : 0;
  if (!j["classes"].is_array()) detail::bad_json("classes must be an array");
  for (const auto& cj : j["classes"]) {
    if (!cj.is_array()) detail::bad_json("each class must be an array");
    BasicSet c;
    for (const auto& e : cj) c.push_back(element_from_json(e, P.group));
    P.classes.push_back(std::move(c));
  }
  if (P.group.is_finite()) P.window = 0;
  for (auto& c : P.classes) std::sort(c.begin(), c.end());
  std::sort(P.classes.begin(), P.classes.end());
  return P;
}

inline Json automorphism_to_json(const GroupDescriptor& G, const Automorphism& phi) {
  if (auto name = automorphism_name(G, phi)) return *name;
  Json j;
  j["z"] = Json::array({phi.z_image.a, phi.z_image.z});
  j["a"] = phi.a_image.a;
  return j;
}

inline Automorphism automorphism_from_json(const Json& j, const GroupDescriptor& G) {
  if (j.is_string()) {
    auto phi = named_automorphism(j.get<std::string>(), G);
    if (!phi) detail::bad_json("unknown automorphism '" + j.get<std::string>() + "'");
    return *phi;
  }
  if (!j.is_object() || !j.contains("z") || !j.contains("a") || !j["z"].is_array() || j["z"].size() != 2) {
    detail::bad_json("automorphism must be a name or {\"z\":[j,eps],\"a\":u}");
  }
  const Automorphism phi = normalize(
      G, make_automorphism(detail::get_int(j["z"][0], "j"), detail::get_int(j["z"][1], "eps"), detail::get_int(j["a"], "u")));
  validate(G, phi);
  return phi;
}

inline Json report_to_json(const VerificationReport& r) {
  Json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["window"] = r.window;
  j["checked_pairs"] = r.checked_pairs;
  if (r.witness) {
    Json w;
    w["kind"] = r.witness->kind;
    Json c = Json::array(), d = Json::array();
    for (const auto& g : r.witness->first) c.push_back(element_to_json(g));
    for (const auto& g : r.witness->second) d.push_back(element_to_json(g));
    w["C"] = c;
    w["D"] = d;
    w["detail"] = r.witness->detail;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline Json descriptor_to_json(const FamilyDescriptor& d) {
  const GroupDescriptor G = z_times_z3();
  Json j;
  j["variant"] = std::string(to_string(d.variant));
  Json gens = Json::array();
  for (const auto& phi : d.generators) {
    const bool inversion = d.variant == Variant::Full && phi == *named_automorphism("inversion", G);
    gens.push_back(inversion ? Json("inversion") : automorphism_to_json(G, phi));
  }
  j["generators"] = gens;
  if (d.tower) j["tower"] = Json{{"K", d.tower->k}, {"H", d.tower->h}};
  else j["tower"] = nullptr;
  j["symmetric"] = d.symmetric;
  j["window"] = d.window;
  return j;
}

inline FamilyDescriptor descriptor_from_json(const Json& j) {
  const GroupDescriptor G = z_times_z3();
  if (!j.is_object() || !j.contains("variant")) detail::bad_json("descriptor needs a variant");
  FamilyDescriptor d;
  const std::string v = j["variant"].get<std::string>();
  if (v == "orbit") d.variant = Variant::Orbit;
  else if (v == "wedge") d.variant = Variant::Wedge;
  else if (v == "full") d.variant = Variant::Full;
  else detail::bad_json("unknown variant '" + v + "'");
  if (j.contains("generators"))
    for (const auto& g : j["generators"]) d.generators.push_back(automorphism_from_json(g, G));
  if (j.contains("tower") && !j["tower"].is_null()) {
    d.tower = Tower{detail::get_int(j["tower"].value("K", Json(0)), "K"), detail::get_int(j["tower"]["H"], "H")};
  }
  if (d.variant == Variant::Wedge && !d.tower) detail::bad_json("wedge descriptor needs a tower");
  d.symmetric = j.value("symmetric", false);
  d.window = j.contains("window") ? detail::get_int(j["window"], "window") : 0;
  return d;
}

inline Json lemma_to_json(const LemmaResult& r) {
  return Json{{"lemma", r.name}, {"applicable", r.applicable}, {"passed", r.passed}, {"checks", r.checks}, {"detail", r.detail}};
}

// ---------------------------------------------------------------------------
// Construction specs.
//
//   {"kind": "discrete", "group": "ZxZ3"}
//   {"kind": "trivial", "group": "Z6"}
//   {"kind": "orbit", "group": "ZxZ3", "gens": ["psi", {"z": [1, 1], "a": 2}]}
//   {"kind": "tensor", "left": spec, "right": spec}
//   {"kind": "wedge", "H": h | [[z, a], ...], "K": k | [[z, a], ...],
//    "inner": spec, "outer": spec}
//
// Groups default to Z x Z_3. For a wedge, H = h means <z^h> x Z_m and K
// defaults to the torsion subgroup; the inner spec is built over H in its
// own coordinates and the outer spec over G/K.

namespace detail {

inline Subgroup subgroup_from_json(const Json& j, const GroupDescriptor& G) {
  if (j.is_number_integer()) {
    const std::int64_t h = j.get<std::int64_t>();
    return h == 0 ? torsion_subgroup(G) : power_subgroup(G, h, true);
  }
  if (!j.is_array()) bad_json("subgroup must be an index or a list of generators");
  std::vector<GroupElement> gens;
  for (const auto& e : j) gens.push_back(element_from_json(e, G));
  return subgroup_from_generators(G, std::span<const GroupElement>(gens));
}

}  // namespace detail

inline SchurPresentation construct_from_json(const Json& spec, std::int64_t N,
                                             const std::optional<GroupDescriptor>& forced_group = std::nullopt,
                                             const ConstructOptions& opts = {}) {
  if (!spec.is_object() || !spec.contains("kind")) detail::bad_json("construction spec needs a kind");
  const std::string kind = spec["kind"].get<std::string>();
  GroupDescriptor G = forced_group ? *forced_group
                      : spec.contains("group") ? group_from_json(spec["group"])
                                               : z_times_z3();
  if (kind == "discrete") return discrete(G, N, opts);
  if (kind == "trivial") return trivial(G);
  if (kind == "orbit") {
    std::vector<Automorphism> gens;
    if (spec.contains("gens"))
      for (const auto& g : spec["gens"]) gens.push_back(automorphism_from_json(g, G));
    return orbit_ring(G, std::span<const Automorphism>(gens), N, opts);
  }
  if (kind == "tensor") {
    if (!spec.contains("left") || !spec.contains("right")) detail::bad_json("tensor needs left and right");
    ConstructOptions loose = opts;
    loose.min_window = std::min<std::int64_t>(opts.min_window, N);
    Json left = spec["left"], right = spec["right"];
    if (!left.contains("group")) left["group"] = "Z";
    if (!right.contains("group")) right["group"] = "Z3";
    return tensor(construct_from_json(left, N, std::nullopt, loose), construct_from_json(right, N, std::nullopt, loose));
  }
  if (kind == "wedge") {
    WedgeSpec w;
    w.H = detail::subgroup_from_json(spec.value("H", Json(0)), G);
    w.K = spec.contains("K") ? detail::subgroup_from_json(spec["K"], G) : torsion_subgroup(G);
    ConstructOptions loose = opts;
    loose.min_window = 0;
    const GroupDescriptor L = local_group(G, w.H);
    const std::int64_t inner_window = L.is_finite() ? 0 : std::max<std::int64_t>(1, N / w.H.z_index);
    w.inner = construct_from_json(spec.value("inner", Json{{"kind", "discrete"}}), inner_window, L, loose);
    w.outer = construct_from_json(spec.value("outer", Json{{"kind", "discrete"}}), N, quotient_group(G, w.K), loose);
    return wedge(G, w, N, opts);
  }
  detail::bad_json("unknown construction kind '" + kind + "'");
}

}  // namespace schur
