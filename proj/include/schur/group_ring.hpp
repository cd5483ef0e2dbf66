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

// Exact arithmetic in the group algebra F[G].
//
// RingElement is a finitely supported map G -> Coeff with no stored zeros.
// The default coefficient type is the exact rationals; verification code
// instantiates it over std::int64_t since sums of basic sets are integral.

#pragma once

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schur/group.hpp"
#include "schur/rational.hpp"

namespace schur {

template <class Coeff = Rational>
class RingElement {
 public:
  using coeff_type = Coeff;
  using Terms = std::map<GroupElement, Coeff>;

  RingElement() = default;

  static RingElement monomial(const GroupElement& g, Coeff c = Coeff(1)) {
    RingElement r;
    r.add_term(g, std::move(c));
    return r;
  }

  /// The simple quantity C-bar = sum of the elements of C.
  static RingElement simple_quantity(const BasicSet& c) {
    RingElement r;
    for (const auto& g : c) r.add_term(g, Coeff(1));
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const GroupElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  BasicSet support() const {
    BasicSet s;
    s.reserve(terms_.size());
    for (const auto& [g, c] : terms_) s.push_back(g);
    return s;
  }

  void add_term(const GroupElement& g, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  RingElement& operator+=(const RingElement& other) {
    for (const auto& [g, c] : other.terms_) add_term(g, c);
    return *this;
  }
  RingElement& operator-=(const RingElement& other) {
    for (const auto& [g, c] : other.terms_) add_term(g, Coeff(-c));
    return *this;
  }

  friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
  friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  Terms terms_;
};

template <class Coeff>
RingElement<Coeff> add(const RingElement<Coeff>& x, const RingElement<Coeff>& y) {
  return x + y;
}

template <class Coeff>
RingElement<Coeff> scalar_mul(const Coeff& c, const RingElement<Coeff>& x) {
  RingElement<Coeff> out;
  if (c == 0) return out;
  for (const auto& [g, v] : x.terms()) out.add_term(g, Coeff(c * v));
  return out;
}

template <class Coeff>
RingElement<Coeff> convolve(const GroupDescriptor& G, const RingElement<Coeff>& x, const RingElement<Coeff>& y) {
  RingElement<Coeff> out;
  for (const auto& [g, c] : x.terms())
    for (const auto& [h, d] : y.terms()) out.add_term(G.mul(g, h), Coeff(c * d));
  return out;
}

template <class Coeff>
RingElement<Coeff> hadamard(const RingElement<Coeff>& x, const RingElement<Coeff>& y) {
  RingElement<Coeff> out;
  const auto& small = x.size() <= y.size() ? x : y;
  const auto& large = x.size() <= y.size() ? y : x;
  for (const auto& [g, c] : small.terms()) {
    auto it = large.terms().find(g);
    if (it != large.terms().end()) out.add_term(g, Coeff(c * it->second));
  }
  return out;
}

template <class Coeff>
RingElement<Coeff> star(const GroupDescriptor& G, const RingElement<Coeff>& x) {
  RingElement<Coeff> out;
  for (const auto& [g, c] : x.terms()) out.add_term(G.inverse(g), c);
  return out;
}

/// x^(k) = sum x_g g^k. Colliding images add up.
template <class Coeff>
RingElement<Coeff> frobenius(const GroupDescriptor& G, const RingElement<Coeff>& x, std::int64_t k) {
  RingElement<Coeff> out;
  for (const auto& [g, c] : x.terms()) out.add_term(G.pow(g, k), c);
  return out;
}

/// x^p, as p-fold convolution.
template <class Coeff>
RingElement<Coeff> power(const GroupDescriptor& G, const RingElement<Coeff>& x, std::int64_t p) {
  RingElement<Coeff> out = RingElement<Coeff>::monomial(G.identity());
  for (std::int64_t i = 0; i < p; ++i) out = convolve(G, out, x);
  return out;
}

/// A coefficient function f with f(0) = 0: a finite table of exceptions and a
/// value for every other nonzero input.
template <class Coeff = Rational>
class CoeffFn {
 public:
  CoeffFn(std::vector<std::pair<Coeff, Coeff>> table, Coeff default_nonzero)
      : table_(std::move(table)), default_(std::move(default_nonzero)) {
    for (const auto& [from, to] : table_) {
      if (from == 0 && to != 0) throw Error(ErrorCode::InvalidCoeffFn, "f(0) must be 0");
    }
  }

  /// Maps every nonzero coefficient to 1.
  static CoeffFn indicator() { return CoeffFn({}, Coeff(1)); }

  /// The Schur-Wielandt selector: value -> 1, everything else -> 0.
  static CoeffFn select(const Coeff& value) {
    if (value == 0) throw Error(ErrorCode::InvalidCoeffFn, "cannot select the zero level");
    return CoeffFn({{value, Coeff(1)}}, Coeff(0));
  }

  Coeff operator()(const Coeff& x) const {
    if (x == 0) return Coeff(0);
    for (const auto& [from, to] : table_)
      if (from == x) return to;
    return default_;
  }

 private:
  std::vector<std::pair<Coeff, Coeff>> table_;
  Coeff default_;
};

template <class Coeff>
RingElement<Coeff> apply_coeff_fn(const RingElement<Coeff>& x, const CoeffFn<Coeff>& f) {
  RingElement<Coeff> out;
  for (const auto& [g, c] : x.terms()) out.add_term(g, f(c));
  return out;
}

/// Stab(x) = {g : x g = x}. For nonzero x every stabilizing element is
/// torsion, so only T(G) needs to be searched.
template <class Coeff>
Subgroup stab(const GroupDescriptor& G, const RingElement<Coeff>& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "Stab of the zero element");
  std::vector<GroupElement> candidates;
  if (G.is_finite()) {
    candidates = G.elements();
  } else {
    for (std::int64_t t = 0; t < G.m(); ++t) candidates.push_back({0, t});
  }
  std::vector<GroupElement> fixing;
  for (const auto& g : candidates) {
    if (convolve(G, x, RingElement<Coeff>::monomial(g)) == x) fixing.push_back(g);
  }
  return subgroup_from_generators(G, std::span<const GroupElement>(fixing));
}

// ---------------------------------------------------------------------------
// Text form: "2*z^3*a + 1", highest (z, a) first.

template <class Coeff>
std::string format_ring_element(const RingElement<Coeff>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [g, c] = *it;
    const bool negative = c < 0;
    const Coeff mag = negative ? Coeff(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = mag == 1;
    const bool identity = g == GroupElement{};
    if (!unit || identity) out += coeff_to_string(mag);
    if (!identity) {
      if (!unit) out += "*";
      out += format_element(g, "*");
    }
  }
  return out;
}

/// Parses sums like "2*z^3*a + 1", "z - 1/2*a^2", "-z^-1".
inline RingElement<Rational> parse_ring_element(std::string_view text, const GroupDescriptor& G) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty ring element");
  RingElement<Rational> out;
  if (s == "0") return out;
  std::size_t i = 0;
  while (i < s.size()) {
    Rational sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    }
    // A term ends at the next '+' or '-' that is not an exponent sign.
    std::size_t j = i;
    while (j < s.size() && !((s[j] == '+' || s[j] == '-') && j > i && s[j - 1] != '^')) ++j;
    std::string term = s.substr(i, j - i);
    i = j;
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty term in '" + std::string(text) + "'");
    Rational coeff = 1;
    std::string mono = term;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      const auto star_pos = term.find('*');
      coeff = parse_rational(term.substr(0, star_pos));
      mono = star_pos == std::string::npos ? "1" : term.substr(star_pos + 1);
    }
    out.add_term(parse_element(mono, G), sign * coeff);
  }
  return out;
}

}  // namespace schur
