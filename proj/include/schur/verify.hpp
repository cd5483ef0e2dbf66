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

// Two independent checks that a partition is a Schur ring.
//
// verify_axioms tests the three defining axioms directly, deciding span
// membership by coefficient constancy on classes. verify_wielandt builds a
// reduced row-echelon basis of the span and tests the Wielandt criterion
// (contains 1, covers G, closed under star, Hadamard product and product)
// by exact elimination. On a window only products whose factors satisfy
// radius(C) + radius(D) <= window are examined, so truncation can never
// produce a false Invalid.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schur/presentation.hpp"

namespace schur {

enum class Verdict { Valid, ValidUpToWindow, Invalid };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Valid: return "valid";
    case Verdict::ValidUpToWindow: return "valid_up_to_window";
    case Verdict::Invalid: return "invalid";
  }
  return "?";
}

struct Witness {
  std::string kind;  // identity | star | product | unit | cover | hadamard
  BasicSet first;
  BasicSet second;
  std::string detail;
};

struct VerificationReport {
  Verdict verdict = Verdict::Valid;
  std::int64_t window = 0;  // radius the product checks are sound for
  std::size_t checked_pairs = 0;
  std::optional<Witness> witness;

  bool ok() const { return verdict != Verdict::Invalid; }
};

struct VerifyOptions {
  unsigned threads = 1;
};

namespace detail {

/// Index of the first i in [0, count) with fails(i), or count. Work is split
/// over threads but the answer is always the least failing index.
template <class Pred>
std::size_t first_failure(std::size_t count, unsigned threads, const Pred& fails) {
  if (threads <= 1 || count < 64) {
    for (std::size_t i = 0; i < count; ++i)
      if (fails(i)) return i;
    return count;
  }
  std::atomic<std::size_t> best{count};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count && i < best.load(); i += threads) {
        if (fails(i)) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  return best.load();
}

inline std::vector<std::pair<std::size_t, std::size_t>> checkable_pairs(const SchurPresentation& P) {
  std::vector<std::int64_t> radius(P.classes.size());
  for (std::size_t i = 0; i < P.classes.size(); ++i) radius[i] = max_radius(P.group, P.classes[i]);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < P.classes.size(); ++i)
    for (std::size_t j = i; j < P.classes.size(); ++j)
      if (P.group.is_finite() || radius[i] + radius[j] <= P.window) pairs.emplace_back(i, j);
  return pairs;
}

inline VerificationReport finish(const SchurPresentation& P, std::size_t checked) {
  VerificationReport r;
  r.verdict = P.group.is_finite() ? Verdict::Valid : Verdict::ValidUpToWindow;
  r.window = P.group.is_finite() ? 0 : P.window;
  r.checked_pairs = checked;
  return r;
}

inline VerificationReport invalid(std::size_t checked, Witness w) {
  VerificationReport r;
  r.verdict = Verdict::Invalid;
  r.checked_pairs = checked;
  r.witness = std::move(w);
  return r;
}

}  // namespace detail

inline VerificationReport verify_axioms(const SchurPresentation& P, const VerifyOptions& opts = {}) {
  const PartitionIndex idx(P);
  const auto& G = P.group;

  auto unit = identity_class(P, idx);
  if (!unit || P.classes[*unit].size() != 1) {
    return detail::invalid(0, {"identity", unit ? P.classes[*unit] : BasicSet{}, {}, "{1} is not a class"});
  }

  for (const auto& c : P.classes) {
    const BasicSet s = star_set(G, c);
    auto ci = idx.class_of(s.front());
    if (!ci || P.classes[*ci] != s) {
      return detail::invalid(0, {"star", c, s, "C* = " + format_set(s) + " is not a class"});
    }
  }

  const auto pairs = detail::checkable_pairs(P);
  std::vector<std::optional<std::string>> problems(pairs.size());
  auto fails = [&](std::size_t k) {
    const auto& c = P.classes[pairs[k].first];
    const auto& d = P.classes[pairs[k].second];
    std::unordered_map<GroupElement, std::int64_t, GroupElementHash> prod;
    for (const auto& g : c)
      for (const auto& h : d) ++prod[G.mul(g, h)];
    for (const auto& [g, coeff] : prod) {
      auto ei = idx.class_of(g);
      if (!ei) {
        problems[k] = "product leaves the known classes at " + format_element(g);
        return true;
      }
      for (const auto& e : P.classes[*ei]) {
        auto it = prod.find(e);
        const std::int64_t other = it == prod.end() ? 0 : it->second;
        if (other != coeff) {
          problems[k] = "coefficients of C*D differ on class " + format_set(P.classes[*ei]) + ": " +
                        format_element(g) + " -> " + std::to_string(coeff) + ", " + format_element(e) +
                        " -> " + std::to_string(other);
          return true;
        }
      }
    }
    return false;
  };
  const std::size_t bad = detail::first_failure(pairs.size(), opts.threads, fails);
  if (bad < pairs.size()) {
    return detail::invalid(bad, {"product", P.classes[pairs[bad].first], P.classes[pairs[bad].second],
                                 problems[bad].value_or("")});
  }
  return detail::finish(P, pairs.size());
}

// ---------------------------------------------------------------------------

/// Reduced row-echelon basis of a subspace of F[G], rows keyed by pivot.
class SpanBasis {
 public:
  using Vec = RingElement<Rational>;

  Vec reduce(Vec v) const {
    std::vector<std::pair<GroupElement, Rational>> hits;
    for (const auto& [g, c] : v.terms())
      if (rows_.count(g)) hits.emplace_back(g, c);
    for (const auto& [g, c] : hits) v -= scalar_mul(c, rows_.at(g));
    return v;
  }

  bool contains(const Vec& v) const { return reduce(v).is_zero(); }

  /// Adds v to the span; returns false if it was already inside.
  bool insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.is_zero()) return false;
    const auto [pivot, lead] = *r.terms().begin();
    r = scalar_mul(Rational(1 / lead), r);
    for (auto& [p, row] : rows_) {
      const Rational c = row.coeff(pivot);
      if (c != 0) row -= scalar_mul(c, r);
    }
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  const std::map<GroupElement, Vec>& rows() const { return rows_; }
  std::size_t dimension() const { return rows_.size(); }

 private:
  std::map<GroupElement, Vec> rows_;
};

inline VerificationReport verify_wielandt(const SchurPresentation& P, const VerifyOptions& opts = {}) {
  const PartitionIndex idx(P);
  const auto& G = P.group;
  using Vec = SpanBasis::Vec;

  SpanBasis basis;
  for (const auto& c : P.classes) basis.insert(Vec::simple_quantity(c));
  std::vector<Vec> rows;
  std::vector<std::int64_t> radius;
  for (const auto& [pivot, row] : basis.rows()) {
    rows.push_back(row);
    radius.push_back(max_radius(G, row.support()));
  }

  if (!basis.contains(Vec::monomial(G.identity()))) {
    return detail::invalid(0, {"unit", {G.identity()}, {}, "1 is not in the span"});
  }

  std::map<GroupElement, bool> covered;
  for (const auto& row : rows)
    for (const auto& [g, c] : row.terms()) covered[g] = true;
  for (const auto& g : G.window_elements(P.window)) {
    if (!covered.count(g)) return detail::invalid(0, {"cover", {g}, {}, format_element(g) + " is in no support"});
  }

  for (const auto& row : rows) {
    const Vec s = star(G, row);
    if (!basis.contains(s)) {
      return detail::invalid(0, {"star", row.support(), s.support(), "star of a basis element leaves the span"});
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j)
      if (G.is_finite() || radius[i] + radius[j] <= P.window) pairs.emplace_back(i, j);

  std::vector<std::string> kinds(pairs.size());
  auto fails = [&](std::size_t k) {
    const auto& x = rows[pairs[k].first];
    const auto& y = rows[pairs[k].second];
    if (!basis.contains(hadamard(x, y))) {
      kinds[k] = "hadamard";
      return true;
    }
    if (!basis.contains(convolve(G, x, y))) {
      kinds[k] = "product";
      return true;
    }
    return false;
  };
  const std::size_t bad = detail::first_failure(pairs.size(), opts.threads, fails);
  if (bad < pairs.size()) {
    return detail::invalid(bad, {kinds[bad], rows[pairs[bad].first].support(), rows[pairs[bad].second].support(),
                                 "basis " + kinds[bad] + " leaves the span"});
  }
  return detail::finish(P, pairs.size());
}

}  // namespace schur
