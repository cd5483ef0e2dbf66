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

// Brute-force oracles: every Schur ring over a small finite group, a test
// for the traditional families, and every window of Z x Z_3 that could be
// the window of a Schur ring.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "schur/classify.hpp"
#include "schur/finite_group.hpp"
#include "schur/schur.hpp"
#include "schur/verify.hpp"

namespace schur {

struct EnumerateOptions {
  std::size_t bound = 16;  // largest |G| accepted
  bool prune = true;
  unsigned threads = 1;
};

// ---------------------------------------------------------------------------
// Finite groups.
//
// Classes are grown in order of their least element. Choosing a class X also
// fixes X*. With pruning on, every product of two chosen classes must be
// constant on each chosen class, and a new class may only join elements on
// which all known products agree.

namespace detail {

using Mask = std::uint64_t;

struct FiniteSearch {
  const FiniteAbelianGroup& F;
  bool prune;
  int n;
  Mask full;

  struct State {
    std::vector<Mask> classes;
    Mask assigned = 0;
    std::vector<std::vector<int>> products;
  };

  std::vector<int> members(Mask m) const {
    std::vector<int> out;
    while (m) {
      out.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    return out;
  }

  Mask star(Mask m) const {
    Mask out = 0;
    for (int x : members(m)) out |= Mask{1} << F.inv(x);
    return out;
  }

  std::vector<int> product(Mask c, Mask d) const {
    std::vector<int> v(n, 0);
    const auto cm = members(c), dm = members(d);
    for (int x : cm)
      for (int y : dm) ++v[F.mul(x, y)];
    return v;
  }

  static bool constant_on(const std::vector<int>& v, const std::vector<int>& elems) {
    for (int e : elems)
      if (v[e] != v[elems.front()]) return false;
    return true;
  }

  /// Adds the classes in `fresh` and their products; false if a product is
  /// not constant on some chosen class.
  bool extend(State& s, const std::vector<Mask>& fresh) const {
    for (Mask m : fresh) {
      s.classes.push_back(m);
      s.assigned |= m;
    }
    if (!prune) return true;
    std::vector<std::vector<int>> cls;
    for (Mask m : s.classes) cls.push_back(members(m));
    for (const auto& v : s.products)
      for (Mask m : fresh)
        if (!constant_on(v, members(m))) return false;
    const std::size_t first_new = s.classes.size() - fresh.size();
    for (std::size_t i = first_new; i < s.classes.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        auto v = product(s.classes[i], s.classes[j]);
        for (const auto& e : cls)
          if (!constant_on(v, e)) return false;
        s.products.push_back(std::move(v));
      }
    }
    return true;
  }

  /// Elements still free that agree with x on every known product.
  Mask candidates(const State& s, int x) const {
    const Mask free = full & ~s.assigned;
    if (!prune) return free;
    Mask out = 0;
    for (int y : members(free)) {
      bool same = true;
      for (const auto& v : s.products)
        if (v[y] != v[x]) {
          same = false;
          break;
        }
      if (same) out |= Mask{1} << y;
    }
    return out;
  }

  /// Each admissible choice (X, and X* when different) for the least free
  /// element.
  std::vector<std::vector<Mask>> choices(const State& s) const {
    std::vector<std::vector<Mask>> out;
    const Mask free = full & ~s.assigned;
    const int x = std::countr_zero(free);
    const Mask xbit = Mask{1} << x;
    const Mask rest = candidates(s, x) & ~xbit;
    // All submasks of rest, each together with x.
    Mask sub = rest;
    while (true) {
      const Mask X = sub | xbit;
      const Mask Xs = star(X);
      if (Xs == X) {
        out.push_back({X});
      } else if ((Xs & X) == 0 && (Xs & ~free) == 0) {
        out.push_back({X, Xs});
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  void run(State s, std::vector<std::vector<Mask>>& found) const {
    if (s.assigned == full) {
      found.push_back(s.classes);
      return;
    }
    for (const auto& choice : choices(s)) {
      State next = s;
      if (extend(next, choice)) run(std::move(next), found);
    }
  }
};

}  // namespace detail

inline std::vector<SchurPresentation> enumerate_finite(const GroupDescriptor& G, const EnumerateOptions& opts = {}) {
  if (!G.is_finite()) throw Error(ErrorCode::InfiniteGroup, "enumerate_finite needs a finite group");
  if (static_cast<std::size_t>(G.order()) > std::min<std::size_t>(opts.bound, 63)) {
    throw Error(ErrorCode::BoundExceeded,
                "|G| = " + std::to_string(G.order()) + " exceeds the bound " + std::to_string(opts.bound));
  }
  const auto F = FiniteAbelianGroup::from_descriptor(G);
  detail::FiniteSearch search{F, opts.prune, F.order(), (detail::Mask{1} << F.order()) - 1};
  detail::FiniteSearch::State root;
  search.extend(root, {detail::Mask{1}});

  std::vector<std::vector<detail::Mask>> found;
  if (opts.threads <= 1 || root.assigned == search.full) {
    search.run(root, found);
  } else {
    const auto top = search.choices(root);
    std::vector<std::vector<std::vector<detail::Mask>>> per(top.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < opts.threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < top.size(); i = next++) {
          auto s = root;
          if (search.extend(s, top[i])) search.run(std::move(s), per[i]);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& p : per) found.insert(found.end(), p.begin(), p.end());
  }

  std::vector<SchurPresentation> out;
  for (const auto& classes : found) {
    SchurPresentation P;
    P.group = G;
    for (auto m : classes) {
      BasicSet c;
      for (int x : search.members(m)) c.push_back(F.labels()[x]);
      P.classes.push_back(std::move(c));
    }
    P.oracle_tag = "enumerate";
    P.canonicalize();
    if (verify_axioms(P).ok()) out.push_back(std::move(P));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.classes < y.classes; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Traditional families.

enum class Tradition { Trivial, Orbit, Tensor, Wedge, No };

inline std::string_view to_string(Tradition t) {
  switch (t) {
    case Tradition::Trivial: return "trivial";
    case Tradition::Orbit: return "orbit";
    case Tradition::Tensor: return "tensor";
    case Tradition::Wedge: return "wedge";
    case Tradition::No: return "none";
  }
  return "?";
}

struct TraditionReport {
  Tradition kind = Tradition::No;
  std::string detail;
};

namespace detail {

using Partition = std::vector<ElementSet>;

inline Partition normalized(Partition p) {
  for (auto& c : p) std::sort(c.begin(), c.end());
  std::sort(p.begin(), p.end());
  return p;
}

inline bool is_union(const Partition& P, const std::vector<int>& class_of, const ElementSet& S) {
  std::vector<char> in(class_of.size(), 0);
  for (int x : S) in[x] = 1;
  for (int x : S)
    for (int y : P[class_of[x]])
      if (!in[y]) return false;
  return true;
}

inline std::string format_elements(const FiniteAbelianGroup& F, const ElementSet& S) {
  if (F.labels().empty()) return std::to_string(S.size()) + " elements";
  BasicSet b;
  for (int x : S) b.push_back(F.labels()[x]);
  return format_set(b);
}

inline TraditionReport traditional(const FiniteAbelianGroup& F, const Partition& raw) {
  const Partition P = normalized(raw);
  const int n = F.order();
  std::vector<int> class_of(n, -1);
  for (int i = 0; i < static_cast<int>(P.size()); ++i)
    for (int x : P[i]) class_of[x] = i;

  if (P.size() <= 2) return {Tradition::Trivial, ""};
  if (n <= 3) return {Tradition::Orbit, "group of order <= 3"};

  // Orbit: the stabilizer of every class must have the classes as orbits.
  {
    std::vector<FiniteAbelianGroup::Map> keep;
    for (const auto& phi : F.automorphisms()) {
      bool fixes = true;
      for (int x = 0; x < n && fixes; ++x) fixes = class_of[phi[x]] == class_of[x];
      if (fixes) keep.push_back(phi);
    }
    Partition orbits;
    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
      if (seen[x]) continue;
      ElementSet o;
      for (const auto& phi : keep) {
        if (!seen[phi[x]]) {
          seen[phi[x]] = 1;
          o.push_back(phi[x]);
        }
      }
      orbits.push_back(o);
    }
    if (normalized(orbits) == P) return {Tradition::Orbit, "stabilizer of order " + std::to_string(keep.size())};
  }

  std::vector<ElementSet> ssub;
  for (const auto& S : F.subgroups())
    if (is_union(P, class_of, S)) ssub.push_back(S);

  auto restrict_to = [&](const ElementSet& S) {
    std::vector<int> embed;
    FiniteAbelianGroup sub = F.subgroup(S, &embed);
    std::map<int, int> local;
    for (int i = 0; i < static_cast<int>(embed.size()); ++i) local[embed[i]] = i;
    Partition q;
    for (const auto& c : P) {
      if (!local.count(c.front())) continue;
      ElementSet lc;
      for (int x : c) lc.push_back(local.at(x));
      q.push_back(lc);
    }
    return std::make_pair(std::move(sub), std::move(q));
  };
  auto quotient_by = [&](const ElementSet& K) {
    std::vector<int> proj;
    FiniteAbelianGroup Q = F.quotient(K, &proj);
    std::set<ElementSet> imgs;
    for (const auto& c : P) {
      std::set<int> img;
      for (int x : c) img.insert(proj[x]);
      imgs.insert(ElementSet(img.begin(), img.end()));
    }
    return std::make_pair(std::move(Q), Partition(imgs.begin(), imgs.end()));
  };

  // Tensor: S-subgroups A, B with A x B = G and classes the products CD.
  for (const auto& A : ssub) {
    for (const auto& B : ssub) {
      if (A.size() <= 1 || B.size() <= 1 || static_cast<int>(A.size() * B.size()) != n || A >= B) continue;
      ElementSet meet;
      std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(meet));
      if (meet.size() != 1) continue;
      Partition prod;
      for (const auto& c : P) {
        if (!std::includes(A.begin(), A.end(), c.begin(), c.end())) continue;
        for (const auto& d : P) {
          if (!std::includes(B.begin(), B.end(), d.begin(), d.end())) continue;
          std::set<int> cd;
          for (int x : c)
            for (int y : d) cd.insert(F.mul(x, y));
          prod.push_back(ElementSet(cd.begin(), cd.end()));
        }
      }
      if (normalized(prod) != P) continue;
      auto [GA, PA] = restrict_to(A);
      auto [GB, PB] = restrict_to(B);
      if (traditional(GA, PA).kind == Tradition::No || traditional(GB, PB).kind == Tradition::No) continue;
      return {Tradition::Tensor, "A=" + format_elements(F, A) + " B=" + format_elements(F, B)};
    }
  }

  // Wedge: 1 < K <= H < G, classes outside H are unions of K-cosets.
  for (const auto& K : ssub) {
    if (K.size() <= 1 || static_cast<int>(K.size()) == n) continue;
    for (const auto& H : ssub) {
      if (static_cast<int>(H.size()) == n || !std::includes(H.begin(), H.end(), K.begin(), K.end())) continue;
      bool ok = true;
      for (const auto& c : P) {
        if (std::binary_search(H.begin(), H.end(), c.front())) continue;
        for (int x : c)
          for (int k : K)
            if (!std::binary_search(c.begin(), c.end(), F.mul(x, k))) ok = false;
        if (!ok) break;
      }
      if (!ok) continue;
      auto [GH, PH] = restrict_to(H);
      auto [GQ, PQ] = quotient_by(K);
      if (traditional(GH, PH).kind == Tradition::No || traditional(GQ, PQ).kind == Tradition::No) continue;
      return {Tradition::Wedge, "K=" + format_elements(F, K) + " H=" + format_elements(F, H)};
    }
  }
  return {Tradition::No, ""};
}

}  // namespace detail

inline TraditionReport is_traditional(const SchurPresentation& P) {
  if (!P.group.is_finite()) throw Error(ErrorCode::InfiniteGroup, "is_traditional needs a finite group");
  check_well_formed(P);
  const auto F = FiniteAbelianGroup::from_descriptor(P.group);
  std::map<GroupElement, int> index;
  for (int i = 0; i < F.order(); ++i) index[F.labels()[i]] = i;
  detail::Partition part;
  for (const auto& c : P.classes) {
    ElementSet s;
    for (const auto& g : c) s.push_back(index.at(g));
    part.push_back(s);
  }
  return detail::traditional(F, part);
}

// ---------------------------------------------------------------------------
// Windows of Z x Z_3.
//
// The image of a Schur ring over Z x Z_3 modulo Z_3 is a Schur ring over Z,
// hence discrete or symmetric. So every class lives in one level z^l Z_3
// (discrete image) or in z^l Z_3 u z^-l Z_3 meeting both halves (symmetric
// image). The search fixes the torsion classes, then the classes of each
// level l = 1..N in turn.

struct WindowConstraints {
  std::optional<Projection> projection;
};

namespace detail {

struct WindowSearch {
  GroupDescriptor G = z_times_z3();
  std::int64_t N;
  Projection proj;
  bool prune;

  using Classes = std::vector<BasicSet>;

  int index(const GroupElement& g) const { return static_cast<int>((g.z + N) * 3 + g.a); }
  int size() const { return static_cast<int>((2 * N + 1) * 3); }

  static std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> cur;
    std::function<void(int)> go = [&](int i) {
      if (i == n) {
        out.push_back(cur);
        return;
      }
      for (std::size_t b = 0; b < cur.size(); ++b) {
        cur[b].push_back(i);
        go(i + 1);
        cur[b].pop_back();
      }
      cur.push_back({i});
      go(i + 1);
      cur.pop_back();
    };
    go(0);
    return out;
  }

  /// Admissible class families on level l.
  std::vector<Classes> level_options(std::int64_t l) const {
    std::vector<Classes> out;
    if (proj == Projection::Discrete) {
      for (const auto& part : set_partitions(3)) {
        Classes cs;
        for (const auto& block : part) {
          BasicSet c, s;
          for (int i : block) {
            c.push_back({l, i});
            s.push_back(G.inverse({l, i}));
          }
          sort_unique(c);
          sort_unique(s);
          cs.push_back(c);
          cs.push_back(s);
        }
        out.push_back(cs);
      }
      return out;
    }
    std::vector<GroupElement> six;
    for (int i = 0; i < 3; ++i) six.push_back({l, i});
    for (int i = 0; i < 3; ++i) six.push_back({-l, i});
    for (const auto& part : set_partitions(6)) {
      Classes cs;
      bool ok = true;
      for (const auto& block : part) {
        BasicSet c;
        for (int i : block) c.push_back(six[i]);
        sort_unique(c);
        const bool both = c.front().z < 0 && c.back().z > 0;
        if (!both || c.size() == 3) ok = false;
        cs.push_back(c);
      }
      if (!ok) continue;
      std::set<BasicSet> family(cs.begin(), cs.end());
      for (const auto& c : cs)
        if (!family.count(star_set(G, c))) ok = false;
      if (ok) out.push_back(cs);
    }
    return out;
  }

  struct State {
    Classes classes;
    std::vector<int> level;     // per class
    std::vector<int> class_of;  // per window index, -1 when undecided
  };

  bool known(const State& s, const GroupElement& g) const {
    return std::abs(g.z) <= N && s.class_of[index(g)] >= 0;
  }

  bool is_union(const State& s, const BasicSet& Y) const {
    for (const auto& y : Y) {
      if (!known(s, y)) continue;
      for (const auto& h : s.classes[s.class_of[index(y)]])
        if (!std::binary_search(Y.begin(), Y.end(), h)) return false;
    }
    return true;
  }

  /// Checks every rule that becomes decidable once level l is placed; with
  /// every_rule set, checks all rules up to level l at once.
  bool consistent(const State& s, std::int64_t l, bool every_rule) const {
    const int nc = static_cast<int>(s.classes.size());
    std::vector<int> count(size(), 0);
    for (int i = 0; i < nc; ++i) {
      for (int j = i; j < nc; ++j) {
        const int li = s.level[i], lj = s.level[j];
        if (!every_rule && li != l && lj != l && li + lj != l && std::abs(li - lj) != l) continue;
        std::fill(count.begin(), count.end(), 0);
        std::vector<int> touched;
        for (const auto& x : s.classes[i])
          for (const auto& y : s.classes[j]) {
            const GroupElement g = G.mul(x, y);
            if (!known(s, g)) continue;
            if (count[index(g)]++ == 0) touched.push_back(index(g));
          }
        for (int t : touched) {
          const auto& E = s.classes[s.class_of[t]];
          for (const auto& e : E)
            if (count[index(e)] != count[t]) return false;
        }
      }
    }
    for (int i = 0; i < nc; ++i) {
      const int li = s.level[i];
      if (li == 0) continue;
      const auto& C = s.classes[i];
      // Frobenius images for k prime to 3.
      for (int k = 2; k * li <= l; ++k) {
        if (k % 3 == 0 || (!every_rule && k * li != l)) continue;
        BasicSet img;
        for (const auto& g : C) img.push_back(G.pow(g, k));
        sort_unique(img);
        if (!is_union(s, img)) return false;
      }
      // Multiplier set and the cube rule.
      if (3 * li <= l && (every_rule || 3 * li == l)) {
        if (!is_union(s, multiplier_set_raw(G, C, 3))) return false;
        if (C.size() < 3) {
          for (const auto& h : s.classes[s.class_of[index({3 * li, 0})]])
            if (h.a != 0) return false;
        }
      }
    }
    return true;
  }

  State place(const State& s, const Classes& cs, int l) const {
    State next = s;
    for (const auto& c : cs) {
      for (const auto& g : c) next.class_of[index(g)] = static_cast<int>(next.classes.size());
      next.classes.push_back(c);
      next.level.push_back(l);
    }
    return next;
  }

  void run(const State& s, std::int64_t l, const std::vector<std::vector<Classes>>& options,
           std::vector<Classes>& found) const {
    if (l > N) {
      if (!prune && !consistent(s, N, true)) return;
      found.push_back(s.classes);
      return;
    }
    for (const auto& cs : options[l]) {
      State next = place(s, cs, static_cast<int>(l));
      if (prune && !consistent(next, l, false)) continue;
      run(next, l + 1, options, found);
    }
  }
};

}  // namespace detail

inline std::vector<SchurPresentation> enumerate_windowed(std::int64_t N, const WindowConstraints& constraints = {},
                                                         const EnumerateOptions& opts = {}) {
  if (N < 1 || N > 6) throw Error(ErrorCode::BoundExceeded, "windowed enumeration supports 1 <= N <= 6");
  const GroupDescriptor G = z_times_z3();
  std::vector<SchurPresentation> out;
  for (Projection proj : {Projection::Discrete, Projection::Symmetric}) {
    if (constraints.projection && *constraints.projection != proj) continue;
    detail::WindowSearch search{G, N, proj, opts.prune};
    std::vector<std::vector<detail::WindowSearch::Classes>> options(N + 1);
    options[0] = {{{{0, 0}}, {{0, 1}}, {{0, 2}}}, {{{0, 0}}, {{0, 1}, {0, 2}}}};
    for (std::int64_t l = 1; l <= N; ++l) options[l] = search.level_options(l);

    std::vector<detail::WindowSearch::Classes> found;
    std::mutex mu;
    auto branch = [&](const detail::WindowSearch::Classes& torsion) {
      detail::WindowSearch::State root;
      root.class_of.assign(search.size(), -1);
      root = search.place(root, torsion, 0);
      std::vector<detail::WindowSearch::Classes> local;
      search.run(root, 1, options, local);
      std::lock_guard<std::mutex> lock(mu);
      found.insert(found.end(), local.begin(), local.end());
    };
    if (opts.threads > 1) {
      std::vector<std::thread> pool;
      for (const auto& t : options[0]) pool.emplace_back(branch, t);
      for (auto& th : pool) th.join();
    } else {
      for (const auto& t : options[0]) branch(t);
    }
    for (const auto& classes : found) {
      SchurPresentation P;
      P.group = G;
      P.window = N;
      P.classes = classes;
      P.oracle_tag = "enumerate-window";
      P.canonicalize();
      if (verify_axioms(P).ok()) out.push_back(std::move(P));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.classes < y.classes; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace schur
