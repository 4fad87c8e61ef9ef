#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cosetkit/duality.hpp"
#include "cosetkit/format.hpp"

namespace cosetkit {

struct VerifyOptions {
  unsigned cap = 8;                 // acyclicity levels are searched up to here
  unsigned dual_cap = 6;            // dualacyc compares levels up to here
  std::size_t all_anchors = 16;     // sweep every start vertex up to this order, else only 1
  std::size_t exhaustive_cut = 24;  // cosetcut enumerates all length-3 sequences up to this order
  std::uint32_t seed = 20240601;
  SearchOptions search;
};

/// Outcome of one sweep on one graph. `checks` counts the individual
/// statements evaluated; `witness` describes the first refutation.
struct SuiteReport {
  std::string suite;
  Status status = Status::verified;
  std::uint64_t checks = 0;
  std::string witness;
  std::vector<std::pair<std::string, std::string>> notes;

  bool refuted() const { return status == Status::refuted; }
};

namespace detail {

/// Start vertices of a sweep. Left translation is a label-preserving
/// automorphism, so the identity stands for every vertex on larger groups.
inline std::vector<Vertex> anchors(const CayleyGraph& g, const VerifyOptions& o) {
  std::vector<Vertex> out{g.identity()};
  if (g.size() <= o.all_anchors)
    for (Vertex v = 1; v < g.size(); ++v) out.push_back(v);
  return out;
}

inline std::vector<Vertex> coset_members(const CayleyGraph& g, Vertex v, GenMask m) {
  auto span = members(g, coset(g, v, m));
  return {span.begin(), span.end()};
}

inline bool same_set(std::vector<Vertex> a, std::vector<Vertex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

/// Members of the intersection of [v_i]_{α_i}, computed by scanning G.
inline std::vector<Vertex> meet(const CayleyGraph& g, const std::vector<std::pair<Vertex, GenMask>>& cs) {
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.size(); ++x)
    if (std::all_of(cs.begin(), cs.end(), [&](auto c) { return g.same_class(c.first, x, c.second); })) out.push_back(x);
  return out;
}

class Sweep {
 public:
  Sweep(std::string name, const CayleyGraph& g) : g_(g) { r_.suite = std::move(name); }

  /// Records one evaluated statement; the first failure becomes the witness.
  void check(bool ok, const std::function<std::string()>& witness) {
    ++r_.checks;
    if (!ok && r_.status != Status::refuted) {
      r_.status = Status::refuted;
      r_.witness = witness();
    }
  }
  bool refuted() const { return r_.status == Status::refuted; }
  void guard(std::string why) {
    r_.status = Status::unverified_guard;
    r_.witness = std::move(why);
  }
  void note(std::string key, std::string value) { r_.notes.emplace_back(std::move(key), std::move(value)); }
  const Group& G() const { return g_.group(); }

  SuiteReport finish() { return std::move(r_); }

 private:
  const CayleyGraph& g_;
  SuiteReport r_;
};

/// Two-acyclicity and the short bound, or a guard message.
inline bool needs_two_acyclic(const CayleyGraph& g, Sweep& s) {
  if (two_acyclic(g)) return true;
  auto w = *is_2_acyclic(g).witness;
  s.guard("not 2-acyclic: " + describe_two_cycle(g, w.v, w.alpha, w.u, w.beta));
  return false;
}

}  // namespace detail

/// Intersection characterisation of 2-acyclicity against an exhaustive search
/// for 2-cycles, pair by pair of generator sets.
inline SuiteReport verify_cutchar(const CayleyGraph& g, const VerifyOptions& o = {}) {
  detail::Sweep s("cutchar", g);
  const auto masks = all_masks(g.arity());
  std::size_t failing = 0;
  for (GenMask a : masks)
    for (GenMask b : masks) {
      const bool identity = detail::same_set(detail::meet(g, {{0, a}, {0, b}}), detail::coset_members(g, 0, a & b));
      bool cycle = false;
      for (Vertex v : detail::anchors(g, o)) {
        for (Vertex u = 0; u < g.size() && !cycle; ++u)
          cycle = validate_cycle(g, CosetCycle{{v, u}, {a, b}});
        if (cycle) break;
      }
      if (!identity) ++failing;
      s.check(identity != cycle, [&] {
        return "pair " + format_mask(s.G(), a) + "," + format_mask(s.G(), b) + ": identity " +
               (identity ? "holds" : "fails") + " but a 2-cycle is " + (cycle ? "present" : "absent");
      });
    }
  const bool acyclic = is_2_acyclic(g).acyclic;
  s.check(acyclic == (failing == 0), [] { return std::string("2-acyclicity verdict disagrees with the pair sweep"); });
  s.check(acyclic == !find_coset_cycle(g, 2, o.search).has_value(),
          [] { return std::string("2-acyclicity verdict disagrees with cycle search"); });
  s.note("two_acyclic", acyclic ? "true" : "false");
  s.note("failing_pairs", std::to_string(failing));
  return s.finish();
}

/// Intersections of cosets through a common vertex, closure of connecting
/// sets under intersection, and gen(v̄) as the meet of connecting sets.
inline SuiteReport verify_genset(const CayleyGraph& g, const VerifyOptions& o = {}) {
  detail::Sweep s("genset", g);
  if (!detail::needs_two_acyclic(g, s)) return s.finish();
  const auto masks = all_masks(g.arity());
  for (Vertex v : detail::anchors(g, o)) {
    for (GenMask a : masks)
      for (GenMask b : masks) {
        auto lhs2 = detail::meet(g, {{v, a}, {v, b}});
        s.check(detail::same_set(lhs2, detail::coset_members(g, v, a & b)), [&] {
          return "[" + format_vertex(s.G(), v) + "] for " + format_mask(s.G(), a) + "," + format_mask(s.G(), b);
        });
        for (GenMask c : masks) {
          if (s.refuted()) return s.finish();
          auto lhs3 = detail::meet(g, {{v, a}, {v, b}, {v, c}});
          s.check(detail::same_set(lhs3, detail::coset_members(g, v, a & b & c)), [&] {
            return "[" + format_vertex(s.G(), v) + "] for " + format_mask(s.G(), a) + "," + format_mask(s.G(), b) +
                   "," + format_mask(s.G(), c);
          });
        }
      }
    for (Vertex u = 0; u < g.size(); ++u) {
      GenMask least = g.full_mask();
      for (GenMask a : masks) {
        if (!g.same_class(v, u, a)) continue;
        least = least & a;
        for (GenMask b : masks)
          if (g.same_class(v, u, b))
            s.check(g.same_class(v, u, a & b), [&] {
              return "connecting sets " + format_mask(s.G(), a) + "," + format_mask(s.G(), b) + " for " +
                     format_vertex(s.G(), v) + "," + format_vertex(s.G(), u);
            });
      }
      s.check(gen_set(g, v, u, false) == least,
              [&] { return "gen(" + format_vertex(s.G(), v) + "," + format_vertex(s.G(), u) + ")"; });
    }
  }
  return s.finish();
}

/// e ∉ gen(v,u) ⇒ gen(v, u∘e) = gen(v,u) ∪ {e}.
inline SuiteReport verify_addagent(const CayleyGraph& g, const VerifyOptions& o = {}) {
  detail::Sweep s("addagent", g);
  if (!detail::needs_two_acyclic(g, s)) return s.finish();
  for (Vertex v : detail::anchors(g, o))
    for (Vertex u = 0; u < g.size(); ++u) {
      const GenMask base = gen_set(g, v, u, false);
      for (unsigned e = 0; e < g.arity(); ++e) {
        if (base.contains(e)) continue;
        const Vertex ue = g.step(u, e);
        s.check(gen_set(g, v, ue, false) == base.with(e), [&] {
          return "v=" + format_vertex(s.G(), v) + " u=" + format_vertex(s.G(), u) + " e=" + s.G().label(e);
        });
      }
    }
  return s.finish();
}

/// β ⊆ α ⇔ [v]_β ⊆ [v]_α, with containment decided on member sets.
inline SuiteReport verify_subsetchar(const CayleyGraph& g, const VerifyOptions& o = {}) {
  detail::Sweep s("subsetchar", g);
  if (!detail::needs_two_acyclic(g, s)) return s.finish();
  const auto masks = all_masks(g.arity());
  for (Vertex v : detail::anchors(g, o))
    for (GenMask a : masks)
      for (GenMask b : masks) {
        bool contained = true;
        for (Vertex x : members(g, coset(g, v, b))) contained = contained && g.same_class(v, x, a);
        s.check(b.subset_of(a) == contained && coset_subset(g, v, b, a) == contained, [&] {
          return "v=" + format_vertex(s.G(), v) + " β=" + format_mask(s.G(), b) + " α=" + format_mask(s.G(), a);
        });
      }
  return s.finish();
}

/// The coset cut identity on cyclic sequences with [v_i]_{α_i} = [v_{i+1}]_{α_i}:
/// every length-3 sequence through 1 on small groups, random ones otherwise,
/// plus random sequences of length 4 to 6.
inline SuiteReport verify_cosetcut(const CayleyGraph& g, const VerifyOptions& o = {}) {
  detail::Sweep s("cosetcut", g);
  if (!detail::needs_two_acyclic(g, s)) return s.finish();
  using Seq = std::vector<std::pair<Vertex, GenMask>>;
  auto test = [&](const Seq& q) {
    const std::size_t m = q.size();
    for (std::size_t i = 0; i < m && !s.refuted(); ++i) {
      const auto& [vp, ap] = q[(i + m - 1) % m];
      const auto& [vi, ai] = q[i];
      const auto& [vn, an] = q[(i + 1) % m];
      auto lhs = detail::meet(g, {{vi, ap & ai}, {vn, ai & an}});
      auto rhs = detail::meet(g, {{vp, ap}, {vi, ai}, {vn, an}});
      s.check(lhs == rhs, [&] {
        std::string w;
        for (auto [v, a] : q) w += "(" + format_vertex(s.G(), v) + "," + format_mask(s.G(), a) + ")";
        return w + " at position " + std::to_string(i);
      });
    }
  };
  const auto masks = all_masks(g.arity());
  std::mt19937 rng(o.seed);
  auto pick = [&](Vertex v, GenMask a) {
    auto span = members(g, coset(g, v, a));
    return span[std::uniform_int_distribution<std::size_t>(0, span.size() - 1)(rng)];
  };
  auto random_mask = [&] { return masks[std::uniform_int_distribution<std::size_t>(0, masks.size() - 1)(rng)]; };
  // Closing the cycle needs v_0 ∈ [v_{m-1}]_{α_{m-1}}: take α_{m-1} = E when
  // the random choice does not connect.
  auto random_seq = [&](std::size_t m) {
    Seq q{{0, random_mask()}};
    while (q.size() < m) {
      q.emplace_back(pick(q.back().first, q.back().second), random_mask());
    }
    if (!g.same_class(q.back().first, 0, q.back().second)) q.back().second = g.full_mask();
    return q;
  };

  if (g.size() <= o.exhaustive_cut) {
    for (GenMask a0 : masks)
      for (Vertex v1 : members(g, coset(g, 0, a0)))
        for (GenMask a1 : masks)
          for (Vertex v2 : members(g, coset(g, v1, a1)))
            for (GenMask a2 : masks) {
              if (!g.same_class(v2, 0, a2)) continue;
              test({{0, a0}, {v1, a1}, {v2, a2}});
              if (s.refuted()) return s.finish();
            }
  } else {
    for (int k = 0; k < 20000 && !s.refuted(); ++k) test(random_seq(3));
  }
  for (std::size_t m = 4; m <= 6; ++m)
    for (int k = 0; k < 2000 && !s.refuted(); ++k) test(random_seq(m));
  return s.finish();
}

/// Short coset paths: zipper overlaps for every pair, a short path through
/// the common first direction, and no link of a short path falling outside
/// [v]_gen.
inline SuiteReport verify_zipper(const CayleyGraph& g, const VerifyOptions& o = {}) {
  detail::Sweep s("zipper", g);
  if (!detail::needs_two_acyclic(g, s)) return s.finish();
  const unsigned n = short_bound(g, o.cap);
  s.note("short_bound", std::to_string(n));
  if (n < 1) {
    s.guard("no short paths below the acyclicity level");
    return s.finish();
  }
  const auto& G = g.group();
  for (Vertex v : detail::anchors(g, o))
    for (Vertex u = 0; u < g.size(); ++u) {
      if (u == v) continue;
      const auto paths = enumerate_paths(g, v, u, PathConstraint::any(), n, o.search);
      const Coset span = coset(g, v, gen_set(g, v, u, false));
      Budget budget(o.search.budget);
      detail::PathSearch search(g, v, u, PathConstraint::any(), budget);
      for (const auto& p : paths) {
        for (std::size_t i = 1; i < p.length(); ++i)
          s.check(cosets_intersect(g, span, detail::position_class(g, p, i)),
                  [&] { return "short path with a link outside [v]_gen: " + format_path(G, p); });
        for (const auto& q : paths) {
          auto z = check_zipper(g, p, q, o.cap);
          s.check(z.verifiable && z.holds(),
                  [&] { return "zipper fails for " + format_path(G, p) + " and " + format_path(G, q); });
          const GenMask common = p.labels[0] & q.labels[0];
          bool found = false;
          for (unsigned len = 1; len <= n && !found && !common.empty(); ++len)
            found = search.first_path(len, common).has_value();
          s.check(found, [&] {
            return "no short path starting with " + format_mask(G, common) + " for " + format_path(G, p) + " and " +
                   format_path(G, q);
          });
          if (s.refuted()) return s.finish();
        }
      }
    }
  return s.finish();
}

/// No coset path of length up to the acyclicity level returns to its start.
inline SuiteReport verify_cyclic(const CayleyGraph& g, const VerifyOptions& o = {}) {
  detail::Sweep s("cyclic", g);
  if (!detail::needs_two_acyclic(g, s)) return s.finish();
  const unsigned n = acyclicity_level(g, o.cap, o.search);
  s.note("level", std::to_string(n));
  for (Vertex v : detail::anchors(g, o)) {
    auto p = find_cyclic_path(g, v, n, o.search);
    s.check(!p, [&] { return "cyclic coset path " + format_path(g.group(), *p); });
  }
  return s.finish();
}

/// Every short path of length ≥ 2 can be moved inside [v]_gen as an inner
/// path, and the absence of short inner paths bounds the distance.
inline SuiteReport verify_innerize(const CayleyGraph& g, const VerifyOptions& o = {}) {
  detail::Sweep s("innerize", g);
  if (!detail::needs_two_acyclic(g, s)) return s.finish();
  const unsigned n = short_bound(g, o.cap);
  s.note("short_bound", std::to_string(n));
  if (n < 2) {
    s.guard("short bound " + std::to_string(n) + " admits no path of length 2");
    return s.finish();
  }
  const auto& G = g.group();
  for (Vertex v : detail::anchors(g, o))
    for (Vertex u = 0; u < g.size(); ++u) {
      if (u == v) continue;
      for (const auto& p : enumerate_paths(g, v, u, PathConstraint::any(), n, o.search)) {
        if (p.length() < 2) continue;
        std::string why;
        try {
          auto q = innerize(g, p, o.cap);
          auto cls = validate_path(g, q);
          s.check(cls.valid && cls.inner && q.front() == v && q.back() == u,
                  [&] { return "innerized path is not inner: " + format_path(G, q); });
        } catch (const Error& e) {
          if (e.code() == ErrorCode::BudgetExceeded) throw;
          why = e.what();
          s.check(false, [&] { return format_path(G, p) + ": " + why; });
        }
        if (s.refuted()) return s.finish();
      }
      auto inner = find_min_path(g, v, u, PathConstraint::inner(), n, o.search);
      auto d = find_min_path(g, v, u, PathConstraint::non_trivial(), n, o.search);
      for (unsigned m = 2; m <= n; ++m) {
        const bool no_inner = !inner || inner->length() > m;
        s.check(!no_inner || !d || d->length() > m, [&] {
          return "no inner path of length ≤ " + std::to_string(m) + " but d(" + format_vertex(G, v) + "," +
                 format_vertex(G, u) + ") = " + std::to_string(d->length());
        });
      }
    }
  return s.finish();
}

/// ⟨v⟩ ∩ ⟨u⟩ ⊆ ρ(v,γ) ⇔ γ ⊆ gen(v,u).
inline SuiteReport verify_tprop(const CayleyGraph& g, const VerifyOptions& o = {}) {
  detail::Sweep s("tprop", g);
  if (!detail::needs_two_acyclic(g, s)) return s.finish();
  const auto masks = all_masks(g.arity());
  for (Vertex v : detail::anchors(g, o))
    for (Vertex u = 0; u < g.size(); ++u) {
      const GenMask gen = gen_set(g, v, u, false);
      const auto ev = dual_hyperedge(g, v), eu = dual_hyperedge(g, u);
      for (GenMask gamma : masks) {
        const TSet t = rho(v, gamma);
        bool inside = true;
        for (const Coset& c : ev)
          if (std::find(eu.begin(), eu.end(), c) != eu.end()) inside = inside && t.contains(g, c);
        s.check(inside == gamma.subset_of(gen), [&] {
          return "v=" + format_vertex(s.G(), v) + " u=" + format_vertex(s.G(), u) + " γ=" + format_mask(s.G(), gamma);
        });
      }
    }
  return s.finish();
}

/// d_t(v,u) = d_t(⟨v⟩,⟨u⟩) + 1 for all u and γ, together with the step-away
/// property of short_t on graphs that are (2m+1)-acyclic.
inline SuiteReport verify_twodistances(const CayleyGraph& g, const VerifyOptions& o = {}) {
  detail::Sweep s("twodistances", g);
  if (!detail::needs_two_acyclic(g, s)) return s.finish();
  const auto& G = g.group();
  const DualHypergraph d(g);
  const auto masks = all_masks(g.arity());
  std::uint64_t infinite = 0, adjacent = 0, canonical = 0;
  for (Vertex v : detail::anchors(g, o))
    for (Vertex u = 0; u < g.size(); ++u) {
      if (u == v) continue;
      for (GenMask gamma : masks) {
        auto r = check_two_distances(d, v, u, gamma, o.search);
        if (!r.coset_side) ++infinite;
        if (r.coset_side == 1u) ++adjacent;
        if (r.canonical) ++canonical;
        s.check(r.status == Status::verified, [&] {
          auto show = [](std::optional<unsigned> x) { return x ? std::to_string(*x) : std::string("inf"); };
          return "v=" + format_vertex(G, v) + " u=" + format_vertex(G, u) + " γ=" + format_mask(G, gamma) +
                 ": d_t=" + show(r.coset_side) + " dual=" + show(r.dual_side);
        });
        if (s.refuted()) return s.finish();
      }
    }
  s.note("infinite", std::to_string(infinite));
  s.note("adjacent", std::to_string(adjacent));
  s.note("canonical", std::to_string(canonical));

  const unsigned level = acyclicity_level(g, o.cap, o.search);
  const unsigned m = (level - 1) / 2;
  s.note("step_away_bound", std::to_string(m));
  if (m < 1) return s.finish();
  for (Vertex v : detail::anchors(g, o))
    for (Vertex u = 0; u < g.size(); ++u) {
      if (u == v) continue;
      const GenMask gen = gen_set(g, v, u, false);
      for (GenMask gamma : masks) {
        if (!gamma.subset_of(gen)) continue;
        auto dt = t_distance(g, v, u, gamma, o.search);
        if (!dt || *dt > m) continue;
        auto here = short_set_t(g, v, u, gamma, o.cap, m, v, o.search);
        for (unsigned a = 0; a < g.arity(); ++a) {
          if (here->mask.contains(a)) continue;
          const Vertex va = g.step(v, a);
          if (va == u) continue;
          auto da = t_distance(g, va, u, gamma, o.search, v);
          if (!da || *da > m) continue;
          auto there = short_set_t(g, va, u, gamma, o.cap, m, v, o.search);
          s.check(there && there->mask.contains(a), [&] {
            return "step away: v=" + format_vertex(G, v) + " u=" + format_vertex(G, u) + " γ=" + format_mask(G, gamma) +
                   " a=" + G.label(a);
          });
        }
      }
    }
  return s.finish();
}

/// Coset acyclicity level of G against the hypergraph acyclicity level of
/// d(G), both up to dual_cap.
inline SuiteReport verify_dualacyc(const CayleyGraph& g, const VerifyOptions& o = {}) {
  detail::Sweep s("dualacyc", g);
  if (!detail::needs_two_acyclic(g, s)) return s.finish();
  Budget budget(o.search.budget);
  const unsigned cayley = acyclicity_level(g, o.dual_cap, o.search);
  const unsigned dual = dual_acyclicity_level(DualHypergraph(g, &budget), o.dual_cap, &budget);
  s.note("cayley_level", std::to_string(cayley));
  s.note("dual_level", std::to_string(dual));
  s.check(cayley == dual, [&] {
    return "levels differ: coset " + std::to_string(cayley) + ", dual " + std::to_string(dual);
  });
  return s.finish();
}

/// Cayley-side convex closures of random coset pairs against the dual
/// closure one step shorter.
inline SuiteReport verify_closure(const CayleyGraph& g, const VerifyOptions& o = {}) {
  detail::Sweep s("closure", g);
  if (!detail::needs_two_acyclic(g, s)) return s.finish();
  const DualHypergraph d(g);
  std::mt19937 rng(o.seed);
  std::uniform_int_distribution<Node> node(0, static_cast<Node>(d.vertex_count() - 1));
  std::size_t guarded = 0, largest = 0;
  for (unsigned m = 2; m <= 3; ++m)
    for (int k = 0; k < 12; ++k) {
      std::vector<Coset> P{d.coset_of(node(rng)), d.coset_of(node(rng))};
      auto r = convex_closure_cayley(d, P, m, o.cap, o.search);
      largest = std::max(largest, r.closure.size());
      if (r.status == Status::unverified_guard) continue;
      ++guarded;
      s.check(r.contained, [&] {
        return "m=" + std::to_string(m) + " P={" + format_coset(s.G(), P[0]) + "," + format_coset(s.G(), P[1]) +
               "}: closure " + std::to_string(r.closure.size()) + " not inside dual closure " +
               std::to_string(r.dual_closure.size());
      });
      if (s.refuted()) return s.finish();
    }
  s.note("guarded_runs", std::to_string(guarded));
  s.note("largest_closure", std::to_string(largest));
  if (guarded == 0) s.guard("no closure run is within the acyclicity guard");
  return s.finish();
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cutchar",  "genset", "addagent", "subsetchar", "cosetcut", "zipper",
                                              "cyclic",   "innerize", "tprop",  "twodistances", "dualacyc", "closure"};
  return names;
}

/// Runs a named suite, turning an exhausted budget into a status.
inline SuiteReport run_suite(const std::string& name, const CayleyGraph& g, const VerifyOptions& o = {}) {
  using Fn = SuiteReport (*)(const CayleyGraph&, const VerifyOptions&);
  static const std::vector<std::pair<std::string, Fn>> table{
      {"cutchar", verify_cutchar},   {"genset", verify_genset},         {"addagent", verify_addagent},
      {"subsetchar", verify_subsetchar}, {"cosetcut", verify_cosetcut}, {"zipper", verify_zipper},
      {"cyclic", verify_cyclic},     {"innerize", verify_innerize},     {"tprop", verify_tprop},
      {"twodistances", verify_twodistances}, {"dualacyc", verify_dualacyc}, {"closure", verify_closure},
  };
  for (const auto& [n, fn] : table) {
    if (n != name) continue;
    try {
      return fn(g, o);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      SuiteReport r;
      r.suite = name;
      r.status = Status::budget_exceeded;
      r.witness = e.what();
      return r;
    }
  }
  fail(ErrorCode::Precondition, "unknown suite '" + name + "'");
}

}  // namespace cosetkit
