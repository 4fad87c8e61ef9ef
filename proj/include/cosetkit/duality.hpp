#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cosetkit/coset_path.hpp"
#include "cosetkit/hypergraph.hpp"

namespace cosetkit {

/// d(G): one vertex per coset, coloured by its mask, and one hyperedge ⟨v⟩
/// per group element. Vertex ids run mask by mask, class by class; hyperedge
/// i is ⟨i⟩.
class DualHypergraph {
 public:
  explicit DualHypergraph(const CayleyGraph& g, Budget* budget = nullptr) : g_(&g) {
    offset_.push_back(0);
    for (std::size_t b = 0; b < g.mask_count(); ++b) {
      const auto& p = g.partition(GenMask(static_cast<std::uint32_t>(b)));
      if (budget) budget->charge(p.class_count());
      offset_.push_back(offset_.back() + static_cast<Node>(p.class_count()));
    }
    std::vector<NodeSet> edges;
    std::vector<std::string> names;
    for (Node n = 0; n < offset_.back(); ++n) {
      const Coset c = coset_of(n);
      names.push_back("[" + g.group().word_of(c.rep) + "]_" + std::to_string(c.mask.bits()));
    }
    for (Vertex v = 0; v < g.size(); ++v) {
      NodeSet e;
      for (const Coset& c : dual_hyperedge(g, v)) e.push_back(node(c));
      edges.push_back(std::move(e));
    }
    h_ = Hypergraph(offset_.back(), std::move(edges), std::move(names));
    gaifman_ = cosetkit::gaifman(h_);
  }

  const CayleyGraph& cayley() const { return *g_; }
  const Hypergraph& hypergraph() const { return h_; }
  const Graph& graph() const { return gaifman_; }
  std::size_t vertex_count() const { return offset_.back(); }

  Node node(Coset c) const { return offset_[c.mask.bits()] + g_->class_of(c.rep, c.mask); }
  Node node(Vertex v, GenMask alpha) const { return offset_[alpha.bits()] + g_->class_of(v, alpha); }

  Coset coset_of(Node n) const {
    auto it = std::upper_bound(offset_.begin(), offset_.end(), n);
    const auto mask = static_cast<std::uint32_t>(it - offset_.begin() - 1);
    const auto& p = g_->partition(GenMask(mask));
    return {GenMask(mask), p.min_member[n - offset_[mask]]};
  }
  GenMask color(Node n) const { return coset_of(n).mask; }

  /// ⟨v⟩ as sorted dual vertex ids.
  const NodeSet& hyperedge(Vertex v) const { return h_.edges()[v]; }

 private:
  const CayleyGraph* g_;
  std::vector<Node> offset_;
  Hypergraph h_;
  Graph gaifman_;
};

/// ρ(v, γ) = { [v]_β : β ⊇ γ }, kept intensional.
struct TSet {
  Vertex anchor = 0;
  GenMask gamma;

  bool contains(const CayleyGraph& g, Coset c) const {
    return gamma.subset_of(c.mask) && g.same_class(anchor, c.rep, c.mask);
  }

  NodeSet nodes(const DualHypergraph& d) const {
    NodeSet out;
    for (std::uint32_t b = 0; b < d.cayley().mask_count(); ++b)
      if (gamma.subset_of(GenMask(b))) out.push_back(d.node(anchor, GenMask(b)));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::uint8_t> flags(const DualHypergraph& d) const { return as_flags(d.vertex_count(), nodes(d)); }
};

inline TSet rho(Vertex v, GenMask gamma) { return {v, gamma}; }

/// d_t(⟨v⟩, ⟨u⟩) for t = ρ(v, γ); γ defaults to gen(v,u).
inline std::optional<unsigned> hyperedge_distance(const DualHypergraph& d, Vertex v, Vertex u,
                                                  std::optional<GenMask> gamma = std::nullopt) {
  const auto& g = d.cayley();
  if (v == u) fail(ErrorCode::Precondition, "endpoints must differ");
  if (!gamma) {
    require_two_acyclic(g, "dual distance with default cut");
    gamma = gen_set(g, v, u);
  }
  return cut_distance(d.graph(), d.hyperedge(v), d.hyperedge(u), rho(v, *gamma).flags(d));
}

/// Alternating coset / hyperedge sequence: cosets[i], ⟨owners[i]⟩, cosets[i+1].
struct DualPath {
  NodeSet cosets;
  std::vector<Vertex> owners;

  std::size_t length() const { return owners.size(); }
  bool operator==(const DualPath&) const = default;
};

namespace detail {

/// Consecutive cosets share the owner's hyperedge, non-consecutive ones are
/// not adjacent in the Gaifman graph, and no coset lies in the cut.
inline bool dual_path_ok(const DualHypergraph& d, const DualPath& p, const TSet& t, std::string* why) {
  const auto& g = d.cayley();
  auto bad = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (p.cosets.size() != p.owners.size() + 1) return bad("need one more coset than hyperedges");
  for (Node n : p.cosets)
    if (n >= d.vertex_count()) return bad("dual vertex out of range");
  for (Vertex v : p.owners)
    if (v >= g.size()) return bad("hyperedge out of range");
  for (std::size_t i = 0; i < p.owners.size(); ++i) {
    const auto& e = d.hyperedge(p.owners[i]);
    if (!std::binary_search(e.begin(), e.end(), p.cosets[i]) || !std::binary_search(e.begin(), e.end(), p.cosets[i + 1]))
      return bad("hyperedge " + std::to_string(i + 1) + " does not hold both neighbouring cosets");
  }
  for (Node n : p.cosets)
    if (t.contains(g, d.coset_of(n))) return bad("path enters the cut");
  if (!is_chordless_path(d.graph(), p.cosets)) return bad("path has a chord or repeats a vertex");
  return true;
}

}  // namespace detail

/// Which endpoint anchors the cut t = ρ(·, γ) of a translation.
enum class Anchor { start, end };

struct DualTranslation {
  DualPath full;     // [v_1]_∅, ⟨v_1⟩, [v_2]_{α_1}, …, ⟨v_{ℓ+1}⟩, [v_{ℓ+1}]_∅
  DualPath trimmed;  // [v_1]_{α_1}, ⟨v_2⟩, …, ⟨v_ℓ⟩, [v_ℓ]_{α_ℓ}
};

/// Translates a non-t coset path into its chordless dual path; by default
/// t = ρ(v_{ℓ+1}, γ). Needs the graph to be (ℓ+1)-acyclic.
inline DualTranslation coset_to_chordless(const DualHypergraph& d, const CosetPath& p, GenMask gamma,
                                          Anchor anchor = Anchor::end, unsigned cap = 8) {
  const auto& g = d.cayley();
  require_two_acyclic(g, "path translation");
  const Vertex end = p.back();
  const Vertex pin = anchor == Anchor::end ? end : p.front();
  auto cls = validate_path(g, p, gamma, pin);
  if (!cls.valid) fail(ErrorCode::Precondition, "not a coset path: " + cls.reason);
  if (!*cls.non_t) fail(ErrorCode::Precondition, "path is not non-t for the cut at its end");
  if (!gamma.subset_of(gen_set(g, p.front(), end))) fail(ErrorCode::Precondition, "γ must lie inside gen of the endpoints");
  const std::size_t l = p.length();
  const unsigned need = static_cast<unsigned>(l + 1);
  if (acyclicity_level(g, std::max(cap, need)) < need)
    fail(ErrorCode::GuardTooWeak, "translation of a length-" + std::to_string(l) + " path needs a " +
                                      std::to_string(need) + "-acyclic graph");

  DualTranslation out;
  out.full.cosets.push_back(d.node(p.front(), GenMask{}));
  for (std::size_t i = 0; i < l; ++i) out.full.cosets.push_back(d.node(p.vertices[i + 1], p.labels[i]));
  out.full.cosets.push_back(d.node(end, GenMask{}));
  out.full.owners = p.vertices;
  for (std::size_t i = 0; i < l; ++i) out.trimmed.cosets.push_back(d.node(p.vertices[i], p.labels[i]));
  out.trimmed.owners.assign(p.vertices.begin() + 1, p.vertices.end() - 1);

  const TSet t = rho(pin, gamma);
  std::string why;
  if (!detail::dual_path_ok(d, out.full, t, &why) || !detail::dual_path_ok(d, out.trimmed, t, &why))
    fail(ErrorCode::ConstructionFailed, "translated dual path is not chordless outside t: " + why);
  return out;
}

/// Reads a chordless dual path of the full shape back as a coset path and
/// certifies it as non-t; by default t = ρ(v_{ℓ+1}, γ).
inline CosetPath chordless_to_coset(const DualHypergraph& d, const DualPath& dp, GenMask gamma,
                                    Anchor anchor = Anchor::end) {
  const auto& g = d.cayley();
  require_two_acyclic(g, "path translation");
  if (dp.owners.size() < 2) fail(ErrorCode::MalformedDualPath, "need at least two hyperedges");
  const Vertex pin = anchor == Anchor::end ? dp.owners.back() : dp.owners.front();
  const TSet t = rho(pin, gamma);
  std::string why;
  if (!detail::dual_path_ok(d, dp, t, &why)) fail(ErrorCode::MalformedDualPath, why);
  const Coset first = d.coset_of(dp.cosets.front()), last = d.coset_of(dp.cosets.back());
  if (!first.mask.empty() || !last.mask.empty() || first.rep != dp.owners.front() || last.rep != dp.owners.back())
    fail(ErrorCode::MalformedDualPath, "path must run from [v_1]_∅ to [v_{ℓ+1}]_∅");

  CosetPath p;
  p.vertices = dp.owners;
  for (std::size_t i = 1; i + 1 < dp.cosets.size(); ++i) p.labels.push_back(d.coset_of(dp.cosets[i]).mask);
  auto cls = validate_path(g, p, gamma, pin);
  if (!cls.valid || !*cls.non_t)
    fail(ErrorCode::ConstructionFailed, "extracted path is not a non-t coset path: " + (cls.valid ? "cut" : cls.reason));
  return p;
}

struct TwoDistanceReport {
  std::optional<unsigned> coset_side;  // d_t(v,u)
  std::optional<unsigned> dual_side;   // d_t(⟨v⟩,⟨u⟩)
  bool canonical = true;               // γ ⊆ gen(v,u)
  Status status = Status::verified;

  bool consistent() const {
    if (!coset_side || !dual_side) return !coset_side && !dual_side;
    return *coset_side == *dual_side + 1;
  }
};

/// Computes d_t(v,u) and d_t(⟨v⟩,⟨u⟩) for t = ρ(v,γ) independently and
/// compares them. The offset of one holds on every 2-acyclic graph: the
/// trimmed translation bounds the dual side from above, and a shortest dual
/// path read back from u to v bounds it from below.
inline TwoDistanceReport check_two_distances(const DualHypergraph& d, Vertex v, Vertex u, GenMask gamma,
                                             const SearchOptions& opts = {}) {
  const auto& g = d.cayley();
  TwoDistanceReport r;
  if (!two_acyclic(g)) {
    r.status = Status::unverified_guard;
    return r;
  }
  r.canonical = gamma.subset_of(gen_set(g, v, u));
  r.coset_side = t_distance(g, v, u, gamma, opts);
  r.dual_side = hyperedge_distance(d, v, u, gamma);
  r.status = r.consistent() ? Status::verified : Status::refuted;
  return r;
}

/// Largest n in [3, cap] with d(G) n-acyclic; 2 when not even 3-acyclic.
inline unsigned dual_acyclicity_level(const DualHypergraph& d, unsigned cap, Budget* budget = nullptr) {
  unsigned level = 2;
  for (unsigned n = 3; n <= cap; ++n) {
    if (!is_n_acyclic(d.hypergraph(), n, budget)) break;
    level = n;
  }
  return level;
}

struct ClosureReport {
  std::vector<Coset> closure;       // cl^c_m(P), sorted
  std::vector<Coset> dual_closure;  // cl_{m-1}(P) in d(G), sorted
  bool contained = true;            // every coset of the first lies in the second
  Status status = Status::verified;
};

namespace detail {

/// Adds interiors of coset paths of length ≤ m whose first and last links
/// lie in q. Returns true when something was added.
inline bool close_once(const CayleyGraph& g, std::set<Coset>& q, unsigned m, Budget& budget) {
  bool grew = false;
  const std::vector<Coset> seeds(q.begin(), q.end());
  LinkGraph lg(g);
  for (const Coset& first : seeds) {
    if (first.mask.empty()) continue;
    for (Vertex v1 : members(g, first)) {
      std::vector<LinkGraph::Id> walk{lg.at(GenMask{}, first.mask, v1)};
      auto realizable = [&]() {
        // Representatives: v_1 fixed, v_i ∈ C_i, v_{ℓ+1} ∈ link(s_ℓ) ∖ C_ℓ, all distinct.
        const std::size_t l = walk.size();
        std::vector<Vertex> chosen{v1};
        auto used = [&](Vertex x) { return std::find(chosen.begin(), chosen.end(), x) != chosen.end(); };
        auto assign = [&](auto&& self, std::size_t i) -> bool {
          if (i == l) {
            for (Vertex x : members(g, lg.link(walk[l - 1])))
              if (!lg.holds(walk[l - 1], x) && !used(x)) return true;
            return false;
          }
          for (Vertex x : lg.members(walk[i])) {
            if (used(x)) continue;
            chosen.push_back(x);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
          }
          return false;
        };
        return assign(assign, 1);
      };
      auto dfs = [&](auto&& self) -> void {
        budget.charge();
        const std::size_t l = walk.size();
        if (l >= 3 && q.count(lg.link(walk.back()))) {
          bool fresh = false;
          for (std::size_t i = 1; i + 1 < l; ++i)
            if (!q.count(lg.link(walk[i]))) fresh = true;
          if (fresh && realizable()) {
            for (std::size_t i = 1; i + 1 < l; ++i) q.insert(lg.link(walk[i]));
            grew = true;
          }
        }
        if (l >= m) return;
        for (auto t : lg.successors(walk.back(), budget)) {
          walk.push_back(t);
          self(self);
          walk.pop_back();
        }
      };
      dfs(dfs);
    }
  }
  return grew;
}

}  // namespace detail

/// cl^c_m(P) on the Cayley side, compared with cl_{m-1}(P) in d(G). The
/// comparison is certified when the graph is (m+1)-acyclic.
inline ClosureReport convex_closure_cayley(const DualHypergraph& d, const std::vector<Coset>& P, unsigned m,
                                           unsigned cap = 8, const SearchOptions& opts = {}) {
  const auto& g = d.cayley();
  if (m < 2) fail(ErrorCode::Precondition, "closure needs m ≥ 2");
  require_two_acyclic(g, "convex closure");
  Budget budget(opts.budget);
  std::set<Coset> q;
  for (const Coset& c : P) q.insert(coset(g, c.rep, c.mask));
  while (detail::close_once(g, q, m, budget)) {
  }
  ClosureReport r;
  r.closure.assign(q.begin(), q.end());

  NodeSet seed;
  for (const Coset& c : P) seed.push_back(d.node(c));
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  const NodeSet dual = convex_closure(d.graph(), seed, m - 1, &budget);
  for (Node n : dual) r.dual_closure.push_back(d.coset_of(n));
  std::sort(r.dual_closure.begin(), r.dual_closure.end());
  r.contained = std::includes(r.dual_closure.begin(), r.dual_closure.end(), r.closure.begin(), r.closure.end());
  const bool guarded = acyclicity_level(g, std::max(cap, m + 1)) >= m + 1;
  r.status = !guarded ? Status::unverified_guard : r.contained ? Status::verified : Status::refuted;
  return r;
}

}  // namespace cosetkit
