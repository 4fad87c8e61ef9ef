#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cosetkit/acyclicity.hpp"

namespace cosetkit {

/// v_1, α_1, v_2, …, α_ℓ, v_{ℓ+1}.
struct CosetPath {
  std::vector<Vertex> vertices;
  std::vector<GenMask> labels;

  std::size_t length() const { return labels.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool operator==(const CosetPath&) const = default;

  CosetPath reversed() const {
    return {{vertices.rbegin(), vertices.rend()}, {labels.rbegin(), labels.rend()}};
  }
};

enum class PathKind { any, non_trivial, inner, non_t };

/// Filter applied to every link [v_i]_{α_i} of a path. For non_t the
/// forbidden coset is [anchor]_γ; the anchor defaults to the start vertex.
struct PathConstraint {
  PathKind kind = PathKind::any;
  GenMask gamma;
  std::optional<Vertex> anchor;

  static PathConstraint any() { return {}; }
  static PathConstraint non_trivial() { return {PathKind::non_trivial, {}, {}}; }
  static PathConstraint inner() { return {PathKind::inner, {}, {}}; }
  static PathConstraint non_t(GenMask gamma, std::optional<Vertex> anchor = std::nullopt) {
    return {PathKind::non_t, gamma, anchor};
  }
};

inline const char* to_string(PathKind k) {
  switch (k) {
    case PathKind::any: return "any";
    case PathKind::non_trivial: return "non-trivial";
    case PathKind::inner: return "inner";
    case PathKind::non_t: return "non-t";
  }
  return "?";
}

struct PathClass {
  bool valid = false;
  std::string reason;  // first violated condition when !valid
  bool classified = false;
  bool non_trivial = false;
  bool inner = false;
  std::optional<bool> non_t;
  bool cut_identity = true;  // triple-intersection identity at positions 2..ℓ
};

namespace detail {

inline bool link_forbidden(const CayleyGraph& g, Coset forbidden, Coset link) {
  return coset_contained(g, forbidden, link);
}

inline bool proper_subcoset(const CayleyGraph& g, Coset inner, Coset outer) {
  return coset_contained(g, inner, outer) && coset_size(g, inner) < coset_size(g, outer);
}

/// [v_i]_{α_{i-1}∩α_i} with α_0 = α_{ℓ+1} = ∅; i is 0-based here.
inline Coset position_class(const CayleyGraph& g, const CosetPath& p, std::size_t i) {
  GenMask before = i == 0 ? GenMask{} : p.labels[i - 1];
  GenMask after = i < p.length() ? p.labels[i] : GenMask{};
  return coset(g, p.vertices[i], before & after);
}

}  // namespace detail

/// Checks the coset path conditions and, when the graph is 2-acyclic,
/// classifies the path. Classification is refused on other graphs.
inline PathClass validate_path(const CayleyGraph& g, const CosetPath& p, std::optional<GenMask> gamma = std::nullopt,
                               std::optional<Vertex> anchor = std::nullopt, bool classify = true) {
  PathClass out;
  const std::size_t l = p.length();
  if (l == 0 || p.vertices.size() != l + 1) {
    out.reason = "need ℓ ≥ 1 labels and ℓ+1 vertices";
    return out;
  }
  for (Vertex x : p.vertices)
    if (x >= g.size()) {
      out.reason = "vertex out of range";
      return out;
    }
  for (GenMask m : p.labels)
    if (!m.subset_of(g.full_mask())) {
      out.reason = "label out of range";
      return out;
    }
  {
    auto sorted = p.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      out.reason = "vertices are not pairwise distinct";
      return out;
    }
  }
  for (std::size_t i = 0; i < l; ++i) {
    if (!g.same_class(p.vertices[i], p.vertices[i + 1], p.labels[i])) {
      out.reason = "v" + std::to_string(i + 2) + " is not in the α-coset of v" + std::to_string(i + 1);
      return out;
    }
    if (cosets_intersect(g, detail::position_class(g, p, i), detail::position_class(g, p, i + 1))) {
      out.reason = "disjointness fails between positions " + std::to_string(i + 1) + " and " + std::to_string(i + 2);
      return out;
    }
  }
  out.valid = true;
  if (!classify) return out;
  require_two_acyclic(g, "path classification");
  out.classified = true;

  const Vertex v = p.front();
  const Coset span = coset(g, v, gen_set(g, v, p.back()));
  out.non_trivial = l >= 2;
  out.inner = l >= 2;
  for (std::size_t i = 0; i < l; ++i) {
    const Coset link = coset(g, p.vertices[i], p.labels[i]);
    if (detail::link_forbidden(g, span, link)) out.non_trivial = false;
    if (!detail::proper_subcoset(g, link, span)) out.inner = false;
  }
  if (gamma) {
    const Coset forbidden = coset(g, anchor.value_or(v), *gamma);
    out.non_t = true;
    for (std::size_t i = 0; i < l; ++i)
      if (detail::link_forbidden(g, forbidden, coset(g, p.vertices[i], p.labels[i]))) out.non_t = false;
  }
  for (std::size_t i = 1; i < l; ++i) {
    auto lhs = intersection(g, {detail::position_class(g, p, i), detail::position_class(g, p, i + 1)});
    std::vector<Coset> three{coset(g, p.vertices[i - 1], p.labels[i - 1]), coset(g, p.vertices[i], p.labels[i])};
    three.push_back(coset(g, p.vertices[i + 1], i + 1 < l ? p.labels[i + 1] : GenMask{}));
    if (lhs != intersection(g, three)) out.cut_identity = false;
  }
  return out;
}

namespace detail {

/// Constrained path search over the link graph. Every walk of link states
/// s_1..s_ℓ starting at ({v}, ∅, α_1) and accepted at u is a coset path
/// shape; representatives v_i ∈ C_i are then chosen pairwise distinct.
class PathSearch {
 public:
  PathSearch(const CayleyGraph& g, Vertex v, Vertex u, const PathConstraint& c, Budget& budget, bool cyclic = false)
      : g_(g), lg_(g), v_(v), u_(u), budget_(budget), cyclic_(cyclic) {
    if (c.kind == PathKind::any) return;
    if (c.kind == PathKind::non_t) {
      forbidden_ = coset(g, c.anchor.value_or(v), c.gamma);
      return;
    }
    span_ = coset(g, v, gen_set(g, v, u));
    inner_ = c.kind == PathKind::inner;
    forbidden_ = span_;
    min_len_ = 2;
  }

  unsigned min_len() const { return min_len_; }

  /// Shortest accepted walk length at the coset level, if any walk exists.
  std::optional<unsigned> lower_bound(unsigned max_len) {
    std::vector<LinkGraph::Id> frontier, next;
    std::unordered_map<LinkGraph::Id, bool> seen;
    for (std::uint32_t b = 1; b < g_.mask_count(); ++b) {
      auto s = lg_.at(GenMask{}, GenMask(b), v_);
      if (allowed(s) && seen.emplace(s, true).second) frontier.push_back(s);
    }
    for (unsigned depth = 1; depth <= max_len && !frontier.empty(); ++depth) {
      for (auto s : frontier)
        if (accepts(s)) return std::max(depth, min_len_);
      next.clear();
      for (auto s : frontier)
        for (auto t : lg_.successors(s, budget_))
          if (allowed(t) && seen.emplace(t, true).second) next.push_back(t);
      std::swap(frontier, next);
    }
    return std::nullopt;
  }

  /// Calls f on the realised path of every walk of exactly `len` links, in
  /// canonical order (first label ascending, then successor order). Stops
  /// early when f returns true.
  template <class F>
  bool walks(unsigned len, std::optional<GenMask> first, F&& f) {
    if (len == 0) return false;
    walk_.clear();
    for (std::uint32_t b = 1; b < g_.mask_count(); ++b) {
      if (first && first->bits() != b) continue;
      auto s = lg_.at(GenMask{}, GenMask(b), v_);
      if (!allowed(s) || !reach(s, len - 1)) continue;
      walk_.push_back(s);
      if (dfs(len - 1, f)) return true;
      walk_.pop_back();
    }
    return false;
  }

  std::optional<CosetPath> first_path(unsigned len, std::optional<GenMask> first = std::nullopt) {
    std::optional<CosetPath> found;
    walks(len, first, [&](const CosetPath& p) {
      found = p;
      return true;
    });
    return found;
  }

 private:
  bool allowed(LinkGraph::Id s) {
    if (!forbidden_) return true;
    if (s >= allowed_.size()) allowed_.resize(s + 1 + allowed_.size() / 2, -1);
    if (allowed_[s] < 0) {
      const Coset link = lg_.link(s);
      bool ok = !link_forbidden(g_, *forbidden_, link);
      if (inner_) ok = proper_subcoset(g_, link, *span_);
      allowed_[s] = ok;
    }
    return allowed_[s] == 1;
  }

  bool accepts(LinkGraph::Id s) const {
    const auto& st = lg_.state(s);
    return g_.same_class(st.min, u_, st.cur) && !lg_.holds(s, u_);
  }

  bool reach(LinkGraph::Id s, unsigned k) {
    if (k == 0) return accepts(s);
    const std::uint64_t key = (std::uint64_t{s} << 8) | k;
    if (auto it = reach_.find(key); it != reach_.end()) return it->second;
    bool ok = false;
    for (auto t : lg_.successors(s, budget_))
      if (allowed(t) && reach(t, k - 1)) {
        ok = true;
        break;
      }
    reach_[key] = ok;
    return ok;
  }

  template <class F>
  bool dfs(unsigned k, F& f) {
    budget_.charge();
    if (k == 0) {
      auto p = realize();
      return p && f(*p);
    }
    const auto& succ = lg_.successors(walk_.back(), budget_);
    for (std::size_t i = 0; i < succ.size(); ++i) {
      auto t = succ[i];
      if (!allowed(t) || !reach(t, k - 1)) continue;
      walk_.push_back(t);
      if (dfs(k - 1, f)) return true;
      walk_.pop_back();
    }
    return false;
  }

  /// Distinct representatives v_i ∈ C_i for the interior positions, the
  /// smallest assignment in lexicographic order.
  std::optional<CosetPath> realize() {
    const std::size_t l = walk_.size();
    CosetPath p;
    p.vertices.assign(l + 1, v_);
    p.vertices[l] = u_;
    for (auto s : walk_) p.labels.push_back(lg_.state(s).cur);
    auto taken = [&](Vertex x, std::size_t upto) {
      if (x == v_ || x == u_) return true;
      for (std::size_t j = 1; j < upto; ++j)
        if (p.vertices[j] == x) return true;
      return false;
    };
    auto assign = [&](auto&& self, std::size_t i) -> bool {
      if (i == l) return true;
      for (Vertex x : lg_.members(walk_[i])) {
        if (taken(x, i)) continue;
        p.vertices[i] = x;
        if (self(self, i + 1)) return true;
      }
      return false;
    };
    if (!assign(assign, 1)) return std::nullopt;
    if (cyclic_) p.vertices[l] = v_;
    return p;
  }

  const CayleyGraph& g_;
  LinkGraph lg_;
  Vertex v_, u_;
  Budget& budget_;
  bool cyclic_;
  std::optional<Coset> forbidden_, span_;
  bool inner_ = false;
  unsigned min_len_ = 1;
  std::vector<std::int8_t> allowed_;
  std::unordered_map<std::uint64_t, bool> reach_;
  std::vector<LinkGraph::Id> walk_;
};

inline void require_distinct(const CayleyGraph& g, Vertex v, Vertex u) {
  if (v >= g.size() || u >= g.size()) fail(ErrorCode::Precondition, "vertex out of range");
  if (v == u) fail(ErrorCode::Precondition, "endpoints must differ");
}

inline void require_classifiable(const CayleyGraph& g, const PathConstraint& c) {
  if (c.kind == PathKind::non_trivial || c.kind == PathKind::inner) require_two_acyclic(g, "non-trivial and inner paths");
}

}  // namespace detail

/// Shortest constrained coset path from v to u of length ≤ max_len.
inline std::optional<CosetPath> find_min_path(const CayleyGraph& g, Vertex v, Vertex u, const PathConstraint& c,
                                              unsigned max_len, const SearchOptions& opts = {}) {
  detail::require_distinct(g, v, u);
  detail::require_classifiable(g, c);
  Budget budget(opts.budget);
  detail::PathSearch search(g, v, u, c, budget);
  auto lo = search.lower_bound(max_len);
  if (!lo) return std::nullopt;
  for (unsigned len = *lo; len <= max_len; ++len)
    if (auto p = search.first_path(len)) return p;
  return std::nullopt;
}

/// One path per coset-level shape, all lengths 1..max_len, in canonical order.
inline std::vector<CosetPath> enumerate_paths(const CayleyGraph& g, Vertex v, Vertex u, const PathConstraint& c,
                                              unsigned max_len, const SearchOptions& opts = {}) {
  detail::require_distinct(g, v, u);
  detail::require_classifiable(g, c);
  Budget budget(opts.budget);
  detail::PathSearch search(g, v, u, c, budget);
  std::vector<CosetPath> out;
  for (unsigned len = search.min_len(); len <= max_len; ++len)
    search.walks(len, std::nullopt, [&](const CosetPath& p) {
      out.push_back(p);
      return false;
    });
  return out;
}

/// d(v,u): length of a minimal non-trivial coset path; absent means ∞.
inline std::optional<unsigned> distance(const CayleyGraph& g, Vertex v, Vertex u, const SearchOptions& opts = {}) {
  require_two_acyclic(g, "distance");
  auto p = find_min_path(g, v, u, PathConstraint::non_trivial(), static_cast<unsigned>(g.size()), opts);
  if (!p) return std::nullopt;
  return static_cast<unsigned>(p->length());
}

/// d_t(v,u) for t = ρ(anchor, γ), anchor defaulting to v.
inline std::optional<unsigned> t_distance(const CayleyGraph& g, Vertex v, Vertex u, GenMask gamma,
                                          const SearchOptions& opts = {},
                                          std::optional<Vertex> anchor = std::nullopt) {
  require_two_acyclic(g, "t-distance");
  auto p = find_min_path(g, v, u, PathConstraint::non_t(gamma, anchor), static_cast<unsigned>(g.size()), opts);
  if (!p) return std::nullopt;
  return static_cast<unsigned>(p->length());
}

/// Length bound n for short paths: the largest n with the graph 2n-acyclic,
/// as far as the level search at `cap` can see.
inline unsigned short_bound(const CayleyGraph& g, unsigned cap = 8) { return acyclicity_level(g, cap) / 2; }

struct DirectionSet {
  GenMask mask;
  unsigned bound = 0;       // paths of length ≤ bound were considered
  bool degenerate = false;  // bound < 2: only single-step paths count
};

namespace detail {

/// Intersection of the first labels of constrained paths of length ≤ bound.
inline std::optional<GenMask> first_label_meet(const CayleyGraph& g, Vertex v, Vertex u, const PathConstraint& c,
                                               unsigned bound, const SearchOptions& opts) {
  Budget budget(opts.budget);
  PathSearch search(g, v, u, c, budget);
  std::optional<GenMask> meet;
  for (std::uint32_t b = 1; b < g.mask_count(); ++b) {
    const GenMask first(b);
    if (meet && (*meet & first) == *meet) continue;  // cannot shrink the meet
    for (unsigned len = search.min_len(); len <= bound; ++len)
      if (search.first_path(len, first)) {
        meet = meet ? (*meet & first) : first;
        break;
      }
  }
  return meet;
}

}  // namespace detail

/// short(v,u): the meet of all first labels of short coset paths from v to u.
inline DirectionSet short_set(const CayleyGraph& g, Vertex v, Vertex u, unsigned cap = 8,
                              const SearchOptions& opts = {}) {
  detail::require_distinct(g, v, u);
  require_two_acyclic(g, "short");
  DirectionSet out;
  out.bound = std::max(1u, short_bound(g, cap));
  out.degenerate = out.bound < 2;
  out.mask = *detail::first_label_meet(g, v, u, PathConstraint::any(), out.bound, opts);
  return out;
}

/// short_t(v,u) for t = ρ(anchor, γ); absent when no short non-t path exists.
/// `bound` overrides the short threshold.
inline std::optional<DirectionSet> short_set_t(const CayleyGraph& g, Vertex v, Vertex u, GenMask gamma,
                                               unsigned cap = 8, std::optional<unsigned> bound = std::nullopt,
                                               std::optional<Vertex> anchor = std::nullopt,
                                               const SearchOptions& opts = {}) {
  detail::require_distinct(g, v, u);
  require_two_acyclic(g, "short_t");
  DirectionSet out;
  out.bound = bound ? *bound : std::max(1u, short_bound(g, cap));
  out.degenerate = out.bound < 2;
  auto meet = detail::first_label_meet(g, v, u, PathConstraint::non_t(gamma, anchor), out.bound, opts);
  if (!meet) return std::nullopt;
  out.mask = *meet;
  return out;
}

struct ZipperReport {
  bool verifiable = false;
  unsigned bound = 0;
  bool clause1 = false;  // overlap at v
  bool clause2 = false;  // overlap at u

  bool holds() const { return clause1 && clause2; }
};

/// Evaluates both overlap disjunctions for two coset paths with common
/// endpoints. Unverifiable when a path is longer than the short bound.
inline ZipperReport check_zipper(const CayleyGraph& g, const CosetPath& p, const CosetPath& q, unsigned cap = 8) {
  if (!validate_path(g, p, std::nullopt, std::nullopt, false).valid ||
      !validate_path(g, q, std::nullopt, std::nullopt, false).valid)
    fail(ErrorCode::Precondition, "zipper check needs two coset paths");
  if (p.front() != q.front() || p.back() != q.back()) fail(ErrorCode::Precondition, "paths must share endpoints");
  require_two_acyclic(g, "zipper check");
  ZipperReport r;
  r.bound = short_bound(g, cap);
  r.verifiable = p.length() <= r.bound && q.length() <= r.bound;

  auto overlap = [&](Vertex end, GenMask a, GenMask b, const CosetPath& side, std::size_t pos) {
    return cosets_intersect(g, coset(g, end, a & b), detail::position_class(g, side, pos));
  };
  const std::size_t l = p.length(), k = q.length();
  const Vertex v = p.front(), u = p.back();
  r.clause1 = overlap(v, q.labels[0], p.labels[0], p, 1) || overlap(v, p.labels[0], q.labels[0], q, 1);
  r.clause2 = overlap(u, q.labels[k - 1], p.labels[l - 1], p, l - 1) ||
              overlap(u, p.labels[l - 1], q.labels[k - 1], q, k - 1);
  return r;
}

/// Rebuilds a short path of length ≥ 2 inside [v_1]_α: labels become α_i ∩ α
/// and each interior vertex is moved inside its class [v_i]_{α_{i-1}∩α_i}.
inline CosetPath innerize(const CayleyGraph& g, const CosetPath& p, unsigned cap = 8,
                          std::optional<GenMask> alpha = std::nullopt) {
  if (!validate_path(g, p, std::nullopt, std::nullopt, false).valid)
    fail(ErrorCode::Precondition, "innerize needs a coset path");
  require_two_acyclic(g, "innerize");
  const std::size_t l = p.length();
  if (l < 2) fail(ErrorCode::Precondition, "innerize needs length ≥ 2");
  const unsigned n = short_bound(g, cap);
  if (l > n) fail(ErrorCode::GuardTooWeak, "path length " + std::to_string(l) + " exceeds the short bound " + std::to_string(n));
  const GenMask gen = gen_set(g, p.front(), p.back());
  const GenMask a = alpha.value_or(gen);
  if (!gen.subset_of(a)) fail(ErrorCode::Precondition, "α must contain gen of the endpoints");
  for (std::size_t i = 0; i < l; ++i)
    if (a.subset_of(p.labels[i]))
      fail(ErrorCode::Precondition, "label " + std::to_string(i + 1) + " contains α");

  CosetPath cur = p;
  for (std::size_t i = 0; i < l; ++i) {
    cur.labels[i] = p.labels[i] & a;
    if (i + 1 == l) break;
    // Candidates for v'_{i+2} come from the original class [v_{i+2}]_{α_{i+1}∩α_{i+2}}.
    const Coset cls = coset(g, p.vertices[i + 1], p.labels[i] & p.labels[i + 1]);
    bool placed = false;
    for (Vertex x : members(g, cls)) {
      CosetPath trial = cur;
      trial.vertices[i + 1] = x;
      if (validate_path(g, trial, std::nullopt, std::nullopt, false).valid) {
        cur = std::move(trial);
        placed = true;
        break;
      }
    }
    if (!placed) fail(ErrorCode::ConstructionFailed, "no replacement for v" + std::to_string(i + 2));
  }
  auto cls = validate_path(g, cur);
  if (!cls.valid || !cls.inner) fail(ErrorCode::ConstructionFailed, "rebuilt path is not inner");
  return cur;
}

/// A coset path of length ≤ max_len from v back to v, if one exists. Only
/// the interior vertices need to be distinct.
inline std::optional<CosetPath> find_cyclic_path(const CayleyGraph& g, Vertex v, unsigned max_len,
                                                 const SearchOptions& opts = {}) {
  Budget budget(opts.budget);
  detail::PathSearch search(g, v, v, PathConstraint::any(), budget, true);
  for (unsigned len = 2; len <= max_len; ++len)
    if (auto p = search.first_path(len)) return p;
  return std::nullopt;
}

/// True when no coset path of length ≤ n starts and ends at v. Requires the
/// graph to be n-acyclic.
inline bool no_short_cyclic_path(const CayleyGraph& g, Vertex v, unsigned n, const SearchOptions& opts = {}) {
  require_two_acyclic(g, "cyclic path search");
  if (acyclicity_level(g, std::max(n, 2u), opts) < n)
    fail(ErrorCode::GuardTooWeak, "graph is not " + std::to_string(n) + "-acyclic");
  return !find_cyclic_path(g, v, n, opts).has_value();
}

}  // namespace cosetkit
