#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond the adjacency of the Cayley graph (step) and the hypergraph edge
// lists, and are only fit for tiny instances.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "cosetkit/cosetkit.hpp"

namespace oracle {

using cosetkit::CayleyGraph;
using cosetkit::Vertex;
using VSet = std::set<Vertex>;

/// Closure of a set of permutations under composition.
inline std::set<std::vector<std::uint32_t>> perm_closure(const std::vector<std::vector<std::uint32_t>>& gens) {
  const std::size_t n = gens.front().size();
  std::vector<std::uint32_t> id(n);
  std::iota(id.begin(), id.end(), 0u);
  std::set<std::vector<std::uint32_t>> seen{id};
  std::vector<std::vector<std::uint32_t>> todo{id};
  while (!todo.empty()) {
    auto p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      std::vector<std::uint32_t> q(n);
      for (std::size_t i = 0; i < n; ++i) q[i] = g[p[i]];
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return seen;
}

/// α-cosets by union-find over the labelled edges.
class Cosets {
 public:
  explicit Cosets(const CayleyGraph& g) : g_(g), n_(g.size()), masks_(1u << g.arity()) {
    root_.resize(masks_ * n_);
    for (unsigned m = 0; m < masks_; ++m) {
      std::vector<Vertex> parent(n_);
      std::iota(parent.begin(), parent.end(), 0u);
      std::function<Vertex(Vertex)> find = [&](Vertex x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
      for (Vertex v = 0; v < n_; ++v)
        for (unsigned e = 0; e < g.arity(); ++e)
          if (m >> e & 1u) parent[find(v)] = find(g.step(v, e));
      for (Vertex v = 0; v < n_; ++v) root_[m * n_ + v] = find(v);
    }
  }

  bool same(unsigned m, Vertex a, Vertex b) const { return root_[m * n_ + a] == root_[m * n_ + b]; }
  VSet members(unsigned m, Vertex v) const {
    VSet out;
    for (Vertex x = 0; x < n_; ++x)
      if (same(m, v, x)) out.insert(x);
    return out;
  }
  bool disjoint(unsigned m1, Vertex a, unsigned m2, Vertex b) const {
    for (Vertex x = 0; x < n_; ++x)
      if (same(m1, a, x) && same(m2, b, x)) return false;
    return true;
  }
  bool subset(unsigned m1, Vertex a, unsigned m2, Vertex b) const {
    for (Vertex x = 0; x < n_; ++x)
      if (same(m1, a, x) && !same(m2, b, x)) return false;
    return true;
  }
  /// Meet of all connecting sets; only meaningful on 2-acyclic graphs.
  unsigned gen(Vertex a, Vertex b) const {
    unsigned meet = masks_ - 1;
    for (unsigned m = 0; m < masks_; ++m)
      if (same(m, a, b)) meet &= m;
    return meet;
  }
  unsigned masks() const { return masks_; }
  std::size_t size() const { return n_; }
  const CayleyGraph& graph() const { return g_; }

 private:
  const CayleyGraph& g_;
  std::size_t n_;
  unsigned masks_;
  std::vector<Vertex> root_;
};

/// Shortest coset cycle length ≤ max_len through the identity, by
/// enumerating link sequences and checking the cycle property directly.
inline std::optional<unsigned> shortest_cycle(const Cosets& c, unsigned max_len) {
  std::vector<Vertex> v;
  std::vector<unsigned> a;
  // Condition at position i needs a_{i-1}, a_i, a_{i+1}, v_i, v_{i+1}.
  auto cond = [&](std::size_t h, std::size_t i, std::size_t j) {
    return c.disjoint(a[h] & a[i], v[i], a[i] & a[j], v[j]);
  };
  std::function<bool(unsigned)> grow = [&](unsigned m) -> bool {
    const std::size_t k = v.size();
    if (k == m) {
      if (!c.same(a[m - 1], v[m - 1], v[0])) return false;
      for (std::size_t i = 0; i < m; ++i)
        if (!cond((i + m - 1) % m, i, (i + 1) % m)) return false;
      return true;
    }
    for (unsigned next_mask = 0; next_mask < c.masks(); ++next_mask)
      for (Vertex x : c.members(a[k - 1], v[k - 1])) {
        v.push_back(x);
        a.push_back(next_mask);
        // Position k-1 is fully determined once a_k is known (k ≥ 2).
        const bool ok = k < 2 || cond(k - 2, k - 1, k);
        if (ok && grow(m)) return true;
        v.pop_back();
        a.pop_back();
      }
    return false;
  };
  for (unsigned m = 2; m <= max_len; ++m)
    for (unsigned a0 = 0; a0 < c.masks(); ++a0) {
      v.assign(1, 0);
      a.assign(1, a0);
      if (grow(m)) return m;
    }
  return std::nullopt;
}

struct Path {
  std::vector<Vertex> v;
  std::vector<unsigned> a;
};

/// Every coset path from `from` to `to` of length ≤ max_len with pairwise
/// distinct vertices. With from == to the endpoints coincide.
inline std::vector<Path> all_paths(const Cosets& c, Vertex from, Vertex to, unsigned max_len) {
  std::vector<Path> out;
  Path p;
  p.v.push_back(from);
  auto cls = [&](std::size_t i) {
    const std::size_t l = p.a.size();
    const unsigned before = i == 0 ? 0 : p.a[i - 1];
    const unsigned after = i < l ? p.a[i] : 0;
    return before & after;
  };
  auto ok_at = [&](std::size_t i) { return c.disjoint(cls(i), p.v[i], cls(i + 1), p.v[i + 1]); };
  std::function<void()> grow = [&] {
    const std::size_t l = p.a.size();
    if (l > 0 && p.v.back() == to) {
      // Close with α_{ℓ+1} = ∅.
      if (ok_at(l - 1)) out.push_back(p);
      return;
    }
    if (l == max_len) return;
    for (unsigned m = 0; m < c.masks(); ++m)
      for (Vertex x : c.members(m, p.v.back())) {
        const bool end = x == to;
        if (!end && std::find(p.v.begin(), p.v.end(), x) != p.v.end()) continue;
        if (x == p.v.back()) continue;
        p.v.push_back(x);
        p.a.push_back(m);
        // Position l-1 is final once α_l is known.
        const bool ok = l == 0 || ok_at(l - 1);
        if (ok) grow();
        p.v.pop_back();
        p.a.pop_back();
      }
  };
  grow();
  return out;
}

inline bool non_trivial(const Cosets& c, const Path& p) {
  const unsigned gen = c.gen(p.v.front(), p.v.back());
  if (p.a.size() < 2) return false;
  for (std::size_t i = 0; i < p.a.size(); ++i)
    if (c.subset(gen, p.v.front(), p.a[i], p.v[i])) return false;
  return true;
}

inline bool inner(const Cosets& c, const Path& p) {
  const unsigned gen = c.gen(p.v.front(), p.v.back());
  const auto span = c.members(gen, p.v.front());
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    auto link = c.members(p.a[i], p.v[i]);
    if (link.size() >= span.size() || !std::includes(span.begin(), span.end(), link.begin(), link.end())) return false;
  }
  return true;
}

inline bool non_t(const Cosets& c, const Path& p, unsigned gamma, Vertex anchor) {
  for (std::size_t i = 0; i < p.a.size(); ++i)
    if (c.subset(gamma, anchor, p.a[i], p.v[i])) return false;
  return true;
}

/// Length of the shortest path satisfying `keep`, if any within max_len.
inline std::optional<unsigned> min_length(const std::vector<Path>& paths, const std::function<bool(const Path&)>& keep) {
  std::optional<unsigned> best;
  for (const auto& p : paths)
    if (keep(p) && (!best || p.a.size() < *best)) best = static_cast<unsigned>(p.a.size());
  return best;
}

// ---- hypergraphs on at most ~16 vertices, via subsets ----

using Edges = std::vector<std::vector<unsigned>>;

inline std::vector<std::uint32_t> adjacency(unsigned n, const Edges& edges) {
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : edges)
    for (unsigned a : e)
      for (unsigned b : e)
        if (a != b) adj[a] |= 1u << b;
  return adj;
}

inline bool is_clique(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  for (unsigned a = 0; a < adj.size(); ++a)
    if ((s >> a & 1u) && (s & ~(1u << a) & ~adj[a])) return false;
  return true;
}

/// The induced subgraph on s is a single cycle.
inline bool is_induced_cycle(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  unsigned first = 0;
  while (!(s >> first & 1u)) ++first;
  for (unsigned a = 0; a < adj.size(); ++a)
    if ((s >> a & 1u) && std::popcount(adj[a] & s) != 2) return false;
  std::uint32_t seen = 1u << first, frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (unsigned a = 0; a < adj.size(); ++a)
      if (frontier >> a & 1u) next |= adj[a] & s;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == s;
}

/// Conformal and chordal restricted to vertex sets of size ≤ n (all when n = 0).
inline bool n_acyclic(unsigned nv, const Edges& edges, unsigned n = 0) {
  const auto adj = adjacency(nv, edges);
  std::vector<std::uint32_t> emask;
  for (const auto& e : edges) {
    std::uint32_t m = 0;
    for (unsigned a : e) m |= 1u << a;
    emask.push_back(m);
  }
  for (std::uint32_t s = 1; s < (1u << nv); ++s) {
    const int k = std::popcount(s);
    if (n && k > static_cast<int>(n)) continue;
    if (k >= 2 && is_clique(adj, s) &&
        std::none_of(emask.begin(), emask.end(), [&](std::uint32_t m) { return (s & m) == s; }))
      return false;
    if (k >= 4 && is_induced_cycle(adj, s)) return false;
  }
  return true;
}

/// Some tree over the (distinct, non-empty) edges has connected occurrence
/// sets, trying every labelled tree through its Prüfer sequence.
inline bool has_tree_decomposition(unsigned nv, Edges edges) {
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
  std::erase_if(edges, [](const auto& e) { return e.empty(); });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  const unsigned k = static_cast<unsigned>(edges.size());
  if (k <= 1) return true;
  auto connected_occurrences = [&](const std::vector<std::pair<unsigned, unsigned>>& tree) {
    for (unsigned a = 0; a < nv; ++a) {
      std::vector<unsigned> holds;
      for (unsigned e = 0; e < k; ++e)
        if (std::binary_search(edges[e].begin(), edges[e].end(), a)) holds.push_back(e);
      if (holds.size() <= 1) continue;
      std::set<unsigned> reached{holds[0]};
      bool grew = true;
      while (grew) {
        grew = false;
        for (auto [x, y] : tree) {
          const bool hx = std::binary_search(holds.begin(), holds.end(), x);
          const bool hy = std::binary_search(holds.begin(), holds.end(), y);
          if (!hx || !hy) continue;
          if (reached.count(x) && reached.insert(y).second) grew = true;
          if (reached.count(y) && reached.insert(x).second) grew = true;
        }
      }
      if (reached.size() != holds.size()) return false;
    }
    return true;
  };
  if (k == 2) return connected_occurrences({{0, 1}});
  std::vector<unsigned> seq(k - 2, 0);
  while (true) {
    std::vector<unsigned> degree(k, 1);
    for (unsigned x : seq) ++degree[x];
    std::vector<std::pair<unsigned, unsigned>> tree;
    for (unsigned x : seq) {
      unsigned leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      tree.emplace_back(leaf, x);
      --degree[leaf];
      --degree[x];
    }
    std::vector<unsigned> last;
    for (unsigned x = 0; x < k; ++x)
      if (degree[x] == 1) last.push_back(x);
    tree.emplace_back(last[0], last[1]);
    if (connected_occurrences(tree)) return true;
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == k) seq[i++] = 0;
    if (i == seq.size()) return false;
  }
}

/// All-pairs Gaifman distances by Floyd–Warshall, with cut vertices removed.
inline std::vector<std::vector<unsigned>> distances(unsigned nv, const Edges& edges, const std::set<unsigned>& cut) {
  const unsigned inf = 1u << 20;
  std::vector<std::vector<unsigned>> d(nv, std::vector<unsigned>(nv, inf));
  const auto adj = adjacency(nv, edges);
  for (unsigned a = 0; a < nv; ++a) {
    if (cut.count(a)) continue;
    d[a][a] = 0;
    for (unsigned b = 0; b < nv; ++b)
      if ((adj[a] >> b & 1u) && !cut.count(b)) d[a][b] = 1;
  }
  for (unsigned k = 0; k < nv; ++k)
    for (unsigned i = 0; i < nv; ++i)
      for (unsigned j = 0; j < nv; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Least superset of P closed under interiors of chordless paths of length
/// ≤ m, by enumerating vertex sequences.
inline std::set<unsigned> closure(unsigned nv, const Edges& edges, std::set<unsigned> P, unsigned m) {
  const auto adj = adjacency(nv, edges);
  auto adjacent = [&](unsigned a, unsigned b) { return (adj[a] >> b & 1u) != 0; };
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<unsigned> path;
    std::function<void()> extend = [&] {
      const std::size_t k = path.size();
      if (k >= 3 && P.count(path.back())) {
        bool chordless = true;
        for (std::size_t i = 0; i < k && chordless; ++i)
          for (std::size_t j = i + 2; j < k; ++j)
            if (adjacent(path[i], path[j])) chordless = false;
        if (chordless)
          for (std::size_t i = 1; i + 1 < k; ++i) grew |= P.insert(path[i]).second;
      }
      if (k > m) return;
      for (unsigned x = 0; x < nv; ++x) {
        if (!adjacent(path.back(), x) || std::find(path.begin(), path.end(), x) != path.end()) continue;
        path.push_back(x);
        extend();
        path.pop_back();
      }
    };
    for (unsigned a : std::set<unsigned>(P)) {
      path.assign(1, a);
      extend();
    }
  }
  return P;
}

}  // namespace oracle
