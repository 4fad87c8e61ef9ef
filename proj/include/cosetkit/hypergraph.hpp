#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cosetkit/error.hpp"

namespace cosetkit {

using Node = std::uint32_t;
using NodeSet = std::vector<Node>;  // sorted, no duplicates

/// (A, S) with A = {0, …, n-1}. Edges are stored sorted; duplicate and empty
/// edges are dropped, the first occurrence keeps its position.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(std::size_t n, std::vector<NodeSet> edges, std::vector<std::string> names = {}) : n_(n) {
    if (names.empty())
      for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    if (names.size() != n) fail(ErrorCode::MalformedSpec, "hypergraph needs one name per vertex");
    names_ = std::move(names);
    std::set<NodeSet> seen;
    for (auto& e : edges) {
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
      if (e.empty()) continue;
      if (e.back() >= n) fail(ErrorCode::MalformedSpec, "hyperedge mentions an unknown vertex");
      if (seen.insert(e).second) edges_.push_back(std::move(e));
    }
  }

  std::size_t vertex_count() const { return n_; }
  const std::vector<NodeSet>& edges() const { return edges_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Induced sub-hypergraph on `keep` (renumbered in ascending order).
  Hypergraph induced(const NodeSet& keep) const {
    std::vector<std::int64_t> index(n_, -1);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      index[keep[i]] = static_cast<std::int64_t>(i);
      names.push_back(names_[keep[i]]);
    }
    std::vector<NodeSet> edges;
    for (const auto& e : edges_) {
      NodeSet f;
      for (Node a : e)
        if (index[a] >= 0) f.push_back(static_cast<Node>(index[a]));
      edges.push_back(std::move(f));
    }
    return Hypergraph(keep.size(), std::move(edges), std::move(names));
  }

 private:
  std::size_t n_ = 0;
  std::vector<NodeSet> edges_;
  std::vector<std::string> names_;
};

/// Simple undirected graph with sorted adjacency lists and a dense matrix.
class Graph {
 public:
  explicit Graph(std::size_t n = 0) : n_(n), adj_(n), mat_(n * n, 0) {}

  void link(Node a, Node b) {
    if (a == b || mat_[a * n_ + b]) return;
    mat_[a * n_ + b] = mat_[b * n_ + a] = 1;
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  void finish() {
    for (auto& l : adj_) std::sort(l.begin(), l.end());
  }

  std::size_t size() const { return n_; }
  bool adjacent(Node a, Node b) const { return mat_[a * n_ + b] != 0; }
  const NodeSet& neighbours(Node a) const { return adj_[a]; }
  std::size_t edge_count() const {
    std::size_t m = 0;
    for (const auto& l : adj_) m += l.size();
    return m / 2;
  }

 private:
  std::size_t n_;
  std::vector<NodeSet> adj_;
  std::vector<std::uint8_t> mat_;
};

inline Graph gaifman(const Hypergraph& h) {
  Graph g(h.vertex_count());
  for (const auto& e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) g.link(e[i], e[j]);
  g.finish();
  return g;
}

inline bool edge_covers(const NodeSet& edge, const NodeSet& set) {
  return std::includes(edge.begin(), edge.end(), set.begin(), set.end());
}

struct Verdict {
  bool holds = true;
  NodeSet witness;  // uncovered clique or chordless cycle in cycle order
};

/// Every clique of size 2..n (unbounded when n is absent) lies inside a
/// hyperedge. Only covered cliques are extended, so the first uncovered one
/// found is minimal.
inline Verdict is_conformal(const Hypergraph& h, std::optional<unsigned> n = std::nullopt, Budget* budget = nullptr) {
  const Graph g = gaifman(h);
  const auto& edges = h.edges();
  Verdict out;
  NodeSet clique;
  auto extend = [&](auto&& self, const std::vector<std::size_t>& covering) -> bool {
    if (n && clique.size() >= *n) return false;
    const Node last = clique.back();
    for (Node x : g.neighbours(last)) {
      if (x <= last) continue;
      bool all = true;
      for (Node y : clique)
        if (!g.adjacent(x, y)) {
          all = false;
          break;
        }
      if (!all) continue;
      if (budget) budget->charge();
      std::vector<std::size_t> still;
      for (auto e : covering)
        if (std::binary_search(edges[e].begin(), edges[e].end(), x)) still.push_back(e);
      clique.push_back(x);
      if (still.empty()) {
        out = {false, clique};
        return true;
      }
      if (self(self, still)) return true;
      clique.pop_back();
    }
    return false;
  };
  for (Node a = 0; a < g.size(); ++a) {
    std::vector<std::size_t> covering;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (std::binary_search(edges[e].begin(), edges[e].end(), a)) covering.push_back(e);
    clique.assign(1, a);
    if (!covering.empty() && extend(extend, covering)) return out;
  }
  return out;
}

/// A chordless cycle of length in [4, max_len], shortest first; within one
/// length the smallest start vertex and then lexicographic order win.
inline std::optional<NodeSet> find_chordless_cycle(const Graph& g, std::size_t max_len, Budget* budget = nullptr) {
  NodeSet path;
  std::vector<std::uint8_t> on(g.size(), 0);
  std::optional<NodeSet> found;
  // path[0] is the minimum of the cycle; path[1] < closing vertex avoids mirrors.
  auto dfs = [&](auto&& self, std::size_t target) -> bool {
    const Node s = path.front(), last = path.back();
    for (Node x : g.neighbours(last)) {
      if (x <= s || on[x]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (g.adjacent(x, path[i])) {
          chord = true;
          break;
        }
      if (chord) continue;
      if (budget) budget->charge();
      const bool closes = path.size() >= 2 && g.adjacent(x, s);
      if (closes) {
        if (path.size() + 1 == target && path[1] < x) {
          path.push_back(x);
          found = path;
          return true;
        }
        continue;
      }
      if (path.size() + 1 >= target) continue;
      path.push_back(x);
      on[x] = 1;
      if (self(self, target)) return true;
      on[x] = 0;
      path.pop_back();
    }
    return false;
  };
  for (std::size_t len = 4; len <= std::min(max_len, g.size()); ++len)
    for (Node s = 0; s < g.size(); ++s) {
      path.assign(1, s);
      std::fill(on.begin(), on.end(), 0);
      on[s] = 1;
      if (dfs(dfs, len)) return found;
    }
  return std::nullopt;
}

/// Maximum cardinality search order; the graph is chordal iff the reverse
/// order is a perfect elimination ordering.
inline bool chordal_by_mcs(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<int> weight(n, 0);
  std::vector<std::uint8_t> numbered(n, 0);
  std::vector<std::size_t> position(n);
  std::vector<Node> order;
  for (std::size_t step = 0; step < n; ++step) {
    Node best = 0;
    int bw = -1;
    for (Node a = 0; a < n; ++a)
      if (!numbered[a] && weight[a] > bw) {
        bw = weight[a];
        best = a;
      }
    numbered[best] = 1;
    position[best] = step;
    order.push_back(best);
    for (Node b : g.neighbours(best))
      if (!numbered[b]) ++weight[b];
  }
  // Earlier-numbered neighbours of each vertex must form a clique; it
  // suffices to check them against the latest earlier neighbour.
  for (Node a : order) {
    std::optional<Node> parent;
    for (Node b : g.neighbours(a))
      if (position[b] < position[a] && (!parent || position[b] > position[*parent])) parent = b;
    if (!parent) continue;
    for (Node b : g.neighbours(a))
      if (b != *parent && position[b] < position[a] && !g.adjacent(b, *parent)) return false;
  }
  return true;
}

/// Every Gaifman cycle of length 4..n (unbounded when absent) has a chord.
inline Verdict is_chordal(const Hypergraph& h, std::optional<unsigned> n = std::nullopt, Budget* budget = nullptr) {
  const Graph g = gaifman(h);
  if (!n && chordal_by_mcs(g)) return {};
  auto c = find_chordless_cycle(g, n ? *n : g.size(), budget);
  if (!c) return {};
  return {false, *c};
}

/// n-conformal and n-chordal, for n ≥ 3.
inline bool is_n_acyclic(const Hypergraph& h, unsigned n, Budget* budget = nullptr) {
  if (n < 3) fail(ErrorCode::Precondition, "hypergraph n-acyclicity is defined for n ≥ 3");
  return is_conformal(h, n, budget).holds && is_chordal(h, n, budget).holds;
}

/// Tree over the hyperedges: node i carries edge i.
struct TreeDecomposition {
  std::vector<std::pair<std::size_t, std::size_t>> tree;
};

/// Checks that the node graph is a tree and that the nodes carrying any
/// vertex induce a connected subtree.
inline bool validate_decomposition(const Hypergraph& h, const TreeDecomposition& td, std::string* why = nullptr) {
  auto bad = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  const std::size_t k = h.edges().size();
  if (k == 0) return td.tree.empty() || bad("empty hypergraph needs an empty tree");
  if (td.tree.size() != k - 1) return bad("a tree on k nodes has k-1 links");
  std::vector<NodeSet> adj(k);
  for (auto [a, b] : td.tree) {
    if (a >= k || b >= k || a == b) return bad("link out of range");
    adj[a].push_back(static_cast<Node>(b));
    adj[b].push_back(static_cast<Node>(a));
  }
  auto component = [&](std::size_t start, const std::function<bool(std::size_t)>& keep) {
    std::vector<std::uint8_t> seen(k, 0);
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      ++count;
      for (auto y : adj[x])
        if (!seen[y] && keep(y)) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    return count;
  };
  if (component(0, [](std::size_t) { return true; }) != k) return bad("node graph is not connected");
  for (Node a = 0; a < h.vertex_count(); ++a) {
    auto holds = [&](std::size_t e) { return std::binary_search(h.edges()[e].begin(), h.edges()[e].end(), a); };
    std::size_t first = k, total = 0;
    for (std::size_t e = 0; e < k; ++e)
      if (holds(e)) {
        ++total;
        if (first == k) first = e;
      }
    if (total > 0 && component(first, holds) != total) return bad("occurrence set of a vertex is disconnected");
  }
  return true;
}

/// GYO ear reduction. Vertices private to one edge are dropped, then edges
/// contained in another live edge are removed with that edge as parent; the
/// parent links of an emptied hypergraph form a join tree.
inline std::optional<TreeDecomposition> tree_decomposition(const Hypergraph& h) {
  const auto& edges = h.edges();
  const std::size_t k = edges.size();
  std::vector<NodeSet> cur = edges;
  std::vector<std::uint8_t> live(k, 1);
  TreeDecomposition td;
  std::size_t remaining = k;
  bool changed = true;
  while (changed && remaining > 1) {
    changed = false;
    std::vector<unsigned> count(h.vertex_count(), 0);
    for (std::size_t e = 0; e < k; ++e)
      if (live[e])
        for (Node a : cur[e]) ++count[a];
    for (std::size_t e = 0; e < k; ++e) {
      if (!live[e]) continue;
      auto before = cur[e].size();
      std::erase_if(cur[e], [&](Node a) { return count[a] == 1; });
      changed |= cur[e].size() != before;
    }
    for (std::size_t e = 0; e < k && remaining > 1; ++e) {
      if (!live[e]) continue;
      for (std::size_t f = 0; f < k; ++f) {
        if (f == e || !live[f] || !edge_covers(cur[f], cur[e])) continue;
        live[e] = 0;
        --remaining;
        td.tree.emplace_back(e, f);
        changed = true;
        break;
      }
    }
  }
  if (remaining > 1) return std::nullopt;
  return td;
}

inline bool is_alpha_acyclic(const Hypergraph& h) { return tree_decomposition(h).has_value(); }

/// Gaifman distance between X∖t and Y∖t inside A∖t; absent means ∞.
inline std::optional<unsigned> cut_distance(const Graph& g, const NodeSet& X, const NodeSet& Y,
                                            const std::vector<std::uint8_t>& cut) {
  std::vector<unsigned> dist(g.size(), ~0u);
  std::vector<std::uint8_t> target(g.size(), 0);
  std::vector<Node> queue;
  for (Node y : Y)
    if (!cut[y]) target[y] = 1;
  for (Node x : X)
    if (!cut[x] && dist[x] == ~0u) {
      dist[x] = 0;
      queue.push_back(x);
    }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Node x = queue[h];
    if (target[x]) return dist[x];
    for (Node y : g.neighbours(x))
      if (!cut[y] && dist[y] == ~0u) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return std::nullopt;
}

inline std::vector<std::uint8_t> as_flags(std::size_t n, const NodeSet& t) {
  std::vector<std::uint8_t> f(n, 0);
  for (Node a : t) f[a] = 1;
  return f;
}

inline std::optional<unsigned> cut_distance(const Hypergraph& h, const NodeSet& X, const NodeSet& Y, const NodeSet& t) {
  return cut_distance(gaifman(h), X, Y, as_flags(h.vertex_count(), t));
}

/// Lexicographically first shortest path from `from` to `to` avoiding the
/// cut; shortest paths are chordless.
inline std::optional<NodeSet> chordless_path_search(const Graph& g, Node from, Node to,
                                                    const std::vector<std::uint8_t>& cut, unsigned max_len) {
  if (cut[from] || cut[to]) fail(ErrorCode::Precondition, "path endpoints must lie outside the cut");
  std::vector<unsigned> dist(g.size(), ~0u);
  std::vector<Node> queue{to};
  dist[to] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (Node y : g.neighbours(queue[h]))
      if (!cut[y] && dist[y] == ~0u) {
        dist[y] = dist[queue[h]] + 1;
        queue.push_back(y);
      }
  if (dist[from] == ~0u || dist[from] > max_len) return std::nullopt;
  NodeSet path{from};
  while (path.back() != to)
    for (Node y : g.neighbours(path.back()))
      if (!cut[y] && dist[y] + 1 == dist[path.back()]) {
        path.push_back(y);
        break;
      }
  return path;
}

inline std::optional<NodeSet> chordless_path_search(const Hypergraph& h, Node from, Node to, const NodeSet& t,
                                                    unsigned max_len) {
  return chordless_path_search(gaifman(h), from, to, as_flags(h.vertex_count(), t), max_len);
}

inline bool is_chordless_path(const Graph& g, const NodeSet& path) {
  for (std::size_t i = 0; i < path.size(); ++i)
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      if (path[i] == path[j]) return false;
      if ((j == i + 1) != g.adjacent(path[i], path[j])) return false;
    }
  return true;
}

/// Least superset of P containing every chordless path of length ≤ m between
/// two of its members.
inline NodeSet convex_closure(const Graph& g, const NodeSet& P, unsigned m, Budget* budget = nullptr) {
  std::vector<std::uint8_t> in(g.size(), 0);
  for (Node a : P) in[a] = 1;
  NodeSet path;
  std::vector<std::uint8_t> on(g.size(), 0);
  bool grew = true;
  auto dfs = [&](auto&& self) -> void {
    const Node last = path.back();
    if (path.size() >= 3 && in[last])
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (!in[path[i]]) {
          in[path[i]] = 1;
          grew = true;
        }
    if (path.size() > m) return;
    for (Node x : g.neighbours(last)) {
      if (on[x]) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (g.adjacent(x, path[i])) {
          chord = true;
          break;
        }
      if (chord) continue;
      if (budget) budget->charge();
      path.push_back(x);
      on[x] = 1;
      self(self);
      on[x] = 0;
      path.pop_back();
    }
  };
  while (grew) {
    grew = false;
    for (Node a = 0; a < g.size(); ++a) {
      if (!in[a]) continue;
      path.assign(1, a);
      on[a] = 1;
      dfs(dfs);
      on[a] = 0;
    }
  }
  NodeSet out;
  for (Node a = 0; a < g.size(); ++a)
    if (in[a]) out.push_back(a);
  return out;
}

inline NodeSet convex_closure(const Hypergraph& h, const NodeSet& P, unsigned m, Budget* budget = nullptr) {
  if (m < 1) fail(ErrorCode::Precondition, "closure needs m ≥ 1");
  for (Node a : P)
    if (a >= h.vertex_count()) fail(ErrorCode::Precondition, "closure seed outside the vertex set");
  return convex_closure(gaifman(h), P, m, budget);
}

}  // namespace cosetkit
