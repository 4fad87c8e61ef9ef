#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cosetkit/link_graph.hpp"

namespace cosetkit {

struct SearchOptions {
  std::uint64_t budget = default_budget();
  unsigned threads = 1;
};

/// ((v_i, α_i)) for i ∈ Z_m.
struct CosetCycle {
  std::vector<Vertex> vertices;
  std::vector<GenMask> labels;

  std::size_t length() const { return vertices.size(); }
  bool operator==(const CosetCycle&) const = default;
};

/// Checks membership and the coset cycle property at every position. On
/// failure `why` receives the first violated condition.
inline bool validate_cycle(const CayleyGraph& g, const CosetCycle& c, std::string* why = nullptr) {
  auto bad = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const std::size_t m = c.length();
  if (m < 2 || c.labels.size() != m) return bad("length must be at least 2 with one label per vertex");
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m, h = (i + m - 1) % m;
    if (c.vertices[i] >= g.size() || !c.labels[i].subset_of(g.full_mask())) return bad("entry out of range");
    if (!g.same_class(c.vertices[i], c.vertices[j], c.labels[i]))
      return bad("v" + std::to_string(j) + " is not in the α-coset of v" + std::to_string(i));
    Coset here = coset(g, c.vertices[i], c.labels[h] & c.labels[i]);
    Coset next = coset(g, c.vertices[j], c.labels[i] & c.labels[j]);
    if (cosets_intersect(g, here, next)) return bad("coset cycle property fails at position " + std::to_string(i));
  }
  return true;
}

/// Left translation x·C of a cycle.
inline CosetCycle translate(const CayleyGraph& g, const CosetCycle& c, Vertex x) {
  CosetCycle out = c;
  for (auto& v : out.vertices) v = g.group().mult(x, v);
  return out;
}

namespace detail {

/// Anchored start states (C_0 ∋ 1): α_0 by size descending, then α_{m-1} by
/// size ascending, numeric value breaking ties in both.
inline std::vector<std::pair<GenMask, GenMask>> cycle_start_order(unsigned arity) {
  std::vector<std::pair<GenMask, GenMask>> out;
  for (GenMask a0 : masks_by_size(arity, true))
    for (GenMask last : masks_by_size(arity, false)) out.emplace_back(last, a0);
  return out;
}

/// Length of the shortest closed walk through `start`, if ≤ limit.
inline std::optional<unsigned> return_length(LinkGraph& lg, LinkGraph::Id start, unsigned limit, Budget& budget) {
  std::vector<LinkGraph::Id> frontier{start}, next;
  std::vector<std::uint8_t> seen;
  auto mark = [&](LinkGraph::Id s) {
    if (s >= seen.size()) seen.resize(s + 1 + seen.size() / 2, 0);
    bool fresh = !seen[s];
    seen[s] = 1;
    return fresh;
  };
  mark(start);
  for (unsigned depth = 1; depth <= limit && !frontier.empty(); ++depth) {
    next.clear();
    for (auto s : frontier)
      for (auto t : lg.successors(s, budget)) {
        if (t == start) return depth;
        if (mark(t)) next.push_back(t);
      }
    std::swap(frontier, next);
  }
  return std::nullopt;
}

/// First closed walk of exactly `len` steps from start, in successor order.
inline std::vector<LinkGraph::Id> closed_walk(LinkGraph& lg, LinkGraph::Id start, unsigned len, Budget& budget) {
  std::map<std::pair<LinkGraph::Id, unsigned>, bool> memo;
  std::vector<LinkGraph::Id> walk{start};
  auto reach = [&](auto&& self, LinkGraph::Id s, unsigned k) -> bool {
    if (k == 0) return s == start;
    auto key = std::pair{s, k};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (auto t : lg.successors(s, budget))
      if (self(self, t, k - 1)) {
        ok = true;
        break;
      }
    memo[key] = ok;
    return ok;
  };
  LinkGraph::Id s = start;
  for (unsigned k = len; k > 0; --k) {
    bool moved = false;
    for (auto t : lg.successors(s, budget))
      if (reach(reach, t, k - 1)) {
        s = t;
        moved = true;
        break;
      }
    if (!moved) return {};
    if (k > 1) walk.push_back(s);
  }
  return walk;
}

}  // namespace detail

/// A shortest coset cycle of length ≤ max_len, anchored at the identity.
inline std::optional<CosetCycle> find_coset_cycle(const CayleyGraph& g, unsigned max_len,
                                                  const SearchOptions& opts = {}) {
  if (max_len < 2) fail(ErrorCode::Precondition, "max_len must be at least 2");
  Budget budget(opts.budget);
  const auto starts = detail::cycle_start_order(g.arity());
  std::vector<std::optional<unsigned>> lengths(starts.size());
  std::atomic<unsigned> best{max_len};

  auto work = [&](LinkGraph& lg, std::size_t i) {
    const auto [last, a0] = starts[i];
    auto id = lg.at(last, a0, g.identity());
    auto r = detail::return_length(lg, id, best.load(), budget);
    lengths[i] = r;
    if (r) {
      unsigned cur = best.load();
      while (*r < cur && !best.compare_exchange_weak(cur, *r)) {
      }
    }
  };

  // Cheap shallow pass first so that short cycles bound the deep searches.
  {
    LinkGraph lg(g);
    for (std::size_t i = 0; i < starts.size() && best.load() > 2; ++i) {
      auto r = detail::return_length(lg, lg.at(starts[i].first, starts[i].second, g.identity()), 2, budget);
      if (r) best = *r;
    }
  }

  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    LinkGraph lg(g);
    for (std::size_t i = 0; i < starts.size(); ++i) work(lg, i);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        LinkGraph lg(g);
        try {
          for (std::size_t i; (i = cursor.fetch_add(1)) < starts.size();) work(lg, i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          cursor = starts.size();
        }
      });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  std::optional<unsigned> shortest;
  for (auto& r : lengths)
    if (r && (!shortest || *r < *shortest)) shortest = r;
  if (!shortest) return std::nullopt;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (lengths[i] != shortest) continue;
    LinkGraph lg(g);
    auto id = lg.at(starts[i].first, starts[i].second, g.identity());
    auto walk = detail::closed_walk(lg, id, *shortest, budget);
    CosetCycle c;
    for (auto s : walk) {
      c.vertices.push_back(lg.state(s).min);
      c.labels.push_back(lg.state(s).cur);
    }
    return c;
  }
  return std::nullopt;
}

inline std::optional<unsigned> shortest_cycle_length(const CayleyGraph& g, unsigned max_len,
                                                     const SearchOptions& opts = {}) {
  auto c = find_coset_cycle(g, max_len, opts);
  if (!c) return std::nullopt;
  return static_cast<unsigned>(c->length());
}

inline bool is_n_acyclic(const CayleyGraph& g, unsigned n, const SearchOptions& opts = {}) {
  if (n < 2) return true;
  return !find_coset_cycle(g, n, opts).has_value();
}

struct TwoCycleWitness {
  Vertex v = 0;
  GenMask alpha, beta;
  Vertex u = 0;

  CosetCycle as_cycle() const { return {{v, u}, {alpha, beta}}; }
};

struct TwoAcyclicity {
  bool acyclic = true;
  std::optional<TwoCycleWitness> witness;
};

/// Decides 2-acyclicity through [1]_α ∩ [1]_β = [1]_{α∩β}; by left
/// translation checking the identity suffices.
inline TwoAcyclicity is_2_acyclic(const CayleyGraph& g) {
  const auto order = detail::cycle_start_order(g.arity());
  for (auto [beta, alpha] : order) {
    const auto& pa = g.partition(alpha);
    const auto& pb = g.partition(beta);
    const auto& pab = g.partition(alpha & beta);
    for (Vertex u : pa.members_of(pa.class_of[0]))
      if (pb.class_of[u] == pb.class_of[0] && pab.class_of[u] != pab.class_of[0])
        return {false, TwoCycleWitness{0, alpha, beta, u}};
  }
  return {};
}

inline bool two_acyclic(const CayleyGraph& g) {
  return g.memo("two_acyclic", [&] { return is_2_acyclic(g).acyclic; });
}

inline void require_two_acyclic(const CayleyGraph& g, const char* what) {
  if (two_acyclic(g)) return;
  auto w = *is_2_acyclic(g).witness;
  fail(ErrorCode::NotTwoAcyclic, std::string(what) + " needs a 2-acyclic graph; witness " +
                                     detail::describe_two_cycle(g, w.v, w.alpha, w.u, w.beta));
}

/// Shortest generator cycle, by BFS from the identity (exact because the
/// graph is vertex-transitive). Absent when the graph is a tree.
inline std::optional<unsigned> girth(const CayleyGraph& g) {
  std::vector<unsigned> dist(g.size(), ~0u);
  std::vector<Vertex> parent(g.size(), 0);
  std::vector<Vertex> queue{0};
  dist[0] = 0;
  std::optional<unsigned> best;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Vertex x = queue[h];
    for (unsigned e = 0; e < g.arity(); ++e) {
      Vertex y = g.step(x, e);
      if (dist[y] == ~0u) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        queue.push_back(y);
      } else if (x == 0 || parent[x] != y) {
        unsigned len = dist[x] + dist[y] + 1;
        if (!best || len < *best) best = len;
      }
    }
  }
  return best;
}

/// Largest n ≤ cap such that the graph is n-acyclic (1 when not 2-acyclic).
inline unsigned acyclicity_level(const CayleyGraph& g, unsigned cap, const SearchOptions& opts = {}) {
  if (cap < 2) fail(ErrorCode::Precondition, "cap must be at least 2");
  return g.memo("level:" + std::to_string(cap), [&] {
    auto len = shortest_cycle_length(g, cap, opts);
    return len ? *len - 1 : cap;
  });
}

}  // namespace cosetkit
