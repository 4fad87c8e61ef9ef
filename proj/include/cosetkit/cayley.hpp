#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cosetkit/group.hpp"

namespace cosetkit {

/// The α-cosets of the graph: vertex → dense class index, classes numbered by
/// ascending minimum member.
struct Partition {
  GenMask mask;
  std::vector<std::uint32_t> class_of;
  std::vector<Vertex> min_member;
  std::vector<std::uint32_t> offsets;  // CSR into members, size = classes + 1
  std::vector<Vertex> members;         // grouped by class, ascending inside a class

  std::size_t class_count() const { return min_member.size(); }
  std::size_t class_size(std::uint32_t c) const { return offsets[c + 1] - offsets[c]; }
  std::span<const Vertex> members_of(std::uint32_t c) const {
    return {members.data() + offsets[c], offsets[c + 1] - offsets[c]};
  }
};

/// Cayley graph of a group over its involutive generators, together with the
/// lazily built α-partitions. Partitions are built once per mask under a
/// once_flag, so a CayleyGraph can be shared between threads.
class CayleyGraph {
 public:
  explicit CayleyGraph(Group group)
      : group_(std::make_shared<const Group>(std::move(group))), cache_(std::make_unique<Cache>(mask_count())) {}

  const Group& group() const { return *group_; }
  std::size_t size() const { return group_->order(); }
  unsigned arity() const { return group_->arity(); }
  GenMask full_mask() const { return group_->full_mask(); }
  Vertex identity() const { return 0; }
  Vertex step(Vertex v, unsigned e) const { return group_->step(v, e); }
  std::size_t mask_count() const { return std::size_t{1} << group_->arity(); }

  const Partition& partition(GenMask m) const {
    auto& slot = cache_->parts[m.bits()];
    std::call_once(cache_->flags[m.bits()], [&] { slot = std::make_unique<Partition>(build_partition(m)); });
    return *slot;
  }

  std::uint32_t class_of(Vertex v, GenMask m) const { return partition(m).class_of[v]; }
  bool same_class(Vertex v, Vertex u, GenMask m) const {
    const auto& p = partition(m);
    return p.class_of[v] == p.class_of[u];
  }

  /// G_β ⊆ G_α, i.e. every generator of β lies in the α-coset of the identity.
  bool subgroup_contained(GenMask beta, GenMask alpha) const {
    const auto& p = partition(alpha);
    for (unsigned e : beta.indices())
      if (p.class_of[group_->generator(e)] != p.class_of[0]) return false;
    return true;
  }

  void materialize_all() const {
    for (std::size_t b = 0; b < mask_count(); ++b) partition(GenMask(static_cast<std::uint32_t>(b)));
  }

  /// Memo slot for derived per-graph facts such as the acyclicity level.
  template <class F>
  auto memo(const std::string& key, F&& compute) const -> decltype(compute()) {
    {
      std::lock_guard lock(cache_->memo_mutex);
      auto it = cache_->memo.find(key);
      if (it != cache_->memo.end()) return static_cast<decltype(compute())>(it->second);
    }
    auto value = compute();
    std::lock_guard lock(cache_->memo_mutex);
    cache_->memo.emplace(key, static_cast<long long>(value));
    return value;
  }

 private:
  struct Cache {
    explicit Cache(std::size_t n) : parts(n), flags(std::make_unique<std::once_flag[]>(n)) {}
    std::vector<std::unique_ptr<Partition>> parts;
    std::unique_ptr<std::once_flag[]> flags;
    std::mutex memo_mutex;
    std::map<std::string, long long> memo;
  };

  Partition build_partition(GenMask m) const {
    const std::size_t n = size();
    const auto gens = m.indices();
    Partition p;
    p.mask = m;
    constexpr std::uint32_t unset = ~std::uint32_t{0};
    p.class_of.assign(n, unset);
    std::vector<std::vector<Vertex>> classes;
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
      if (p.class_of[s] != unset) continue;
      const auto c = static_cast<std::uint32_t>(classes.size());
      queue.assign(1, s);
      p.class_of[s] = c;
      for (std::size_t h = 0; h < queue.size(); ++h)
        for (unsigned e : gens) {
          Vertex w = step(queue[h], e);
          if (p.class_of[w] == unset) {
            p.class_of[w] = c;
            queue.push_back(w);
          }
        }
      std::sort(queue.begin(), queue.end());
      p.min_member.push_back(s);
      classes.push_back(queue);
    }
    p.offsets.push_back(0);
    for (auto& c : classes) {
      p.members.insert(p.members.end(), c.begin(), c.end());
      p.offsets.push_back(static_cast<std::uint32_t>(p.members.size()));
    }
    return p;
  }

  std::shared_ptr<const Group> group_;
  std::unique_ptr<Cache> cache_;
};

inline CayleyGraph make_cayley(const GroupSpec& spec, const BuildOptions& options = {}) {
  return CayleyGraph(build_group(spec, options));
}

/// Ball of radius `radius` around v, ascending.
inline std::vector<Vertex> neighbourhood(const CayleyGraph& g, Vertex v, unsigned radius) {
  std::vector<unsigned> dist(g.size(), ~0u);
  std::vector<Vertex> order{v};
  dist[v] = 0;
  for (std::size_t h = 0; h < order.size(); ++h) {
    Vertex x = order[h];
    if (dist[x] == radius) continue;
    for (unsigned e = 0; e < g.arity(); ++e) {
      Vertex y = g.step(x, e);
      if (dist[y] == ~0u) {
        dist[y] = dist[x] + 1;
        order.push_back(y);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

/// Left multiplication by x as a label-preserving automorphism: returns the
/// first (v, e) where x·(v∘e) ≠ (x·v)∘e, if any.
inline std::optional<std::pair<Vertex, unsigned>> left_translation_defect(const CayleyGraph& g, Vertex x) {
  const auto& G = g.group();
  for (Vertex v = 0; v < g.size(); ++v)
    for (unsigned e = 0; e < g.arity(); ++e)
      if (G.mult(x, g.step(v, e)) != g.step(G.mult(x, v), e)) return std::pair{v, e};
  return std::nullopt;
}

}  // namespace cosetkit
