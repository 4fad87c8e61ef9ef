#pragma once

#include <cstdint>
#include <deque>
#include <unordered_map>
#include <vector>

#include "cosetkit/coset.hpp"

namespace cosetkit {

/// Coset-level transition system shared by the cycle and path searches.
///
/// A state (C, prev, cur) stands for a position i of a coset cycle or path:
/// prev = α_{i-1}, cur = α_i and C = [v_i]_{α_{i-1}∩α_i}. A step picks the next
/// label g and a (cur∩g)-class C' inside [C]_cur with C ∩ C' = ∅, which is
/// exactly the disjointness condition between consecutive positions. Any
/// choice of representatives v_i ∈ C_i then satisfies v_{i+1} ∈ [v_i]_{α_i},
/// so closed walks of length m are coset cycles of length m.
class LinkGraph {
 public:
  using Id = std::uint32_t;

  struct State {
    GenMask prev;
    GenMask cur;
    std::uint32_t cls;  // class index in the (prev∩cur)-partition
    Vertex min;         // its minimum member
  };

  explicit LinkGraph(const CayleyGraph& g) : g_(&g) {}

  const CayleyGraph& graph() const { return *g_; }

  Id at(GenMask prev, GenMask cur, Vertex v) {
    const auto& p = g_->partition(prev & cur);
    return intern(prev, cur, p.class_of[v]);
  }

  const State& state(Id s) const { return states_[s]; }
  std::size_t state_count() const { return states_.size(); }

  std::span<const Vertex> members(Id s) const {
    const auto& st = states_[s];
    return g_->partition(st.prev & st.cur).members_of(st.cls);
  }

  bool holds(Id s, Vertex v) const {
    const auto& st = states_[s];
    return g_->partition(st.prev & st.cur).class_of[v] == st.cls;
  }

  /// [C]_cur, the coset that links this position to the next.
  Coset link(Id s) const { return coset(*g_, states_[s].min, states_[s].cur); }

  /// Successors ordered by next label (numeric mask), then by class minimum.
  const std::vector<Id>& successors(Id s, Budget& budget) {
    if (done_[s]) return succ_[s];
    budget.charge();
    const State st = states_[s];
    const auto& link_part = g_->partition(st.cur);
    const auto& here = g_->partition(st.prev & st.cur);
    const auto span = link_part.members_of(link_part.class_of[st.min]);
    std::vector<Id> out;
    std::vector<std::uint8_t> seen;
    for (std::uint32_t b = 1; b < g_->mask_count(); ++b) {
      const GenMask next(b);
      const auto& p = g_->partition(st.cur & next);
      seen.assign(p.class_count(), 0);
      for (Vertex x : span) {
        const auto c = p.class_of[x];
        if (seen[c]) continue;
        seen[c] = 1;
        bool disjoint = true;
        for (Vertex y : p.members_of(c))
          if (here.class_of[y] == st.cls) {
            disjoint = false;
            break;
          }
        if (disjoint) out.push_back(intern(st.cur, next, c));
      }
    }
    succ_[s] = std::move(out);
    done_[s] = 1;
    return succ_[s];
  }

 private:
  Id intern(GenMask prev, GenMask cur, std::uint32_t cls) {
    const std::uint64_t key = (std::uint64_t{prev.bits()} << 48) | (std::uint64_t{cur.bits()} << 32) | cls;
    auto [it, inserted] = index_.emplace(key, static_cast<Id>(states_.size()));
    if (inserted) {
      const auto& p = g_->partition(prev & cur);
      states_.push_back({prev, cur, cls, p.min_member[cls]});
      succ_.emplace_back();
      done_.push_back(0);
    }
    return it->second;
  }

  const CayleyGraph* g_;
  std::deque<State> states_;  // deques keep references stable while interning
  std::deque<std::vector<Id>> succ_;
  std::vector<std::uint8_t> done_;
  std::unordered_map<std::uint64_t, Id> index_;
};

}  // namespace cosetkit
