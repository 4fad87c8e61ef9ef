#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cosetkit/cayley.hpp"

namespace cosetkit {

/// An α-coset, identified canonically by its mask and minimum member.
struct Coset {
  GenMask mask;
  Vertex rep = 0;

  auto operator<=>(const Coset&) const = default;
};

inline Coset coset(const CayleyGraph& g, Vertex v, GenMask alpha) {
  const auto& p = g.partition(alpha);
  return {alpha, p.min_member[p.class_of[v]]};
}

inline std::span<const Vertex> members(const CayleyGraph& g, Coset c) {
  const auto& p = g.partition(c.mask);
  return p.members_of(p.class_of[c.rep]);
}

inline std::size_t coset_size(const CayleyGraph& g, Coset c) {
  const auto& p = g.partition(c.mask);
  return p.class_size(p.class_of[c.rep]);
}

inline bool contains(const CayleyGraph& g, Coset c, Vertex v) { return g.same_class(c.rep, v, c.mask); }

/// [x]_β ⊆ [y]_α as vertex sets.
inline bool coset_contained(const CayleyGraph& g, Coset inner, Coset outer) {
  return g.same_class(inner.rep, outer.rep, outer.mask) && g.subgroup_contained(inner.mask, outer.mask);
}

/// [v]_β ⊆ [v]_α.
inline bool coset_subset(const CayleyGraph& g, Vertex v, GenMask beta, GenMask alpha) {
  (void)v;  // left translation makes the answer independent of v
  return g.subgroup_contained(beta, alpha);
}

inline bool cosets_intersect(const CayleyGraph& g, Coset a, Coset b) {
  if (coset_size(g, a) > coset_size(g, b)) std::swap(a, b);
  for (Vertex x : members(g, a))
    if (contains(g, b, x)) return true;
  return false;
}

/// Members of the intersection of the given cosets, ascending.
inline std::vector<Vertex> intersection(const CayleyGraph& g, const std::vector<Coset>& cs) {
  if (cs.empty()) return {};
  auto smallest = std::min_element(cs.begin(), cs.end(), [&](Coset a, Coset b) {
    return coset_size(g, a) < coset_size(g, b);
  });
  std::vector<Vertex> out;
  for (Vertex x : members(g, *smallest))
    if (std::all_of(cs.begin(), cs.end(), [&](Coset c) { return contains(g, c, x); })) out.push_back(x);
  return out;
}

inline bool connects(const CayleyGraph& g, const std::vector<Vertex>& vs, GenMask alpha) {
  const auto& p = g.partition(alpha);
  for (Vertex v : vs)
    if (p.class_of[v] != p.class_of[vs.front()]) return false;
  return true;
}

/// Dual hyperedge ⟨v⟩: entry b is [v]_b for mask bits b.
inline std::vector<Coset> dual_hyperedge(const CayleyGraph& g, Vertex v) {
  std::vector<Coset> out;
  for (std::size_t b = 0; b < g.mask_count(); ++b) out.push_back(coset(g, v, GenMask(static_cast<std::uint32_t>(b))));
  return out;
}

namespace detail {

inline std::string describe_two_cycle(const CayleyGraph& g, Vertex v, GenMask a, Vertex u, GenMask b) {
  const auto& G = g.group();
  auto names = [&](GenMask m) {
    std::string s = "{";
    auto ls = G.mask_labels(m);
    for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? "," : "") + ls[i];
    return s + "}";
  };
  auto word = [&](Vertex x) { return x == 0 ? std::string("1") : G.word_of(x); };
  return "2-cycle " + word(v) + "," + names(a) + "," + word(u) + "," + names(b);
}

}  // namespace detail

/// gen(v̄): the ⊆-least generator set whose coset holds all of vs. Greedy
/// removal in ascending generator order, cross-checked against the
/// intersection of all connecting sets when |E| ≤ 12.
inline GenMask gen_set(const CayleyGraph& g, const std::vector<Vertex>& vs, bool cross_check = true) {
  if (vs.empty()) fail(ErrorCode::Precondition, "gen_set needs at least one vertex");
  if (std::all_of(vs.begin(), vs.end(), [&](Vertex x) { return x == vs.front(); })) return GenMask{};
  GenMask alpha = g.full_mask();
  for (unsigned e = 0; e < g.arity(); ++e)
    if (connects(g, vs, alpha.without(e))) alpha = alpha.without(e);
  if (cross_check && g.arity() <= 12) {
    GenMask meet = g.full_mask();
    for (GenMask m : all_masks(g.arity()))
      if (connects(g, vs, m)) meet = meet & m;
    if (!connects(g, vs, meet) || meet != alpha) {
      // Two connecting sets whose intersection does not connect give a 2-cycle.
      for (GenMask a : all_masks(g.arity())) {
        if (!connects(g, vs, a)) continue;
        for (GenMask b : all_masks(g.arity())) {
          if (!connects(g, vs, b) || connects(g, vs, a & b)) continue;
          for (Vertex u : vs)
            if (!g.same_class(vs.front(), u, a & b))
              fail(ErrorCode::NotTwoAcyclic, "no unique minimal connecting set; witness " +
                                                 detail::describe_two_cycle(g, vs.front(), a, u, b));
        }
      }
    }
  }
  return alpha;
}

inline GenMask gen_set(const CayleyGraph& g, Vertex v, Vertex u, bool cross_check = true) {
  return gen_set(g, std::vector<Vertex>{v, u}, cross_check);
}

}  // namespace cosetkit
