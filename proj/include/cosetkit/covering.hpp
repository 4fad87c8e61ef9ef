#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cosetkit/group.hpp"

namespace cosetkit {

namespace detail {

/// Index in H of each generator label of G, matched by name.
inline std::vector<unsigned> match_labels(const Group& G, const Group& H) {
  auto a = G.labels(), b = H.labels();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) fail(ErrorCode::LabelMismatch, "groups '" + G.name() + "' and '" + H.name() + "' use different labels");
  std::vector<unsigned> out;
  for (const auto& l : G.labels()) out.push_back(*H.label_index(l));
  return out;
}

}  // namespace detail

struct Compatibility {
  bool compatible = true;
  std::optional<std::string> witness;  // a word w with [w]^G = 1 and [w]^H ≠ 1
};

/// [w]^G = 1 ⇒ [w]^H = 1 for all words w, decided by pushing the identity
/// assignment along G's BFS order and checking every edge once.
inline Compatibility check_compatible(const Group& G, const Group& H) {
  const auto lm = detail::match_labels(G, H);
  constexpr Vertex unset = ~Vertex{0};
  std::vector<Vertex> phi(G.order(), unset);
  phi[0] = H.identity();
  for (Vertex v = 0; v < G.order(); ++v)
    for (unsigned e = 0; e < G.arity(); ++e) {
      const Vertex w = G.step(v, e);
      const Vertex image = H.step(phi[v], lm[e]);
      if (phi[w] == unset) {
        phi[w] = image;
      } else if (phi[w] != image) {
        // w e v⁻¹ is trivial in G but maps to φ(w) e φ(v)⁻¹ ≠ 1.
        Word word = G.canonical_word(w);
        word.push_back(e);
        auto back = G.canonical_word(v);
        word.insert(word.end(), back.rbegin(), back.rend());
        return {false, G.format_word(word)};
      }
    }
  return {};
}

/// π: G → H with π([w]^G) = [w]^H.
struct CoveringMap {
  const Group* source = nullptr;
  const Group* target = nullptr;
  std::vector<Vertex> image;
  std::vector<unsigned> label_map;  // G generator index → H generator index

  /// Number of preimages of each element of H.
  std::vector<std::size_t> fibre_sizes() const {
    std::vector<std::size_t> out(target->order(), 0);
    for (Vertex x : image) ++out[x];
    return out;
  }
};

inline CoveringMap covering_map(const Group& G, const Group& H) {
  auto compat = check_compatible(G, H);
  if (!compat.compatible) fail(ErrorCode::NotCompatible, "relation '" + *compat.witness + "' holds in G but not in H");
  CoveringMap m{&G, &H, std::vector<Vertex>(G.order()), detail::match_labels(G, H)};
  for (Vertex v = 0; v < G.order(); ++v) {
    Vertex x = H.identity();
    for (unsigned e : G.canonical_word(v)) x = H.step(x, m.label_map[e]);
    m.image[v] = x;
  }
  for (Vertex v = 0; v < G.order(); ++v)
    for (unsigned e = 0; e < G.arity(); ++e)
      if (m.image[G.step(v, e)] != H.step(m.image[v], m.label_map[e]))
        fail(ErrorCode::ConstructionFailed, "assignment is not a homomorphism at " + G.word_of(v));
  auto fibres = m.fibre_sizes();
  if (std::find(fibres.begin(), fibres.end(), 0) != fibres.end())
    fail(ErrorCode::ConstructionFailed, "assignment is not surjective");
  return m;
}

struct CoveringCheck {
  bool covering = true;
  std::optional<Vertex> witness;  // lowest vertex where the local check fails
  std::string reason;
};

/// For each v, π restricted to N¹(v) must be a label-preserving bijection
/// onto N¹(π(v)).
inline CoveringCheck verify_covering(const CoveringMap& m) {
  const Group& G = *m.source;
  const Group& H = *m.target;
  if (m.image.size() != G.order() || m.label_map.size() != G.arity())
    return {false, std::nullopt, "map does not fit the source group"};
  std::vector<Vertex> ball, target;
  for (Vertex v = 0; v < G.order(); ++v) {
    const Vertex pv = m.image[v];
    ball.assign(1, pv);
    target.assign(1, pv);
    for (unsigned e = 0; e < G.arity(); ++e) {
      const Vertex img = m.image[G.step(v, e)];
      if (img != H.step(pv, m.label_map[e])) return {false, v, "the " + G.label(e) + "-edge is not preserved"};
      ball.push_back(img);
      target.push_back(H.step(pv, m.label_map[e]));
    }
    std::sort(ball.begin(), ball.end());
    if (std::adjacent_find(ball.begin(), ball.end()) != ball.end())
      return {false, v, "two neighbours share an image"};
    std::sort(target.begin(), target.end());
    if (ball != target) return {false, v, "image misses part of the target neighbourhood"};
  }
  return {};
}

}  // namespace cosetkit
