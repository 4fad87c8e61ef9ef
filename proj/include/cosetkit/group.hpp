#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cosetkit/error.hpp"
#include "cosetkit/mask.hpp"

namespace cosetkit {

/// Dense index of a group element. Index 0 is always the identity; the rest
/// are numbered in breadth-first discovery order from the identity.
using Vertex = std::uint32_t;

/// Sequence of generator indices.
using Word = std::vector<unsigned>;

inline constexpr unsigned kMaxGenerators = 16;

struct GeneratorSpec {
  std::string label;
  std::vector<std::uint32_t> perm;       // permutation form: 0-based images
  std::optional<std::uint32_t> element;  // table form: element index
};

/// Input description of a group: either permutations on `degree` points or
/// an explicit multiplication table with the identity at index 0.
struct GroupSpec {
  std::string name;
  std::uint32_t degree = 0;
  std::vector<std::vector<std::uint32_t>> table;
  std::vector<GeneratorSpec> generators;

  bool is_table() const { return !table.empty(); }
};

struct BuildOptions {
  std::size_t size_cap = 100'000;
  std::size_t table_limit = 4096;
  std::size_t full_associativity_limit = 256;
  std::size_t associativity_samples = 10'000;
};

class Group;
Group build_group(const GroupSpec& spec, const BuildOptions& options = {});

/// Finite group together with an involutive generator set. Immutable after
/// construction.
class Group {
 public:
  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }
  unsigned arity() const { return static_cast<unsigned>(labels_.size()); }
  Vertex identity() const { return 0; }
  GenMask full_mask() const { return GenMask::full(arity()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(unsigned e) const { return labels_.at(e); }
  Vertex generator(unsigned e) const { return generators_.at(e); }

  std::optional<unsigned> label_index(std::string_view label) const {
    for (unsigned i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  /// v ∘ e for generator index e.
  Vertex step(Vertex v, unsigned e) const { return right_[static_cast<std::size_t>(v) * arity() + e]; }

  Vertex mult(Vertex a, Vertex b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
    for (unsigned e : canonical_word(b)) a = step(a, e);
    return a;
  }

  Vertex inverse(Vertex v) const {
    Word w = canonical_word(v);
    Vertex out = identity();
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = step(out, *it);
    return out;
  }

  /// Shortlex-least word reaching v from the identity, via the BFS tree.
  Word canonical_word(Vertex v) const {
    Word w;
    while (v != identity()) {
      w.push_back(parent_label_[v]);
      v = parent_[v];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  Vertex eval_word(const Word& w, Vertex from = 0) const {
    for (unsigned e : w) {
      if (e >= arity()) fail(ErrorCode::UnknownLabel, "generator index " + std::to_string(e));
      from = step(from, e);
    }
    return from;
  }

  Vertex eval_word(std::string_view text) const { return eval_word(parse_word(text)); }

  /// Parses whitespace-separated tokens; each token is split greedily into the
  /// longest matching labels, so "ab" and "a b" are the same word.
  Word parse_word(std::string_view text) const {
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::optional<unsigned> best;
      std::size_t best_len = 0;
      for (unsigned e = 0; e < arity(); ++e) {
        const auto& l = labels_[e];
        if (l.size() > best_len && text.substr(i, l.size()) == l) {
          best = e;
          best_len = l.size();
        }
      }
      if (!best) fail(ErrorCode::UnknownLabel, "cannot parse word '" + std::string(text) + "' at offset " + std::to_string(i));
      out.push_back(*best);
      i += best_len;
    }
    return out;
  }

  std::string format_word(const Word& w) const {
    bool compact = std::all_of(labels_.begin(), labels_.end(), [](const std::string& l) { return l.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!compact && i > 0) out += ' ';
      out += labels_[w[i]];
    }
    return out;
  }

  std::string word_of(Vertex v) const { return format_word(canonical_word(v)); }

  std::vector<std::string> mask_labels(GenMask m) const {
    std::vector<std::string> out;
    for (unsigned e : m.indices()) out.push_back(labels_[e]);
    return out;
  }

  GenMask parse_mask(const std::vector<std::string>& names) const {
    GenMask m;
    for (const auto& n : names) {
      auto idx = label_index(n);
      if (!idx) fail(ErrorCode::UnknownLabel, "unknown generator label '" + n + "'");
      m = m.with(*idx);
    }
    return m;
  }

  bool has_permutations() const { return !perms_.empty(); }
  const std::vector<std::uint32_t>& permutation(Vertex v) const { return perms_.at(v); }

  /// Disjoint-cycle notation with 1-based points, "(1)" for the identity.
  std::optional<std::string> cycle_notation(Vertex v) const {
    if (perms_.empty()) return std::nullopt;
    const auto& p = perms_[v];
    std::vector<bool> seen(p.size(), false);
    std::string out;
    for (std::uint32_t s = 0; s < p.size(); ++s) {
      if (seen[s] || p[s] == s) continue;
      out += '(';
      for (std::uint32_t x = s; !seen[x]; x = p[x]) {
        seen[x] = true;
        if (out.back() != '(') out += ' ';
        out += std::to_string(x + 1);
      }
      out += ')';
    }
    return out.empty() ? std::string("(1)") : out;
  }

 private:
  friend Group build_group(const GroupSpec&, const BuildOptions&);

  std::string name_;
  std::size_t order_ = 0;
  std::vector<std::string> labels_;
  std::vector<Vertex> generators_;
  std::vector<Vertex> right_;
  std::vector<Vertex> table_;
  std::vector<Vertex> parent_;
  std::vector<unsigned> parent_label_;
  std::vector<std::vector<std::uint32_t>> perms_;
};

namespace detail {

struct PermHash {
  std::size_t operator()(const std::vector<std::uint32_t>& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

inline void check_labels(const GroupSpec& spec) {
  if (spec.generators.empty()) fail(ErrorCode::MalformedSpec, "no generators declared");
  if (spec.generators.size() > kMaxGenerators)
    fail(ErrorCode::MalformedSpec, "at most 16 generators are supported");
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    if (spec.generators[i].label.empty()) fail(ErrorCode::MalformedSpec, "empty generator label");
    for (std::size_t j = 0; j < i; ++j)
      if (spec.generators[i].label == spec.generators[j].label)
        fail(ErrorCode::MalformedSpec, "duplicate generator label '" + spec.generators[i].label + "'");
  }
}

}  // namespace detail

/// Closure of the generators by breadth-first right multiplication.
inline Group build_group(const GroupSpec& spec, const BuildOptions& options) {
  detail::check_labels(spec);
  Group g;
  g.name_ = spec.name;
  const unsigned arity = static_cast<unsigned>(spec.generators.size());
  for (const auto& gen : spec.generators) g.labels_.push_back(gen.label);

  if (spec.is_table()) {
    const std::size_t n = spec.table.size();
    for (const auto& row : spec.table) {
      if (row.size() != n) fail(ErrorCode::MalformedSpec, "multiplication table is not square");
      for (auto x : row)
        if (x >= n) fail(ErrorCode::MalformedSpec, "table entry out of range");
    }
    for (std::uint32_t x = 0; x < n; ++x)
      if (spec.table[0][x] != x || spec.table[x][0] != x)
        fail(ErrorCode::MalformedSpec, "element 0 is not a two-sided identity");
    std::vector<std::uint32_t> gens;
    for (const auto& gen : spec.generators) {
      if (!gen.element || *gen.element >= n)
        fail(ErrorCode::MalformedSpec, "generator '" + gen.label + "' needs a valid element index");
      std::uint32_t e = *gen.element;
      if (e == 0 || spec.table[e][e] != 0) fail(ErrorCode::NonInvolution, gen.label);
      gens.push_back(e);
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (gens[i] == gens[j]) fail(ErrorCode::MalformedSpec, "generators must denote distinct elements");

    std::vector<std::int64_t> index(n, -1);
    std::vector<std::uint32_t> order{0};
    index[0] = 0;
    g.parent_.push_back(0);
    g.parent_label_.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (unsigned e = 0; e < arity; ++e) {
        std::uint32_t w = spec.table[order[head]][gens[e]];
        if (index[w] < 0) {
          index[w] = static_cast<std::int64_t>(order.size());
          order.push_back(w);
          g.parent_.push_back(static_cast<Vertex>(head));
          g.parent_label_.push_back(e);
        }
      }
    }
    if (order.size() != n)
      fail(ErrorCode::MalformedSpec, "generators do not generate the whole table (" + std::to_string(order.size()) +
                                         " of " + std::to_string(n) + " elements)");
    if (n > options.size_cap) fail(ErrorCode::SizeCapExceeded, std::to_string(n) + " elements");
    g.order_ = n;
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g.table_[a * n + b] = static_cast<Vertex>(index[spec.table[order[a]][order[b]]]);
    for (unsigned e = 0; e < arity; ++e) g.generators_.push_back(static_cast<Vertex>(index[gens[e]]));
  } else {
    const std::uint32_t degree = spec.degree;
    if (degree == 0) fail(ErrorCode::MalformedSpec, "degree must be positive");
    std::vector<std::vector<std::uint32_t>> gens;
    for (const auto& gen : spec.generators) {
      const auto& p = gen.perm;
      if (p.size() != degree) fail(ErrorCode::MalformedSpec, "generator '" + gen.label + "' has wrong length");
      std::vector<bool> hit(degree, false);
      for (auto x : p) {
        if (x >= degree || hit[x]) fail(ErrorCode::MalformedSpec, "generator '" + gen.label + "' is not a permutation");
        hit[x] = true;
      }
      bool identity = true;
      for (std::uint32_t x = 0; x < degree; ++x) {
        if (p[p[x]] != x) fail(ErrorCode::NonInvolution, gen.label);
        identity = identity && p[x] == x;
      }
      if (identity) fail(ErrorCode::NonInvolution, gen.label + " is the identity");
      gens.push_back(p);
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (gens[i] == gens[j]) fail(ErrorCode::MalformedSpec, "generators must denote distinct elements");

    std::vector<std::uint32_t> id(degree);
    for (std::uint32_t x = 0; x < degree; ++x) id[x] = x;
    std::unordered_map<std::vector<std::uint32_t>, Vertex, detail::PermHash> index;
    index.emplace(id, 0);
    g.perms_.push_back(id);
    g.parent_.push_back(0);
    g.parent_label_.push_back(0);
    std::vector<std::uint32_t> next(degree);
    for (std::size_t head = 0; head < g.perms_.size(); ++head) {
      for (unsigned e = 0; e < arity; ++e) {
        // v ∘ e as functions: x ↦ v(e(x)).
        const auto& v = g.perms_[head];
        for (std::uint32_t x = 0; x < degree; ++x) next[x] = v[gens[e][x]];
        auto [it, inserted] = index.emplace(next, static_cast<Vertex>(g.perms_.size()));
        if (inserted) {
          if (g.perms_.size() >= options.size_cap)
            fail(ErrorCode::SizeCapExceeded, "closure exceeds " + std::to_string(options.size_cap) + " elements");
          g.perms_.push_back(next);
          g.parent_.push_back(static_cast<Vertex>(head));
          g.parent_label_.push_back(e);
        }
      }
    }
    g.order_ = g.perms_.size();
    for (unsigned e = 0; e < arity; ++e) g.generators_.push_back(index.at(gens[e]));
    g.right_.resize(g.order_ * arity);
    for (std::size_t v = 0; v < g.order_; ++v)
      for (unsigned e = 0; e < arity; ++e) {
        for (std::uint32_t x = 0; x < degree; ++x) next[x] = g.perms_[v][gens[e][x]];
        g.right_[v * arity + e] = index.at(next);
      }
    if (g.order_ <= options.table_limit) {
      const std::size_t n = g.order_;
      g.table_.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          for (std::uint32_t x = 0; x < degree; ++x) next[x] = g.perms_[a][g.perms_[b][x]];
          g.table_[a * n + b] = index.at(next);
        }
    }
  }

  if (g.right_.empty()) {
    g.right_.resize(g.order_ * arity);
    for (std::size_t v = 0; v < g.order_; ++v)
      for (unsigned e = 0; e < arity; ++e) g.right_[v * arity + e] = g.table_[v * g.order_ + g.generators_[e]];
  }

  // Associativity: exhaustive on small groups, sampled above that.
  const std::size_t n = g.order_;
  auto check = [&](Vertex a, Vertex b, Vertex c) {
    if (g.mult(g.mult(a, b), c) != g.mult(a, g.mult(b, c)))
      fail(ErrorCode::MalformedSpec, "multiplication is not associative");
  };
  if (n <= options.full_associativity_limit) {
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b)
        for (Vertex c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    for (std::size_t i = 0; i < options.associativity_samples; ++i) check(pick(rng), pick(rng), pick(rng));
  }
  return g;
}

}  // namespace cosetkit
