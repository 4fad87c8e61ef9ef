#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "cosetkit/group.hpp"

namespace cosetkit::catalog {

inline const std::vector<std::string>& families() {
  static const std::vector<std::string> names{"symmetric_transpositions", "symmetric_adjacent", "dihedral_reflections",
                                              "elementary_abelian", "direct_product"};
  return names;
}

namespace detail {

inline std::vector<std::uint32_t> identity_perm(std::uint32_t n) {
  std::vector<std::uint32_t> p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline std::vector<std::uint32_t> transposition(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
  auto p = identity_perm(n);
  std::swap(p[i], p[j]);
  return p;
}

inline std::string transposition_label(std::uint32_t i, std::uint32_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

inline std::string letter(unsigned i) { return std::string(1, static_cast<char>('a' + i)); }

inline unsigned parse_count(const std::string& s, const std::string& family) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    fail(ErrorCode::BadParams, family + " expects a positive integer, got '" + s + "'");
  return static_cast<unsigned>(std::stoul(s));
}

/// Splits "a(1,2),b" at top-level commas.
inline std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

}  // namespace detail

GroupSpec make(const std::string& family, const std::string& params);

/// Parses "family(params)" or a bare family name.
inline GroupSpec make_entry(const std::string& entry) {
  auto open = entry.find('(');
  if (open == std::string::npos) return make(entry, "");
  if (entry.back() != ')') fail(ErrorCode::BadParams, "unbalanced catalog entry '" + entry + "'");
  return make(entry.substr(0, open), entry.substr(open + 1, entry.size() - open - 2));
}

inline GroupSpec make(const std::string& family, const std::string& params) {
  using namespace detail;
  const auto args = split_args(params);
  auto single = [&]() {
    if (args.size() != 1) fail(ErrorCode::BadParams, family + " takes exactly one parameter");
    return parse_count(args[0], family);
  };
  GroupSpec spec;
  spec.name = family + "(" + params + ")";
  if (family == "symmetric_transpositions" || family == "symmetric_adjacent") {
    const unsigned n = single();
    if (n < 2) fail(ErrorCode::BadParams, family + " needs n >= 2");
    spec.degree = n;
    // All transpositions are listed by (j - i, i): (1,2),(2,3),...,(1,3),...
    const unsigned max_gap = family == "symmetric_adjacent" ? 1 : n - 1;
    for (unsigned gap = 1; gap <= max_gap; ++gap)
      for (unsigned i = 0; i + gap < n; ++i)
        spec.generators.push_back({transposition_label(i, i + gap), transposition(n, i, i + gap), std::nullopt});
    if (spec.generators.size() > kMaxGenerators) fail(ErrorCode::BadParams, family + " would need more than 16 generators");
  } else if (family == "dihedral_reflections") {
    const unsigned n = single();
    if (n < 3) fail(ErrorCode::BadParams, "dihedral_reflections needs n >= 3");
    spec.degree = n;
    std::vector<std::uint32_t> a(n), b(n);
    for (unsigned i = 0; i < n; ++i) {
      a[i] = (n - i) % n;
      b[i] = (n + 1 - i) % n;
    }
    spec.generators.push_back({"a", a, std::nullopt});
    spec.generators.push_back({"b", b, std::nullopt});
  } else if (family == "elementary_abelian") {
    const unsigned k = single();
    if (k < 1 || k > kMaxGenerators) fail(ErrorCode::BadParams, "elementary_abelian needs 1 <= k <= 16");
    spec.degree = 2 * k;
    for (unsigned i = 0; i < k; ++i)
      spec.generators.push_back({letter(i), transposition(2 * k, 2 * i, 2 * i + 1), std::nullopt});
  } else if (family == "direct_product") {
    if (args.size() != 2) fail(ErrorCode::BadParams, "direct_product takes two catalog entries");
    GroupSpec left = make_entry(args[0]), right = make_entry(args[1]);
    if (left.is_table() || right.is_table()) fail(ErrorCode::BadParams, "direct_product needs permutation groups");
    if (left.generators.size() + right.generators.size() > kMaxGenerators)
      fail(ErrorCode::BadParams, "direct_product would need more than 16 generators");
    spec.degree = left.degree + right.degree;
    for (const auto& gen : left.generators) {
      auto p = identity_perm(spec.degree);
      std::copy(gen.perm.begin(), gen.perm.end(), p.begin());
      spec.generators.push_back({gen.label + "_1", p, std::nullopt});
    }
    for (const auto& gen : right.generators) {
      auto p = identity_perm(spec.degree);
      for (std::uint32_t x = 0; x < right.degree; ++x) p[left.degree + x] = left.degree + gen.perm[x];
      spec.generators.push_back({gen.label + "_2", p, std::nullopt});
    }
  } else {
    fail(ErrorCode::UnknownFamily, "unknown catalog family '" + family + "'");
  }
  return spec;
}

/// Built-in instance with the properties it is known to have. The level is
/// the coset acyclicity level at cap 8.
struct Entry {
  std::string id;
  std::size_t order = 0;
  std::optional<unsigned> girth;
  std::optional<unsigned> level;
  bool two_acyclic = false;
  std::string source;
};

inline const std::vector<Entry>& entries() {
  static const std::vector<Entry> list{
      {"symmetric_transpositions(3)", 6, 4, 1, false, "worked example"},
      {"symmetric_transpositions(4)", 24, 4, 1, false, "contains the S3 example"},
      {"symmetric_adjacent(3)", 6, 6, 5, true, "hexagon"},
      {"symmetric_adjacent(4)", 24, 4, 3, true, "Coxeter group A3"},
      {"dihedral_reflections(3)", 6, 6, 5, true, "2n-cycle"},
      {"dihedral_reflections(4)", 8, 8, 7, true, "2n-cycle"},
      {"dihedral_reflections(5)", 10, 10, 8, true, "2n-cycle"},
      {"dihedral_reflections(6)", 12, 12, 8, true, "2n-cycle"},
      {"elementary_abelian(1)", 2, std::nullopt, 8, true, "single edge"},
      {"elementary_abelian(2)", 4, 4, 3, true, "4-cycle"},
      {"elementary_abelian(3)", 8, 4, 3, true, "cube"},
      {"elementary_abelian(4)", 16, 4, 3, true, "4-cube"},
      {"direct_product(dihedral_reflections(3),elementary_abelian(1))", 12, 4, 3, true, "hexagonal prism"},
      {"direct_product(dihedral_reflections(4),elementary_abelian(1))", 16, 4, 3, true, "octagonal prism"},
  };
  return list;
}

}  // namespace cosetkit::catalog
