#include "fixtures.hpp"
#include "oracle.hpp"

using namespace cosetkit;
using fixtures::at;

namespace {

GroupSpec perm_spec(std::uint32_t degree, std::vector<std::pair<std::string, std::vector<std::uint32_t>>> gens) {
  GroupSpec s;
  s.name = "test";
  s.degree = degree;
  for (auto& [l, p] : gens) s.generators.push_back({l, p, std::nullopt});
  return s;
}

}  // namespace

TEST(Group, S3FromThreeTranspositions) {
  auto G = build_group(perm_spec(3, {{"(1,2)", {1, 0, 2}}, {"(1,3)", {2, 1, 0}}, {"(2,3)", {0, 2, 1}}}));
  EXPECT_EQ(G.order(), 6u);
  EXPECT_EQ(G.arity(), 3u);
  EXPECT_EQ(G.permutation(G.identity()), (std::vector<std::uint32_t>{0, 1, 2}));
}

TEST(Group, OrderAgreesWithPermutationClosure) {
  for (const auto& e : catalog::entries()) {
    auto spec = catalog::make_entry(e.id);
    std::vector<std::vector<std::uint32_t>> gens;
    for (const auto& g : spec.generators) gens.push_back(g.perm);
    EXPECT_EQ(build_group(spec).order(), oracle::perm_closure(gens).size()) << e.id;
  }
}

TEST(Group, SingleGenerator) {
  auto G = build_group(perm_spec(2, {{"a", {1, 0}}}));
  EXPECT_EQ(G.order(), 2u);
}

TEST(Group, RejectsNonInvolution) {
  EXPECT_ERROR(build_group(perm_spec(3, {{"c", {1, 2, 0}}})), ErrorCode::NonInvolution);
  EXPECT_ERROR(build_group(perm_spec(3, {{"id", {0, 1, 2}}})), ErrorCode::NonInvolution);
}

TEST(Group, RejectsMalformedSpecs) {
  EXPECT_ERROR(build_group(perm_spec(3, {{"a", {1, 0}}})), ErrorCode::MalformedSpec);
  EXPECT_ERROR(build_group(perm_spec(3, {{"a", {1, 1, 2}}})), ErrorCode::MalformedSpec);
  EXPECT_THROW(build_group(perm_spec(2, {{"a", {1, 0}}, {"a", {1, 0}}})), Error);
}

TEST(Group, SizeCap) {
  BuildOptions o;
  o.size_cap = 5;
  EXPECT_ERROR(build_group(catalog::make_entry("symmetric_transpositions(3)"), o), ErrorCode::SizeCapExceeded);
}

TEST(Group, TableForm) {
  GroupSpec s;
  s.name = "klein";
  s.table = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  s.generators = {{"a", {}, 1u}, {"b", {}, 2u}};
  auto G = build_group(s);
  EXPECT_EQ(G.order(), 4u);
  EXPECT_FALSE(G.has_permutations());
  EXPECT_EQ(G.eval_word("ab"), G.eval_word("ba"));

  s.table[1][1] = 2;
  EXPECT_THROW(build_group(s), Error);
}

TEST(Group, WordEvaluation) {
  auto g = fixtures::z2sq();
  const auto& G = g.group();
  EXPECT_EQ(G.eval_word(""), G.identity());
  EXPECT_EQ(G.eval_word("a a"), G.identity());
  const Vertex ab = G.eval_word("a b");
  EXPECT_NE(ab, G.identity());
  EXPECT_NE(ab, at(g, "a"));
  EXPECT_NE(ab, at(g, "b"));
  EXPECT_EQ(G.eval_word("ab"), ab);
  EXPECT_ERROR(G.eval_word("ac"), ErrorCode::UnknownLabel);
}

TEST(Group, CanonicalWordsRoundTrip) {
  auto g = fixtures::cayley("symmetric_adjacent(4)");
  const auto& G = g.group();
  for (Vertex v = 0; v < G.order(); ++v) {
    EXPECT_EQ(G.eval_word(G.canonical_word(v)), v);
    EXPECT_EQ(G.mult(v, G.inverse(v)), G.identity());
  }
}

TEST(Group, Multiplication) {
  auto g = fixtures::d4();
  const auto& G = g.group();
  for (Vertex x = 0; x < G.order(); ++x)
    for (Vertex y = 0; y < G.order(); ++y) {
      auto w = G.canonical_word(x);
      auto u = G.canonical_word(y);
      w.insert(w.end(), u.begin(), u.end());
      EXPECT_EQ(G.mult(x, y), G.eval_word(w));
    }
}

TEST(Cayley, Neighbourhood) {
  auto g = fixtures::z2sq();
  EXPECT_EQ(neighbourhood(g, 2, 0), std::vector<Vertex>{2});
  auto n1 = neighbourhood(g, 0, 1);
  std::sort(n1.begin(), n1.end());
  std::vector<Vertex> expect{0, at(g, "a"), at(g, "b")};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(n1, expect);
  EXPECT_EQ(neighbourhood(g, 0, 2).size(), 4u);
}

TEST(Cayley, MatchingsAreLoopFree) {
  for (const auto& e : catalog::entries()) {
    auto g = fixtures::cayley(e.id);
    for (Vertex v = 0; v < g.size(); ++v)
      for (unsigned a = 0; a < g.arity(); ++a) {
        EXPECT_NE(g.step(v, a), v);
        EXPECT_EQ(g.step(g.step(v, a), a), v);
      }
    EXPECT_FALSE(left_translation_defect(g, g.size() - 1).has_value());
  }
}

TEST(Cayley, CycleNotation) {
  auto g = fixtures::s3_all();
  EXPECT_EQ(*g.group().cycle_notation(at(g, "(1,3)")), "(1 3)");
  EXPECT_EQ(*g.group().cycle_notation(0), "(1)");
}
