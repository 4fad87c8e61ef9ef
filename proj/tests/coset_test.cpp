#include "fixtures.hpp"
#include "oracle.hpp"

using namespace cosetkit;
using fixtures::at;
using fixtures::mask;

namespace {

std::set<Vertex> as_set(std::span<const Vertex> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(Coset, Basics) {
  auto g = fixtures::z2sq();
  EXPECT_EQ(as_set(members(g, coset(g, 3, GenMask{}))), std::set<Vertex>{3});
  EXPECT_EQ(as_set(members(g, coset(g, 0, mask(g, {"a"})))), (std::set<Vertex>{0, at(g, "a")}));
  auto s3 = fixtures::s3_all();
  EXPECT_EQ(coset_size(s3, coset(s3, 0, s3.full_mask())), 6u);
}

TEST(Coset, PartitionsMatchUnionFind) {
  for (const auto& e : catalog::entries()) {
    if (e.order > 24) continue;
    auto g = fixtures::cayley(e.id);
    oracle::Cosets oc(g);
    for (std::uint32_t m = 0; m < g.mask_count(); ++m)
      for (Vertex v = 0; v < g.size(); ++v) {
        ASSERT_EQ(as_set(members(g, coset(g, v, GenMask(m)))), oc.members(m, v)) << e.id << " mask " << m;
      }
  }
}

TEST(Coset, SubsetCharacterisation) {
  auto g = fixtures::z2sq();
  EXPECT_TRUE(coset_subset(g, 0, mask(g, {"a"}), g.full_mask()));
  EXPECT_FALSE(coset_subset(g, 0, mask(g, {"b"}), mask(g, {"a"})));

  auto s3 = fixtures::s3_all();
  EXPECT_TRUE(coset_subset(s3, 0, mask(s3, {"(1,3)"}), mask(s3, {"(1,2)", "(2,3)"})));
}

TEST(Coset, GenSet) {
  auto g = fixtures::z2sq();
  EXPECT_EQ(gen_set(g, 2, 2), GenMask{});
  EXPECT_EQ(gen_set(g, 0, at(g, "ab")), g.full_mask());
  EXPECT_EQ(gen_set(g, 0, at(g, "a")), mask(g, {"a"}));

  auto s3 = fixtures::s3_all();
  EXPECT_ERROR(gen_set(s3, 0, at(s3, "(1,3)")), ErrorCode::NotTwoAcyclic);
}

TEST(Coset, GenSetIsMeetOfConnectingSets) {
  for (const char* id : {"symmetric_adjacent(4)", "dihedral_reflections(5)", "elementary_abelian(3)",
                         "direct_product(dihedral_reflections(3),elementary_abelian(1))"}) {
    auto g = fixtures::cayley(id);
    oracle::Cosets oc(g);
    for (Vertex v = 0; v < g.size(); ++v)
      for (Vertex u = 0; u < g.size(); ++u) ASSERT_EQ(gen_set(g, v, u).bits(), oc.gen(v, u)) << id;
  }
}

TEST(Coset, DualHyperedge) {
  auto g = fixtures::z2sq();
  const auto one = dual_hyperedge(g, 0);
  ASSERT_EQ(one.size(), 4u);
  for (const Coset& c : one) {
    if (c.mask.empty()) {
      EXPECT_EQ(as_set(members(g, c)), std::set<Vertex>{0});
    }
    if (c.mask == g.full_mask()) {
      EXPECT_EQ(coset_size(g, c), 4u);
    }
  }
  const auto ab = dual_hyperedge(g, at(g, "ab"));
  std::vector<Coset> shared;
  for (const Coset& c : one)
    if (std::find(ab.begin(), ab.end(), c) != ab.end()) shared.push_back(c);
  ASSERT_EQ(shared.size(), 1u);
  EXPECT_EQ(shared[0].mask, g.full_mask());
}

TEST(Coset, IntersectionAndConnects) {
  auto g = fixtures::cayley("elementary_abelian(3)");
  auto both = intersection(g, {coset(g, 0, mask(g, {"a", "b"})), coset(g, 0, mask(g, {"b", "c"}))});
  EXPECT_EQ(both.size(), 2u);
  EXPECT_TRUE(connects(g, {0, at(g, "b")}, mask(g, {"b"})));
  EXPECT_FALSE(connects(g, {0, at(g, "ab")}, mask(g, {"b", "c"})));
}

TEST(Coset, TwoCycleDescription) {
  auto s3 = fixtures::s3_all();
  auto text = detail::describe_two_cycle(s3, 0, mask(s3, {"(1,2)", "(2,3)"}), at(s3, "(1,3)"), mask(s3, {"(1,3)"}));
  EXPECT_EQ(text, "2-cycle 1,{(1,2),(2,3)},(1,3),{(1,3)}");
}
