#include "fixtures.hpp"
#include "oracle.hpp"

using namespace cosetkit;

TEST(Catalog, EntriesMatchTheirRecordedProperties) {
  for (const auto& e : catalog::entries()) {
    auto g = fixtures::cayley(e.id);
    EXPECT_EQ(g.size(), e.order) << e.id;
    EXPECT_EQ(girth(g), e.girth) << e.id;
    EXPECT_EQ(two_acyclic(g), e.two_acyclic) << e.id;
    EXPECT_EQ(acyclicity_level(g, 8), e.level) << e.id;
  }
}

// Independent check of the recorded levels by brute-force cycle search.
TEST(Catalog, LevelsMatchOracle) {
  for (const auto& e : catalog::entries()) {
    if (e.order > 12 || fixtures::cayley(e.id).arity() > 2) continue;
    auto g = fixtures::cayley(e.id);
    oracle::Cosets oc(g);
    auto shortest = oracle::shortest_cycle(oc, 8);
    EXPECT_EQ(shortest ? *shortest - 1 : 8u, e.level) << e.id;
  }
}

TEST(Catalog, Families) {
  auto s3 = catalog::make("symmetric_transpositions", "3");
  EXPECT_EQ(s3.generators.size(), 3u);
  EXPECT_EQ(s3.generators[0].label, "(1,2)");
  EXPECT_EQ(build_group(catalog::make("elementary_abelian", "2")).order(), 4u);
  EXPECT_EQ(build_group(catalog::make("dihedral_reflections", "4")).order(), 8u);
  auto prod = catalog::make_entry("direct_product(dihedral_reflections(3),elementary_abelian(1))");
  EXPECT_EQ(prod.generators.size(), 3u);
  EXPECT_EQ(prod.generators[2].label, "a_2");
  EXPECT_EQ(build_group(prod).order(), 12u);
}

TEST(Catalog, Errors) {
  EXPECT_ERROR(catalog::make("alternating", "4"), ErrorCode::UnknownFamily);
  EXPECT_ERROR(catalog::make("dihedral_reflections", "2"), ErrorCode::BadParams);
  EXPECT_ERROR(catalog::make("elementary_abelian", "x"), ErrorCode::BadParams);
  EXPECT_ERROR(catalog::make("elementary_abelian", "1,2"), ErrorCode::BadParams);
  EXPECT_ERROR(catalog::make_entry("elementary_abelian(2"), ErrorCode::BadParams);
}
