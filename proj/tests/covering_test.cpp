#include "fixtures.hpp"

using namespace cosetkit;

TEST(Covering, Identity) {
  auto g = fixtures::d4();
  const auto& G = g.group();
  EXPECT_TRUE(check_compatible(G, G).compatible);
  auto m = covering_map(G, G);
  for (Vertex v = 0; v < G.order(); ++v) EXPECT_EQ(m.image[v], v);
  EXPECT_TRUE(verify_covering(m).covering);
}

TEST(Covering, DihedralOntoKlein) {
  auto g = fixtures::d4();
  auto h = fixtures::z2sq();
  EXPECT_TRUE(check_compatible(g.group(), h.group()).compatible);
  auto m = covering_map(g.group(), h.group());
  EXPECT_EQ(m.fibre_sizes(), (std::vector<std::size_t>(4, 2)));
  // The centre (ab)^2 collapses onto the identity.
  EXPECT_EQ(m.image[g.group().eval_word("abab")], h.group().identity());
  EXPECT_TRUE(verify_covering(m).covering);
}

TEST(Covering, FibresAreUniform) {
  auto g = fixtures::cayley("dihedral_reflections(6)");
  auto h = fixtures::cayley("dihedral_reflections(3)");
  auto m = covering_map(g.group(), h.group());
  EXPECT_EQ(m.fibre_sizes(), (std::vector<std::size_t>(6, 2)));
  EXPECT_TRUE(verify_covering(m).covering);
}

TEST(Covering, KleinDoesNotCoverDihedral) {
  auto g = fixtures::z2sq();
  auto h = fixtures::d4();
  auto c = check_compatible(g.group(), h.group());
  EXPECT_FALSE(c.compatible);
  EXPECT_EQ(c.witness, "abab");
  EXPECT_EQ(g.group().eval_word(*c.witness), g.group().identity());
  EXPECT_NE(h.group().eval_word(*c.witness), h.group().identity());
  EXPECT_ERROR(covering_map(g.group(), h.group()), ErrorCode::NotCompatible);
}

TEST(Covering, LabelMismatch) {
  auto g = fixtures::d4();
  auto h = fixtures::s3_two();
  EXPECT_ERROR(check_compatible(g.group(), h.group()), ErrorCode::LabelMismatch);
}

TEST(Covering, CollapsedMapIsRejected) {
  auto g = fixtures::d4();
  auto h = fixtures::z2sq();
  auto m = covering_map(g.group(), h.group());
  m.image.assign(g.size(), 0);
  auto r = verify_covering(m);
  EXPECT_FALSE(r.covering);
  EXPECT_EQ(r.witness, Vertex{0});
  EXPECT_FALSE(r.reason.empty());
}
