#include <cstdio>
#include <filesystem>

#include "fixtures.hpp"

using namespace cosetkit;

TEST(Io, SpecRoundTrip) {
  auto spec = catalog::make_entry("dihedral_reflections(4)");
  auto j = spec_to_json(spec);
  auto back = spec_from_json(j);
  EXPECT_EQ(spec_to_json(back), j);
  EXPECT_EQ(build_group(back).order(), 8u);
}

TEST(Io, TableSpec) {
  auto j = Json::parse(R"({"name":"z2","table":[[0,1],[1,0]],"generators":[{"label":"a","element":1}]})");
  auto spec = spec_from_json(j);
  EXPECT_TRUE(spec.is_table());
  EXPECT_EQ(build_group(spec).order(), 2u);
  EXPECT_EQ(spec_to_json(spec), j);
}

TEST(Io, MalformedSpecs) {
  EXPECT_ERROR(spec_from_json(Json::array()), ErrorCode::MalformedSpec);
  EXPECT_ERROR(spec_from_json(Json::parse(R"({"degree":2})")), ErrorCode::MalformedSpec);
  EXPECT_ERROR(spec_from_json(Json::parse(R"({"generators":[]})")), ErrorCode::MalformedSpec);
  EXPECT_ERROR(spec_from_json(Json::parse(R"({"degree":2,"generators":[{"perm":[1,0]}]})")), ErrorCode::MalformedSpec);
  EXPECT_ERROR(parse_json("{", "x"), ErrorCode::MalformedSpec);
  EXPECT_ERROR(read_file("/nonexistent/cosetkit.json"), ErrorCode::Io);
}

TEST(Io, Digest) {
  EXPECT_EQ(fnv1a64(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a64("a"), "af63dc4c8601ec8c");
}

TEST(Io, LoadGroup) {
  auto a = load_group("catalog:elementary_abelian(2)");
  EXPECT_EQ(a.spec.generators.size(), 2u);
  EXPECT_EQ(a.digest.size(), 16u);

  const auto path = (std::filesystem::temp_directory_path() / "cosetkit_io_test.json").string();
  write_file(path, spec_to_json(a.spec).dump());
  auto b = load_group(path);
  EXPECT_EQ(b.digest, a.digest);
  EXPECT_EQ(spec_to_json(b.spec), spec_to_json(a.spec));
  std::remove(path.c_str());
}

TEST(Io, HypergraphRoundTrip) {
  auto g = fixtures::z2sq();
  DualHypergraph d(g);
  auto j = dual_json(d);
  EXPECT_EQ(j["vertices"].size(), 9u);
  EXPECT_EQ(j["colors"].size(), 9u);
  auto h = hypergraph_from_json(j);
  EXPECT_EQ(h.edges(), d.hypergraph().edges());
  EXPECT_EQ(h.names(), d.hypergraph().names());
  EXPECT_ERROR(hypergraph_from_json(Json::parse(R"({"vertices":["x"],"edges":[["y"]]})")), ErrorCode::MalformedSpec);
  EXPECT_ERROR(hypergraph_from_json(Json::parse(R"({"vertices":["x","x"],"edges":[]})")), ErrorCode::MalformedSpec);
}

TEST(Io, Formatting) {
  auto g = fixtures::z2sq();
  const auto& G = g.group();
  CosetPath p{{0, G.eval_word("a"), G.eval_word("ab")}, {G.parse_mask({"a"}), G.parse_mask({"b"})}};
  EXPECT_EQ(format_path(G, p), "1,{a},a,{b},ab");
  EXPECT_EQ(path_json(G, p).dump(), R"(["",["a"],"a",["b"],"ab"])");
  EXPECT_EQ(format_coset(G, coset(g, G.eval_word("b"), G.parse_mask({"a"}))), "[b]_{a}");
  EXPECT_EQ(distance_json(std::nullopt), "inf");
}

TEST(Io, ReportShell) {
  auto r = make_report("analyze", {"x.json"}, "0011223344556677");
  add_verdict(r, "girth", Status::verified);
  add_verdict(r, "two", Status::refuted, "w");
  EXPECT_EQ(r["schema"], "cosetkit-report/1");
  EXPECT_EQ(r["verdicts"][1]["status"], "refuted");
  EXPECT_EQ(r["verdicts"][1]["witness"], "w");
  EXPECT_FALSE(r["verdicts"][0].contains("witness"));
}
