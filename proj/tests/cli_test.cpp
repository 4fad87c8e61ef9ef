#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>

#include "fixtures.hpp"

using cosetkit::Json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(COSETKIT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json run_json(const std::string& args, int expect_code = 0) {
  auto r = run("--json " + args);
  EXPECT_EQ(r.code, expect_code) << args;
  return Json::parse(r.out);
}

std::string temp(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST(Cli, AnalyzeWorkedExample) {
  auto r = run_json("analyze 'catalog:symmetric_transpositions(3)'");
  const auto& res = r["results"];
  EXPECT_EQ(r["schema"], "cosetkit-report/1");
  EXPECT_EQ(res["girth"], 4);
  EXPECT_EQ(res["two_acyclic"], false);
  EXPECT_EQ(res["acyclicity_level"], 1);
  const auto& c = res["two_cycle"];
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0][0]["perm"], "(1)");
  EXPECT_EQ(c[0][1], Json::array({"(1,2)", "(2,3)"}));
  EXPECT_EQ(c[1][0]["perm"], "(1 3)");
  EXPECT_EQ(c[1][1], Json::array({"(1,3)"}));
}

TEST(Cli, AnalyzeKleinGroup) {
  auto r = run_json("analyze 'catalog:elementary_abelian(2)'");
  EXPECT_EQ(r["results"]["acyclicity_level"], 3);
  EXPECT_EQ(r["results"]["dual"]["level"], 3);
  for (const auto& v : r["verdicts"]) EXPECT_EQ(v["status"], "verified") << v.dump();
}

TEST(Cli, AnalyzeBadInput) {
  const auto empty = temp("cosetkit_cli_empty.json");
  cosetkit::write_file(empty, "");
  EXPECT_EQ(run("analyze " + empty).code, 1);
  EXPECT_EQ(run("analyze /nonexistent/file.json").code, 1);
  std::remove(empty.c_str());
  EXPECT_EQ(run("no-such-command").code, 1);
}

TEST(Cli, Distance) {
  auto r = run_json("distance 'catalog:elementary_abelian(2)' --from '' --to ab");
  EXPECT_EQ(r["results"]["distance"], 2);
  EXPECT_EQ(r["results"]["crosscheck"]["dual"], 1);

  auto t = run_json("distance 'catalog:elementary_abelian(2)' --from '' --to ab --gamma a");
  EXPECT_EQ(t["results"]["distance"], 2);
  EXPECT_EQ(t["results"]["path"].dump(), R"(["",["b"],"b",["a"],"ab"])");
  EXPECT_EQ(t["results"]["crosscheck"]["dual"], 1);

  EXPECT_EQ(run("distance 'catalog:elementary_abelian(2)' --from ab --to ba").code, 1);
  EXPECT_EQ(run("distance 'catalog:symmetric_transpositions(3)' --from '' --to '(1,2)'").code, 2);
}

TEST(Cli, Dual) {
  const auto out = temp("cosetkit_cli_dual.json");
  auto r = run_json("dual 'catalog:elementary_abelian(2)' --check-acyclic 3 --emit-hypergraph " + out);
  auto h = cosetkit::hypergraph_from_json(Json::parse(cosetkit::read_file(out)));
  EXPECT_EQ(h.vertex_count(), 9u);
  EXPECT_EQ(h.edges().size(), 4u);
  std::remove(out.c_str());
}

TEST(Cli, Closure) {
  auto r = run_json("closure 'catalog:dihedral_reflections(4)' --coset ':a' --coset 'ab:b' -m 3");
  EXPECT_EQ(r["verdicts"][0]["status"], "verified");
}

TEST(Cli, Cover) {
  auto ok = run_json("cover 'catalog:dihedral_reflections(4)' 'catalog:elementary_abelian(2)' --verify");
  for (const auto& v : ok["verdicts"]) EXPECT_EQ(v["status"], "verified");
  auto bad = run("--json cover 'catalog:elementary_abelian(2)' 'catalog:dihedral_reflections(4)'");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("abab"), std::string::npos);
}

TEST(Cli, Catalog) {
  auto r = run_json("catalog list");
  EXPECT_EQ(r["results"]["entries"].size(), cosetkit::catalog::entries().size());
  const auto out = temp("cosetkit_cli_emit.json");
  EXPECT_EQ(run("catalog emit dihedral_reflections 4 -o " + out).code, 0);
  auto a = run_json("analyze " + out);
  EXPECT_EQ(a["results"]["order"], 8);
  std::remove(out.c_str());
  EXPECT_EQ(run("catalog emit nope 3").code, 1);
}

TEST(Cli, Verify) {
  auto r = run_json("verify 'catalog:elementary_abelian(2)' twodistances");
  EXPECT_EQ(r["verdicts"][0]["status"], "verified");
  auto g = run_json("verify 'catalog:symmetric_transpositions(3)' zipper");
  EXPECT_EQ(g["verdicts"][0]["status"], "unverified-guard");
}

TEST(Cli, ReportsAreDeterministic) {
  const std::string args = "--json analyze 'catalog:dihedral_reflections(5)'";
  auto a = Json::parse(run(args).out), b = Json::parse(run(args).out);
  a.erase("timing_ms");
  b.erase("timing_ms");
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(run("analyze 'catalog:dihedral_reflections(5)'").out, run("analyze 'catalog:dihedral_reflections(5)'").out);
}
