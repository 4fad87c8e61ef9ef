#include "fixtures.hpp"

using namespace cosetkit;

TEST(Verify, NoRefutationsOnSmallGroups) {
  for (const char* id : {"elementary_abelian(2)", "dihedral_reflections(4)", "symmetric_adjacent(3)",
                         "elementary_abelian(3)"}) {
    auto g = fixtures::cayley(id);
    for (const auto& name : suite_names()) {
      auto r = run_suite(name, g);
      EXPECT_EQ(r.suite, name);
      EXPECT_NE(r.status, Status::refuted) << id << " " << name << ": " << r.witness;
      EXPECT_NE(r.status, Status::budget_exceeded) << id << " " << name;
    }
  }
}

TEST(Verify, KleinGroupDistances) {
  auto r = verify_twodistances(fixtures::z2sq());
  EXPECT_EQ(r.status, Status::verified) << r.witness;
  EXPECT_GT(r.checks, 0u);
}

TEST(Verify, GuardOnTheWorkedExample) {
  auto g = fixtures::s3_all();
  EXPECT_EQ(verify_cutchar(g).status, Status::verified);
  for (const auto& name : suite_names()) {
    if (name == "cutchar") continue;
    auto r = run_suite(name, g);
    EXPECT_EQ(r.status, Status::unverified_guard) << name;
    EXPECT_NE(r.witness.find("2-cycle"), std::string::npos) << name;
  }
}

TEST(Verify, ZipperGuardOnKleinGroup) {
  // Short means length 1 here, so only the guard-level statements are checked.
  auto r = verify_innerize(fixtures::z2sq());
  EXPECT_EQ(r.status, Status::unverified_guard);
}

TEST(Verify, BudgetBecomesStatus) {
  VerifyOptions o;
  o.search.budget = 5;
  auto r = run_suite("zipper", fixtures::d4(), o);
  EXPECT_EQ(r.status, Status::budget_exceeded);
}

TEST(Verify, UnknownSuite) { EXPECT_ERROR(run_suite("nope", fixtures::z2sq()), ErrorCode::Precondition); }
