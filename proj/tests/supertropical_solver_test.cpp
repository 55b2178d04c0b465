#include <gtest/gtest.h>

#include "support.hpp"

namespace laytrop {
namespace {

using testing::load;
using testing::mods;
using testing::vec;

TEST(SupertropicalSolver, CandidateFailsYetSolvable) {
  const auto sys = load<Sup>("sup_no_greatest_3x3.txt");
  const auto r = minimal_modulus_solutions(sys);
  EXPECT_EQ(r.xbar_sup, vec<Sup>({"g:-2", "-3", "-4"}));
  EXPECT_FALSE(r.xbar_sup_is_solution);
  EXPECT_FALSE(r.tangible_condition);
  EXPECT_TRUE(r.solvable);
  EXPECT_TRUE(satisfies(sys, vec<Sup>({"g:-2", "-4", "-4"})));
  EXPECT_FALSE(greatest_modulus_solution(sys).has_value());
}

TEST(SupertropicalSolver, CandidateSolvesModifiedSystems) {
  const auto ghost = load<Sup>("sup_all_ghost_3x3.txt");
  EXPECT_EQ(greatest_modulus_candidate(ghost), vec<Sup>({"g:-2", "g:-3", "g:-4"}));
  EXPECT_TRUE(greatest_modulus_solution(ghost).has_value());

  const auto modified = load<Sup>("sup_modified_3x3.txt");
  EXPECT_EQ(greatest_modulus_candidate(modified), vec<Sup>({"g:-2", "-3", "g:-4"}));
  EXPECT_TRUE(greatest_modulus_solution(modified).has_value());
  EXPECT_TRUE(tangible_condition(modified, greatest_modulus_candidate(modified)));
}

TEST(SupertropicalSolver, TwoMinimalSolutions) {
  const auto r = minimal_modulus_solutions(load<Sup>("sup_minimal_3x3.txt"));
  EXPECT_EQ(r.xbar_sup, vec<Sup>({"g:-4", "-5", "-6"}));
  ASSERT_EQ(r.minimal_solutions.size(), 2u);
  EXPECT_EQ(r.minimal_solutions[0], vec<Sup>({"g:-4", "-5", "z"}));
  EXPECT_EQ(r.minimal_solutions[1], vec<Sup>({"g:-4", "z", "-6"}));
  EXPECT_EQ(r.trace[0].primary, (IndexSet{0, 1}));
  EXPECT_EQ(r.trace[1].primary, (IndexSet{0, 2}));
}

TEST(SupertropicalSolver, InsolvableFiveByFour) {
  const auto r = minimal_modulus_solutions(load<Sup>("sup_insolvable_5x4.txt"));
  EXPECT_EQ(r.xbar_sup, vec<Sup>({"-10", "-9", "-7", "-11"}));
  EXPECT_FALSE(r.solvable);
  EXPECT_TRUE(r.minimal_solutions.empty());
  // d = (z, z, -7, -11) from K' = {3, 4} is extended, not rejected outright.
  const std::vector<Vector<Sup>> rejected{vec<Sup>({"-10", "z", "-7", "-11"}), vec<Sup>({"z", "-9", "-7", "-11"})};
  EXPECT_EQ(r.rejected_candidates, rejected);
}

TEST(SupertropicalSolver, ExtendedCandidateRejected) {
  const auto r = minimal_modulus_solutions(load<Sup>("sup_rejected_candidate_2x3.txt"));
  EXPECT_EQ(r.xbar_sup, vec<Sup>({"2", "g:2", "3"}));
  const auto& rej = r.rejected_candidates;
  EXPECT_NE(std::find(rej.begin(), rej.end(), vec<Sup>({"2", "z", "3"})), rej.end());
  ASSERT_TRUE(r.solvable);
  bool found = false;
  for (const auto& x : r.minimal_solutions) found = found || modulus(x) == mods({"2", "2", "z"});
  EXPECT_TRUE(found);
}

TEST(SupertropicalSolver, SameModulusReportedOnce) {
  const auto sys = load<Sup>("sup_same_modulus_3x3.txt");
  const auto r = minimal_modulus_solutions(sys);
  std::size_t with_modulus = 0;
  for (const auto& x : r.minimal_solutions) with_modulus += modulus(x) == mods({"-2", "z", "-4"});
  EXPECT_EQ(with_modulus, 1u);
  EXPECT_TRUE(satisfies(sys, vec<Sup>({"g:-2", "z", "-4"})));
  EXPECT_TRUE(satisfies(sys, vec<Sup>({"-2", "z", "-4"})));
}

TEST(SupertropicalSolver, CandidateSolvesIffSolvableAndTangibleCondition) {
  Rng rng(31);
  for (int t = 0; t < 400; ++t) {
    const auto sys = t % 2 ? testing::random_consistent_system<Sup>(rng, 1 + rng.index(4), 1 + rng.index(4), -3, 3, 15)
                           : testing::random_reduced_system<Sup>(rng, 1 + rng.index(4), 1 + rng.index(4), -3, 3, 15);
    const auto r = minimal_modulus_solutions(sys);
    ASSERT_EQ(r.xbar_sup_is_solution, r.solvable && r.tangible_condition) << write_system(sys);
  }
}

TEST(SupertropicalSolver, UniqueSolution) {
  const System<Sup> sys(Matrix<Sup>{{Sup::tangible(0), Sup::tangible(-5)}, {Sup::tangible(-5), Sup::tangible(0)}},
                        vec<Sup>({"1", "2"}));
  const auto x = unique_solution_check(sys);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, vec<Sup>({"1", "2"}));
  EXPECT_FALSE(unique_solution_check(load<Sup>("sup_minimal_3x3.txt")).has_value());
}

TEST(SupertropicalSolver, EarlyStopReturnsAVerifiedSolution) {
  const auto sys = load<Sup>("sup_minimal_3x3.txt");
  const auto r = minimal_modulus_solutions(sys, MinimalSearchOptions{1});
  ASSERT_EQ(r.minimal_solutions.size(), 1u);
  EXPECT_TRUE(satisfies(sys, r.minimal_solutions.front()));
}


TEST(SupertropicalSolver, TangibleConditionCases) {
  const auto two = load<Sup>("sup_rejected_candidate_2x3.txt");
  EXPECT_FALSE(tangible_condition(two, greatest_modulus_candidate(two)));
  const System<Sup> single(Matrix<Sup>{{Sup::tangible(1)}, {Sup::ghost(0)}}, vec<Sup>({"3", "g:2"}));
  EXPECT_TRUE(tangible_condition(single, greatest_modulus_candidate(single)));
  EXPECT_FALSE(greatest_modulus_solution(load<Sup>("sup_insolvable_5x4.txt")).has_value());
  EXPECT_EQ(greatest_modulus_solution(load<Sup>("sup_all_ghost_3x3.txt")),
            std::optional<Vector<Sup>>(vec<Sup>({"g:-2", "g:-3", "g:-4"})));
  EXPECT_FALSE(unique_solution_check(load<Sup>("sup_no_greatest_3x3.txt")).has_value());
}

TEST(SupertropicalSolver, DiagonalUniqueSolution) {
  const System<Sup> sys(Matrix<Sup>{{Sup::tangible(0), Sup::zero()}, {Sup::zero(), Sup::tangible(0)}},
                        vec<Sup>({"1", "2"}));
  EXPECT_EQ(unique_solution_check(sys), std::optional<Vector<Sup>>(vec<Sup>({"1", "2"})));
}

TEST(SupertropicalSolver, UniqueSolutionMatchesOracle) {
  Rng rng(37);
  int checked = 0;
  for (int t = 0; t < 3000 && checked < 50; ++t) {
    auto sys = testing::random_consistent_system<Sup>(rng, 1 + rng.index(4), 1 + rng.index(4), -3, 3, 15);
    const auto x = unique_solution_check(sys);
    if (!x) continue;
    ++checked;
    ASSERT_EQ(enumerate_solutions(sys, default_grid(sys)), std::vector<Vector<Sup>>{*x}) << write_system(sys);
  }
  EXPECT_GE(checked, 10);
}

TEST(SupertropicalSolver, SupportCollapseAndDominance) {
  Rng rng(47);
  for (int t = 0; t < 400; ++t) {
    const auto sys = t % 2 ? testing::random_consistent_system<Sup>(rng, 1 + rng.index(4), 1 + rng.index(4), -3, 3, 15)
                           : testing::random_reduced_system<Sup>(rng, 1 + rng.index(4), 1 + rng.index(4), -3, 3, 15);
    const auto sh = tropical_shadow(sys);
    const auto xs = greatest_modulus_candidate(sys);
    const auto support = modulus_support(sys, modulus(xs));
    for (std::size_t j = 0; j < sys.cols(); ++j)
      ASSERT_EQ(support[j], modulus(xs[j]) == sh.xbar[j] ? sh.support[j] : IndexSet{});
    const auto r = minimal_modulus_solutions(sys);
    for (const auto& d : r.minimal_solutions) ASSERT_TRUE(satisfies(sys, d));
    if (greatest_modulus_solution(sys)) {
      for (const auto& x : enumerate_solutions(sys, default_grid(sys))) ASSERT_TRUE(dominated(modulus(x), modulus(xs)));
    }
  }
}

}  // namespace
}  // namespace laytrop
