#include <gtest/gtest.h>

#include "support.hpp"

namespace laytrop {
namespace {

using testing::vec;

TEST(Reduce, ZeroRightHandSideAndEmptyColumn) {
  const auto sys = testing::load<Sym>("sym_needs_reduction_3x3.txt");
  EXPECT_FALSE(is_reduced(sys));
  const auto red = reduce(sys);
  EXPECT_EQ(red.trace.deleted_rows, IndexSet{2});
  EXPECT_EQ(red.trace.forced_zero_vars, IndexSet{0});
  EXPECT_EQ(red.trace.free_vars, IndexSet{2});
  EXPECT_EQ(red.trace.deleted_cols, (IndexSet{0, 2}));
  EXPECT_EQ(red.trace.kept_cols, IndexSet{1});
  EXPECT_TRUE(is_reduced(red.system));
  EXPECT_EQ(expand(vec<Sym>({"0"}), red.trace), vec<Sym>({"z", "0", "z"}));
  EXPECT_TRUE(satisfies(sys, expand(vec<Sym>({"0"}), red.trace)));
}

TEST(Reduce, EmptyAfterReduction) {
  const System<Trop> sys(Matrix<Trop>{{1, Trop::zero()}}, Vector<Trop>{Trop::zero()});
  try {
    reduce(sys);
    FAIL() << "expected EmptyAfterReduction";
  } catch (const EmptyAfterReduction& e) {
    EXPECT_EQ(e.trace().forced_zero_vars, IndexSet{0});
    EXPECT_EQ(e.trace().free_vars, IndexSet{1});
  }
}

template <class S>
class ReduceProperties : public ::testing::Test {};
using Kinds = ::testing::Types<Trop, Sym, Sup>;
TYPED_TEST_SUITE(ReduceProperties, Kinds);

TYPED_TEST(ReduceProperties, IdempotentAndSolutionPreserving) {
  using S = TypeParam;
  Rng rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto sys = testing::random_system<S>(rng, 1 + rng.index(4), 1 + rng.index(4), -3, 3, 35);
    Reduced<S> red;
    try {
      red = reduce(sys);
    } catch (const EmptyAfterReduction&) {
      ASSERT_TRUE(satisfies(sys, Vector<S>(sys.cols(), S::zero())));
      continue;
    }
    ASSERT_TRUE(is_reduced(red.system));
    const auto again = reduce(red.system);
    ASSERT_EQ(again.system, red.system);
    ASSERT_TRUE(again.trace.empty());
    // Solutions of the reduced system lift to solutions of the original, and
    // every solution of the original vanishes on forced columns.
    Vector<S> x(red.system.cols());
    for (auto& v : x) v = testing::random_scalar<S>(rng, -3, 3, 30);
    ASSERT_EQ(satisfies(red.system, x), satisfies(sys, expand(x, red.trace)));
  }
}

TYPED_TEST(ReduceProperties, RestrictedSupportKeepsSolvability) {
  using S = TypeParam;
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    const auto sys = testing::random_reduced_system<S>(rng, 1 + rng.index(4), 1 + rng.index(4), -3, 3, 15);
    const auto sh = tropical_shadow(sys);
    const System<S> restricted(restrict_support(sys, sh.support), sys.b);
    // Every solution is bounded by x̄ in modulus, so entries outside S_j(x̄)
    // never reach |b_i|. The two systems therefore have the same solutions
    // below x̄; check on the oracle grid.
    const auto grid = default_grid(sys);
    ASSERT_EQ(enumerate_solutions(sys, grid), enumerate_solutions(restricted, grid)) << write_system(sys);
  }
}


TEST(Reduce, SpecExample) {
  const System<Trop> sys(Matrix<Trop>{{0, Trop::zero()}, {Trop::zero(), 1}}, Vector<Trop>{Trop::zero(), 3});
  const auto red = reduce(sys);
  EXPECT_EQ(red.trace.deleted_rows, IndexSet{0});
  EXPECT_EQ(red.trace.forced_zero_vars, IndexSet{0});
  EXPECT_EQ(red.system, System<Trop>(Matrix<Trop>{{1}}, Vector<Trop>{3}));
}

TEST(Reduce, FiniteSystemUnchanged) {
  const auto sys = testing::load<Sym>("sym_minimal_5x4.txt");
  const auto red = reduce(sys);
  EXPECT_EQ(red.system, sys);
  EXPECT_TRUE(red.trace.empty());
  EXPECT_EQ(red.trace, identity_trace(sys));
}

TEST(RestrictSupport, Examples) {
  const auto sys = testing::load<Sym>("sym_greatest_3x3.txt");
  const auto sh = tropical_shadow(sys);
  const auto a1 = restrict_support(sys, sh.support);
  EXPECT_EQ(a1.column(0), vec<Sym>({"z", "z", "2"}));
  EXPECT_EQ(restrict_support(sys, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}), sys.a);
  EXPECT_EQ(restrict_support(sys, {{}, {0}, {0}}).column(0), vec<Sym>({"z", "z", "z"}));
}

TYPED_TEST(ReduceProperties, RestrictedSupportSameVerdict) {
  using S = TypeParam;
  Rng rng(19);
  for (int t = 0; t < 200; ++t) {
    const auto sys = testing::random_consistent_system<S>(rng, 1 + rng.index(4), 1 + rng.index(4), -3, 3, 15);
    const System<S> restricted(restrict_support(sys, tropical_shadow(sys).support), sys.b);
    auto verdict = [](const System<S>& s) -> bool {
      Reduced<S> red;
      try {
        red = reduce(s);
      } catch (const EmptyAfterReduction&) {
        return true;
      }
      if constexpr (std::same_as<S, Trop>)
        return solve(red.system).solvable;
      else
        return minimal_modulus_solutions(red.system).solvable;
    };
    ASSERT_EQ(verdict(sys), verdict(restricted)) << write_system(sys);
  }
}

}  // namespace
}  // namespace laytrop
