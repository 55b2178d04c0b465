#include <gtest/gtest.h>

#include "support.hpp"

namespace laytrop {
namespace {

using testing::vec;

TEST(Parse, SymmetrizedExample) {
  const auto sys = std::get<System<Sym>>(parse_system("sym 3 3\n1 3 n:4\n0 3 4\n2 0 n:0\nb:0 n:0 b:0\n"));
  EXPECT_EQ(sys, testing::load<Sym>("sym_greatest_3x3.txt"));
  EXPECT_EQ(sys.a(0, 2), Sym::minus(4));
  EXPECT_EQ(sys.b, vec<Sym>({"b:0", "n:0", "b:0"}));
}

TEST(Parse, CommentsAndBlankLines) {
  const auto any = parse_system("# header next\n\ntrop 1 2  # dims\n z 4\n\n7\n# trailing\n");
  const auto& sys = std::get<System<Trop>>(any);
  EXPECT_EQ(sys.a(0, 0), Trop::zero());
  EXPECT_EQ(sys.b, (Vector<Trop>{7}));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_system("sym 1 1\ng:4\n0\n"), KindMismatch);
  EXPECT_THROW(parse_system(""), ParseError);
  EXPECT_THROW(parse_system("max 1 1\n0\n0\n"), ParseError);
  EXPECT_THROW(parse_system("trop 1 1\n0\n0\n1\n"), ParseError);
  EXPECT_THROW(parse_system("trop 2 1\n0\n"), ParseError);
  try {
    parse_system("trop 2 2\n0 1\n0 x\n1 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
  }
  try {
    parse_system("trop 1 2\n0\n1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Parse, ZeroColumnAccepted) {
  const auto sys = std::get<System<Sup>>(parse_system("sup 2 2\nz 1\nz g:2\n3 4\n"));
  EXPECT_FALSE(is_reduced(sys));
  EXPECT_EQ(reduce(sys).trace.free_vars, IndexSet{0});
}

template <class S>
class RoundTrip : public ::testing::Test {};
using Kinds = ::testing::Types<Trop, Sym, Sup>;
TYPED_TEST_SUITE(RoundTrip, Kinds);

TYPED_TEST(RoundTrip, ParseWriteIdentity) {
  using S = TypeParam;
  Rng rng(77);
  for (int t = 0; t < 200; ++t) {
    const auto sys = testing::random_system<S>(rng, 1 + rng.index(5), 1 + rng.index(5), -1000, 1000, 20);
    const std::string text = write_system(sys);
    ASSERT_EQ(std::get<System<S>>(parse_system(text)), sys);
    ASSERT_EQ(write_system(parse_system(text)), text);
  }
}

TYPED_TEST(RoundTrip, ReportJson) {
  using S = TypeParam;
  Rng rng(78);
  for (int t = 0; t < 100; ++t) {
    const auto sys = testing::random_system<S>(rng, 1 + rng.index(4), 1 + rng.index(4), -3, 3, 20);
    const SolveReportDocument doc = solve_document(sys);
    const nlohmann::json j = doc;
    ASSERT_EQ(nlohmann::json::parse(j.dump()).template get<SolveReportDocument>(), doc);
  }
}

TEST(Report, FiveByFourSymmetrized) {
  const auto doc = solve_document(AnySystem(testing::load<Sym>("sym_minimal_5x4.txt")));
  EXPECT_TRUE(doc.solvable);
  EXPECT_EQ(doc.minimal_solutions, (std::vector<std::vector<std::string>>{{"n:-10", "n:-9", "n:-7", "-11"}}));
  ASSERT_EQ(doc.covers.size(), 1u);
  EXPECT_EQ(doc.covers[0].primary, (IndexSet{2, 3}));
  EXPECT_EQ(doc.covers[0].extension, (IndexSet{0, 1}));
  const nlohmann::json j = doc;
  EXPECT_EQ(j["covers"][0]["primary"], nlohmann::json::array({3, 4}));
  EXPECT_TRUE(j["tangible_condition"].is_null());
}

TEST(Report, ColumnsLiftThroughReduction) {
  const auto doc = solve_document(AnySystem(testing::load<Sym>("sym_needs_reduction_3x3.txt")));
  EXPECT_TRUE(doc.solvable);
  EXPECT_EQ(doc.minimal_solutions, (std::vector<std::vector<std::string>>{{"z", "0", "z"}}));
  EXPECT_EQ(doc.covers[0].primary, IndexSet{1});
}

TEST(Report, EmptyAfterReductionIsTriviallySolvable) {
  const auto doc = solve_document(parse_system("sup 1 2\n1 z\nz\n"));
  EXPECT_TRUE(doc.solvable);
  EXPECT_TRUE(doc.trace.kept_rows.empty());
  EXPECT_EQ(doc.minimal_solutions, (std::vector<std::vector<std::string>>{{"z", "z"}}));
  EXPECT_EQ(doc.tangible_condition, std::optional<bool>(true));
}

TEST(Report, TextCarriesTheSameContent) {
  for (const char* name : {"sym_minimal_5x4.txt", "sup_minimal_3x3.txt", "sup_no_greatest_3x3.txt",
                           "sym_one_equation.txt", "trop_shadow_5x3.txt"}) {
    const auto doc = solve_document(read_system_file(std::string(LAYTROP_SYSTEMS_DIR) + "/" + name));
    const std::string text = render_text(doc);
    auto pretty = [&](const std::vector<std::string>& tokens) {
      return std::visit(
          [&](const auto& sys) {
            using S = std::decay_t<decltype(sys.b)>::value_type;
            Vector<S> v;
            for (const auto& t : tokens) v.push_back(parse_token<S>(t));
            return to_pretty(v);
          },
          read_system_file(std::string(LAYTROP_SYSTEMS_DIR) + "/" + name));
    };
    EXPECT_NE(text.find(pretty(doc.greatest_candidate)), std::string::npos) << name;
    for (const auto& x : doc.minimal_solutions) EXPECT_NE(text.find(pretty(x)), std::string::npos) << name;
    EXPECT_NE(text.find(doc.solvable ? "solvable: yes" : "solvable: no"), std::string::npos);
  }
}

}  // namespace
}  // namespace laytrop
