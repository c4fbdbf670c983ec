#include <gtest/gtest.h>

#include "cddembed/error.hpp"
#include "cddembed/generators.hpp"
#include "cddembed/io.hpp"

namespace cddembed {
namespace {

void expect_parse_error_at(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_matroid(text);
    FAIL() << "parsed: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

TEST(PfmTest, RoundTrip) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const RepresentedMatroid m = random_instance(seed, corpus_params(seed));
    const RepresentedMatroid back = parse_matroid(format_matroid(m));
    EXPECT_EQ(back.labels(), m.labels());
    EXPECT_EQ(back.matrix().entries(), m.matrix().entries());
  }
}

TEST(PfmTest, CommentsAndDefaultLabels) {
  const RepresentedMatroid m = parse_matroid(
      "# identity\npfm 1\nfield 3\n\nsize 2 2\n# rows follow\n1 0\n0 1\n");
  EXPECT_EQ(m.rank(), 2u);
  EXPECT_EQ(m.labels(), (std::vector<std::string>{"c0", "c1"}));
}

TEST(PfmTest, ErrorPositions) {
  expect_parse_error_at("pfm 2\n", 1, 5);
  expect_parse_error_at("pfm 1\nfield 4\n", 2, 7);
  expect_parse_error_at("pfm 1\nfield 3\nsize 1 2\n1 x\n", 4, 3);
  expect_parse_error_at("pfm 1\nfield 3\nsize 1 2\n1 3\n", 4, 3);
  expect_parse_error_at("pfm 1\nfield 3\nsize 1 2\n1\n", 4, 1);
  expect_parse_error_at("pfm 1\nfield 3\nsize 1 2\nlabels a\n", 4, 1);
}

TEST(ScheduleTest, ParseAndFormat) {
  const MinorSchedule s = parse_schedule("contract a\n# note\ndelete b\n");
  ASSERT_EQ(s.steps.size(), 2u);
  EXPECT_EQ(s.steps[0], (MinorStep{StepKind::kContract, "a"}));
  EXPECT_EQ(parse_schedule(format_schedule(s)), s);
  EXPECT_THROW(parse_schedule("shrink a\n"), ParseError);
  EXPECT_THROW(parse_schedule("delete\n"), ParseError);
}

TEST(SExprTest, NestedAndComments) {
  const SExpr e = parse_sexpr("; tree\n(root (a x y) z)\n");
  ASSERT_TRUE(e.is_list);
  EXPECT_EQ(e.items.size(), 3u);
  EXPECT_EQ(format_sexpr(e), "(root (a x y) z)");
  try {
    parse_sexpr("\n(a (b c)\n");
    FAIL();
  } catch (const ParseError& err) {
    EXPECT_EQ(err.line(), 2u);  // the unclosed parenthesis
    EXPECT_EQ(err.column(), 1u);
  }
  EXPECT_THROW(parse_sexpr("(a) (b)"), ParseError);
}

TEST(DigestTest, KnownFnvValues) {
  // FNV-1a 64 reference values.
  EXPECT_EQ(content_digest(""), "cbf29ce484222325");
  EXPECT_EQ(content_digest("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(content_digest("foobar"), "85944171f73967e8");
}

TEST(PartitionTest, Blocks) {
  const auto blocks = parse_partition("a b\n\nc\n");
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[1], (std::vector<std::string>{"c"}));
}

}  // namespace
}  // namespace cddembed
