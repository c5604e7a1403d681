#include <gtest/gtest.h>

#include "lefschetz/error.hpp"
#include "lefschetz/ideal_parser.hpp"

using namespace lefschetz;

namespace {

auto parse_error(std::string_view text) -> std::pair<ErrorCode, std::size_t> {
  try {
    (void)parse_ideal(text);
  } catch (const ParseError &e) {
    return {e.code(), e.position()};
  }
  ADD_FAILURE() << "no error for " << text;
  return {ErrorCode::InvalidArgument, 0};
}

} // namespace

TEST(ParseIdeal, Basic) {
  const auto e = parse_ideal("vars: x,y,z; gens: x^3,y^3,z^3,x*y*z");
  EXPECT_EQ(e.variables.size(), 3u);
  ASSERT_EQ(e.generators.size(), 4u);
  EXPECT_EQ(e.generators[3], Monomial(std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(e.to_ideal().hilbert_function().values,
            (std::vector<std::int64_t>{1, 3, 6, 6, 3}));
}

TEST(ParseIdeal, WhitespaceAndRepeatedFactors) {
  const auto e = parse_ideal("  vars :a , b ;gens: a ^ 2 * b * a , b^4 ; ");
  ASSERT_EQ(e.generators.size(), 2u);
  EXPECT_EQ(e.generators[0], Monomial(std::vector<unsigned>{3, 1}));
  EXPECT_EQ(e.to_string(), "vars: a, b; gens: a^3*b, b^4");
}

TEST(ParseIdeal, IndexedAliasesForThreeVariables) {
  const auto a = parse_ideal("vars: x,y,z; gens: x1^2, x2*z, y^2, x3^2");
  const auto b = parse_ideal("vars: x,y,z; gens: x^2, y*z, y^2, z^2");
  EXPECT_EQ(a.generators, b.generators);
  EXPECT_EQ(parse_error("vars: u,v; gens: x1").first, ErrorCode::UndeclaredVariable);
}

TEST(ParseIdeal, Errors) {
  EXPECT_EQ(parse_error("vars: x; gens: x^0"), std::make_pair(ErrorCode::SyntaxError, 17ul));
  EXPECT_EQ(parse_error("vars: x,y; gens: z^2").first, ErrorCode::UndeclaredVariable);
  EXPECT_EQ(parse_error("vars: x,x; gens: x").first, ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("vars: x; gens: x,").first, ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("vars: x; gens: x extra").first, ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("gens: x").first, ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("vars: x; gens: x^").first, ErrorCode::SyntaxError);
}

TEST(ParseIdeal, PrintParseRoundTrip) {
  const auto e = parse_ideal("vars:p,q,r,s;gens:p^2*q,s^5,q*r*s,r^3");
  EXPECT_EQ(parse_ideal(e.to_string()), e);
}
