#include <doctest.h>

#include "ccx/rational.hpp"
#include "ccx/word.hpp"
#include "support.hpp"

using namespace ccx;
using testing::R;

TEST_CASE("rational canonical form and text") {
  CHECK(R(6, 8).str() == "3/4");
  CHECK(R(3, -4).str() == "-3/4");
  CHECK(R(0, 5).str() == "0/1");
  CHECK(R(2).str() == "2/1");
  CHECK(Rational::parse("10/4") == R(5, 2));
  CHECK(Rational::parse("-7") == R(-7));
  CHECK(Rational::pow2(-3) == R(1, 8));
  CHECK(Rational::pow2(4) == R(16));
  CHECK(R(-1, 3).decimal(3) == "-0.333");
  CHECK(R(5, 2).decimal(0) == "2");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(R(1) / R(0), DomainError);
  CHECK(R(1, 3) < R(1, 2));
  CHECK(abs(R(-2, 3)) == R(2, 3));
  CHECK(min(R(1), R(2)) == R(1));
  CHECK(midpoint(R(0), R(1)) == R(1, 2));
}

TEST_CASE("rational field axioms on random triples") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int i = 0; i < 500; ++i) {
    Rational a = testing::draw_rational(rng, 1000, 1000);
    Rational b = testing::draw_rational(rng, 1000, 1000);
    Rational c = testing::draw_rational(rng, 1000, 1000);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == R(0));
    if (!a.is_zero()) CHECK(a / a == R(1));
    CHECK(gcd(a.num(), a.den()) == 1);
    CHECK(a.den() >= 1);
  }
}

TEST_CASE("natural numerals") {
  CHECK(encode_natural(std::uint64_t{0}).str() == "|");
  CHECK(encode_natural(std::uint64_t{3}).str() == "||||");
  for (std::uint64_t n = 0; n <= 1000; ++n) CHECK(decode_natural(encode_natural(n).str()) == n);
  CHECK_THROWS_AS(decode_natural(""), ParseError);
  CHECK_THROWS_AS(decode_natural("|a"), ParseError);
}

TEST_CASE("rational numerals") {
  CHECK(encode_rational(R(1, 2)).str() == "||/|||");
  CHECK(decode_rational("-|||/||") == R(-2));
  CHECK(decode_rational("||||||/||||") == R(5, 3));
  CHECK(decode_rational("|||/|||||") == R(1, 2));  // unreduced 2/4
  CHECK(encode_rational(R(0)).str() == "|/||");
  CHECK_THROWS_AS(decode_rational("||/|"), ParseError);   // denominator 0
  CHECK_THROWS_AS(decode_rational("||||"), ParseError);   // no '/'
  CHECK_THROWS_AS(decode_rational("a"), ParseError);
  CHECK_THROWS_AS(decode_rational("|/||/||"), ParseError);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Rational r(testing::draw(rng, -10000, 10000), testing::draw(rng, 1, 10000));
    CHECK(decode_rational(encode_rational(r).str()) == r);
  }
}

TEST_CASE("star systems") {
  auto segs = parse_star_system(Word("*||/|||*|/||*"));
  REQUIRE(segs.size() == 2);
  CHECK(segs[0].str() == "||/|||");
  CHECK(segs[1].str() == "|/||");
  CHECK_THROWS_AS(parse_star_system(Word("||/|||")), ParseError);
  CHECK_THROWS_AS(parse_star_system(Word("*")), ParseError);
  CHECK_THROWS_AS(parse_star_system(Word("*|**|*")), ParseError);
  auto a = parse_star_system(Word("*a*"));
  REQUIRE(a.size() == 1);
  CHECK_THROWS_AS(decode_rational(a[0].str()), ParseError);
  CHECK_THROWS_AS(Word("xyz"), ParseError);

  std::mt19937_64 rng(5);
  const std::string letters = "|-/ab";
  for (int i = 0; i < 200; ++i) {
    std::vector<Word> parts;
    int n = static_cast<int>(testing::draw(rng, 1, 6));
    for (int k = 0; k < n; ++k) {
      std::string s;
      int len = static_cast<int>(testing::draw(rng, 1, 5));
      for (int j = 0; j < len; ++j) s += letters[testing::draw(rng, 0, 4)];
      parts.emplace_back(s);
    }
    CHECK(parse_star_system(join_star_system(parts)) == parts);
  }
}
