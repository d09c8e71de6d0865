#include <doctest.h>

#include <set>

#include "ccx/enumerator.hpp"
#include "support.hpp"

using namespace ccx;
using testing::R;

namespace {

RejectReason reason_of(const Validation& v) {
  REQUIRE(std::holds_alternative<Rejection>(v));
  return std::get<Rejection>(v).reason;
}

Word list_word(const std::vector<std::string>& segs) {
  std::string s = "*";
  for (const auto& seg : segs) s += seg + "*";
  return Word(s);
}

}  // namespace

TEST_CASE("candidate validation") {
  Word zero = encode_candidate(R(1, 4), {{R(0), R(0)}, {R(1), R(0)}});
  CHECK(zero.str() == "*||/|||||*|/||*|/||*||/||*|/||*");
  auto v = validate_candidate(zero);
  REQUIRE(std::holds_alternative<Candidate>(v));
  CHECK(std::get<Candidate>(v).delta == R(1, 4));
  CHECK(std::get<Candidate>(v).g == PolygonalFunction::constant(R(0)));

  CHECK(reason_of(validate_candidate(encode_candidate(R(1, 4), {{R(0), R(1, 2)}, {R(1), R(1, 2)}}))) ==
        RejectReason::integral);
  CHECK(reason_of(validate_candidate(Word("||/|||"))) == RejectReason::parse);
  CHECK(reason_of(validate_candidate(list_word({"a"}))) == RejectReason::parse);
  // Even number of segments after delta.
  CHECK(reason_of(validate_candidate(list_word({"||/|||", "|/||", "|/||", "||/||"}))) == RejectReason::parse);
  CHECK(reason_of(validate_candidate(encode_candidate(R(0), {{R(0), R(0)}, {R(1), R(0)}}))) ==
        RejectReason::delta);
  CHECK(reason_of(validate_candidate(encode_candidate(R(-1, 2), {{R(0), R(0)}, {R(1), R(0)}}))) ==
        RejectReason::delta);
  CHECK(reason_of(validate_candidate(encode_candidate(R(1), {{R(1, 8), R(0)}, {R(1), R(0)}}))) ==
        RejectReason::breakpoints);
  CHECK(reason_of(validate_candidate(encode_candidate(R(1), {{R(0), R(0)}, {R(1, 2), R(0)}}))) ==
        RejectReason::breakpoints);
  CHECK(reason_of(validate_candidate(
            encode_candidate(R(1), {{R(0), R(0)}, {R(1, 2), R(0)}, {R(1, 4), R(0)}, {R(1), R(0)}}))) ==
        RejectReason::breakpoints);
  CHECK(reason_of(validate_candidate(encode_candidate(R(1), {{R(0), R(-1, 8)}, {R(1), R(0)}}))) ==
        RejectReason::negativity);
  // Collinear interior points are fine and canonicalize away.
  auto col = validate_candidate(encode_candidate(R(1), {{R(0), R(0)}, {R(1, 2), R(1, 4)}, {R(1), R(1, 2)}}));
  REQUIRE(std::holds_alternative<Candidate>(col));
  CHECK(std::get<Candidate>(col).g.points().size() == 2);
  CHECK(to_string(RejectReason::integral) == "integral");

  // Totality on random words.
  std::mt19937_64 rng(51);
  for (int i = 0; i < 500; ++i) {
    std::string s;
    int len = static_cast<int>(testing::draw(rng, 0, 30));
    for (int k = 0; k < len; ++k) s += "|-/*ab"[testing::draw(rng, 0, 5)];
    auto r = validate_candidate(Word(s));
    if (auto* c = std::get_if<Candidate>(&r)) {
      CHECK(c->delta > R(0));
      CHECK(c->g.nonnegative());
      CHECK(c->g.integral() < R(1, 2));
    }
  }
}

TEST_CASE("enumeration of registry seeds") {
  Numbering one({testing::list_machine(R(1, 4), {{R(0), R(0)}, {R(1), R(0)}})});
  auto st = enumerate_mu(one, 20);
  REQUIRE(!st.entries().empty());
  CHECK(st.entries()[0].n == 0);
  CHECK(st.entries()[0].mu == 0);
  CHECK(st.entries()[0].delta == R(1, 4));
  CHECK(st.entries()[0].g == PolygonalFunction::constant(R(0)));

  Numbering two({testing::four_seeds()[0], testing::four_seeds()[1]});
  auto st2 = enumerate_mu(two, 30);
  REQUIRE(st2.entries().size() >= 2);
  CHECK(st2.entries()[0].mu == 0);
  CHECK(st2.entries()[1].mu == 1);
  CHECK(st2.position_of(1) == std::optional<std::size_t>(1));

  CHECK(enumerate_mu(one, 1).entries().empty());
}

TEST_CASE("enumeration invariants and replay") {
  std::vector<Scheme> reg = testing::four_seeds();
  reg.push_back(constant_machine(Word("*ab*")));                                           // invalid
  reg.push_back(testing::list_machine(R(1, 5), {{R(0), R(1)}, {R(1), R(1)}}));             // integral
  reg.push_back(testing::four_seeds()[0]);                                                // duplicate scheme
  Numbering numbering(reg);
  auto st = enumerate_mu(numbering, 400);
  std::set<std::uint64_t> mus;
  for (std::size_t n = 0; n < st.entries().size(); ++n) {
    const auto& e = st.entries()[n];
    CHECK(e.n == n);
    CHECK(mus.insert(e.mu).second);
    auto r = run_machine(numbering.index_to_scheme(e.mu), encode_natural(e.mu), 100000);
    REQUIRE(std::holds_alternative<Halted>(r));
    CHECK(std::get<Halted>(r).output == e.output);
    auto v = validate_candidate(e.output);
    REQUIRE(std::holds_alternative<Candidate>(v));
    CHECK(std::get<Candidate>(v).delta == e.delta);
    CHECK(std::get<Candidate>(v).g == e.g);
  }
  for (std::uint64_t i = 0; i < 4; ++i) CHECK(st.position_of(i) == std::optional<std::size_t>(i));
  CHECK(st.rejections().count(4) == 1);
  CHECK(st.rejections().at(4).reason == RejectReason::parse);
  CHECK(st.rejections().at(5).reason == RejectReason::integral);
  CHECK(enumerate_mu(numbering, 400).entries() == st.entries());
}
