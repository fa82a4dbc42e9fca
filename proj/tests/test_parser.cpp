#include <doctest.h>

#include "cdeig/parser.hpp"
#include "cdeig/rng.hpp"
#include "cdeig/serialize.hpp"

using namespace cdeig;

TEST_CASE("basic expressions") {
  const CDElement x = parse_element("1+i+j", 3);
  for (int k = 0; k < 8; ++k) CHECK(x[k] == (k <= 2 ? 1.0 : 0.0));

  const CDElement y = parse_element("(i, j)", 4);
  CHECK(y[1] == 1.0);
  CHECK(y[10] == 1.0);
  CHECK(norm_sq(y) == 2.0);

  // aliases resolve to the documented indices
  CHECK(parse_element("t", 3)[4] == 1.0);
  CHECK(parse_element("it", 3)[5] == 1.0);
  CHECK(parse_element("jt", 3)[6] == 1.0);
  CHECK(parse_element("kt", 3)[7] == 1.0);
  CHECK(parse_element("k", 2)[3] == 1.0);
  CHECK(parse_element("e13", 4)[13] == 1.0);
  CHECK(parse_element("i4", 4)[8] == 1.0);
}

TEST_CASE("coefficients and signs") {
  const CDElement x = parse_element("2.5*i - 3j + 0.5 e4", 3);
  CHECK(x[1] == 2.5);
  CHECK(x[2] == -3.0);
  CHECK(x[4] == 0.5);

  CHECK(parse_element("-i", 2)[1] == -1.0);
  CHECK(parse_element("-2", 1)[0] == -2.0);
  CHECK(parse_element("7", 0)[0] == 7.0);
  CHECK(parse_element("0", 5).dim() == 32);
  CHECK(norm(parse_element("0", 5)) == 0.0);
  CHECK(parse_element("2*1 + 1", 1)[0] == 3.0);

  // greedy float lexing: "2e2" is the number 200, not 2*e2
  CHECK(parse_element("2e2", 3)[0] == 200.0);
  CHECK(parse_element("2*e2", 3)[2] == 2.0);
  CHECK(parse_element("2 e2", 3)[2] == 2.0);
}

TEST_CASE("nested pairs") {
  const CDElement w = parse_element("((0,t),(t+it,1+i+j))", 5);
  CHECK(w.level == 5);
  for (int k = 0; k < 32; ++k) {
    const bool on = k == 12 || k == 20 || k == 21 || k == 24 || k == 25 || k == 26;
    CHECK(w[k] == (on ? 1.0 : 0.0));
  }
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_element("1 + + i", 3), ParseError);
  CHECK_THROWS_AS(parse_element("(i, j", 4), ParseError);
  CHECK_THROWS_AS(parse_element("i +", 3), ParseError);
  CHECK_THROWS_AS(parse_element("zzz", 3), ParseError);
  CHECK_THROWS_AS(parse_element("i j", 3), ParseError);  // missing operator
  CHECK_THROWS_AS(parse_element("e9", 3), ParseError);     // index out of range
  CHECK_THROWS_AS(parse_element("(t, 0)", 3), ParseError); // t does not fit in the level-2 half

  try {
    parse_element("1 + zz", 3);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }

  // alias above the requested level
  CHECK_THROWS_AS(parse_element("t", 2), ParseError);
  CHECK_THROWS_AS(parse_element("j", 1), ParseError);
  CHECK_THROWS_AS(parse_element("i5", 4), ParseError);
  CHECK_THROWS_AS(parse_element("(1,1)", 0), ParseError);
}

TEST_CASE("expression round trip") {
  SplitMix64 rng(31);
  for (int level = 0; level <= 6; ++level) {
    const CDElement x = random_element(level, rng);
    const CDElement back = parse_element(to_expression(x), level);
    CHECK(norm(back - x) == 0.0);
  }
  CHECK(to_expression(zero_element(3)) == "0");
  CHECK(parse_element(to_expression(basis_element(4, 10)), 4)[10] == 1.0);
}

TEST_CASE("json round trip") {
  SplitMix64 rng(32);
  const CDElement x = random_element(5, rng);
  const CDElement back = element_from_json(element_json(x));
  CHECK(back.level == 5);
  CHECK(norm(back - x) == 0.0);
}
