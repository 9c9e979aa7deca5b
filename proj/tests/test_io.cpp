#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hyperq/fixtures.hpp"
#include "hyperq/io.hpp"
#include "hyperq/random_gen.hpp"

using namespace hyperq;

TEST_CASE("parse_hqg fixtures") {
  CHECK(parse_hqg("hqg 2\n0 0 : 0 1\n0 1 : 0 1\n1 0 : 0 1\n1 1 : 0 1\n") ==
        total_hqg(2));
  CHECK(parse_hqg("hqg 2\n0 0 : 0\n0 1 : 1\n1 0 : 1\n1 1 : 0\n") ==
        zgroup_hqg(2));
}

TEST_CASE("hqg comments, ordering and whitespace") {
  const auto h = parse_hqg(
      "# a comment\nhqg 2  # trailing\n1 1 : 0\n0 0 : 0\n\n0 1 : 1\n1 0 : 1\n");
  CHECK(h == zgroup_hqg(2));
}

TEST_CASE("parse_hqg errors carry positions") {
  auto expect_error = [](std::string_view text, int line) {
    try {
      parse_hqg(text);
      FAIL("expected ParseError for: ", text);
    } catch (const ParseError &e) {
      CHECK(e.line == line);
    }
  };
  expect_error("", 1);
  expect_error("xyz 2\n", 1);
  expect_error("hqg 2\n0 0 :\n0 1 : 1\n1 0 : 1\n1 1 : 0\n", 2);  // empty cell
  expect_error("hqg 2\n0 0 : 2\n0 1 : 1\n1 0 : 1\n1 1 : 0\n", 2);  // index >= n
  expect_error("hqg 2\n0 0 : 0\n0 0 : 1\n1 0 : 1\n1 1 : 0\n", 3);  // duplicate
  expect_error("hqg 2\n0 0 : 0\n0 1 : 1\n1 0 : 1\n", 4);  // missing cell
}

TEST_CASE("hqg round-trip is byte-identical") {
  for (const Hypergroupoid &h :
       {pair_hqg(4), total_hqg(3), zgroup_hqg(5), block4_hqg()}) {
    const std::string text = serialize_hqg(h);
    CHECK(parse_hqg(text) == h);
    CHECK(serialize_hqg(parse_hqg(text)) == text);
  }
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const auto hq = random_hyperquasigroup(2 + rng() % 4, rng());
    CHECK(serialize_hqg(parse_hqg(serialize_hqg(hq.hqg))) ==
          serialize_hqg(hq.hqg));
  }
}

TEST_CASE("parse_ifs") {
  const auto [mu, lambda] =
      parse_ifs("ifs 2\n0 : 9/10 1/20\n1 : 2/10 6/10\n");
  CHECK(mu == FuzzySet{Grade::of(9, 10), Grade::of(2, 10)});
  CHECK(lambda == FuzzySet{Grade::of(1, 20), Grade::of(6, 10)});

  const auto [mu0, la0] = parse_ifs("ifs 2\n0 : 0 1\n1 : 0 1\n");
  CHECK(ifs_validate(mu0, la0) == zero_ifs(2));

  CHECK_THROWS_AS(parse_ifs("ifs 2\n0 : 3/2 0\n1 : 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_ifs("ifs 2\n0 : 0 1\n"), ParseError);   // missing
  CHECK_THROWS_AS(parse_ifs("ifs 1\n0 : 0\n"), ParseError);     // short line
}

TEST_CASE("parser leaves the sum constraint to ifs_validate") {
  const auto [mu, lambda] = parse_ifs("ifs 1\n0 : 9/10 2/10\n");
  CHECK_THROWS_AS(ifs_validate(mu, lambda), ConstraintViolated);
}

TEST_CASE("ifs round-trip") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_ifs(rng, 2 + rng() % 5, 12);
    const std::string text = serialize_ifs(a);
    const auto [mu, lambda] = parse_ifs(text);
    CHECK(ifs_validate(mu, lambda) == a);
    CHECK(serialize_ifs(a) == text);
  }
}

TEST_CASE("quasigroup serialization") {
  const Quasigroup one = Quasigroup::from_mult(1, {0});
  CHECK(serialize_quasigroup(one) == "qsg 1\nmult\n0\nldiv\n0\nrdiv\n0\n");
  const Quasigroup z2 = Quasigroup::from_mult(2, {0, 1, 1, 0});
  const std::string text = serialize_quasigroup(z2);
  CHECK(text.find("mult\n0 1\n1 0\n") != std::string::npos);
  CHECK(parse_quasigroup(text) == z2);
  CHECK(serialize_quasigroup(parse_quasigroup(text)) == text);

  CHECK_THROWS_AS(parse_quasigroup("qsg 2\nmult\n0 0\n1 1\n"), ParseError);
  CHECK_THROWS_AS(
      parse_quasigroup("qsg 2\nmult\n0 1\n1 0\nldiv\n1 0\n0 1\nrdiv\n0 1\n1 0\n"),
      ParseError);  // inconsistent ldiv
}
