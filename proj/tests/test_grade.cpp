#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "hyperq/grade.hpp"

using namespace hyperq;

TEST_CASE("parse literal rationals") {
  CHECK(Grade::parse("1/2") == Grade::of(1, 2));
  CHECK(Grade::parse("0") == Grade::zero());
  CHECK(Grade::parse("1") == Grade::one());
  CHECK(Grade::parse("2/4") == Grade::of(1, 2));
  CHECK(Grade::parse("10/10") == Grade::one());
}

TEST_CASE("parse rejections") {
  CHECK_THROWS_AS(Grade::parse("7/5"), OutOfRange);
  CHECK_THROWS_AS(Grade::parse("-1/2"), OutOfRange);
  CHECK_THROWS_AS(Grade::parse("2"), OutOfRange);
  CHECK_THROWS_AS(Grade::parse(""), MalformedGrade);
  CHECK_THROWS_AS(Grade::parse("a/b"), MalformedGrade);
  CHECK_THROWS_AS(Grade::parse("1/0"), MalformedGrade);
  CHECK_THROWS_AS(Grade::parse("1/2/3"), MalformedGrade);
  CHECK_THROWS_AS(Grade::parse("1.5"), MalformedGrade);
}

TEST_CASE("complement") {
  CHECK(Grade::zero().complement() == Grade::one());
  CHECK(Grade::of(1, 3).complement() == Grade::of(2, 3));
  CHECK(Grade::of(2, 7).complement().complement() == Grade::of(2, 7));
}

TEST_CASE("lowest terms and equality") {
  const Grade g = Grade::of(6, 8);
  CHECK(g.num() == 3);
  CHECK(g.den() == 4);
  CHECK(g.str() == "3/4");
  CHECK(Grade::one().str() == "1");
}

TEST_CASE("total order and exact min/max") {
  std::mt19937_64 rng(42);
  std::vector<Grade> grades;
  for (int i = 0; i < 200; ++i) {
    const auto q = static_cast<std::int64_t>(rng() % 30) + 1;
    grades.push_back(Grade::of(static_cast<std::int64_t>(rng() % (q + 1)), q));
  }
  for (const Grade &a : grades)
    for (const Grade &b : grades) {
      const int rels = (a < b) + (a == b) + (a > b);
      CHECK(rels == 1);
    }
  const Grade lo = *std::min_element(grades.begin(), grades.end());
  const Grade hi = *std::max_element(grades.begin(), grades.end());
  CHECK(std::count(grades.begin(), grades.end(), lo) >= 1);
  CHECK(std::count(grades.begin(), grades.end(), hi) >= 1);
  CHECK(lo <= hi);
}

TEST_CASE("sum_at_most_one") {
  CHECK(sum_at_most_one(Grade::of(1, 2), Grade::of(1, 2)));
  CHECK(sum_at_most_one(Grade::of(9, 10), Grade::of(1, 20)));
  CHECK_FALSE(sum_at_most_one(Grade::of(9, 10), Grade::of(2, 10)));
  CHECK(sum_at_most_one(Grade::zero(), Grade::one()));
}
