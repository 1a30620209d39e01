#include <doctest.h>

#include <random>

#include "eulerkit/rational.hpp"
#include "test_support.hpp"

using eulerkit::Rat;

TEST_CASE("canonical form") {
  CHECK(Rat(2, 4).to_string() == "1/2");
  CHECK(Rat(-2, 4).to_string() == "-1/2");
  CHECK(Rat(2, -4).to_string() == "-1/2");
  CHECK(Rat(-2, -4).to_string() == "1/2");
  CHECK(Rat(0, 7).to_string() == "0");
  CHECK(Rat(6, 3).to_string() == "2");
  CHECK(Rat(6, 3).is_integer());
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
  // normalization is idempotent: rebuilding from parts changes nothing
  Rat r(36, -120);
  CHECK(Rat(r.num(), r.den()) == r);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 500; ++i) {
    Rat a = testsupport::random_rat(rng);
    Rat b = testsupport::random_rat(rng);
    Rat c = testsupport::random_rat(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}

TEST_CASE("parsing") {
  CHECK(Rat::from_string("3/4") == Rat(3, 4));
  CHECK(Rat::from_string("-3/4") == Rat(-3, 4));
  CHECK(Rat::from_string("10/4") == Rat(5, 2));
  CHECK(Rat::from_string("7") == Rat(7));
  CHECK_THROWS_AS(Rat::from_string("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::from_string("1/0"), std::domain_error);

  // strict canonical parsing, used by the cache reader
  CHECK(Rat::parse_canonical("1/2") == Rat(1, 2));
  CHECK(Rat::parse_canonical("-155") == Rat(-155));
  CHECK(!Rat::parse_canonical("2/4").has_value());
  CHECK(!Rat::parse_canonical("3/1").has_value());
  CHECK(!Rat::parse_canonical("+3").has_value());
  CHECK(!Rat::parse_canonical("007").has_value());
  CHECK(!Rat::parse_canonical("-0").has_value());
  CHECK(!Rat::parse_canonical("1/-2").has_value());
  CHECK(!Rat::parse_canonical("").has_value());
  CHECK(!Rat::parse_canonical(" 1").has_value());
}

TEST_CASE("powers and comparisons") {
  CHECK(Rat::pow(Rat(2), 10) == Rat(1024));
  CHECK(Rat::pow(Rat(2), -3) == Rat(1, 8));
  CHECK(Rat::pow(Rat(-2, 3), 3) == Rat(-8, 27));
  CHECK(Rat::pow(Rat(0), 0) == Rat(1));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 3) > Rat(-1, 2));
  CHECK(Rat(5, 10) == Rat(1, 2));
  CHECK(Rat(1, 2).abs() == Rat(1, 2));
  CHECK(Rat(-1, 2).abs() == Rat(1, 2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}
