#include <doctest.h>

#include "semifair/numeric.hpp"

using namespace semifair;

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("0.5") == Rational(1, 2));
  CHECK(Rational::parse("1/10") == Rational(1, 10));
  CHECK(Rational::parse(".25") == Rational(1, 4));
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  CHECK(Rational::parse("-2/4") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("rational arithmetic and ordering") {
  Rational q(9, 8);
  CHECK(q.pow(2) == Rational(81, 64));
  CHECK(q.pow(0) == Rational(1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(5, 2).ceil() == 3);
  CHECK(Rational(5, 2).floor() == 2);
  CHECK(Rational(-5, 2).ceil() == -2);
  CHECK(Rational(-5, 2).floor() == -3);
  CHECK(Rational(4, 2).ceil() == 2);
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) * Rational(2, 5)) == Rational(1, 5));
  CHECK(Rational(7, 2).to_double() == doctest::Approx(3.5));
}

TEST_CASE("decimal rendering") {
  CHECK(Rational(4).to_decimal() == "4");
  CHECK(Rational(0).to_decimal() == "0");
  CHECK(Rational(1, 3).to_decimal() == "0.333333333333");
  CHECK(Rational(2, 3).to_decimal() == "0.666666666667");
  CHECK(Rational(5, 2).to_decimal() == "2.5");
  CHECK(Rational(999999999999999, 1).to_decimal() == "999999999999999");
  CHECK(Rational(1, 1000).to_decimal(3) == "0.001");
  // rounding that carries across the leading digit
  CHECK(Rational(9999, 1000).to_decimal(3) == "10");
  // large magnitudes switch to scientific notation
  BigInt big = boost::multiprecision::pow(BigInt(10), 30);
  CHECK(Rational(big).to_decimal(4) == "1e+30");
  CHECK(Rational(1, big).to_decimal(4) == "1e-30");
  CHECK(Rational(123456, 100000).to_decimal(4) == "1.235");
}

TEST_CASE("decimal rendering round-trips through double") {
  Rational q(1011, 1010);
  Rational v = q.pow(700);
  double rendered = std::stod(v.to_decimal());
  CHECK(rendered == doctest::Approx(v.to_double()).epsilon(1e-9));
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(25, 12) == BigInt("5200300"));
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("extended capacity ordering") {
  auto inf = ExtendedCapacity::infinite();
  auto five = ExtendedCapacity::finite(5);
  CHECK(five < inf);
  CHECK(inf == ExtendedCapacity::infinite());
  CHECK(five.plus(3) == ExtendedCapacity::finite(8));
  CHECK(inf.plus(3).is_infinite());
  CHECK_THROWS_AS(inf.value(), std::logic_error);
}

TEST_CASE("weight sum conversions") {
  WeightSum big = static_cast<WeightSum>(1) << 100;
  CHECK(to_string(big) == "1267650600228229401496703205376");
  CHECK(to_bigint(big) == BigInt("1267650600228229401496703205376"));
  CHECK(to_string(WeightSum(-42)) == "-42");
  CHECK(to_bigint(WeightSum(-42)) == -42);
}
