#include <catch2/catch_amalgamated.hpp>

#include <zslab/errors.hpp>
#include <zslab/fraction.hpp>

using zslab::Error;
using zslab::Fraction;
using zslab::errc;

TEST_CASE("fractions normalize to lowest terms with positive denominator", "[fraction]") {
  CHECK(Fraction(2, 4) == Fraction(1, 2));
  CHECK(Fraction(-2, 4) == Fraction(1, -2));
  CHECK(Fraction(3, -6).str() == "-1/2");
  CHECK(Fraction(0, 5).str() == "0/1");
  CHECK(Fraction(7).str() == "7/1");
  CHECK(Fraction().str() == "0/1");
  CHECK(Fraction(6, 3).str() == "2/1");
}

TEST_CASE("fraction addition and subtraction stay exact", "[fraction]") {
  CHECK(Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6));
  CHECK(Fraction(1, 2) - Fraction(1, 3) == Fraction(1, 6));

  Fraction acc;
  acc += Fraction(1, 2);
  acc += Fraction(1, 3);
  acc += Fraction(1, 6);
  CHECK(acc == Fraction(1));
  CHECK(acc - Fraction(1, 6) == Fraction(5, 6));
}

TEST_CASE("fractions order like rationals", "[fraction]") {
  CHECK(Fraction(1, 3) < Fraction(1, 2));
  CHECK(Fraction(2, 3) <= Fraction(2, 3));
  CHECK(Fraction(5, 6) > Fraction(2, 3));
  CHECK(Fraction(-1, 2) < Fraction(0));
  CHECK(Fraction(7, 6) >= Fraction(1));
  CHECK(Fraction(1, 2) != Fraction(1, 3));
}

TEST_CASE("fractions parse from p/q or integer text", "[fraction]") {
  CHECK(Fraction::parse("5/6") == Fraction(5, 6));
  CHECK(Fraction::parse("3") == Fraction(3));
  CHECK(Fraction::parse("10/4") == Fraction(5, 2));
  CHECK(Fraction::parse("7/3").str() == "7/3");
}

TEST_CASE("fraction parsing rejects malformed text", "[fraction]") {
  for (const char* bad : {"", "x", "1/", "/2", "1/0", "1/-2", "1.5", "2/2/2", "3x"}) {
    INFO("input: " << bad);
    try {
      Fraction::parse(bad);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == errc::parse_error);
    }
  }
}
