#include "doctest.h"

#include "cdl/rat.hpp"

using cdl::Rat;

TEST_CASE("canonical form") {
  const Rat r(-288, 32);
  CHECK(r.num() == -9);
  CHECK(r.den() == 1);
  CHECK(r.str() == "-9");
  CHECK(Rat(6, -4).str() == "-3/2");
  CHECK(Rat(0, 7).str() == "0");
  CHECK_THROWS_AS(Rat(1, 0), cdl::DomainError);
}

TEST_CASE("parse") {
  CHECK(Rat::parse("-288/32") == Rat(-9));
  CHECK(Rat::parse(" 5/4 ") == Rat(5, 4));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK(Rat::parse("+3/-6") == Rat(-1, 2));
  CHECK(Rat::parse("0.125") == Rat(1, 8));
  CHECK(Rat::parse("-1.5e-3") == Rat(-3, 2000));
  CHECK(Rat::parse("2E2") == Rat(200));
  CHECK(Rat::parse(".5") == Rat(1, 2));
  CHECK(Rat::parse("123456789012345678901234567890").num() == mpz_class("123456789012345678901234567890"));
  for (const char* bad : {"", "abc", "1/", "/2", "1/0", "1.2.3", "1e", "--1", "1/2/3", "0x10"}) {
    CHECK_THROWS_AS(Rat::parse(bad), cdl::DomainError);
  }
}

TEST_CASE("arithmetic stays exact") {
  Rat acc(0);
  for (int k = 1; k <= 60; ++k) acc += Rat(1, 1L << 40) * Rat(k);
  CHECK(acc == Rat(1830, 1L << 40));
  CHECK(Rat(2).pow(100).num() == mpz_class("1267650600228229401496703205376"));
  CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
  CHECK(Rat::pow2(-5) == Rat(1, 32));
  CHECK(Rat(3, 7).inverse() == Rat(7, 3));
  CHECK_THROWS(Rat(0).inverse());
  CHECK_THROWS(Rat(1) / Rat(0));
  CHECK(Rat(-1, 3) < Rat(-1, 4));
  CHECK(cdl::binomial(10, 5) == Rat(252));
  CHECK(cdl::factorial(6) == Rat(720));
}

TEST_CASE("exact square roots") {
  CHECK(Rat(9, 4).exact_sqrt() == Rat(3, 2));
  CHECK(Rat(0).exact_sqrt() == Rat(0));
  CHECK_FALSE(Rat(1, 2).exact_sqrt().has_value());
  CHECK_FALSE(Rat(-4).exact_sqrt().has_value());
}

TEST_CASE("decimal rendering rounds half-even at 12 significant digits") {
  CHECK(cdl::to_decimal(Rat(1, 200)) == "0.005");
  CHECK(cdl::to_decimal(Rat(3, 5)) == "0.6");
  CHECK(cdl::to_decimal(Rat(1, 3)) == "0.333333333333");
  CHECK(cdl::to_decimal(Rat(2, 3)) == "0.666666666667");
  CHECK(cdl::to_decimal(Rat(-9, 2)) == "-4.5");
  CHECK(cdl::to_decimal(Rat(0)) == "0");
  CHECK(cdl::to_decimal(Rat(1, 8), 2) == "0.12");   // tie goes to even
  CHECK(cdl::to_decimal(Rat(3, 8), 2) == "0.38");
  CHECK(cdl::to_decimal(Rat(5, 8), 1) == "0.6");
  CHECK(cdl::to_decimal(Rat(-25, 10), 1) == "-2");
  CHECK(cdl::to_decimal(Rat(999999999999999, 1000)) == "1e+12");
  CHECK(cdl::to_decimal(Rat(123456, 1)) == "123456");
  CHECK(cdl::to_decimal(Rat(1, 100000)) == "1e-05");
  CHECK(cdl::to_decimal(Rat(1, 10000)) == "0.0001");
  CHECK(cdl::to_decimal(Rat(-288, 1) * Rat::pow2(-60)) == "-2.49800180541e-16");
}
