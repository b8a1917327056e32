#include <gtest/gtest.h>

#include "gitstab/errors.hpp"
#include "gitstab/rational.hpp"

using namespace gitstab;

TEST(Rational, ParsesToLowestTerms) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-10/5").str(), "-2");
  EXPECT_EQ(Rational::parse("0/7").str(), "0");
  EXPECT_EQ(Rational::parse("42").str(), "42");
  EXPECT_EQ(Rational::parse("-7").str(), "-7");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", " 1", "1 ", "+1", "1/-2", "abc", "1//2"}) {
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
  }
}

TEST(Rational, DenominatorIsPositive) {
  const Rational r(mpz_class(3), mpz_class(-6));
  EXPECT_EQ(r.str(), "-1/2");
  EXPECT_GT(r.denominator(), 0);
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), DomainError);
}

TEST(Rational, ArithmeticIsExact) {
  const Rational a = Rational::parse("1/3");
  const Rational b = Rational::parse("1/6");
  EXPECT_EQ((a + b).str(), "1/2");
  EXPECT_EQ((a - b).str(), "1/6");
  EXPECT_EQ((a * b).str(), "1/18");
  EXPECT_EQ((a / b).str(), "2");
  EXPECT_EQ((-a).str(), "-1/3");
  EXPECT_THROW(a / Rational(0), DomainError);
}

TEST(Rational, OrderingAndPredicates) {
  EXPECT_LT(Rational::parse("-1/2"), Rational(0));
  EXPECT_GT(Rational::parse("7/3"), Rational(2));
  EXPECT_TRUE(Rational(0).is_zero());
  EXPECT_TRUE(Rational(5).is_integer());
  EXPECT_FALSE(Rational::parse("5/2").is_integer());
  EXPECT_EQ(Rational(-3).sign(), -1);
}

TEST(Rational, LargeIntegersSurvive) {
  const Rational big(std::int64_t{9'000'000'000'000'000'000});
  EXPECT_EQ((big * big).str(), "81000000000000000000000000000000000000");
}

TEST(Rational, PowerHandlesNegativeExponents) {
  EXPECT_EQ(pow(Rational(2), 10).str(), "1024");
  EXPECT_EQ(pow(Rational::parse("2/3"), -2).str(), "9/4");
  EXPECT_EQ(pow(Rational(5), 0).str(), "1");
  EXPECT_THROW(pow(Rational(0), -1), DomainError);
}

TEST(ComplexRational, FieldOperations) {
  const ComplexRational i(Rational(0), Rational(1));
  EXPECT_EQ(i * i, ComplexRational(-1));
  const ComplexRational z(Rational(3), Rational(4));
  EXPECT_EQ(z.norm(), Rational(25));
  EXPECT_EQ(z * z.conj(), ComplexRational(25));
  EXPECT_EQ((z / z), ComplexRational(1));
  EXPECT_EQ((ComplexRational(1) / i), -i);
  EXPECT_THROW(z / ComplexRational(0), DomainError);
}

TEST(ComplexRational, DisplayString) {
  EXPECT_EQ(ComplexRational(Rational(3), Rational(-2)).str(), "3-2i");
  EXPECT_EQ(ComplexRational(Rational(0), Rational::parse("1/2")).str(), "1/2i");
  EXPECT_EQ(ComplexRational(Rational::parse("-3/2")).str(), "-3/2");
}
