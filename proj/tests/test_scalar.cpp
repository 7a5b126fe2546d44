#include <random>

#include "doctest.h"
#include "hopf/scalar.hpp"

using namespace hopf;

namespace {

Scalar random_scalar(const FieldSpec& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  switch (f.kind()) {
    case FieldSpec::Kind::Rationals: {
      int den = d(rng);
      if (den == 0) den = 7;
      return f.from_int(d(rng)) / f.from_int(den);
    }
    case FieldSpec::Kind::PrimeField:
      return f.from_int(d(rng));
    case FieldSpec::Kind::RationalFunctions: {
      auto poly = [&] {
        Scalar s = f.zero();
        for (std::size_t v = 0; v < f.vars().size(); ++v) s += f.from_int(d(rng)) * f.variable(v).pow(rng() % 3);
        return s + f.from_int(d(rng));
      };
      Scalar den = poly();
      if (den.is_zero()) den = f.one();
      return poly() / den;
    }
  }
  return f.zero();
}

}  // namespace

TEST_CASE("scalar arithmetic examples") {
  auto q = FieldSpec::rationals();
  CHECK(q.parse_scalar("1/2") + q.parse_scalar("1/3") == q.parse_scalar("5/6"));
  auto f3 = FieldSpec::prime(3);
  CHECK(f3.from_int(2).inv() == f3.from_int(2));
  CHECK(f3.parse_scalar("5") == f3.from_int(2));
  auto r = FieldSpec::rational_functions(3, {"X1", "X2", "X3"});
  Scalar x1 = r.variable(0), x2 = r.variable(1), x3 = r.variable(2);
  CHECK((x1 / x2) * (x2 / x1) == r.one());
  CHECK(x1 / x2 == (x1 * x3) / (x2 * x3));
  CHECK(r.zero() / x1 == r.zero());
  CHECK(x1 != x2);
  CHECK(q.parse_scalar("-3/4") == q.from_int(-3) / q.from_int(4));
  auto r1 = FieldSpec::rational_functions(3, {"X1"});
  Scalar p = r1.parse_scalar("2*X1^2+1");
  CHECK(p == r1.from_int(2) * r1.variable(0).pow(2) + r1.one());
}

TEST_CASE("scalar errors") {
  auto f3 = FieldSpec::prime(3);
  auto f5 = FieldSpec::prime(5);
  CHECK_THROWS_AS(f3.zero().inv(), Error);
  try {
    (void)(f3.one() + f5.one());
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMismatch);
  }
  CHECK_THROWS_AS(FieldSpec::prime(2), Error);
  CHECK_THROWS_AS(FieldSpec::prime(9), Error);
  CHECK_THROWS_AS(FieldSpec::rational_functions(3, {"X", "X"}), Error);
  auto r = FieldSpec::rational_functions(3, {"X1"});
  try {
    r.parse_scalar("X2+1");
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMismatch);
  }
  try {
    FieldSpec::rationals().parse_scalar("1/+");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("field flag grammar") {
  CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("f5") == FieldSpec::prime(5));
  auto r = FieldSpec::parse("f3(X1,X2)");
  CHECK(r.kind() == FieldSpec::Kind::RationalFunctions);
  CHECK(r.vars().size() == 2);
  CHECK(FieldSpec::parse(r.to_string()) == r);
  CHECK_THROWS_AS(FieldSpec::parse("f2"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("z"), Error);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(3), FieldSpec::prime(5),
                        FieldSpec::rational_functions(3, {"X1", "X2"})}) {
    CAPTURE(f.to_string());
    for (int t = 0; t < 60; ++t) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == f.zero());
      if (!a.is_zero()) CHECK(a * a.inv() == f.one());
    }
  }
}

TEST_CASE("rational function equality is a congruence") {
  std::mt19937 rng(11);
  auto f = FieldSpec::rational_functions(5, {"X1", "X2"});
  for (int t = 0; t < 40; ++t) {
    Scalar a = random_scalar(f, rng), c = random_scalar(f, rng);
    Scalar m = random_scalar(f, rng);
    if (m.is_zero()) m = f.variable(0);
    Scalar b = (a * m) / m;  // same value, different representation
    CHECK(a == b);
    CHECK(b == a);
    CHECK(a + c == b + c);
    CHECK(a * c == b * c);
  }
}

TEST_CASE("parse inverts format") {
  std::mt19937 rng(3);
  for (const auto& f : {FieldSpec::rationals(), FieldSpec::prime(7), FieldSpec::rational_functions(3, {"X1", "X2"})}) {
    for (int t = 0; t < 50; ++t) {
      Scalar a = random_scalar(f, rng);
      CAPTURE(f.format(a));
      CHECK(f.parse_scalar(f.format(a)) == a);
    }
  }
}

TEST_CASE("polynomial degree and valuation") {
  auto f = FieldSpec::rational_functions(3, {"X1", "X2"});
  Scalar s = f.parse_scalar("(X1^3*X2+X1)/(X1*X2^2)");
  const auto& rf = std::get<RationalFunction>(s.rep());
  CHECK(degree_valuation(rf, 0) == 2);
  CHECK(degree_valuation(rf, 1) == -1);
  Polynomial z(3, 2);
  CHECK(z.degree_in(0) == kNegInfDegree);
}
