#include <random>

#include "doctest.h"
#include "cmlocus/errors.hpp"
#include "test_util.hpp"

using namespace cmlocus;
using namespace cmlocus::testing;

TEST_CASE("field arithmetic is canonical") {
  auto half = FieldElement::rational(mpq_class(1, 2));
  auto third = FieldElement::rational(mpq_class(1, 3));
  CHECK((half + third).to_string() == "5/6");
  CHECK(FieldElement::rational(mpq_class(2, -4)).to_string() == "-1/2");
  CHECK(FieldElement::rational(mpq_class(2, -4)) == FieldElement::rational(mpq_class(-1, 2)));

  auto three = FieldElement::residue(3, 7);
  CHECK(three.inverse().to_string() == "5");
  CHECK((three * three.inverse()).is_one());
  CHECK(FieldElement::residue(-1, 7).to_string() == "6");
  CHECK((-FieldElement::residue(0, 7)).is_zero());
  CHECK(FieldElement::from_rational(mpq_class(1, 2), Field::prime(7)).to_string() == "4");
}

TEST_CASE("field errors") {
  CHECK_THROWS_AS(FieldElement::rational(0).inverse(), Error);
  try {
    (void)FieldElement::residue(0, 5).inverse();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  try {
    (void)(FieldElement::residue(1, 5) + FieldElement::rational(1));
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
  CHECK_THROWS_AS(FieldElement::residue(1, 5) * FieldElement::residue(1, 7), Error);
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK_THROWS_AS(FieldElement::from_rational(mpq_class(1, 7), Field::prime(7)), Error);
}

TEST_CASE("monomial orders") {
  auto grevlex = MonomialOrder::grevlex();
  auto lex = MonomialOrder::lex();
  // x > y > z
  Monomial y2{0, 2, 0}, xz{1, 0, 1};
  CHECK(grevlex.compare(y2, xz) > 0);
  CHECK(lex.compare(Monomial{1, 0}, Monomial{0, 3}) > 0);
  CHECK(grevlex.compare(xz, xz) == 0);
  CHECK(lex.compare(xz, xz) == 0);

  auto r = qq({"x", "y", "z"});
  CHECK_THROWS_AS(compare_monomials(Monomial{1, 0}, Monomial{1, 0, 0}, *r), Error);

  // Elimination order: anything with the first block beats everything else.
  auto block = MonomialOrder::elimination(1);
  CHECK(block.compare(Monomial{1, 0, 0}, Monomial{0, 5, 5}) > 0);
  CHECK(block.compare(Monomial{0, 2, 0}, Monomial{0, 1, 0}) > 0);
}

TEST_CASE("monomial order axioms on random monomials") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> e(0, 3);
  auto random_monomial = [&] { return Monomial{e(rng), e(rng), e(rng), e(rng)}; };
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(2)}) {
    Monomial one(4);
    for (int trial = 0; trial < 300; ++trial) {
      auto a = random_monomial(), b = random_monomial(), c = random_monomial();
      auto ab = order.compare(a, b);
      CHECK((ab == 0) == (a == b));                          // totality / antisymmetry
      CHECK(order.compare(b, a) == (0 <=> ab));                // consistency
      CHECK(order.compare(a * c, b * c) == ab);               // multiplicativity
      CHECK(order.compare(a, one) >= 0);                      // 1 is minimal
      if (ab > 0 && order.compare(b, c) > 0) CHECK(order.compare(a, c) > 0);  // transitivity
    }
  }
}

TEST_CASE("polynomial arithmetic examples") {
  auto r = qq({"x", "y"});
  CHECK((poly(r, "x + y") + poly(r, "-x")) == poly(r, "y"));
  CHECK((poly(r, "x + y") + poly(r, "-x")).size() == 1);
  CHECK((poly(r, "x + y") * poly(r, "x - y")).to_string() == "x^2 - y^2");
  CHECK((Polynomial(r) * poly(r, "x^3 + 2*y")).is_zero());
  CHECK(Polynomial(r).degree() == -1);
  CHECK(poly(r, "x^2*y + y").degree() == 3);
  auto other = qq({"x", "y", "z"});
  try {
    (void)(poly(r, "x") + poly(other, "x"));
    FAIL("expected ring mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RingMismatch);
  }
}

TEST_CASE("parser") {
  auto r = qq({"x", "y", "z", "w"});
  auto f = poly(r, "x*z + y*w");
  CHECK(f.size() == 2);
  CHECK(f.to_string() == "x*z + y*w");
  CHECK(poly(r, "xz + yw") == f);

  auto g = poly(r, "-3/2*x^2");
  REQUIRE(g.size() == 1);
  CHECK(g.leading_coeff().to_string() == "-3/2");
  CHECK(g.to_string() == "-3/2*x^2");

  CHECK(poly(r, "(x+y)^2") == poly(r, "x^2 + 2*x*y + y^2"));
  CHECK(poly(r, "2x y") == poly(r, "2*x*y"));
  CHECK(poly(r, "x/2") == poly(r, "1/2*x"));
  CHECK(poly(r, "--x") == poly(r, "x"));
  CHECK(poly(r, "0").is_zero());

  auto rxy = qq({"x", "y"});
  try {
    (void)poly(rxy, "x*q");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::UnknownVariable);
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(poly(rxy, "x^-1"), ParseError);
  CHECK_THROWS_AS(poly(rxy, "x^y"), ParseError);
  CHECK_THROWS_AS(poly(rxy, "x/y"), ParseError);
  CHECK_THROWS_AS(poly(rxy, "x/0"), ParseError);
  CHECK_THROWS_AS(poly(rxy, "(x + y"), ParseError);
  CHECK_THROWS_AS(poly(rxy, "x + "), ParseError);
  CHECK_THROWS_AS(poly(rxy, "x $ y"), ParseError);
  try {
    (void)poly(rxy, "x + * y");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("prime field parsing and printing") {
  auto r = Ring::make(Field::prime(7), {"x", "y"});
  CHECK(poly(r, "8*x - y").to_string() == "x + 6*y");
  CHECK(poly(r, "x/3") == poly(r, "5*x"));
  CHECK(poly(r, "7*x").is_zero());
}

TEST_CASE("ring laws and print/parse round trip on random polynomials") {
  std::mt19937 rng(2024);
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    auto r = qq({"x", "y", "z"}, order);
    for (int trial = 0; trial < 150; ++trial) {
      auto f = random_polynomial(r, rng, 3, 4);
      auto g = random_polynomial(r, rng, 3, 4);
      auto h = random_polynomial(r, rng, 2, 3);
      CHECK(parse_polynomial(f.to_string(), r) == f);
      CHECK((f + g) == (g + f));
      CHECK((f * g) == (g * f));
      CHECK(((f + g) + h) == (f + (g + h)));
      CHECK(((f * g) * h) == (f * (g * h)));
      CHECK((f * (g + h)) == (f * g + f * h));
      CHECK((f + (-f)).is_zero());
      CHECK((f - g) == (f + (-g)));
      // Canonical form invariants.
      auto fg = f * g;
      const auto& t = fg.terms();
      for (std::size_t i = 1; i < t.size(); ++i) CHECK(r->order().compare(t[i - 1].monomial, t[i].monomial) > 0);
      for (const auto& term : t) CHECK(!term.coeff.is_zero());
    }
  }
}
