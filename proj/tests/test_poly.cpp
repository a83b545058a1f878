#include <doctest.h>

#include "support.hpp"
#include "urr/errors.hpp"

using namespace urr;
using namespace urr::test;

TEST_SUITE("poly") {

TEST_CASE("parse expands and normalizes") {
  auto r = ring({"x", "y"});
  const Poly x = Poly::variable(r, 0);
  const Poly y = Poly::variable(r, 1);
  const Poly one = Poly::constant(r, 1);
  CHECK(P(r, "(1+x)^2 - y^2") == one + Rat(2) * x + x * x - y * y);
  CHECK(P(r, "0").is_zero());
  CHECK(P(r, "x*y - 1") == x * y - one);
  CHECK(P(r, "3/6*x") == Rat(1, 2) * x);
  CHECK(P(r, "-(x - y)") == y - x);
}

TEST_CASE("parse reports the column of the problem") {
  auto r = ring({"x", "y"});
  try {
    P(r, "x + *y");
    FAIL("no exception");
  } catch (const SyntaxError& e) {
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(P(r, "x / y"), SyntaxError);
  CHECK_THROWS_AS(P(r, "(x + y"), SyntaxError);
  try {
    P(r, "x + z");
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVariable);
  }
}

TEST_CASE("evaluate") {
  auto r = ring({"x", "y"});
  CHECK(P(r, "x^2 + y^2 - 1").evaluate(pt({-1, 0})) == 0);
  CHECK(P(r, "x + y").evaluate(pt({1, 2})) == 3);
  CHECK(P(r, "2 - x").evaluate(pt({0, 0})) == 2);
}

TEST_CASE("translate") {
  auto r = ring({"x", "y"});
  CHECK(translate(P(r, "x^2 + y^2 - 1"), pt({-1, 0})) == P(r, "x^2 - 2*x + y^2"));
  CHECK(translate(Poly(r), pt({3, 4})).is_zero());
  CHECK(translate(P(r, "7/2"), pt({3, 4})) == P(r, "7/2"));
}

TEST_CASE("linear change") {
  auto r = ring({"x", "y"});
  CHECK(linear_change(P(r, "x"), Matrix::identity(2)) == P(r, "x"));
  CHECK(linear_change(P(r, "x"), Matrix::from_rows({{0, 1}, {1, 0}})) == P(r, "y"));
  // Substitution oracle: x -> x + y.
  const Poly f = P(r, "x^2");
  const std::vector<Poly> images{P(r, "x + y"), P(r, "y")};
  CHECK(linear_change(f, Matrix::from_rows({{1, 1}, {0, 1}})) == f.compose(images));
  CHECK(linear_change(f, Matrix::from_rows({{1, 1}, {0, 1}})) == P(r, "x^2 + 2*x*y + y^2"));
  CHECK_THROWS_AS(linear_change(f, Matrix::from_rows({{1, 1}, {1, 1}})), Error);
}

TEST_CASE("monomial orders") {
  auto r = ring({"x", "y"});
  const auto lm = [&](const char* t) { return P(r, t).terms().front().mono; };
  CHECK(OrderSpec::grevlex(2).compare(lm("x^2"), lm("x*y")) > 0);
  CHECK(OrderSpec::local(2).compare(lm("1"), lm("x")) > 0);
  CHECK(OrderSpec::local(2).compare(lm("x"), lm("x^2")) > 0);
  CHECK(OrderSpec::lex(2).compare(lm("x"), lm("y^5")) > 0);
  auto tr = ring({"t", "y"});
  const Monomial t = P(tr, "t").terms().front().mono;
  const Monomial y3 = P(tr, "y^3").terms().front().mono;
  const auto blocks = OrderSpec::two_blocks(2, 1, BlockKind::DegRevLexGlobal,
                                            BlockKind::DegRevLexGlobal);
  CHECK(blocks.compare(t, y3) > 0);
  CHECK(OrderSpec::parse("dp(1),ds(1)", 2).blocks().size() == 2);
  CHECK_THROWS(OrderSpec::parse("dp(3)", 2));
}

TEST_CASE("canonical text round trips") {
  Gen g(11);
  for (int k = 0; k < 60; ++k) {
    auto r = ring({"x", "y", "z"});
    const Poly f = g.poly(r, 5, 6, 9);
    CHECK(P(r, to_string(f)) == f);
    CHECK(P(r, to_string(f, OrderSpec::lex(3))) == f);
  }
}

TEST_CASE("ring laws on random polynomials") {
  Gen g(12);
  auto r = ring({"x", "y", "z"});
  for (int k = 0; k < 40; ++k) {
    const Poly a = g.poly(r, 3, 4), b = g.poly(r, 3, 4), c = g.poly(r, 3, 4);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    const Point p{Rat(g.integer(-3, 3)), Rat(1, 2), Rat(g.integer(-3, 3))};
    CHECK((a * b).evaluate(p) == a.evaluate(p) * b.evaluate(p));
    // Translating there and back is the identity.
    CHECK(translate(translate(a, p), negated(p)) == a);
  }
}

TEST_CASE("derivatives and composition") {
  auto r = ring({"x", "y"});
  const Poly f = P(r, "x^3*y - 2*x*y^2 + 5");
  CHECK(f.derivative(0) == P(r, "3*x^2*y - 2*y^2"));
  CHECK(f.derivative(1) == P(r, "x^3 - 4*x*y"));
  CHECK(f.truncated(3) == P(r, "5"));
  CHECK(f.pow(0) == P(r, "1"));
}

TEST_CASE("degree cap is enforced") {
  auto r = RingCtx::make({"x"}, 10);
  const Poly x = Poly::variable(r, 0);
  CHECK_NOTHROW(x.pow(10));
  try {
    x.pow(11);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LimitExceeded);
  }
}

TEST_CASE("exact linear algebra") {
  const Matrix a = Matrix::from_rows({{2, 1}, {1, 1}});
  CHECK(a * a.inverse() == Matrix::identity(2));
  CHECK(a.determinant() == 1);
  const Matrix s = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  CHECK(s.rank() == 1);
  CHECK(s.kernel().size() == 2);
  auto sol = solve_affine(s, {Rat(1), Rat(2)});
  REQUIRE(sol);
  CHECK(sol->particular == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
  CHECK_FALSE(solve_affine(s, {Rat(1), Rat(3)}));
}

}
