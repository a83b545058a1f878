#include <doctest.h>

#include "support.hpp"
#include "urr/errors.hpp"
#include "urr/variety.hpp"

using namespace urr;
using namespace urr::test;

namespace {

VarietyPresentation var(const RingPtr& r, const std::vector<std::string>& gens, std::size_t dim) {
  return VarietyPresentation::make(r, Ps(r, gens), dim);
}

}  // namespace

TEST_SUITE("variety") {

TEST_CASE("presentations check their dimension") {
  auto r = ring({"x", "y"});
  CHECK(var(r, {"x^2 + y^2 - 1"}, 1).dim() == 1);
  CHECK_THROWS_AS(var(r, {"x^2 + y^2 - 1"}, 0), Error);
  CHECK(VarietyPresentation::affine(r).dim() == 2);
  CHECK(var(r, {"x^2 + y^2 - 1"}, 1).contains(pt({0, -1})));
  CHECK_FALSE(var(r, {"x^2 + y^2 - 1"}, 1).contains(pt({1, 1})));
}

TEST_CASE("Jacobian rank and smoothness") {
  auto r = ring({"x", "y"});
  const auto circle = var(r, {"x^2 + y^2 - 1"}, 1);
  const auto node = var(r, {"y^2 - x^2 - x^3"}, 1);
  const auto line = var(r, {"y"}, 1);
  CHECK(jacobian_at(circle.gens(), pt({-1, 0})) == Matrix::from_rows({{-2, 0}}));
  CHECK(jacobian_rank_at(circle, pt({-1, 0})) == 1);
  CHECK(jacobian_rank_at(node, pt({0, 0})) == 0);
  CHECK(jacobian_rank_at(line, pt({5, 0})) == 1);
  CHECK(smooth_at(circle, pt({-1, 0})));
  CHECK_FALSE(smooth_at(node, pt({0, 0})));
  CHECK(smooth_at(node, pt({-1, 0})));
  CHECK(jacobian_at(node.gens(), pt({-1, 0})) == Matrix::from_rows({{-1, 0}}));
  try {
    smooth_at(circle, pt({0, 0}));
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PointNotOnVariety);
  }
}

TEST_CASE("tangent spaces") {
  auto r = ring({"x", "y"});
  CHECK(tangent_space(var(r, {"x^2 + y^2 - 1"}, 1), pt({-1, 0})) ==
        std::vector<Point>{pt({0, 1})});
  CHECK(tangent_space(var(r, {"y^2 - x^2 - x^3"}, 1), pt({0, 0})).size() == 2);
  CHECK(tangent_space(var(r, {"y"}, 1), pt({0, 0})) == std::vector<Point>{pt({1, 0})});
}

TEST_CASE("regularity on X") {
  auto r = ring({"x", "y"});
  const auto circle = var(r, {"x^2 + y^2 - 1"}, 1);
  auto reg = regular_on_X_at(P(r, "(1+x)^2 - y^2"), P(r, "(1+x)^2 + y^2"), circle, pt({-1, 0}));
  REQUIRE(reg.verdict == Verdict::Regular);
  REQUIRE(reg.rep);
  REQUIRE(reg.cert);
  CHECK(check_record(*reg.cert));
  CHECK(reg.rep->value() == -1);
  // The germ is x on the circle: rep.num - x * rep.den vanishes on X.
  CHECK(circle.ideal().contains(reg.rep->num - P(r, "x") * reg.rep->den));
  // Hand identity P - x*Q = (1 + x)(1 - x^2 - y^2).
  CHECK(P(r, "(1+x)^2 - y^2") - P(r, "x") * P(r, "(1+x)^2 + y^2") ==
        P(r, "(1 + x)*(1 - x^2 - y^2)"));

  const auto line = var(r, {"y"}, 1);
  auto lreg = regular_on_X_at(P(r, "x^2 + y"), P(r, "x + y"), line, pt({0, 0}));
  REQUIRE(lreg.verdict == Verdict::Regular);
  CHECK(check_record(*lreg.cert));
  CHECK(line.ideal().contains(lreg.rep->num - P(r, "x") * lreg.rep->den));

  auto pole = regular_on_X_at(P(r, "1"), P(r, "x"), line, pt({0, 0}));
  CHECK(pole.verdict == Verdict::NotRegular);
  CHECK_FALSE(pole.rep);

  // Denominator not vanishing at the point: regular with a trivial witness.
  auto easy = regular_on_X_at(P(r, "x"), P(r, "1 + x^2"), line, pt({0, 0}));
  CHECK(easy.verdict == Verdict::Regular);
}

TEST_CASE("undetermined when limits run out") {
  auto r = ring({"x", "y"});
  EngineLimits tight;
  tight.max_reduction_steps = 1;
  tight.max_pairs = 1;
  auto reg = regular_on_X_at(P(r, "(1+x)^2 - y^2"), P(r, "(1+x)^2 + y^2"),
                             var(r, {"x^2 + y^2 - 1"}, 1), pt({-1, 0}), tight);
  CHECK(reg.verdict == Verdict::Undetermined);
  CHECK_FALSE(reg.reason.empty());
}

TEST_CASE("map equality on X") {
  auto r = ring({"x", "y"});
  const auto circle = var(r, {"x^2 - 2*x + y^2"}, 1);
  const std::vector<Fraction> f{{P(r, "x^2 - y^2"), P(r, "x^2 + y^2")},
                                {P(r, "2*x*y"), P(r, "x^2 + y^2")}};
  CHECK(maps_equal_on_X(f, f, circle).equal);
  const std::vector<Fraction> g{{P(r, "y^2 - (2 - x)^2"), P(r, "y^2 + (2 - x)^2")},
                                {P(r, "2*y*(2 - x)"), P(r, "y^2 + (2 - x)^2")}};
  auto eq = maps_equal_on_X(f, g, circle);
  REQUIRE(eq.equal);
  REQUIRE(eq.certs.size() == 2);
  for (const auto& c : eq.certs) CHECK(check_record(c));

  const auto line = var(r, {"y"}, 1);
  auto ne = maps_equal_on_X({Fraction::of(P(r, "x"))}, {Fraction::of(P(r, "y"))}, line);
  CHECK_FALSE(ne.equal);
  CHECK(ne.first_difference == 0u);
}

TEST_CASE("maps must be defined on X") {
  auto r = ring({"x", "y"});
  const auto line = var(r, {"y"}, 1);
  RationalMap bad{r, {{P(r, "x"), P(r, "y")}}, VarietyPresentation::affine(ring({"z"}))};
  CHECK_THROWS_AS(require_defined_on(bad, line), Error);
  CHECK_THROWS_AS(LocalFrac::make(P(r, "1"), P(r, "x"), pt({0, 0})), Error);
}

}
