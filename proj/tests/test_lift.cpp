#include <doctest.h>

#include "support.hpp"
#include "urr/lift.hpp"

using namespace urr;
using namespace urr::test;

namespace {

SigmaData sigma_with(const VarietyPresentation& x, const Ideal& i, const Matrix& change) {
  FrameOptions o;
  o.change = change;
  return build_sigma(find_frame(x, i, zero_point(2), o));
}

SigmaData circle_sigma(const Matrix& change = Matrix::identity(2)) {
  auto r = ring({"x", "y"});
  auto x = VarietyPresentation::make(r, Ps(r, {"x^2 - 2*x + y^2"}), 1);
  return sigma_with(x, Ideal(r, Ps(r, {"2*x"})), change);
}

SigmaData line_sigma() {
  auto r = ring({"x", "y"});
  auto x = VarietyPresentation::make(r, Ps(r, {"y"}), 1);
  return sigma_with(x, Ideal(r, Ps(r, {"x"})), Matrix::from_rows({{0, 1}, {1, 0}}));
}

bool same_fraction(const Poly& a, const Poly& b, const Poly& c, const Poly& d) {
  return a * d == b * c;
}

}  // namespace

TEST_SUITE("lift") {

TEST_CASE("monomials by degree") {
  const auto m = monomials_up_to(2, 2);
  CHECK(m.size() == 6);
  CHECK(m.front().is_one());
  for (std::size_t k = 1; k < m.size(); ++k) CHECK(m[k - 1].degree() <= m[k].degree());
}

TEST_CASE("jet systems contain the hand solutions") {
  const SigmaData line = line_sigma();
  const RingPtr& r = line.source_ring();
  JetSolver ls(line);
  CHECK(ls.solve(1, 2, 3).contains({P(r, "x*y"), P(r, "1")}));

  const SigmaData circle = circle_sigma();
  JetSolver cs(circle);
  const JetSpace s = cs.solve(0, 2, 4);
  REQUIRE(s.consistent());
  CHECK(s.contains({P(circle.source_ring(), "1/2*y^2"), P(circle.source_ring(), "1 - 1/2*x")}));
  // The untouched coordinate lifts to itself.
  CHECK(cs.solve(1, 1, 2).contains({P(circle.source_ring(), "y"), P(circle.source_ring(), "1")}));
}

TEST_CASE("certification is exact membership") {
  const SigmaData circle = circle_sigma();
  const RingPtr& r = circle.source_ring();
  JetSolver cs(circle);
  auto cert = cs.certify(0, {P(r, "1/2*y^2"), P(r, "1 - 1/2*x")});
  REQUIRE(cert);
  CHECK(check_certificate(*cert, circle.h.gens()));
  CHECK(cert->unit.evaluate(circle.center) != 0);

  const SigmaData line = line_sigma();
  JetSolver ls(line);
  auto lcert = ls.certify(1, {P(line.source_ring(), "x*y"), P(line.source_ring(), "1")});
  REQUIRE(lcert);
  CHECK(check_certificate(*lcert, line.h.gens()));

  // x - y^2/2 lies in H + m^4 (x = (x^2 + y^2)/2 on X) but not in H.
  const LiftCandidate spurious{P(r, "1/2*y^2"), P(r, "1")};
  CHECK(cs.solve(0, 2, 4).contains(spurious));
  CHECK_FALSE(cs.solve(0, 2, 5).contains(spurious));
  CHECK_FALSE(cs.certify(0, spurious));
}

TEST_CASE("truncated normal forms kill H and high degrees") {
  const SigmaData circle = circle_sigma();
  JetSolver cs(circle);
  const RingPtr& rr = circle.ring();
  CHECK(cs.truncated_nf(P(rr, "x^2 - 2*x + y^2"), 6).is_zero());
  CHECK(cs.truncated_nf(P(rr, "x*t1"), 6).is_zero());
  CHECK(cs.truncated_nf(P(rr, "y^3"), 3).is_zero());
  CHECK_FALSE(cs.truncated_nf(P(rr, "y"), 3).is_zero());
}

TEST_CASE("property: jet spaces shrink as the order grows") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const SigmaData s = circle_sigma(sample_change(2, 1, seed).change);
    if (!s.frame.report.all_green()) continue;
    JetSolver js(s);
    for (std::size_t i = 0; i < 2; ++i) {
      for (unsigned d = 1; d <= 2; ++d) {
        for (unsigned n = d + 1; n <= 5; ++n) {
          const JetSpace hi = js.solve(i, d, n + 1);
          const JetSpace lo = js.solve(i, d, n);
          if (!hi.consistent()) continue;
          CHECK(lo.consistent());
          for (const auto& c : hi.candidates()) {
            CHECK(lo.contains(c));
            CHECK(hi.contains(c));
            CHECK(js.solve(i, d + 1, n + 1).contains(c));
          }
        }
      }
    }
  }
}

TEST_CASE("solve_psi on the fixtures") {
  const SigmaData circle = circle_sigma();
  const LiftResult c = solve_psi(circle);
  const RingPtr& r = circle.source_ring();
  REQUIRE(c.psi.size() == 2);
  CHECK(same_fraction(c.psi[0].num, c.psi[0].den, P(r, "y^2"), P(r, "2 - x")));
  CHECK(same_fraction(c.psi[1].num, c.psi[1].den, P(r, "y"), P(r, "1")));
  for (const auto& rec : c.certs) CHECK(check_record(rec));
  CHECK(c.degree_used == 2);

  // The lift is not unique; on the line any psi agreeing with (x, x*y) on X
  // will do.
  const SigmaData line = line_sigma();
  const LiftResult l = solve_psi(line);
  const RingPtr& lr = line.source_ring();
  const Ideal on_x(lr, Ps(lr, {"y"}));
  CHECK(on_x.contains(l.psi[0].num - P(lr, "x") * l.psi[0].den));
  CHECK(on_x.contains(l.psi[1].num - P(lr, "x*y") * l.psi[1].den));
  for (const auto& rec : l.certs) CHECK(check_record(rec));
  for (const auto& p : l.psi) CHECK(p.den.evaluate(zero_point(2)) == 1);
}

TEST_CASE("lift limits are reported") {
  const SigmaData circle = circle_sigma();
  LiftOptions tiny;
  tiny.max_degree = 1;
  tiny.max_order = 2;
  CHECK_THROWS_AS(solve_psi(circle, tiny), Error);
}

TEST_CASE("identity sigma lifts to the identity") {
  auto r = ring({"x", "y"});
  const auto plane = VarietyPresentation::affine(r);
  const SigmaData s = build_sigma(find_frame(plane, Ideal(r, Ps(r, {"x"})), zero_point(2)));
  const LiftResult l = solve_psi(s);
  CHECK(same_fraction(l.psi[0].num, l.psi[0].den, P(r, "x"), P(r, "1")));
  CHECK(same_fraction(l.psi[1].num, l.psi[1].den, P(r, "y"), P(r, "1")));
}

}
