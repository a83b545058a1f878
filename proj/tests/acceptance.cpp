// One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"
#include "urr/errors.hpp"
#include "urr/tasks.hpp"

using namespace urr;
using namespace urr::test;

namespace {

const std::string kProblems = URR_PROBLEMS_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed expectations for one criterion.
class Probe {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  Outcome outcome(std::string detail) const {
    if (failed_ == 0) return {true, std::move(detail)};
    std::ostringstream s;
    s << failed_ << " of " << checks_ << " checks failed:";
    for (const auto& f : failures_) s << " [" << f << "]";
    return {false, s.str()};
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Fraction frac(const RingPtr& r, const std::string& num, const std::string& den) {
  return {P(r, num), P(r, den)};
}

bool all_replay(const std::vector<CertRecord>& certs) {
  return std::all_of(certs.begin(), certs.end(), [](const CertRecord& c) { return check_record(c); });
}

// G and H agree as germs on X at p: each cross product lies in I(X)
// localized at p, with a replayed certificate.
bool germ_equal(const std::vector<Fraction>& g, const std::vector<Fraction>& h,
                const VarietyPresentation& x, const Point& p) {
  if (g.size() != h.size()) return false;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const Poly cross = g[j].num * h[j].den - h[j].num * g[j].den;
    if (cross.is_zero()) continue;
    const Membership m = member(cross, x.gens(), OrderSpec::local(x.ambient_dim()), p);
    if (!m.in || !check_certificate(*m.cert, x.gens())) return false;
  }
  return true;
}

std::vector<Fraction> flagship(const RingPtr& r) {
  return {frac(r, "y^2 - (2 - x)^2", "y^2 + (2 - x)^2"),
          frac(r, "2*y*(2 - x)", "y^2 + (2 - x)^2")};
}

Outcome circle_flagship() {
  Probe probe;
  const auto t0 = Clock::now();
  const Problem pb = load_problem(kProblems + "/circle_uniformize.problem");
  const VarietyPresentation& x = pb.variety("X");
  const Point x0 = pb.base_point();
  // The closed form lands on the unit circle; X is that circle moved by
  // (1, 0), so the retraction is the closed form moved back.
  auto hand = flagship(pb.ring);
  probe.expect(hand[0].den.evaluate(x0) == 4, "closed-form denominator is 4 at the point");
  hand[0].num += hand[0].den;
  for (std::uint64_t seed : {0u, 1u, 2u, 7u, 42u, 1234u}) {
    PipelineOptions o;
    o.frame.seed = seed;
    const RetractionResult res = uniformize(x, pb.map("i"), pb.map("r"), x0, std::nullopt, o);
    const std::string s = "seed " + std::to_string(seed);
    for (const auto& c : res.g.components) {
      probe.expect(c.den.evaluate(x0) != 0, s + ": denominator nonvanishing");
    }
    probe.expect(all_replay(res.identity_certs), s + ": G|X = id certificates replay");
    probe.expect(!res.identity_certs.empty(), s + ": identity certificates present");
    probe.expect(germ_equal(res.g.fractions(), hand, x, x0), s + ": germ equals closed form");
  }
  // The same data through localize_map with the unit circle as target; with
  // seed 7 the representative is the closed form itself.
  const Problem lm = load_problem(kProblems + "/circle.problem");
  const RationalMap& f = lm.map("F");
  PipelineOptions seven;
  seven.frame.seed = 7;
  const GermMap g = localize_map(lm.variety("X"), f.target, f, lm.base_point(), seven);
  const auto exact = flagship(lm.ring);
  for (std::size_t j = 0; j < 2; ++j) {
    probe.expect(g.components[j].num * exact[j].den == exact[j].num * g.components[j].den,
                 "localize_map coordinate " + std::to_string(j + 1) + " is the closed form");
  }
  const double secs = seconds_since(t0);
  probe.expect(secs < 30, "runtime under 30 s");
  return probe.outcome("6 seeds germ-equal to the closed form, localize_map exact, " +
                       std::to_string(secs) + " s");
}

Outcome line_fixture() {
  Probe probe;
  const auto t0 = Clock::now();
  const Problem pb = load_problem(kProblems + "/line.problem");
  const RationalMap& f = pb.map("F");
  const VarietyPresentation& x = pb.variety("X");
  const GermMap g = localize_map(x, f.target, f, pb.base_point());
  probe.expect(g.components[0].den.evaluate(pb.base_point()) != 0, "denominator nonvanishing");
  probe.expect(germ_equal(g.fractions(), {frac(pb.ring, "x + y", "1 + y")}, x, pb.base_point()),
               "G germ-equal to (y1 + y2)/(1 + y2)");
  probe.expect(all_replay(g.certs), "certificates replay");
  const double secs = seconds_since(t0);
  probe.expect(secs < 5, "runtime under 5 s");
  return probe.outcome("G = " + to_string(g.components[0].num) + " / " +
                       to_string(g.components[0].den) + ", " + std::to_string(secs) + " s");
}

Outcome short_circuit() {
  Probe probe;
  auto r = ring({"x", "y"});
  const auto line = VarietyPresentation::make(r, Ps(r, {"y"}), 1);
  const auto k1 = VarietyPresentation::affine(ring({"z"}));
  const RationalMap f{r, {frac(r, "x", "1 + x^2")}, k1};
  const GermMap g = localize_map(line, k1, f, pt({0, 0}));
  probe.expect(g.short_circuit, "x/(1+x^2) takes the short circuit");
  probe.expect(g.components[0].num == f.coords[0].num && g.components[0].den == f.coords[0].den,
               "x/(1+x^2) returned verbatim");
  const Problem pb = load_problem(kProblems + "/parabola.problem");
  const RetractionResult res =
      uniformize(pb.variety("X"), pb.map("i"), pb.map("r"), pb.base_point());
  probe.expect(res.g.short_circuit, "parabola takes the short circuit");
  for (std::size_t j = 0; j < 2; ++j) {
    probe.expect(res.g.components[j].num == res.composite[j].num &&
                     res.g.components[j].den == res.composite[j].den,
                 "parabola coordinate returned verbatim");
  }
  return probe.outcome("G = F verbatim on 2 fixtures");
}

struct RetractionFixture {
  std::string file;
  std::optional<Point> point;  // overrides the file's point
};

Outcome derivative_projection() {
  Probe probe;
  const std::vector<RetractionFixture> fixtures{
      {"circle_uniformize", std::nullopt}, {"unit_circle", std::nullopt},
      {"unit_circle", pt({0, 1})},         {"unit_circle", Point{Rat(3, 5), Rat(4, 5)}},
      {"parabola", std::nullopt},          {"parabola", pt({-2, 4})}};
  for (const auto& fx : fixtures) {
    const Problem pb = load_problem(kProblems + "/" + fx.file + ".problem");
    const Point x0 = fx.point.value_or(pb.base_point());
    const VarietyPresentation& x = pb.variety("X");
    const RetractionResult res = uniformize(x, pb.map("i"), pb.map("r"), x0);
    const Matrix dg = germ_derivative(res.g.components);
    probe.expect(dg * dg == dg, fx.file + ": DG^2 = DG");
    probe.expect(dg.rank() == x.dim(), fx.file + ": rank m");
    probe.expect(is_tangent_projection(dg, x, x0), fx.file + ": image is the tangent space");
    Point at;
    for (const auto& c : res.g.components) at.push_back(c.value());
    probe.expect(at == x0, fx.file + ": G(x0) = x0");
  }
  return probe.outcome(std::to_string(fixtures.size()) + " retraction fixtures");
}

Outcome certificate_audit() {
  Probe probe;
  std::vector<Bundle> bundles;
  TaskOptions o;
  o.seed = 7;
  for (const char* name : {"circle", "circle_uniformize", "unit_circle", "line", "parabola",
                           "litmus"}) {
    const Problem pb = load_problem(kProblems + "/" + name + ".problem");
    bundles.push_back(run_task(pb, pb.task, {}, o));
  }
  const Problem lit = load_problem(kProblems + "/litmus.problem");
  bundles.push_back(run_task(lit, "gb", {"K"}, o));
  Problem with_i = load_problem(kProblems + "/circle_uniformize.problem");
  with_i.ideals["I"] = Ps(with_i.ring, {"2*x"});
  bundles.push_back(run_task(with_i, "lift", {"X", "I"}, o));

  std::size_t total = 0, rejected = 0;
  std::uint64_t salt = 0;
  Gen g(5);
  for (const auto& b : bundles) {
    // Replay from the serialized form, as a third party would.
    const Bundle parsed = parse_bundle(serialize_bundle(b));
    const CheckSummary s = check_bundle(parsed);
    probe.expect(s.all_valid(), b.task + ": all certificates replay");
    for (const auto& rec : parsed.certificates) {
      ++total;
      CertRecord m = rec;
      m.cert = perturbed(rec.cert, salt = static_cast<std::uint64_t>(g.integer(0, 1 << 20)));
      const bool caught = !check_record(m);
      rejected += caught;
      probe.expect(caught, b.task + ": mutation of '" + rec.label + "' rejected");
    }
  }
  (void)salt;
  return probe.outcome(std::to_string(total) + " certificates replayed, " +
                       std::to_string(rejected) + "/" + std::to_string(total) +
                       " mutations rejected");
}

std::vector<std::string> sorted_basis(const std::vector<Poly>& gens, const OrderSpec& o) {
  const StdBasis b = std_basis(gens, o);
  std::vector<std::string> out;
  for (const auto& g : b.generators()) out.push_back(to_string(g));
  std::sort(out.begin(), out.end());
  return out;
}

Outcome engine_properties() {
  Probe probe;
  Gen g(2024);
  const std::vector<std::string> names{"x", "y", "z"};
  std::size_t oracle_runs = 0;
  for (int k = 0; k < 20; ++k) {
    const auto r = ring({names.begin(), names.begin() + g.integer(1, 3)});
    const std::size_t n = r->arity();
    std::vector<Poly> gens;
    for (long i = 0, c = g.integer(2, 3); i < c; ++i) {
      gens.push_back(g.nonzero_poly(r, static_cast<unsigned>(g.integer(1, 3)),
                                    static_cast<std::size_t>(g.integer(2, 3)), 3));
    }
    const std::string id = "ideal " + std::to_string(k);
    const auto base = sorted_basis(gens, OrderSpec::grevlex(n));
    for (int p = 0; p < 3; ++p) {
      std::shuffle(gens.begin(), gens.end(), g.engine());
      probe.expect(sorted_basis(gens, OrderSpec::grevlex(n)) == base, id + ": permutation");
    }
    for (const auto& o : {OrderSpec::grevlex(n), OrderSpec::lex(n), OrderSpec::local(n)}) {
      const StdBasis b = std_basis(gens, o);
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
          probe.expect(mora_weak_nf(spoly(b.generators()[i], b.generators()[j], o), b)
                           .remainder.is_zero(),
                       id + ": S-polynomial reduces to 0 under " + o.describe());
      if (o.has_local()) {
        const WeakNormalForm nf = mora_weak_nf(g.poly(r, 3, 3), b);
        probe.expect(nf.unit.evaluate(zero_point(n)) != 0, id + ": Mora unit at the center");
      }
    }
    Poly inside(r);
    for (const auto& gen : gens) inside += g.poly(r, 1, 2, 3) * gen;
    for (const Poly& f : {inside, g.nonzero_poly(r, 3, 3)}) {
      const Membership m = member(f, gens, OrderSpec::grevlex(n));
      unsigned bound = static_cast<unsigned>(std::max(f.total_degree(), 0)) + 2;
      if (m.in) {
        probe.expect(check_certificate(*m.cert, gens), id + ": membership certificate");
        for (const auto& c : m.cert->cofactors) {
          bound = std::max(bound, static_cast<unsigned>(c.poly.total_degree() +
                                                        gens[c.index].total_degree()));
        }
      }
      ++oracle_runs;
      probe.expect(oracle_global_member(f, gens, bound) == m.in, id + ": oracle agreement");
    }
  }
  // Localized at the origin, against the oracle with u(0) = 1.
  for (int k = 0; k < 15; ++k) {
    const auto r = ring({"x", "y"});
    std::vector<Poly> gens;
    for (int i = 0; i < 2; ++i) {
      const Poly h = g.nonzero_poly(r, 3, 3, 3);
      gens.push_back(h - Poly::constant(r, h.constant_term()));
    }
    Poly inside(r);
    for (const auto& gen : gens) inside += g.poly(r, 1, 2, 3) * gen;
    for (const Poly& f : {inside, g.nonzero_poly(r, 2, 2)}) {
      if (f.is_zero()) continue;
      const Membership m = member(f, gens, OrderSpec::local(2), pt({0, 0}));
      unsigned bound = static_cast<unsigned>(f.total_degree()) + 2;
      if (m.in) {
        probe.expect(check_certificate(*m.cert, gens), "local membership certificate");
        bound = std::max(bound, static_cast<unsigned>(m.cert->unit.total_degree() + f.total_degree()));
        for (const auto& c : m.cert->cofactors) {
          bound = std::max(bound, static_cast<unsigned>(c.poly.total_degree() +
                                                        gens[c.index].total_degree()));
        }
      }
      ++oracle_runs;
      probe.expect(oracle_local_member(f, gens, bound) == m.in, "local oracle agreement");
    }
  }
  return probe.outcome("20 random ideals, " + std::to_string(oracle_runs) +
                       " oracle comparisons");
}

Outcome split_identity() {
  Probe probe;
  Gen g(77);
  const std::vector<std::string> names{"a", "b", "c", "d"};
  for (int k = 0; k < 50; ++k) {
    const auto r = ring({names.begin(), names.begin() + g.integer(1, 4)});
    const std::size_t n = r->arity();
    const Poly p = g.poly(r, static_cast<unsigned>(g.integer(0, 6)), 7, 9);
    const SplitDecomposition s = split_difference(p);
    std::vector<Poly> shifted, w_zero = variables(s.ring);
    for (std::size_t i = 0; i < n; ++i) {
      shifted.push_back(Poly::variable(s.ring, i) + Poly::variable(s.ring, n + i));
      w_zero[n + i] = Poly(s.ring);
    }
    Poly rhs = s.base;
    for (std::size_t i = 0; i < n; ++i) rhs += Poly::variable(s.ring, n + i) * s.parts[i];
    probe.expect(p.compose(shifted) == rhs, "identity for " + to_string(p));
    for (std::size_t i = 0; i < n; ++i) {
      probe.expect(s.parts[i].compose(w_zero) == embed(p.derivative(i), s.ring),
                   "P_i(v, 0) = dP/dv_i for " + to_string(p));
    }
  }
  return probe.outcome("50 random polynomials in at most 4 variables of degree at most 6");
}

Outcome genericity_statistics() {
  Probe probe;
  struct Case {
    std::string name;
    RingPtr r;
    std::vector<std::string> x;
    std::vector<std::string> i;
  };
  auto r = ring({"x", "y"});
  const std::vector<Case> cases{{"circle", r, {"x^2 - 2*x + y^2"}, {"2*x"}},
                                {"line", r, {"y"}, {"x"}}};
  std::ostringstream detail;
  for (const auto& c : cases) {
    const auto x = VarietyPresentation::make(c.r, Ps(c.r, c.x), 1);
    const Ideal i(c.r, Ps(c.r, c.i));
    std::size_t green = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Matrix change = sample_change(2, 1, seed).change;
      const GenericityReport rep = verify_frame(x, i, pt({0, 0}), change);
      if (!rep.all_green()) continue;
      ++green;
      probe.expect(all_replay(rep.only_origin_certs), c.name + ": only-origin certificates replay");
    }
    probe.expect(green >= 90, c.name + ": " + std::to_string(green) + "/100 tries green");
    detail << c.name << " " << green << "/100 ";
  }
  return probe.outcome(detail.str() + "tries green");
}

Outcome local_litmus() {
  Probe probe;
  auto r = ring({"x", "y"});
  const auto j = Ps(r, {"x - x^2"});
  const Membership in = member(P(r, "x"), j, OrderSpec::local(2), pt({0, 0}));
  probe.expect(in.in, "x in (x - x^2) at 0");
  if (in.in) {
    probe.expect(check_certificate(*in.cert, j), "certificate replays");
    const Poly& u = in.cert->unit;
    probe.expect(u * (Rat(1) / u.constant_term()) == P(r, "1 - x"), "unit is 1 - x");
  }
  const Membership out = member(P(r, "x"), Ps(r, {"x^2", "x*y"}), OrderSpec::local(2), pt({0, 0}));
  probe.expect(!out.in, "x not in (x^2, x*y) at 0");
  return probe.outcome(in.in ? "unit " + to_string(in.cert->unit) + ", second case NotIn" : "");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"circle flagship retraction", circle_flagship},
      {"line fixture", line_fixture},
      {"short circuit keeps F", short_circuit},
      {"DG(x0) is the tangent projection", derivative_projection},
      {"certificate audit and mutation suite", certificate_audit},
      {"standard basis engine properties", engine_properties},
      {"split difference identity", split_identity},
      {"generic frame statistics", genericity_statistics},
      {"local ring litmus", local_litmus},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (k + 1) << " ("
              << criteria[k].first << "): " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
