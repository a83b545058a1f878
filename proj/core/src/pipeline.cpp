#include "urr/pipeline.hpp"

#include <algorithm>

#include "urr/errors.hpp"
#include "urr/parse.hpp"

namespace urr {

std::vector<Fraction> GermMap::fractions() const {
  std::vector<Fraction> out;
  for (const auto& c : components) out.push_back(Fraction{c.num, c.den});
  return out;
}

namespace {

std::vector<Poly> distinct_denominators(const RationalMap& f) {
  std::vector<Poly> out;
  for (const auto& c : f.coords) {
    if (std::find(out.begin(), out.end(), c.den) == out.end()) out.push_back(c.den);
  }
  return out;
}

Poly product_of(const RingPtr& ring, const std::vector<Poly>& factors) {
  Poly out = Poly::constant(ring, 1);
  for (const auto& f : factors) out *= f;
  return out;
}

std::vector<bool> containment(const VarietyPresentation& y, const std::vector<Fraction>& g) {
  std::vector<bool> out;
  for (const auto& gen : y.gens()) out.push_back(compose_fraction(gen, g).num.is_zero());
  return out;
}

Poly reduce_modulo(const Poly& f, const VarietyPresentation& x, const EngineLimits& limits) {
  if (x.gens().empty()) return f;
  const StdBasis& b = x.ideal().basis(OrderSpec::grevlex(x.ambient_dim()), limits);
  return mora_weak_nf(f, b, limits).remainder;
}

void append(std::vector<CertRecord>& to, std::vector<CertRecord> from) {
  for (auto& r : from) to.push_back(std::move(r));
}

}  // namespace

GermMap localize_map(const VarietyPresentation& x, const VarietyPresentation& y,
                     const RationalMap& f, const Point& x0, const PipelineOptions& options) {
  const EngineLimits& limits = options.limits;
  const RingPtr& ring = x.ring();
  require_same_ring(*f.source, *ring);
  if (f.coords.size() != y.ambient_dim()) fail(ErrorKind::ArityMismatch, "map target arity");
  if (!x.contains(x0)) fail(ErrorKind::PointNotOnVariety, "base point is not on X");
  if (!smooth_at(x, x0)) fail(ErrorKind::NotSmoothAtPoint, "X is singular at the base point");
  require_defined_on(f, x);

  GermMap out{{}, y, false, std::nullopt, {}, {}};
  std::vector<LocalFrac> reps;
  for (std::size_t j = 0; j < f.coords.size(); ++j) {
    Regularity reg = regular_on_X_at(f.coords[j].num, f.coords[j].den, x, x0, limits);
    if (reg.verdict == Verdict::NotRegular) {
      fail(ErrorKind::NotRegularAtPoint,
           "coordinate " + std::to_string(j + 1) + " is not regular on X at the point");
    }
    if (reg.verdict == Verdict::Undetermined) {
      fail(ErrorKind::LimitExceeded, "regularity of coordinate " + std::to_string(j + 1) +
                                         " undetermined: " + reg.reason);
    }
    reps.push_back(*reg.rep);
    out.certs.push_back(std::move(*reg.cert));
  }

  const std::vector<Poly> dens = distinct_denominators(f);
  const Poly q_full = product_of(ring, dens);
  if (q_full.evaluate(x0) != 0) {
    out.short_circuit = true;
    for (const auto& c : f.coords) out.components.push_back(LocalFrac::make(c.num, c.den, x0));
  } else {
    const Poly q = reduce_modulo(q_full, x, limits);
    SigmaFrame frame = find_frame(x, Ideal(ring, {q}), x0, options.frame, limits);
    SigmaData sigma = build_sigma(frame, limits);
    LiftResult lift = solve_psi(sigma, options.lift, limits);
    append(out.certs, frame.report.only_origin_certs);
    append(out.certs, lift.certs);

    const std::size_t n = x.ambient_dim();
    const RingPtr& rr = sigma.ring();
    std::vector<Poly> pi;
    std::vector<Fraction> phi;
    std::vector<Fraction> psi;
    for (std::size_t i = 0; i < n; ++i) {
      pi.push_back(sigma.pi(i));
      phi.push_back(Fraction{lift.psi[i].num.compose(sigma.sigma),
                             lift.psi[i].den.compose(sigma.sigma)});
      psi.push_back(Fraction{lift.psi[i].num, lift.psi[i].den});
    }

    LocalizationTrace trace{q,           frame.change, frame.report, sigma.sigma, rr,
                            lift.psi,    lift.degrees, lift.orders,  {}};
    const auto grevlex = OrderSpec::grevlex(rr->arity());

    for (std::size_t j = 0; j < f.coords.size(); ++j) {
      const Poly& pj = f.coords[j].num;
      const Poly& qj = f.coords[j].den;
      std::vector<Poly> others;
      for (const auto& d : dens) {
        if (!(d == qj)) others.push_back(embed(d, rr));
      }
      const Poly cofactor_q = product_of(rr, others);

      // phi_i - pi_i = (Q_j o pi) * e_i, read off the lift certificates.
      std::vector<Premise> premises;
      for (std::size_t i = 0; i < n; ++i) {
        const Cert& lc = lift.certs[i].cert;
        Poly e_num(rr);
        for (const auto& c : lc.cofactors) {
          for (std::size_t l = 0; l < sigma.t_count; ++l) {
            if (c.index == sigma.h_index(0, l)) e_num -= c.poly * cofactor_q * Poly::variable(rr, n + l);
          }
        }
        Fraction e{e_num, lc.unit * phi[i].den};
        Poly target = (phi[i].num - pi[i] * phi[i].den) * e.den -
                      qj.compose(pi) * e.num * phi[i].den;
        Cert cert = Cert::trivial(target);
        if (!target.is_zero()) {
          Membership m = member(target, sigma.product.gens(), grevlex, std::nullopt, limits);
          if (!m.in) fail(ErrorKind::Internal, "lift premise does not hold on X x W");
          cert = std::move(*m.cert);
        }
        premises.push_back(Premise{
            std::move(e),
            CertRecord{"premise " + std::to_string(i + 1) + " for coordinate " +
                           std::to_string(j + 1),
                       sigma.product.gens(), std::move(cert)}});
      }
      LocalFrac rep = LocalFrac::make(embed(reps[j].num, rr), embed(reps[j].den, rr), sigma.center);
      ComposedGerm composed =
          compose_regular(pj, qj, pi, phi, premises, rep, sigma.product, limits);
      for (auto& pr : premises) out.certs.push_back(std::move(pr.cert));
      out.certs.push_back(composed.cert);

      Fraction ratio = compose_ratio(pj, qj, psi);
      Descent descent = descend_division(ratio.num, ratio.den, x0, limits);
      out.certs.push_back(descent.cert);

      // The descended germ pulled back along sigma is the composed germ.
      Poly cross = descent.value.num.compose(sigma.sigma) * composed.value.den -
                   descent.value.den.compose(sigma.sigma) * composed.value.num;
      Cert agree = Cert::trivial(cross);
      if (!cross.is_zero()) {
        Membership m = member(cross, sigma.product.gens(), grevlex, std::nullopt, limits);
        if (!m.in) fail(ErrorKind::DescentFailed, "descended germ disagrees upstairs");
        agree = std::move(*m.cert);
      }
      out.certs.push_back(CertRecord{"descent agrees along sigma for coordinate " +
                                         std::to_string(j + 1),
                                     sigma.product.gens(), std::move(agree)});
      trace.composed.push_back(composed.value);
      out.components.push_back(descent.value);
    }
    out.trace = std::move(trace);
  }

  MapEquality eq = maps_equal_on_X(out.fractions(), f.coords, x, limits);
  if (!eq.equal) fail(ErrorKind::Internal, "G and F differ on X");
  append(out.certs, std::move(eq.certs));
  out.target_identically_zero = containment(y, out.fractions());
  return out;
}

RetractionResult uniformize(const VarietyPresentation& x, const RationalMap& ambient_i,
                            const RationalMap& r, const Point& x0,
                            const std::optional<RationalMap>& i_on_x,
                            const PipelineOptions& options) {
  const EngineLimits& limits = options.limits;
  const RingPtr& ring = x.ring();
  require_same_ring(*ambient_i.source, *ring);
  require_same_ring(*r.target.ring(), *ring);
  if (r.coords.size() != x.ambient_dim()) fail(ErrorKind::ArityMismatch, "r lands in K^n");
  if (ambient_i.coords.size() != r.source->arity()) {
    fail(ErrorKind::ArityMismatch, "i and r do not compose");
  }
  if (i_on_x) {
    MapEquality eq = maps_equal_on_X(i_on_x->coords, ambient_i.coords, x, limits);
    if (!eq.equal) fail(ErrorKind::PreconditionViolated, "ambient extension differs from i on X");
  }

  std::vector<Fraction> composite;
  for (const auto& c : r.coords) {
    Fraction fc = compose_ratio(c.num, c.den, ambient_i.coords);
    if (fc.den.is_zero() || x.ideal().contains(fc.den)) {
      fail(ErrorKind::CompositionUndefined, "i(X) lies in the polar locus of r");
    }
    composite.push_back(std::move(fc));
  }
  std::vector<Fraction> identity;
  for (const auto& v : variables(ring)) identity.push_back(Fraction::of(v));
  if (!maps_equal_on_X(composite, identity, x, limits).equal) {
    fail(ErrorKind::PreconditionViolated, "r o i is not the identity on X");
  }

  RationalMap f{ring, composite, x};
  GermMap g = localize_map(x, x, f, x0, options);

  std::vector<Poly> factors;
  auto add_factor = [&](const Poly& p) {
    if (p.is_constant()) return;
    if (std::find(factors.begin(), factors.end(), p) == factors.end()) factors.push_back(p);
  };
  if (g.trace) {
    for (const auto& psi : g.trace->psi) add_factor(psi.den);
  }
  std::vector<Poly> g_dens;
  for (const auto& c : g.components) {
    add_factor(c.den);
    if (!c.den.is_constant() && std::find(g_dens.begin(), g_dens.end(), c.den) == g_dens.end()) {
      g_dens.push_back(c.den);
    }
  }
  Poly h_v = product_of(ring, factors);
  Poly h_u = product_of(ring, g_dens);
  Fraction pullback = compose_fraction(h_v, g.fractions());

  MapEquality id = maps_equal_on_X(g.fractions(), identity, x, limits);
  if (!id.equal) fail(ErrorKind::Internal, "G is not the identity on X");
  return RetractionResult{std::move(g),   std::move(composite), std::move(h_v),
                          std::move(h_u), std::move(pullback),  std::move(id.certs)};
}

Matrix germ_derivative(const std::vector<LocalFrac>& g) {
  if (g.empty()) return Matrix();
  const Point& p = g.front().point;
  const std::size_t n = p.size();
  Matrix out(g.size(), n);
  for (std::size_t r = 0; r < g.size(); ++r) {
    const Rat num = g[r].num.evaluate(p);
    const Rat den = g[r].den.evaluate(p);
    for (std::size_t c = 0; c < n; ++c) {
      const Rat dn = g[r].num.derivative(c).evaluate(p);
      const Rat dd = g[r].den.derivative(c).evaluate(p);
      out(r, c) = (dn * den - num * dd) / (den * den);
    }
  }
  return out;
}

bool is_tangent_projection(const Matrix& m, const VarietyPresentation& x, const Point& x0) {
  const std::size_t n = x.ambient_dim();
  if (m.rows() != n || m.cols() != n) return false;
  if (!(m * m == m)) return false;
  if (m.rank() != x.dim()) return false;
  if (x.gens().empty()) return true;
  const Matrix jac = jacobian_at(x.gens(), x0);
  const Matrix image = jac * m;
  for (std::size_t r = 0; r < image.rows(); ++r) {
    for (std::size_t c = 0; c < image.cols(); ++c) {
      if (image(r, c) != 0) return false;
    }
  }
  return true;
}

}  // namespace urr
