#include "urr/denominators.hpp"

#include <algorithm>

#include "urr/errors.hpp"
#include "urr/parse.hpp"

namespace urr {

Poly divide_by_variable(const Poly& f, std::size_t var) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (t.mono.exp[var] == 0) fail(ErrorKind::Internal, "inexact division by a variable");
    Term q = t;
    --q.mono.exp[var];
    terms.push_back(std::move(q));
  }
  return Poly(f.ring(), std::move(terms));
}

SplitDecomposition split_difference(const Poly& p) {
  const RingPtr& src = p.ring();
  const std::size_t n = src->arity();
  RingPtr ring = extend_ring(src, fresh_names(*src, "w", n));
  std::vector<Poly> shifted;  // v + w^(i), updated in place
  for (std::size_t j = 0; j < n; ++j) shifted.push_back(Poly::variable(ring, j));
  SplitDecomposition out{ring, embed(p, ring), {}};
  Poly previous = out.base;
  for (std::size_t i = 0; i < n; ++i) {
    shifted[i] += Poly::variable(ring, n + i);
    Poly current = p.compose(shifted);
    out.parts.push_back(divide_by_variable(current - previous, n + i));
    previous = std::move(current);
  }
  return out;
}

CommonDenominator CommonDenominator::of(std::span<const Fraction> images) {
  if (images.empty()) fail(ErrorKind::ArityMismatch, "no images to compose with");
  const RingPtr& ring = images.front().num.ring();
  std::vector<Poly> distinct;
  std::vector<std::size_t> which;
  for (const auto& f : images) {
    if (f.den.is_zero()) fail(ErrorKind::PreconditionViolated, "zero denominator");
    auto it = std::find(distinct.begin(), distinct.end(), f.den);
    which.push_back(static_cast<std::size_t>(it - distinct.begin()));
    if (it == distinct.end()) distinct.push_back(f.den);
  }
  CommonDenominator out{Poly::constant(ring, 1), {}};
  for (const auto& d : distinct) {
    if (!d.is_constant() || d.constant_term() != 1) out.l *= d;
  }
  for (std::size_t j = 0; j < images.size(); ++j) {
    Poly s = images[j].num;
    for (std::size_t k = 0; k < distinct.size(); ++k) {
      if (k == which[j]) continue;
      if (!distinct[k].is_constant() || distinct[k].constant_term() != 1) s *= distinct[k];
    }
    out.scaled.push_back(std::move(s));
  }
  return out;
}

Poly CommonDenominator::cleared(const Poly& s, unsigned d) const {
  const RingPtr& ring = l.ring();
  if (s.is_zero()) return Poly(ring);
  if (static_cast<int>(d) < s.total_degree()) {
    fail(ErrorKind::Internal, "clearing exponent below the degree");
  }
  std::vector<std::vector<Poly>> powers(scaled.size());
  auto power = [&](std::size_t j, unsigned e) -> const Poly& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(Poly::constant(ring, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * scaled[j]);
    return cache[e];
  };
  std::vector<Poly> l_powers{Poly::constant(ring, 1)};
  while (l_powers.size() <= d) l_powers.push_back(l_powers.back() * l);

  Poly out(ring);
  for (const auto& t : s.terms()) {
    Poly term = Poly::constant(ring, t.coef);
    for (std::size_t j = 0; j < scaled.size(); ++j) {
      if (t.mono.exp[j] != 0) term *= power(j, t.mono.exp[j]);
    }
    term *= l_powers[d - t.mono.degree()];
    out += term;
  }
  return out;
}

Fraction compose_fraction(const Poly& s, std::span<const Fraction> images) {
  if (images.size() != s.ring()->arity()) fail(ErrorKind::ArityMismatch, "image count");
  CommonDenominator cd = CommonDenominator::of(images);
  const unsigned d = static_cast<unsigned>(std::max(0, s.total_degree()));
  return Fraction{cd.cleared(s, d), cd.l.pow(d)};
}

Fraction compose_ratio(const Poly& p, const Poly& q, std::span<const Fraction> images) {
  require_same_ring(*p.ring(), *q.ring());
  if (images.size() != p.ring()->arity()) fail(ErrorKind::ArityMismatch, "image count");
  CommonDenominator cd = CommonDenominator::of(images);
  const unsigned d = static_cast<unsigned>(std::max({0, p.total_degree(), q.total_degree()}));
  return Fraction{cd.cleared(p, d), cd.cleared(q, d)};
}

ComposedGerm compose_regular(const Poly& p, const Poly& q, const std::vector<Poly>& pi,
                             const std::vector<Fraction>& phi,
                             const std::vector<Premise>& premises, const LocalFrac& rep,
                             const VarietyPresentation& xw, const EngineLimits& limits) {
  require_same_ring(*p.ring(), *q.ring());
  const std::size_t n = p.ring()->arity();
  if (pi.size() != n || phi.size() != n) fail(ErrorKind::ArityMismatch, "map arity");
  if (premises.size() != n) fail(ErrorKind::PremiseCertMissing, "one premise per coordinate");
  const RingPtr& ring = xw.ring();
  const Point& base = rep.point;
  const Poly q_pi = q.compose(pi);

  for (std::size_t i = 0; i < n; ++i) {
    const Premise& pr = premises[i];
    const Poly expected = (phi[i].num - pi[i] * phi[i].den) * pr.e.den -
                          q_pi * pr.e.num * phi[i].den;
    const std::string which = "premise " + std::to_string(i + 1);
    if (pr.e.den.evaluate(base) == 0 || pr.e.num.evaluate(base) != 0) {
      fail(ErrorKind::PremiseCertMissing, which + " is not in the maximal ideal");
    }
    if (!(pr.cert.cert.target == expected) || pr.cert.generators != xw.gens() ||
        !check_record(pr.cert)) {
      fail(ErrorKind::PremiseCertMissing, which + " has no valid certificate");
    }
  }

  std::vector<Fraction> e;
  for (const auto& pr : premises) e.push_back(pr.e);
  const bool trivial =
      std::all_of(e.begin(), e.end(), [](const Fraction& f) { return f.num.is_zero(); });

  Poly num = rep.num;
  Poly den = rep.den;
  if (!trivial) {
    // Images for S(v, w): v -> pi, w -> (Q o pi) * e.
    std::vector<Fraction> images;
    for (const auto& v : pi) images.push_back(Fraction::of(v));
    for (const auto& f : e) images.push_back(Fraction{q_pi * f.num, f.den});
    CommonDenominator cd = CommonDenominator::of(images);
    // e_i = cd.scaled[n + i] / (l * (Q o pi)); reuse scaled without the Q factor.
    CommonDenominator ce = CommonDenominator::of(e);

    const SplitDecomposition sp = split_difference(p);
    const SplitDecomposition sq = split_difference(q);
    unsigned d = 0;
    for (const auto& part : sp.parts) d = std::max(d, static_cast<unsigned>(std::max(0, part.total_degree())));
    for (const auto& part : sq.parts) d = std::max(d, static_cast<unsigned>(std::max(0, part.total_degree())));

    Poly tp(ring);
    Poly tq(ring);
    for (std::size_t i = 0; i < n; ++i) {
      if (ce.scaled[i].is_zero()) continue;
      if (!sp.parts[i].is_zero()) tp += ce.scaled[i] * cd.cleared(sp.parts[i], d);
      if (!sq.parts[i].is_zero()) tq += ce.scaled[i] * cd.cleared(sq.parts[i], d);
    }
    // cd.l == ce.l: both are the product of the distinct denominators of e.
    const Poly l_pow = cd.l.pow(d + 1);
    num = rep.num * l_pow + rep.den * tp;
    den = rep.den * (l_pow + tq);
  }
  const Rat at_base = den.evaluate(base);
  if (at_base == 0) fail(ErrorKind::Internal, "composed denominator vanishes at the base point");
  const Rat scale = 1 / at_base;
  num *= scale;
  den *= scale;

  // value * Q(phi) = P(phi) on X x W.
  Fraction ratio = compose_ratio(p, q, phi);
  Poly cross = num * ratio.den - den * ratio.num;
  Cert cert = Cert::trivial(cross);
  if (!cross.is_zero()) {
    Membership m = member(cross, xw.gens(), OrderSpec::grevlex(ring->arity()), std::nullopt, limits);
    if (!m.in) fail(ErrorKind::Internal, "composed germ disagrees with P(phi)/Q(phi)");
    cert = std::move(*m.cert);
  }
  return ComposedGerm{LocalFrac::make(std::move(num), std::move(den), base),
                      CertRecord{"germ of (" + to_string(p) + ")/(" + to_string(q) +
                                     ") along the lift",
                                 xw.gens(), std::move(cert)}};
}

Descent descend_division(const Poly& p_num, const Poly& q_den, const Point& p,
                         const EngineLimits& limits) {
  require_same_ring(*p_num.ring(), *q_den.ring());
  if (q_den.is_zero()) fail(ErrorKind::DescentFailed, "division by zero");
  const std::string label = "descent of (" + to_string(p_num) + ")/(" + to_string(q_den) + ")";
  if (q_den.evaluate(p) != 0) {
    Cert cert{p_num, q_den, {Cofactor{0, p_num}}, p};
    if (p_num.is_zero()) cert.cofactors.clear();
    return Descent{LocalFrac::make(p_num, q_den, p), CertRecord{label, {q_den}, std::move(cert)}};
  }
  IdealMembership oracle(p_num.ring(), {q_den}, OrderSpec::local(p_num.ring()->arity()), p, limits);
  WeakNormalForm nf = oracle.normal_form(p_num);
  if (!nf.remainder.is_zero()) {
    fail(ErrorKind::DescentFailed, "denominator does not divide the numerator at the point");
  }
  Cert cert{p_num, nf.unit, {}, p};
  if (!nf.cofactors[0].is_zero()) cert.cofactors.push_back(Cofactor{0, nf.cofactors[0]});
  return Descent{LocalFrac::make(nf.cofactors[0], nf.unit, p),
                 CertRecord{label, {q_den}, std::move(cert)}};
}

}  // namespace urr
